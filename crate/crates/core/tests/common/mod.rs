#![allow(dead_code)]

use std::collections::HashMap;

use folinv::cli::parse_poly;
use folinv::invariants::{milnor_k, tjurina_k};
use folinv::ring::{Monomial, Poly};
use folinv::{QFoliation, QPoly, Rational};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn p(s: &str) -> QPoly {
    parse_poly(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn fol(a: &str, b: &str) -> QFoliation {
    QFoliation::new(p(a), p(b)).unwrap()
}

// ---------------------------------------------------------------------------
// Linear-algebra oracle.
//
// dim O/(I + m^N) is the corank of the span of all m*g (deg m + ord g < N)
// inside the polynomials of degree < N. Once two consecutive truncations
// agree, m^N ⊆ I by Nakayama and the value is dim O/I. Ranks are taken
// modulo a 61-bit prime, which can only overestimate the corank.

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce_int(n: &BigInt) -> u64 {
    let m = BigInt::from(PRIME);
    let r = ((n % &m) + &m) % &m;
    r.to_u64().unwrap()
}

fn to_mod(c: &Rational) -> u64 {
    let d = reduce_int(c.denom());
    assert!(d != 0, "denominator divisible by the oracle prime");
    mulmod(reduce_int(c.numer()), powmod(d, PRIME - 2))
}

struct Echelon {
    pivots: HashMap<usize, Vec<u64>>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { pivots: HashMap::new() }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert a row; returns whether it was independent.
    fn insert(&mut self, mut row: Vec<u64>) -> bool {
        for col in 0..row.len() {
            if row[col] == 0 {
                continue;
            }
            match self.pivots.get(&col) {
                Some(piv) => {
                    let f = row[col];
                    for (r, pv) in row.iter_mut().zip(piv) {
                        *r = (*r + PRIME - mulmod(f, *pv)) % PRIME;
                    }
                }
                None => {
                    let inv = powmod(row[col], PRIME - 2);
                    for r in row.iter_mut() {
                        *r = mulmod(*r, inv);
                    }
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
        false
    }
}

fn monomials_below(n: u32) -> Vec<Monomial> {
    (0..n).flat_map(|d| (0..=d).map(move |i| Monomial::new(d - i, i))).collect()
}

fn truncated_span(gens: &[QPoly], n: u32) -> (Echelon, HashMap<Monomial, usize>) {
    let monos = monomials_below(n);
    let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut ech = Echelon::new();
    for g in gens {
        let Some(ord) = g.order() else { continue };
        for m in monos.iter().filter(|m| m.degree() + ord < n) {
            let mut row = vec![0u64; monos.len()];
            for (t, c) in g.terms() {
                let prod = *m * *t;
                if let Some(&i) = index.get(&prod) {
                    row[i] = (row[i] + to_mod(c)) % PRIME;
                }
            }
            ech.insert(row);
        }
    }
    (ech, index)
}

/// `dim O/(I + m^n)`.
pub fn oracle_truncated_colength(gens: &[QPoly], n: u32) -> u64 {
    let (ech, index) = truncated_span(gens, n);
    (index.len() - ech.rank()) as u64
}

/// `dim O/I`, or `None` if it does not stabilize below degree `cap`.
pub fn oracle_colength(gens: &[QPoly], cap: u32) -> Option<u64> {
    let mut prev = oracle_truncated_colength(gens, 1);
    for n in 2..=cap {
        let cur = oracle_truncated_colength(gens, n);
        if cur == prev {
            return Some(cur);
        }
        prev = cur;
    }
    None
}

/// Whether `w ∈ I + m^n`.
pub fn oracle_member_mod(gens: &[QPoly], w: &QPoly, n: u32) -> bool {
    let (mut ech, index) = truncated_span(gens, n);
    let mut row = vec![0u64; index.len()];
    for (t, c) in w.terms() {
        if let Some(&i) = index.get(t) {
            row[i] = (row[i] + to_mod(c)) % PRIME;
        }
    }
    !ech.insert(row)
}

pub fn mk(k: u32) -> Vec<QPoly> {
    Monomial::of_degree(k).map(QPoly::monomial).collect()
}

pub fn product(a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

// ---------------------------------------------------------------------------
// Random corpora.

fn coeff<R: Rng>(rng: &mut R) -> Rational {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-5..=5);
    }
    q(c)
}

fn monomial_of_degree<R: Rng>(rng: &mut R, d: u32) -> Monomial {
    let i = rng.gen_range(0..=d);
    Monomial::new(i, d - i)
}

/// Sparse polynomial with order `nu` and degree at most `max_deg`; pure
/// powers are added often so that most draws are isolated.
pub fn random_sparse<R: Rng>(rng: &mut R, nu: u32, max_deg: u32) -> QPoly {
    let mut terms = vec![(monomial_of_degree(rng, nu), coeff(rng))];
    for _ in 0..rng.gen_range(0..=3) {
        let d = rng.gen_range(nu..=max_deg);
        terms.push((monomial_of_degree(rng, d), coeff(rng)));
    }
    if rng.gen_bool(0.7) {
        terms.push((Monomial::new(rng.gen_range(nu..=max_deg), 0), coeff(rng)));
    }
    if rng.gen_bool(0.7) {
        terms.push((Monomial::new(0, rng.gen_range(nu..=max_deg)), coeff(rng)));
    }
    let f = QPoly::from_terms(terms);
    if f.order() == Some(nu) {
        f
    } else {
        random_sparse(rng, nu, max_deg)
    }
}

/// Like [`random_sparse`] with the order drawn from `orders`.
pub fn random_in<R: Rng>(rng: &mut R, orders: std::ops::RangeInclusive<u32>, max_deg: u32) -> QPoly {
    let nu = rng.gen_range(orders);
    random_sparse(rng, nu, max_deg)
}

/// Germ with `ν ∈ [2, 4]`, degree ≤ 7 and finite Milnor number.
pub fn random_isolated<R: Rng>(rng: &mut R) -> QPoly {
    loop {
        let nu = rng.gen_range(2..=4);
        let f = random_sparse(rng, nu, 7);
        if milnor_k(&f, 0).is_finite() {
            return f;
        }
    }
}

/// Weighted homogeneous germ with an isolated singularity.
pub fn random_weighted_homogeneous<R: Rng>(rng: &mut R) -> QPoly {
    loop {
        let a = rng.gen_range(2..=7u32);
        // Either x^a + y^b or x^a + x*y^s as the skeleton.
        let (w1, w2) = if rng.gen_bool(0.7) {
            let b = rng.gen_range(2..=7u32);
            (Rational::new(1.into(), a.into()), Rational::new(1.into(), b.into()))
        } else {
            let s = rng.gen_range(2..=6u32);
            (
                Rational::new(1.into(), a.into()),
                Rational::new((a - 1).into(), (a * s).into()),
            )
        };
        let mut candidates: Vec<Monomial> = Vec::new();
        for i in 0..=8u32 {
            for j in 0..=8u32 {
                if i + j >= 2 && &w1 * q(i as i64) + &w2 * q(j as i64) == q(1) {
                    candidates.push(Monomial::new(i, j));
                }
            }
        }
        candidates.shuffle(rng);
        let keep = rng.gen_range(2..=candidates.len().max(2));
        let f = QPoly::from_terms(candidates.into_iter().take(keep).map(|m| (m, coeff(rng))));
        if f.len() >= 2 && tjurina_k(&f, 0).is_finite() {
            return f;
        }
    }
}

/// Foliation with `ν ∈ [1, 3]`, coefficients of degree ≤ 6, isolated.
pub fn random_foliation<R: Rng>(rng: &mut R) -> QFoliation {
    loop {
        let nu = rng.gen_range(1..=3);
        let p = random_sparse(rng, nu, 6);
        let q_nu = rng.gen_range(nu..=4);
        let q = random_sparse(rng, q_nu, 6);
        let (p, q) = if rng.gen_bool(0.5) { (p, q) } else { (q, p) };
        if let Ok(f) = QFoliation::new(p, q) {
            return f;
        }
    }
}

/// Reduced germ: finite Tjurina number.
pub fn random_reduced<R: Rng>(rng: &mut R) -> QPoly {
    loop {
        let f = random_isolated(rng);
        if tjurina_k(&f, 0).is_finite() {
            return f;
        }
    }
}

/// `ω = h df + f (a dx + b dy)` with isolated singularity; `f` is invariant
/// by construction.
pub fn random_invariant_pair<R: Rng>(rng: &mut R) -> (QFoliation, QPoly) {
    loop {
        let f = random_reduced(rng);
        let h = random_in(rng, 0..=1, 3);
        let a = random_in(rng, 0..=2, 3);
        let b = random_in(rng, 0..=2, 3);
        let p = &(&h * &f.partial_x()) + &(&a * &f);
        let q = &(&h * &f.partial_y()) + &(&b * &f);
        if let Ok(fol) = QFoliation::new(p, q) {
            return (fol, f);
        }
    }
}

/// `F_{n,m}: m x dy - n y dx` with its invariant curve `y^m - x^n`.
pub fn fnm(n: u32, m: u32) -> (QFoliation, QPoly) {
    (
        QFoliation::new(QPoly::y().scale(&q(-(n as i64))), QPoly::x().scale(&q(m as i64))).unwrap(),
        &QPoly::y().pow(m) - &QPoly::x().pow(n),
    )
}

/// Weighted homogeneous `f` together with its integer weights, degree, and
/// the deformation `P = f_x + β h y`, `Q = f_y - α h x` of `df`.
pub fn mattei_form<R: Rng>(rng: &mut R, f: &QPoly) -> Option<QFoliation> {
    let w = folinv::invariants::weighted_homogeneous_weights(f)?;
    let (alpha, beta) = w.weights;
    let order = f.order()?;
    let h = random_sparse(rng, order.max(2), order + 3);
    let p = &f.partial_x() + &(&h * &QPoly::y()).scale(&q(beta as i64));
    let q_ = &f.partial_y() - &(&h * &QPoly::x()).scale(&q(alpha as i64));
    QFoliation::new(p, q_).ok()
}

pub fn nonzero(f: &QPoly) -> bool {
    !f.is_zero()
}

pub fn truncation_free(f: &Poly<Rational>) -> bool {
    f.terms().iter().all(|(_, c)| !c.is_zero())
}

/// Whether `dim O/I = c`: the truncations at `c` and `c + 1` must both be
/// `c` (then `m^c ⊆ I`).
pub fn oracle_confirms(gens: &[QPoly], c: u64) -> bool {
    let n = c as u32;
    oracle_truncated_colength(gens, n.max(1)) == c && oracle_truncated_colength(gens, n + 1) == c
}
