//! Closed-form values, all in exact integer or rational arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Coefficient, Poly};
use crate::Rational;

fn tri(n: u64) -> u64 {
    n * (n + 1) / 2
}

/// Dimension of `O/m^k`.
pub fn dim_mk(k: u32) -> u64 {
    tri(k as u64)
}

/// `μ^k(f)` from `μ(f)` and `m = ν(f)`.
pub fn milnor_k_closed(mu: u64, m: u32, k: u32) -> u64 {
    let (m, k) = (m as u64, k as u64);
    let base = mu + k * (k + 1);
    if k < m {
        base
    } else {
        base - (k - m + 2) * (k - m + 1) / 2
    }
}

/// `dim O/(⟨f⟩ + m^k)` for any `f` with `ν(f) = m`.
pub fn dim_mk_plus_f_closed(m: u32, k: u32) -> u64 {
    let (m, k) = (m as u64, k as u64);
    if k < m {
        tri(k)
    } else {
        tri(k) - (k + 1 - m) * (k - m) / 2
    }
}

/// Lower bound `(m + k)(m + k + 1)/2` for `μ^k(F)` with `ν(F) = m`.
pub fn foliation_milnor_k_lower_bound(m: u32, k: u32) -> u64 {
    tri((m + k) as u64)
}

/// Type of a reduced foliation singularity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReducedSingularityKind {
    NonDegenerate,
    /// Normal form `x^(ℓ+1) dy - y(1 + λx^ℓ) dx`, `ℓ ≥ 1`.
    SaddleNode(u32),
}

/// `(μ^k(F), τ^k(F, Sep))` of a reduced singularity.
pub fn reduced_singularity_invariants(kind: ReducedSingularityKind, k: u32) -> Result<(u64, u64)> {
    let k = k as u64;
    let (mu, tau) = ((k + 1) * (k + 2) / 2, 2 * k + 1);
    match kind {
        ReducedSingularityKind::NonDegenerate => Ok((mu, tau)),
        ReducedSingularityKind::SaddleNode(0) => {
            Err(Error::InvalidArgument("saddle-node parameter must be at least 1".into()))
        }
        ReducedSingularityKind::SaddleNode(l) => Ok((mu + l as u64, tau + l as u64)),
    }
}

/// Weight type of a weighted homogeneous polynomial.
///
/// `w1` and `w2` are normalized so that every monomial has weighted degree
/// 1; `weights` and `degree` are the same data scaled to coprime integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightData {
    pub w1: Rational,
    pub w2: Rational,
    pub weights: (u64, u64),
    pub degree: u64,
}

impl WeightData {
    fn from_rational(w1: Rational, w2: Rational) -> Self {
        let l = w1.denom().lcm(w2.denom());
        let a = (&w1 * Rational::from_integer(l.clone())).to_integer();
        let b = (&w2 * Rational::from_integer(l.clone())).to_integer();
        let g = a.gcd(&b).gcd(&l);
        let small = |n: &BigInt| u64::try_from(n / &g).expect("weights fit in u64");
        WeightData {
            weights: (small(&a), small(&b)),
            degree: small(&l),
            w1,
            w2,
        }
    }

    /// `(1/w1, 1/w2)` sorted ascending.
    pub fn sorted_reciprocals(&self) -> (Rational, Rational) {
        let (a, b) = (self.w1.recip(), self.w2.recip());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

impl Serialize for WeightData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("WeightData", 4)?;
        st.serialize_field("w1", &self.w1.to_string())?;
        st.serialize_field("w2", &self.w2.to_string())?;
        st.serialize_field("weights", &self.weights)?;
        st.serialize_field("degree", &self.degree)?;
        st.end()
    }
}

/// Positive weights `(w1, w2)` with `a w1 + b w2 = 1` for every exponent
/// `(a, b)` of `f`, if they exist and are unique.
pub fn weighted_homogeneous_weights<C: Coefficient>(f: &Poly<C>) -> Option<WeightData> {
    let exps: Vec<(i64, i64)> = f.terms().iter().map(|(m, _)| (m.x as i64, m.y as i64)).collect();
    let &(a1, b1) = exps.first()?;
    let &(a2, b2) = exps.iter().find(|&&(a, b)| a1 * b - b1 * a != 0)?;
    let det = a1 * b2 - a2 * b1;
    let w1 = Rational::new(BigInt::from(b2 - b1), BigInt::from(det));
    let w2 = Rational::new(BigInt::from(a1 - a2), BigInt::from(det));
    if !w1.is_positive() || !w2.is_positive() {
        return None;
    }
    let consistent = exps.iter().all(|&(a, b)| {
        &w1 * Rational::from_integer(BigInt::from(a)) + &w2 * Rational::from_integer(BigInt::from(b)) == Rational::one()
    });
    consistent.then(|| WeightData::from_rational(w1, w2))
}

/// `ℓ^k(a1, a2)` for integer exponents `2 ≤ a1 ≤ a2`.
pub fn ell_k(a1: u64, a2: u64, k: u32) -> Result<u64> {
    if a1 < 2 || a1 > a2 {
        return Err(Error::InvalidArgument(format!("ell_k needs 2 <= a1 <= a2, got ({a1}, {a2})")));
    }
    let k = k as u64;
    let base = (a1 - 1) * (a2 - 1) + k * (k + 3) / 2;
    Ok(if k < a1 {
        base
    } else {
        base - (k - a1 + 2) * (k - a1 + 1) / 2
    })
}

/// `ℓ^k(a1, a2)` for rational reciprocal weights `2 ≤ a1 ≤ a2`.
pub fn ell_k_rational(a1: &Rational, a2: &Rational, k: u32) -> Result<Rational> {
    let two = Rational::from_integer(BigInt::from(2));
    if *a1 < two || a1 > a2 {
        return Err(Error::InvalidArgument(format!("ell_k needs 2 <= a1 <= a2, got ({a1}, {a2})")));
    }
    let one = Rational::one();
    let kq = Rational::from_integer(BigInt::from(k));
    let base = (a1 - &one) * (a2 - &one) + &kq * (&kq + Rational::from_integer(BigInt::from(3))) / &two;
    if kq < *a1 {
        return Ok(base);
    }
    let t = &kq - a1;
    Ok(base - (&t + &two) * (&t + &one) / &two)
}

/// `τ^k` of `y^m - x^n`, `2 ≤ m ≤ n`.
pub fn binomial_tjurina_k(n: u64, m: u64, k: u32) -> u64 {
    let k = k as u64;
    if k < m {
        (k * k + 3 * k) / 2 + m * n - m - n + 1
    } else {
        m * k + (2 * n - m) * (m - 1) / 2
    }
}

/// `μ^k` of `y^m - x^n`, `2 ≤ m ≤ n`.
pub fn binomial_milnor_k(n: u64, m: u64, k: u32) -> u64 {
    let k = k as u64;
    if k < m {
        m * n - m - n + 1 + k * k + k
    } else {
        ((2 * m - 1) * k + (2 * n - m) * (m - 1) + k * k) / 2
    }
}

/// `τ^k(F, C)` for `F = m x dy - n y dx` and `C = {y^m = x^n}`.
pub fn fnm_tjurina_k(m: u64, k: u32) -> u64 {
    let k = k as u64;
    let t = (k + 2) * (k + 1) / 2;
    if k < m {
        t
    } else {
        t - (k + 2 - m) * (k + 1 - m) / 2
    }
}

/// Whether `a/b > 4/3`.
pub fn exceeds_four_thirds(a: u64, b: u64) -> bool {
    3 * a as u128 > 4 * b as u128
}

pub(crate) fn is_integer(q: &Rational) -> bool {
    q.denom().is_one() || q.numer().is_zero()
}
