//! Mora's weak normal form and the tangent-cone standard basis algorithm for
//! the local degree order.

use std::collections::BTreeSet;

use crate::ring::{Coefficient, Monomial, Poly};

/// Choose a reducer for `lm`: minimal ecart, then smallest leading monomial,
/// then lowest position.
fn select_reducer<'a, C: Coefficient>(
    lm: Monomial,
    candidates: impl Iterator<Item = &'a Poly<C>>,
) -> Option<usize> {
    candidates
        .enumerate()
        .filter_map(|(i, g)| {
            let glm = g.leading_monomial()?;
            glm.divides(lm).then(|| (g.ecart(), glm, i))
        })
        .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)))
        .map(|(_, _, i)| i)
}

/// One reduction step `h - (lc(h)/lc(g)) * (lm(h)/lm(g)) * g`.
fn reduce_step<C: Coefficient>(h: &Poly<C>, g: &Poly<C>) -> (Poly<C>, C, Monomial) {
    let (mh, ch) = h.leading_term().expect("nonzero h");
    let (mg, cg) = g.leading_term().expect("nonzero reducer");
    let m = mg.quotient(*mh).expect("reducer divides");
    let c = ch.clone() / cg.clone();
    (h.sub_mul_term(&c, m, g), c, m)
}

/// Weak normal form where every term of degree `>= corner` is discarded.
/// Valid whenever `m^corner` lies in the ideal generated by `basis`; the
/// result is then a normal form of `f` itself.
pub(crate) fn reduce<C: Coefficient>(f: &Poly<C>, basis: &[Poly<C>], corner: Option<u32>) -> Poly<C> {
    let mut h = f.clone();
    if let Some(d) = corner {
        h.truncate(d);
    }
    let mut extra: Vec<Poly<C>> = Vec::new();
    loop {
        let Some(lm) = h.leading_monomial() else {
            return h;
        };
        let Some(idx) = select_reducer(lm, basis.iter().chain(extra.iter())) else {
            return h;
        };
        let reducer_ecart = if idx < basis.len() {
            basis[idx].ecart()
        } else {
            extra[idx - basis.len()].ecart()
        };
        // Below a known corner only finitely many monomials survive, so
        // plain division terminates and no unit is needed.
        if corner.is_none() && reducer_ecart > h.ecart() {
            extra.push(h.clone());
        }
        let g = if idx < basis.len() { &basis[idx] } else { &extra[idx - basis.len()] };
        h = reduce_step(&h, g).0;
        if let Some(d) = corner {
            h.truncate(d);
        }
    }
}

/// A weak normal form together with the certificate
/// `unit * f - remainder = Σ cofactors[i] * basis[i]`.
#[derive(Clone, Debug)]
pub struct CertifiedNormalForm<C> {
    pub unit: Poly<C>,
    pub remainder: Poly<C>,
    pub cofactors: Vec<Poly<C>>,
}

/// Mora's reduction with the ecart T-set, tracking the unit and cofactors.
///
/// Always exact, but coefficients can grow quickly once many intermediate
/// remainders enter the T-set.
pub fn mora_normal_form_certified<C: Coefficient>(f: &Poly<C>, basis: &[Poly<C>]) -> CertifiedNormalForm<C> {
    let zero_cofactors = || vec![Poly::zero(); basis.len()];
    let mut h = CertifiedNormalForm {
        unit: Poly::one(),
        remainder: f.clone(),
        cofactors: zero_cofactors(),
    };
    let mut extra: Vec<CertifiedNormalForm<C>> = Vec::new();
    loop {
        let Some(lm) = h.remainder.leading_monomial() else {
            return h;
        };
        let candidates = basis.iter().chain(extra.iter().map(|e| &e.remainder));
        let Some(idx) = select_reducer(lm, candidates) else {
            return h;
        };
        let reducer_ecart = if idx < basis.len() {
            basis[idx].ecart()
        } else {
            extra[idx - basis.len()].remainder.ecart()
        };
        if reducer_ecart > h.remainder.ecart() {
            extra.push(h.clone());
        }
        if idx < basis.len() {
            let (r, c, m) = reduce_step(&h.remainder, &basis[idx]);
            h.remainder = r;
            h.cofactors[idx] = &h.cofactors[idx] + &Poly::term(m, c);
        } else {
            let t = &extra[idx - basis.len()];
            let (r, c, m) = reduce_step(&h.remainder, &t.remainder);
            h.remainder = r;
            h.unit = h.unit.sub_mul_term(&c, m, &t.unit);
            for (mine, theirs) in h.cofactors.iter_mut().zip(&t.cofactors) {
                *mine = mine.sub_mul_term(&c, m, theirs);
            }
        }
    }
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial<C: Coefficient>(f: &Poly<C>, g: &Poly<C>) -> Poly<C> {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(*mg);
    let left = f.mul_term(mf.quotient(l).unwrap(), &(C::one() / cf.clone()));
    left.sub_mul_term(&(C::one() / cg.clone()), mg.quotient(l).unwrap(), g)
}

/// Smallest `d` such that every monomial of degree `d` is divisible by one of
/// `leading`, i.e. `m^d` is contained in the leading ideal.
pub(crate) fn covered_degree(leading: &[Monomial]) -> Option<u32> {
    let a = leading.iter().filter(|m| m.y == 0).map(|m| m.x).min()?;
    let b = leading.iter().filter(|m| m.x == 0).map(|m| m.y).min()?;
    (0..a + b).find(|&d| Monomial::of_degree(d).all(|m| leading.iter().any(|l| l.divides(m))))
}

pub(crate) struct MoraOutput<C> {
    pub elements: Vec<Poly<C>>,
    pub corner: Option<u32>,
}

/// Tangent-cone algorithm: Buchberger's loop with the normal selection
/// strategy and Mora's weak normal form.
///
/// Once the leading monomials cover every monomial of some degree `d`, the
/// ideal contains `m^d`; from then on all polynomials are truncated below
/// degree `d` and the degree-`d` monomials join the basis.
pub(crate) fn tangent_cone<C: Coefficient>(generators: &[Poly<C>]) -> MoraOutput<C> {
    let mut state = Engine {
        elements: Vec::new(),
        pairs: BTreeSet::new(),
        corner: None,
    };
    for g in generators {
        if state.push(g.monic()) {
            return MoraOutput { elements: vec![Poly::one()], corner: Some(0) };
        }
    }
    state.refresh_corner();

    while let Some(pair) = state.pairs.pop_first() {
        let (_, i, j) = pair;
        let (f, g) = (&state.elements[i], &state.elements[j]);
        if f.is_monomial() && g.is_monomial() {
            continue;
        }
        let sp = s_polynomial(f, g);
        let h = reduce(&sp, &state.elements, state.corner);
        if h.is_zero() {
            continue;
        }
        if state.push(h.monic()) {
            return MoraOutput { elements: vec![Poly::one()], corner: Some(0) };
        }
        state.refresh_corner();
    }

    MoraOutput {
        elements: minimalize(state.elements),
        corner: state.corner,
    }
}

struct Engine<C> {
    elements: Vec<Poly<C>>,
    /// `(lcm degree, i, j)` with `i < j`, popped in ascending order.
    pairs: BTreeSet<(u32, usize, usize)>,
    corner: Option<u32>,
}

impl<C: Coefficient> Engine<C> {
    /// Adjoin a monic element and register its pairs. Returns true when the
    /// element is a unit.
    fn push(&mut self, h: Poly<C>) -> bool {
        let Some(lm) = h.leading_monomial() else {
            return false;
        };
        if lm.is_one() {
            return true;
        }
        let j = self.elements.len();
        for (i, e) in self.elements.iter().enumerate() {
            let l = e.leading_monomial().unwrap().lcm(lm);
            self.pairs.insert((l.degree(), i, j));
        }
        self.elements.push(h);
        false
    }

    fn refresh_corner(&mut self) {
        let leading: Vec<Monomial> = self.elements.iter().filter_map(Poly::leading_monomial).collect();
        let Some(d) = covered_degree(&leading) else {
            return;
        };
        if self.corner.is_some_and(|c| c <= d) {
            return;
        }
        self.corner = Some(d);
        let old = std::mem::take(&mut self.elements);
        self.pairs.clear();
        let mut kept: Vec<Poly<C>> = old
            .into_iter()
            .map(|mut e| {
                e.truncate(d);
                e
            })
            .filter(|e| !e.is_zero())
            .collect();
        kept.extend(Monomial::of_degree(d).map(Poly::monomial));
        for e in kept {
            // Truncation keeps leading terms, so no element becomes a unit.
            self.push(e);
        }
    }
}

/// Drop elements whose leading monomial is divisible by another one's.
fn minimalize<C: Coefficient>(mut elements: Vec<Poly<C>>) -> Vec<Poly<C>> {
    // A divisor is never smaller in a local order, so after sorting
    // descending each element only needs checking against kept ones.
    elements.sort_by_key(|e| std::cmp::Reverse(e.leading_monomial()));
    let mut kept: Vec<Poly<C>> = Vec::new();
    for e in elements {
        let lm = e.leading_monomial().unwrap();
        if kept.iter().all(|k| !k.leading_monomial().unwrap().divides(lm)) {
            kept.push(e.monic());
        }
    }
    kept
}
