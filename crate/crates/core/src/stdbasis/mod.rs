//! Local standard bases, normal forms, ideal membership and colength.
//!
//! Every dimension `dim O/I` in this crate is computed here: a standard
//! basis of `I` under the local degree order is built with Mora's
//! tangent-cone algorithm and the monomials outside its leading ideal are
//! counted.

mod ideal;
mod mora;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::ring::{Coefficient, Monomial, Poly};

pub use ideal::{ideal_product, ideal_sum, maximal_ideal_power, Ideal};
pub use mora::{mora_normal_form_certified, s_polynomial, CertifiedNormalForm};

/// Dimension of a quotient of the local ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn is_finite(self) -> bool {
        matches!(self, Colength::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }
}

impl From<u64> for Colength {
    fn from(n: u64) -> Self {
        Colength::Finite(n)
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Colength {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Colength::Finite(n) => s.serialize_u64(*n),
            Colength::Infinite => s.serialize_none(),
        }
    }
}

/// Identifier of the monomial order a standard basis was computed for.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum MonomialOrder {
    /// Negative degree reverse lexicographic, `x > y` (Singular's `ds`).
    #[default]
    LocalDegRevLex,
}

impl MonomialOrder {
    pub fn tag(self) -> &'static str {
        match self {
            MonomialOrder::LocalDegRevLex => "ds",
        }
    }
}

/// Minimal monic standard basis of an ideal under the local order.
#[derive(Clone, Debug)]
pub struct StandardBasis<C> {
    source: Ideal<C>,
    elements: Vec<Poly<C>>,
    leading_monomials: Vec<Monomial>,
    order: MonomialOrder,
    corner: Option<u32>,
}

impl<C: Coefficient> StandardBasis<C> {
    pub fn source(&self) -> &Ideal<C> {
        &self.source
    }

    pub fn elements(&self) -> &[Poly<C>] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading_monomials
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Smallest `d` with `m^d ⊆ I`, when known.
    pub fn corner(&self) -> Option<u32> {
        self.corner
    }

    pub fn is_unit(&self) -> bool {
        self.leading_monomials.iter().any(|m| m.is_one())
    }

    pub fn colength(&self) -> Colength {
        staircase_size(&self.leading_monomials)
    }

    pub fn normal_form(&self, f: &Poly<C>) -> Poly<C> {
        mora::reduce(f, &self.elements, self.corner)
    }

    pub fn contains(&self, f: &Poly<C>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Check that every S-polynomial of basis elements has weak normal form
    /// zero.
    pub fn satisfies_criterion(&self) -> bool {
        let e = &self.elements;
        (0..e.len()).all(|i| {
            (i + 1..e.len()).all(|j| mora::reduce(&s_polynomial(&e[i], &e[j]), e, self.corner).is_zero())
        })
    }
}

/// Number of monomials outside the monomial ideal generated by `leading`.
pub fn staircase_size(leading: &[Monomial]) -> Colength {
    if leading.iter().any(|m| m.is_one()) {
        return Colength::Finite(0);
    }
    let x_bound = leading.iter().filter(|m| m.y == 0).map(|m| m.x).min();
    let y_bound = leading.iter().filter(|m| m.x == 0).map(|m| m.y).min();
    let (Some(a), Some(b)) = (x_bound, y_bound) else {
        return Colength::Infinite;
    };
    let count = (0..a)
        .flat_map(|i| (0..b).map(move |j| Monomial::new(i, j)))
        .filter(|m| !leading.iter().any(|l| l.divides(*m)))
        .count();
    Colength::Finite(count as u64)
}

/// Upper bound for a finite `dim O/I`: two generic combinations of the
/// generators form a regular sequence inside `I`, and Bezout bounds their
/// intersection number by `d^2`.
fn finite_colength_bound<C: Coefficient>(generators: &[Poly<C>]) -> u64 {
    let d = generators.iter().filter_map(Poly::max_degree).max().unwrap_or(0) as u64;
    d * d
}

/// Standard basis of `I + m^d` for growing `d` until its leading ideal
/// shows `m^c ⊆ I + m^d` with `c < d`, which by Nakayama gives `m^c ⊆ I`.
/// `None` means `I` has infinite colength.
fn truncated_tangent_cone<C: Coefficient>(generators: &[Poly<C>]) -> Option<mora::MoraOutput<C>> {
    let nonzero: Vec<&Poly<C>> = generators.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.len() < 2 && nonzero.iter().all(|g| g.order() != Some(0)) {
        return None;
    }
    let bound = finite_colength_bound(generators);
    let limit = u32::try_from(bound + 1).unwrap_or(u32::MAX);
    let max_order = generators.iter().filter_map(Poly::order).max().unwrap_or(0);
    let mut d = (max_order + 2).min(limit);
    loop {
        let mut with_power = generators.to_vec();
        with_power.extend(Monomial::of_degree(d).map(Poly::monomial));
        let out = mora::tangent_cone(&with_power);
        if out.corner.is_some_and(|c| c < d) {
            return Some(out);
        }
        let leading: Vec<Monomial> = out.elements.iter().filter_map(Poly::leading_monomial).collect();
        let below = staircase_size(&leading).finite().unwrap_or(u64::MAX);
        if below > bound || d >= limit {
            return None;
        }
        d = d.saturating_mul(2).min(limit);
    }
}

/// Mora's weak normal form of `f` with respect to `basis`.
///
/// The result `r` satisfies `u*f - r ∈ <basis>` for a unit `u` of the local
/// ring, and when nonzero its leading monomial is divisible by no leading
/// monomial of `basis`. If `basis` has finite colength the reduction runs
/// against its standard basis below the corner and `u = 1`.
pub fn mora_normal_form<C: Coefficient>(f: &Poly<C>, basis: &[Poly<C>]) -> Poly<C> {
    match truncated_tangent_cone(basis) {
        Some(out) => mora::reduce(f, &out.elements, out.corner),
        None => mora::reduce(f, basis, None),
    }
}

fn basis_from<C: Coefficient>(ideal: &Ideal<C>, out: mora::MoraOutput<C>) -> StandardBasis<C> {
    let leading_monomials = out.elements.iter().filter_map(Poly::leading_monomial).collect();
    StandardBasis {
        source: ideal.clone(),
        elements: out.elements,
        leading_monomials,
        order: MonomialOrder::LocalDegRevLex,
        corner: out.corner,
    }
}

/// Standard basis of a nonzero ideal. The zero ideal yields an empty basis.
///
/// Ideals of finite colength are computed modulo a power of `m`; the others
/// fall back to the untruncated tangent-cone algorithm.
pub fn standard_basis<C: Coefficient>(ideal: &Ideal<C>) -> StandardBasis<C> {
    let generators = ideal.generators();
    if generators.is_empty() {
        return basis_from(ideal, mora::tangent_cone(generators));
    }
    let out = truncated_tangent_cone(generators).unwrap_or_else(|| mora::tangent_cone(generators));
    basis_from(ideal, out)
}

/// `dim O/I`; the zero ideal has infinite colength.
pub fn colength<C: Coefficient>(ideal: &Ideal<C>) -> Colength {
    if ideal.is_zero() {
        return Colength::Infinite;
    }
    match truncated_tangent_cone(ideal.generators()) {
        Some(out) => {
            let leading: Vec<Monomial> = out.elements.iter().filter_map(Poly::leading_monomial).collect();
            staircase_size(&leading)
        }
        None => Colength::Infinite,
    }
}

/// Membership of `f` in the localization of `ideal`.
pub fn contains<C: Coefficient>(ideal: &Ideal<C>, f: &Poly<C>) -> bool {
    if f.is_zero() {
        return true;
    }
    if ideal.is_zero() {
        return false;
    }
    standard_basis(ideal).contains(f)
}
