use serde::{Serialize, Serializer};

use super::closed::{
    dim_mk, ell_k_rational, exceeds_four_thirds, foliation_milnor_k_lower_bound, is_integer, milnor_k_closed,
    weighted_homogeneous_weights,
};
use super::germ::{
    finite, foliation_milnor_k, foliation_tjurina_k, is_invariant, is_quasihomogeneous_foliation, milnor_k,
    tjurina_k, CurveGerm, Foliation,
};
use super::index::{gsv_index, polar_intersection_k, PolarSampling, PolarValue};
use crate::error::{Error, Result};
use crate::ring::{Coefficient, Poly};
use crate::stdbasis::{colength, Colength, Ideal};
use crate::Rational;

/// Hypotheses that cannot be decided without resolving the foliation and
/// must be asserted by the caller.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Assertions {
    /// Non-dicritical, second type, and `C` is the total union of
    /// separatrices (or `B0` the zero divisor of a balanced divisor).
    pub second_type: bool,
    /// Non-dicritical generalized curve.
    pub generalized_curve: bool,
}

impl Assertions {
    fn require_second_type(self) -> Result<()> {
        if self.second_type {
            Ok(())
        } else {
            Err(Error::HypothesisNotAsserted("second type (pass --assert-second-type)"))
        }
    }

    fn require_generalized_curve(self) -> Result<()> {
        if self.generalized_curve {
            Ok(())
        } else {
            Err(Error::HypothesisNotAsserted("generalized curve (pass --assert-generalized-curve)"))
        }
    }
}

/// A computed value next to its closed form.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub computed: Colength,
    pub closed_form: Option<Colength>,
    pub agrees: Option<bool>,
}

impl InvariantReport {
    pub fn new(name: impl Into<String>, computed: Colength, closed_form: Option<Colength>) -> Self {
        InvariantReport {
            name: name.into(),
            computed,
            agrees: closed_form.map(|c| c == computed),
            closed_form,
        }
    }
}

/// One `k` of an identity check: `left` should equal `right`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CheckRow {
    pub k: u32,
    pub left: i64,
    pub right: i64,
    pub holds: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckReport {
    pub holds: bool,
    pub rows: Vec<CheckRow>,
}

impl CheckReport {
    fn from_rows(rows: Vec<CheckRow>) -> Self {
        CheckReport {
            holds: rows.iter().all(|r| r.holds),
            rows,
        }
    }
}

fn rows(k_max: u32, mut pair: impl FnMut(u32) -> Result<(i64, i64)>) -> Result<CheckReport> {
    let rows = (0..=k_max)
        .map(|k| {
            let (left, right) = pair(k)?;
            Ok(CheckRow { k, left, right, holds: left == right })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::from_rows(rows))
}

fn int(value: Colength, what: &str) -> Result<i64> {
    finite(value, what).map(|v| v as i64)
}

/// `τ^k(F, C) - τ^k(C) = GSV(F, C)` for `k = 0..=k_max`.
pub fn gsv_theorem_check<C: Coefficient>(fol: &Foliation<C>, curve: &CurveGerm<C>, k_max: u32) -> Result<CheckReport> {
    let gsv = gsv_index(fol, curve)?;
    rows(k_max, |k| {
        let tf = int(foliation_tjurina_k(fol, curve, k)?, "tau^k(F, C)")?;
        let tc = int(tjurina_k(curve.f(), k), "tau^k(C)")?;
        Ok((tf - tc, gsv))
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TeissierReport {
    pub polar: PolarValue,
    pub milnor_k: u64,
    pub multiplicity: u32,
    pub holds: bool,
}

/// `i^k(P^df, C) = μ^k(C) + ν(f) - 1`.
pub fn teissier_k_check<C: Coefficient>(f: &Poly<C>, k: u32, sampling: PolarSampling) -> Result<TeissierReport> {
    let curve = CurveGerm::reduced(f.clone())?;
    let ham = Foliation::hamiltonian(f)?;
    let polar = polar_intersection_k(&ham, &curve, k, sampling)?;
    let milnor_k = finite(milnor_k(f, k), "mu^k(f)")?;
    let multiplicity = curve.multiplicity();
    let holds = polar.value == milnor_k + multiplicity as u64 - 1;
    Ok(TeissierReport { polar, milnor_k, multiplicity, holds })
}

/// `i^k(P^F, C) - i^k(P^df, C) = GSV(F, C)` for `k = 0..=k_max`; the
/// `k = 0` row is the classical polar identity.
pub fn polar_gsv_check<C: Coefficient>(
    fol: &Foliation<C>,
    curve: &CurveGerm<C>,
    k_max: u32,
    sampling: PolarSampling,
    assertions: Assertions,
) -> Result<CheckReport> {
    assertions.require_second_type()?;
    let gsv = gsv_index(fol, curve)?;
    let ham = Foliation::hamiltonian(curve.f())?;
    rows(k_max, |k| {
        let a = polar_intersection_k(fol, curve, k, sampling)?.value as i64;
        let b = polar_intersection_k(&ham, curve, k, sampling)?.value as i64;
        Ok((a - b, gsv))
    })
}

/// `μ^k(F) - μ^k(C) = μ(F) - μ(C)` for `k = 0..=k_max`.
pub fn second_type_milnor_check<C: Coefficient>(
    fol: &Foliation<C>,
    curve: &CurveGerm<C>,
    k_max: u32,
    assertions: Assertions,
) -> Result<CheckReport> {
    assertions.require_second_type()?;
    if !is_invariant(fol, curve) {
        return Err(Error::NotInvariant);
    }
    // Colengths do not depend on coordinates, so the ν(f_x) ≤ ν(f_y)
    // normalization only matters for the closed forms.
    let diff = |k: u32| -> Result<i64> {
        Ok(int(foliation_milnor_k(fol, k), "mu^k(F)")? - int(milnor_k(curve.f(), k), "mu^k(C)")?)
    };
    let base = diff(0)?;
    rows(k_max, |k| Ok((diff(k)?, base)))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct BoundReport {
    pub tau_k: u64,
    pub mu_k: u64,
    pub upper: u64,
    pub holds: bool,
}

/// `τ^k(F, B0) ≤ μ^k(F) ≤ 2τ^k(F, B0) + k(k+1)/2`.
pub fn milnor_bound_check<C: Coefficient>(
    fol: &Foliation<C>,
    b0: &CurveGerm<C>,
    k: u32,
    assertions: Assertions,
) -> Result<BoundReport> {
    assertions.require_second_type()?;
    let tau_k = finite(foliation_tjurina_k(fol, b0, k)?, "tau^k(F, B0)")?;
    let mu_k = finite(foliation_milnor_k(fol, k), "mu^k(F)")?;
    let upper = 2 * tau_k + dim_mk(k);
    Ok(BoundReport { tau_k, mu_k, upper, holds: tau_k <= mu_k && mu_k <= upper })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct QuasiHomogeneousReport {
    pub mu_k: u64,
    pub tau_k: u64,
    pub holds: bool,
}

/// `μ^k(F) = τ^k(F, C) + k(k-1)/2` for `k ≥ 1`.
pub fn quasihomogeneous_identity_check<C: Coefficient>(
    fol: &Foliation<C>,
    curve: &CurveGerm<C>,
    k: u32,
    assertions: Assertions,
) -> Result<QuasiHomogeneousReport> {
    assertions.require_generalized_curve()?;
    if k == 0 {
        return Err(Error::InvalidArgument("the quasi-homogeneous identity needs k >= 1".into()));
    }
    if !is_invariant(fol, curve) {
        return Err(Error::NotInvariant);
    }
    if !is_quasihomogeneous_foliation(fol, curve) {
        return Err(Error::NotQuasiHomogeneous);
    }
    let mu_k = finite(foliation_milnor_k(fol, k), "mu^k(F)")?;
    let tau_k = finite(foliation_tjurina_k(fol, curve, k)?, "tau^k(F, C)")?;
    Ok(QuasiHomogeneousReport { mu_k, tau_k, holds: mu_k == tau_k + dim_mk(k - 1) })
}

fn serialize_exact<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    match (is_integer(q), i64::try_from(q.to_integer())) {
        (true, Ok(n)) => s.serialize_i64(n),
        _ => s.serialize_str(&q.to_string()),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Conjecture1Report {
    pub tau_k: u64,
    #[serde(serialize_with = "serialize_exact")]
    pub ell_k: Rational,
    pub holds: bool,
}

/// `τ^k(f) ≥ ℓ^k(1/w1, 1/w2)` for weighted homogeneous `f`.
pub fn check_conjecture1<C: Coefficient>(f: &Poly<C>, k: u32) -> Result<Conjecture1Report> {
    let w = weighted_homogeneous_weights(f).ok_or(Error::NotWeightedHomogeneous)?;
    let (a1, a2) = w.sorted_reciprocals();
    let ell = ell_k_rational(&a1, &a2, k)?;
    let tau_k = finite(tjurina_k(f, k), "tau^k(f)")?;
    Ok(Conjecture1Report {
        holds: Rational::from_integer(tau_k.into()) >= ell,
        tau_k,
        ell_k: ell,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct RatioReport {
    pub mu_k: u64,
    pub tau_k: u64,
    pub exceeds_4_3: bool,
}

/// Exact comparison of `μ^k(f)/τ^k(f)` against `4/3`.
pub fn ratio_check<C: Coefficient>(f: &Poly<C>, k: u32) -> Result<RatioReport> {
    let mu_k = finite(milnor_k(f, k), "mu^k(f)")?;
    let tau_k = finite(tjurina_k(f, k), "tau^k(f)")?;
    Ok(RatioReport { mu_k, tau_k, exceeds_4_3: exceeds_four_thirds(mu_k, tau_k) })
}

/// `μ^k(f)` by standard basis against the closed form in `μ(f)` and `ν(f)`.
pub fn milnor_k_report<C: Coefficient>(f: &Poly<C>, k: u32) -> Result<InvariantReport> {
    let computed = milnor_k(f, k);
    let closed = match milnor_k(f, 0) {
        Colength::Finite(mu) => Some(Colength::Finite(milnor_k_closed(mu, f.multiplicity()?, k))),
        Colength::Infinite => None,
    };
    Ok(InvariantReport::new(format!("mu^{k}"), computed, closed))
}

/// `μ^k(F)` assembled from `μ(F) + dim O/m^k + dim O/(⟨P⟩ + m^k)` with
/// `ν(P) ≤ ν(Q)`.
pub fn foliation_milnor_k_decomposed<C: Coefficient>(fol: &Foliation<C>, k: u32) -> Result<u64> {
    let mu = finite(foliation_milnor_k(fol, 0), "mu(F)")?;
    let (p, _) = fol.ordered_pair();
    let tail = finite(colength(&Ideal::maximal_power(k).with(p.clone())), "dim O/(<P> + m^k)")?;
    Ok(mu + dim_mk(k) + tail)
}

/// `μ^k(F)` against its lower bound `(ν + k)(ν + k + 1)/2`.
pub fn foliation_milnor_k_bound<C: Coefficient>(fol: &Foliation<C>, k: u32) -> Result<(u64, u64)> {
    let mu = finite(foliation_milnor_k(fol, k), "mu^k(F)")?;
    Ok((mu, foliation_milnor_k_lower_bound(fol.multiplicity(), k)))
}
