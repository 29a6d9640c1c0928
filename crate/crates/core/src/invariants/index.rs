use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::germ::{intersection_number, is_invariant, CurveGerm, Foliation};
use crate::error::{Error, Result};
use crate::ring::{Coefficient, Poly};
use crate::stdbasis::{colength, Colength, Ideal};

/// Both certificates for the GSV index; `None` where an intersection
/// number is infinite.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GsvBranches {
    /// From `f_y ω = Q df + h f dx`.
    pub via_fy: Option<i64>,
    /// From `f_x ω = P df - h f dy`.
    pub via_fx: Option<i64>,
}

fn difference(h: Colength, g: Colength) -> Option<i64> {
    Some(h.finite()? as i64 - g.finite()? as i64)
}

pub fn gsv_branches<C: Coefficient>(fol: &Foliation<C>, curve: &CurveGerm<C>) -> Result<GsvBranches> {
    if !is_invariant(fol, curve) {
        return Err(Error::NotInvariant);
    }
    if !curve.reduced_certified() {
        return Err(Error::NotReduced);
    }
    let f = curve.f();
    Ok(GsvBranches {
        via_fy: difference(intersection_number(f, fol.q()), intersection_number(f, &f.partial_y())),
        via_fx: difference(intersection_number(f, fol.p()), intersection_number(f, &f.partial_x())),
    })
}

/// Directions tried when neither `f_y` nor `f_x` is coprime to `f`, as
/// happens for `f = xy`.
const FALLBACK_DIRECTIONS: i64 = 16;

/// `GSV(F, C) = i(f, h) - i(f, g)` for the explicit decompositions
/// `g ω = h df + f η` with `g = f_y` or `g = f_x`, and otherwise
/// `g = α f_x + β f_y`, `h = α P + β Q` for the first direction giving
/// finite intersection numbers.
pub fn gsv_index<C: Coefficient>(fol: &Foliation<C>, curve: &CurveGerm<C>) -> Result<i64> {
    let b = gsv_branches(fol, curve)?;
    if let Some(v) = b.via_fy.or(b.via_fx) {
        return Ok(v);
    }
    let f = curve.f();
    (1..=FALLBACK_DIRECTIONS)
        .find_map(|t| {
            let (a, b): (C, C) = (coeff(1), coeff(t));
            let g = &f.partial_x().scale(&a) + &f.partial_y().scale(&b);
            difference(intersection_number(f, &fol.polar(&a, &b)), intersection_number(f, &g))
        })
        .ok_or(Error::DegenerateDecomposition)
}

/// Sampling parameters for generic polar curves.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PolarSampling {
    pub samples: usize,
    pub seed: u64,
}

impl PolarSampling {
    pub const DEFAULT_SAMPLES: usize = 5;
    pub const DEFAULT_SEED: u64 = 0x5eed;
    const RANGE: i64 = 20;
    const MAX_DRAWS: usize = 10_000;

    pub fn new(samples: usize, seed: u64) -> Self {
        PolarSampling { samples, seed }
    }

    /// Projectively distinct directions `(α:β)` with entries in
    /// `[-20, 20]` whose polar has multiplicity `ν(F)`.
    pub fn directions<C: Coefficient>(&self, fol: &Foliation<C>) -> Result<Vec<(i64, i64)>> {
        if self.samples < 3 {
            return Err(Error::InvalidArgument(format!(
                "at least 3 polar samples are required, got {}",
                self.samples
            )));
        }
        let nu = fol.multiplicity();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out: Vec<(i64, i64)> = Vec::with_capacity(self.samples);
        for _ in 0..Self::MAX_DRAWS {
            if out.len() == self.samples {
                break;
            }
            let a = rng.gen_range(-Self::RANGE..=Self::RANGE);
            let b = rng.gen_range(-Self::RANGE..=Self::RANGE);
            if (a, b) == (0, 0) || out.iter().any(|&(c, d)| a * d == b * c) {
                continue;
            }
            if fol.polar(&coeff(a), &coeff(b)).order() == Some(nu) {
                out.push((a, b));
            }
        }
        if out.len() < self.samples {
            return Err(Error::PolarSampling(self.samples));
        }
        Ok(out)
    }
}

impl Default for PolarSampling {
    fn default() -> Self {
        Self::new(Self::DEFAULT_SAMPLES, Self::DEFAULT_SEED)
    }
}

fn coeff<C: Coefficient>(n: i64) -> C {
    C::from_i64(n).expect("small integers are representable")
}

/// Generic value of a sampled polar intersection number.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PolarValue {
    pub value: u64,
    /// All sampled directions gave the same finite value.
    pub stable: bool,
    pub directions: Vec<(i64, i64)>,
}

/// `i^k(P^F, C) = dim O/⟨αP + βQ, f⟩m^k` at generic `(α:β)`, taken as the
/// minimum over the sampled directions.
pub fn polar_intersection_k<C: Coefficient>(
    fol: &Foliation<C>,
    curve: &CurveGerm<C>,
    k: u32,
    sampling: PolarSampling,
) -> Result<PolarValue> {
    if !is_invariant(fol, curve) {
        return Err(Error::NotInvariant);
    }
    let directions = sampling.directions(fol)?;
    let mk = Ideal::maximal_power(k);
    let values: Vec<Colength> = directions
        .iter()
        .map(|&(a, b)| {
            let polar: Poly<C> = fol.polar(&coeff(a), &coeff(b));
            colength(&Ideal::new([polar, curve.f().clone()]).product(&mk))
        })
        .collect();
    let value = values
        .iter()
        .filter_map(|v| v.finite())
        .min()
        .ok_or(Error::PolarDegenerate)?;
    let stable = values.iter().all(|v| *v == Colength::Finite(value));
    Ok(PolarValue { value, stable, directions })
}
