use crate::error::{Error, Result};
use crate::ring::{Coefficient, Poly};
use crate::stdbasis::{colength, Colength, Ideal};

/// Germ of foliation `ω = P dx + Q dy` with an isolated singularity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Foliation<C> {
    p: Poly<C>,
    q: Poly<C>,
}

impl<C: Coefficient> Foliation<C> {
    /// Rejects the zero form and forms whose coefficients share a branch
    /// through the origin.
    pub fn new(p: Poly<C>, q: Poly<C>) -> Result<Self> {
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroFoliation);
        }
        if !colength(&Ideal::new([p.clone(), q.clone()])).is_finite() {
            return Err(Error::NotIsolated);
        }
        Ok(Foliation { p, q })
    }

    /// The foliation `df`.
    pub fn hamiltonian(f: &Poly<C>) -> Result<Self> {
        Self::new(f.partial_x(), f.partial_y())
    }

    pub fn p(&self) -> &Poly<C> {
        &self.p
    }

    pub fn q(&self) -> &Poly<C> {
        &self.q
    }

    /// `⟨P, Q⟩`.
    pub fn ideal(&self) -> Ideal<C> {
        Ideal::new([self.p.clone(), self.q.clone()])
    }

    /// Algebraic multiplicity `ν(F) = min(ν(P), ν(Q))`.
    pub fn multiplicity(&self) -> u32 {
        self.p
            .order()
            .into_iter()
            .chain(self.q.order())
            .min()
            .expect("foliation has a nonzero coefficient")
    }

    /// `(P, Q)` ordered so that the first has the lower multiplicity.
    pub fn ordered_pair(&self) -> (&Poly<C>, &Poly<C>) {
        let nu = |f: &Poly<C>| f.order().unwrap_or(u32::MAX);
        if nu(&self.p) <= nu(&self.q) {
            (&self.p, &self.q)
        } else {
            (&self.q, &self.p)
        }
    }

    /// Polar `αP + βQ`.
    pub fn polar(&self, alpha: &C, beta: &C) -> Poly<C> {
        &self.p.scale(alpha) + &self.q.scale(beta)
    }
}

/// Plane curve germ `{f = 0}` through the origin.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveGerm<C> {
    f: Poly<C>,
    reduced_certified: bool,
}

impl<C: Coefficient> CurveGerm<C> {
    pub fn new(f: Poly<C>) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroGerm);
        }
        if !f.constant_term().is_zero() {
            return Err(Error::CurveNotThroughOrigin);
        }
        let reduced_certified = tjurina_k(&f, 0).is_finite();
        Ok(CurveGerm { f, reduced_certified })
    }

    /// Like [`CurveGerm::new`] but rejects non-reduced equations.
    pub fn reduced(f: Poly<C>) -> Result<Self> {
        let c = Self::new(f)?;
        if !c.reduced_certified {
            return Err(Error::NotReduced);
        }
        Ok(c)
    }

    pub fn f(&self) -> &Poly<C> {
        &self.f
    }

    /// True when `τ(f)` is finite.
    pub fn reduced_certified(&self) -> bool {
        self.reduced_certified
    }

    pub fn multiplicity(&self) -> u32 {
        self.f.order().expect("curve equation is nonzero")
    }

    pub fn jacobian(&self) -> Ideal<C> {
        jacobian(&self.f)
    }
}

pub(crate) fn jacobian<C: Coefficient>(f: &Poly<C>) -> Ideal<C> {
    Ideal::new([f.partial_x(), f.partial_y()])
}

/// `μ^k(f) = dim O/⟨f_x, f_y⟩m^k`.
pub fn milnor_k<C: Coefficient>(f: &Poly<C>, k: u32) -> Colength {
    colength(&jacobian(f).product(&Ideal::maximal_power(k)))
}

/// `τ^k(f) = dim O/(⟨f_x, f_y⟩m^k + ⟨f⟩)`.
pub fn tjurina_k<C: Coefficient>(f: &Poly<C>, k: u32) -> Colength {
    colength(&jacobian(f).product(&Ideal::maximal_power(k)).with(f.clone()))
}

/// `μ^k(F) = dim O/⟨P, Q⟩m^k`.
pub fn foliation_milnor_k<C: Coefficient>(fol: &Foliation<C>, k: u32) -> Colength {
    colength(&fol.ideal().product(&Ideal::maximal_power(k)))
}

/// `τ^k(F, C) = dim O/(⟨P, Q⟩m^k + ⟨f⟩)` for an invariant curve.
pub fn foliation_tjurina_k<C: Coefficient>(fol: &Foliation<C>, curve: &CurveGerm<C>, k: u32) -> Result<Colength> {
    if !is_invariant(fol, curve) {
        return Err(Error::NotInvariant);
    }
    Ok(colength(&fol.ideal().product(&Ideal::maximal_power(k)).with(curve.f.clone())))
}

/// `i(f, g) = dim O/⟨f, g⟩`.
pub fn intersection_number<C: Coefficient>(f: &Poly<C>, g: &Poly<C>) -> Colength {
    colength(&Ideal::new([f.clone(), g.clone()]))
}

/// `f` divides `P f_y - Q f_x` in the local ring.
pub fn is_invariant<C: Coefficient>(fol: &Foliation<C>, curve: &CurveGerm<C>) -> bool {
    let f = &curve.f;
    let w = &(&fol.p * &f.partial_y()) - &(&fol.q * &f.partial_x());
    crate::stdbasis::contains(&Ideal::principal(f.clone()), &w)
}

/// Quasi-homogeneity along `C`: `f ∈ ⟨P, Q⟩`.
pub fn is_quasihomogeneous_foliation<C: Coefficient>(fol: &Foliation<C>, curve: &CurveGerm<C>) -> bool {
    crate::stdbasis::contains(&fol.ideal(), &curve.f)
}

pub(crate) fn finite(value: Colength, what: &str) -> Result<u64> {
    value.finite().ok_or_else(|| Error::InfiniteColength(what.to_string()))
}
