use crate::ring::{Coefficient, Monomial, Poly};

/// Finitely generated ideal of the local ring at the origin.
///
/// Zero generators are dropped on construction, so the zero ideal has no
/// generators. Generator order never affects any computed invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ideal<C> {
    generators: Vec<Poly<C>>,
}

impl<C: Coefficient> Ideal<C> {
    pub fn new<I: IntoIterator<Item = Poly<C>>>(generators: I) -> Self {
        Ideal {
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        }
    }

    pub fn principal(f: Poly<C>) -> Self {
        Self::new([f])
    }

    pub fn unit() -> Self {
        Self::principal(Poly::one())
    }

    pub fn zero() -> Self {
        Ideal { generators: Vec::new() }
    }

    /// `m^k`: the unit ideal for `k = 0`, otherwise the `k + 1` monomials of
    /// degree `k`.
    pub fn maximal_power(k: u32) -> Self {
        Self::new(Monomial::of_degree(k).map(Poly::monomial))
    }

    pub fn generators(&self) -> &[Poly<C>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn sum(&self, other: &Ideal<C>) -> Self {
        Ideal {
            generators: self.generators.iter().chain(&other.generators).cloned().collect(),
        }
    }

    pub fn product(&self, other: &Ideal<C>) -> Self {
        Self::new(
            self.generators
                .iter()
                .flat_map(|a| other.generators.iter().map(move |b| a * b)),
        )
    }

    pub fn with(&self, f: Poly<C>) -> Self {
        let mut generators = self.generators.clone();
        if !f.is_zero() {
            generators.push(f);
        }
        Ideal { generators }
    }
}

impl<C: Coefficient> FromIterator<Poly<C>> for Ideal<C> {
    fn from_iter<I: IntoIterator<Item = Poly<C>>>(iter: I) -> Self {
        Self::new(iter)
    }
}

pub fn ideal_sum<C: Coefficient>(i: &Ideal<C>, j: &Ideal<C>) -> Ideal<C> {
    i.sum(j)
}

pub fn ideal_product<C: Coefficient>(i: &Ideal<C>, j: &Ideal<C>) -> Ideal<C> {
    i.product(j)
}

pub fn maximal_ideal_power<C: Coefficient>(k: u32) -> Ideal<C> {
    Ideal::maximal_power(k)
}
