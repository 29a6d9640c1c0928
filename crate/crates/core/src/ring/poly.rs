use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Coefficient, Monomial};
use crate::error::{Error, Result};

/// Sparse bivariate polynomial with exact coefficients.
///
/// Terms are kept sorted in descending local order, so the first term is the
/// leading term and total degree is non-decreasing along the list. Zero
/// coefficients are never stored; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coefficient> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    pub fn x() -> Self {
        Self::monomial(Monomial::new(1, 0))
    }

    pub fn y() -> Self {
        Self::monomial(Monomial::new(0, 1))
    }

    /// Build from arbitrary terms; duplicates are summed and zeros dropped.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            let slot = acc.entry(m).or_insert_with(C::zero);
            *slot = slot.clone() + c;
        }
        Self::from_sorted_map(acc)
    }

    fn from_sorted_map(acc: BTreeMap<Monomial, C>) -> Self {
        Poly {
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|(m, _)| *m)
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coefficient(&self, m: Monomial) -> C {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| C::zero())
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(Monomial::ONE)
    }

    /// Lowest total degree of a term, `None` for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    /// Algebraic multiplicity at the origin.
    pub fn multiplicity(&self) -> Result<u32> {
        self.order().ok_or(Error::ZeroGerm)
    }

    /// Highest total degree of a term.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// Highest minus lowest total degree.
    pub fn ecart(&self) -> u32 {
        match (self.max_degree(), self.order()) {
            (Some(hi), Some(lo)) => hi - lo,
            _ => 0,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())).collect(),
        }
    }

    /// `c * m * self`. Multiplication by a monomial preserves the order.
    pub fn mul_term(&self, m: Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(t, a)| (*t * m, a.clone() * c.clone())).collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => {
                let inv = C::one() / lc.clone();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// `self - c * m * g`, computed by a single merge.
    pub fn sub_mul_term(&self, c: &C, m: Monomial, g: &Poly<C>) -> Self {
        let shifted = g.terms.iter().map(|(t, a)| (*t * m, a.clone() * c.clone()));
        merge(self.terms.iter().cloned(), shifted, |a, b| a - b, |b| -b)
    }

    /// Drop every term of total degree `>= degree`.
    pub fn truncate(&mut self, degree: u32) {
        let cut = self.terms.partition_point(|(m, _)| m.degree() < degree);
        self.terms.truncate(cut);
    }

    pub fn truncated(&self, degree: u32) -> Self {
        let mut p = self.clone();
        p.truncate(degree);
        p
    }

    pub fn partial_x(&self) -> Self {
        self.derivative(|m| m.x, |m| Monomial::new(m.x - 1, m.y))
    }

    pub fn partial_y(&self) -> Self {
        self.derivative(|m| m.y, |m| Monomial::new(m.x, m.y - 1))
    }

    fn derivative(&self, exp: impl Fn(Monomial) -> u32, lower: impl Fn(Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| exp(*m) > 0).map(|(m, c)| {
            let e = C::from_u32(exp(*m)).expect("exponent fits in the coefficient field");
            (lower(*m), c.clone() * e)
        }))
    }

    /// Exchange the roles of `x` and `y`.
    pub fn swap_variables(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (Monomial::new(m.y, m.x), c.clone())))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Convert coefficients into another exact field.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

fn merge<C: Coefficient>(
    a: impl Iterator<Item = (Monomial, C)>,
    b: impl Iterator<Item = (Monomial, C)>,
    combine: impl Fn(C, C) -> C,
    only_b: impl Fn(C) -> C,
) -> Poly<C> {
    let mut a = a.peekable();
    let mut b = b.peekable();
    let mut out = Vec::new();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (Some((ma, _)), Some((mb, _))) => ma.cmp(mb),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => out.push(a.next().unwrap()),
            Ordering::Less => {
                let (m, c) = b.next().unwrap();
                out.push((m, only_b(c)));
            }
            Ordering::Equal => {
                let (m, ca) = a.next().unwrap();
                let (_, cb) = b.next().unwrap();
                let c = combine(ca, cb);
                if !c.is_zero() {
                    out.push((m, c));
                }
            }
        }
    }
    Poly { terms: out }
}

impl<C: Coefficient> Add for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        merge(self.terms.iter().cloned(), rhs.terms.iter().cloned(), |a, b| a + b, |b| b)
    }
}

impl<C: Coefficient> Sub for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        merge(self.terms.iter().cloned(), rhs.terms.iter().cloned(), |a, b| a - b, |b| -b)
    }
}

impl<C: Coefficient> Mul for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let slot = acc.entry(*ma * *mb).or_insert_with(C::zero);
                *slot = slot.clone() + ca.clone() * cb.clone();
            }
        }
        Poly::from_sorted_map(acc)
    }
}

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl<C: Coefficient> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    /// Prints in the input grammar, leading term first: `-x^2*y + 3/2*y^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
