use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

/// A bivariate monomial `x^x * y^y`.
///
/// `Ord` is the local degree order (`ds`): lower total degree is larger, and
/// ties are broken reverse-lexicographically with `x > y`. The unit monomial
/// is the maximum.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub const fn degree(self) -> u32 {
        self.x + self.y
    }

    pub const fn is_one(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub const fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient(self, other: Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial::new(other.x - self.x, other.y - self.y))
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.x.max(other.x), self.y.max(other.y))
    }

    /// All monomials of total degree `d`, from `x^d` down to `y^d`.
    pub fn of_degree(d: u32) -> impl Iterator<Item = Monomial> {
        (0..=d).rev().map(move |a| Monomial::new(a, d - a))
    }
}

/// Compare two monomials in the local degree order.
pub fn local_cmp(a: Monomial, b: Monomial) -> Ordering {
    b.degree().cmp(&a.degree()).then(a.x.cmp(&b.x))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        local_cmp(*self, *other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (var, exp) in [("x", self.x), ("y", self.y)] {
            if exp == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match exp {
                1 => f.write_str(var)?,
                _ => write!(f, "{var}^{exp}")?,
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
