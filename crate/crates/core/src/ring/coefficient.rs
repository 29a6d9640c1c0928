use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed};

/// Exact field of coefficients.
///
/// Standard-basis computations decide equality with zero at every step, so
/// only exact fields implement this trait. Floating point types are
/// deliberately left out.
pub trait Coefficient:
    Num + Signed + Neg<Output = Self> + FromPrimitive + Clone + PartialOrd + Debug + Display + Send + Sync + 'static
{
    /// Lossless conversion into an arbitrary-precision rational.
    fn to_big_rational(&self) -> BigRational;
}

impl Coefficient for BigRational {
    fn to_big_rational(&self) -> BigRational {
        self.clone()
    }
}

macro_rules! impl_small_ratio {
    ($($int:ty),*) => {$(
        impl Coefficient for Ratio<$int> {
            fn to_big_rational(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
        }
    )*};
}

// Machine-word rationals are fast but panic on overflow; use them only for
// inputs known to stay small.
impl_small_ratio!(i64, i128);
