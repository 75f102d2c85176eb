//! Exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed rational, always kept in lowest terms with a
/// positive denominator. Zero is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let numerator = numerator.into();
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator {
                numerator: numerator.to_string(),
            });
        }
        Ok(Self(BigRational::new(numerator, denominator)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// The numerator, provided the denominator is 1.
    pub fn to_integer(&self) -> Result<BigInt> {
        if self.0.is_integer() {
            Ok(self.0.numer().clone())
        } else {
            Err(Error::NotIntegral {
                value: self.to_string(),
            })
        }
    }
}

/// Shorthand for [`ExactRational::new`].
pub fn rational(numerator: i64, denominator: i64) -> Result<ExactRational> {
    ExactRational::new(numerator, denominator)
}

macro_rules! from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for ExactRational {
            fn from(value: $t) -> Self {
                Self::from_integer(value)
            }
        }
    )*};
}

from_primitive!(i32, i64, u32, u64, usize);

impl From<BigInt> for ExactRational {
    fn from(value: BigInt) -> Self {
        Self::from_integer(value)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(r: &ExactRational) -> (BigInt, BigInt) {
        (r.numerator().clone(), r.denominator().clone())
    }

    #[test]
    fn g2_constant() {
        let r = rational(-1, 24).unwrap();
        assert_eq!(parts(&r), (BigInt::from(-1), BigInt::from(24)));
        assert_eq!(r.to_string(), "-1/24");
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(parts(&rational(0, 7).unwrap()), (0.into(), 1.into()));
        assert_eq!(parts(&rational(6, -4).unwrap()), ((-3).into(), 2.into()));
        assert_eq!(parts(&rational(-6, -4).unwrap()), (3.into(), 2.into()));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(rational(3, 0), Err(Error::ZeroDenominator { .. })));
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(
            rational(12, 1).unwrap().to_integer().unwrap(),
            BigInt::from(12)
        );
        assert_eq!(
            rational(0, 1).unwrap().to_integer().unwrap(),
            BigInt::from(0)
        );
        assert!(matches!(
            rational(-1, 24).unwrap().to_integer(),
            Err(Error::NotIntegral { .. })
        ));
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = rational(1, 6).unwrap();
        let b = rational(1, 3).unwrap();
        let sum = &a + &b;
        assert_eq!(parts(&sum), (1.into(), 2.into()));
        let diff = &a - &a;
        assert_eq!(parts(&diff), (0.into(), 1.into()));
        assert_eq!(
            parts(&(&a * &rational(-12, 1).unwrap())),
            ((-2).into(), 1.into())
        );
    }
}
