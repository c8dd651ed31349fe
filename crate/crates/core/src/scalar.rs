//! Coefficient traits.
//!
//! Polynomials and quaternions are generic over a [`Scalar`]. Anything that
//! divides implements [`Field`]; the Gröbner engine additionally requires
//! [`ExactField`], which floating point types deliberately do not implement.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring of coefficients.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    fn from_i64(v: i64) -> Self;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;

    /// `self -= a * b`, the inner step of every reduction loop.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub_ref(&a.mul_ref(b));
    }

    /// True when the value is a negative number (used only for rendering signs).
    fn is_negative_value(&self) -> bool;

    fn render(&self) -> String;
}

/// A scalar with division by nonzero elements.
pub trait Field: Scalar {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn div_ref(&self, other: &Self) -> Self {
        self.mul_ref(&other.inv())
    }
}

/// Marker for fields whose arithmetic is exact, so "is zero" is decidable.
pub trait ExactField: Field {}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    // Integer operands skip the gcd normalization.
    fn add_ref(&self, other: &Self) -> Self {
        if self.denom().is_one() && other.denom().is_one() {
            return BigRational::new_raw(self.numer() + other.numer(), BigInt::one());
        }
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        if self.denom().is_one() && other.denom().is_one() {
            return BigRational::new_raw(self.numer() - other.numer(), BigInt::one());
        }
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.denom().is_one() && other.denom().is_one() {
            return BigRational::new_raw(self.numer() * other.numer(), BigInt::one());
        }
        self * other
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }

    fn render(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
}

impl ExactField for BigRational {}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn add_ref(&self, other: &Self) -> Self {
                self + other
            }

            fn sub_ref(&self, other: &Self) -> Self {
                self - other
            }

            fn mul_ref(&self, other: &Self) -> Self {
                self * other
            }

            fn is_negative_value(&self) -> bool {
                *self < 0.0
            }

            fn render(&self) -> String {
                format!("{}", self)
            }
        }

        impl Field for $t {
            fn inv(&self) -> Self {
                1.0 / self
            }

            fn div_ref(&self, other: &Self) -> Self {
                self / other
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

/// Builds a rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_render() {
        assert_eq!(rat(3, 2).render(), "3/2");
        assert_eq!(rat(-4, 2).render(), "-2");
        assert_eq!(rat(0, 5).render(), "0");
    }

    #[test]
    fn rational_lowest_terms() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn float_field() {
        assert_eq!(4.0f64.inv(), 0.25);
        assert!((-1.0f32).is_negative_value());
    }
}
