//! Numeric traits the polynomial core is generic over.
//!
//! [`Coefficient`] is the ring a polynomial's coefficients live in (an
//! integral domain with decidable exact division). [`Scalar`] is anything a
//! polynomial can be evaluated into: exact rationals for proofs, `f32`/`f64`
//! for numeric spot checks.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

use crate::poly::{Poly, Variable};

/// Coefficient ring of a [`Poly`](crate::Poly).
pub trait Coefficient:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Num
    + Signed
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn from_integer(n: BigInt) -> Self;

    /// `Some(q)` with `q * rhs == self`, `None` if `rhs` does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn to_scalar<S: Scalar>(&self) -> S;

    /// Resultant by a route specific to this ring, for `f` and `g` of
    /// positive degree in `x`. `None` selects the generic routes.
    fn fast_resultant(_f: &Poly<Self>, _g: &Poly<Self>, _x: &Variable) -> Option<Poly<Self>> {
        None
    }
}

impl Coefficient for BigInt {
    fn from_integer(n: BigInt) -> Self {
        n
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn to_scalar<S: Scalar>(&self) -> S {
        S::from_bigint(self)
    }

    fn fast_resultant(f: &Poly<Self>, g: &Poly<Self>, x: &Variable) -> Option<Poly<Self>> {
        crate::modular::resultant(f, g, x.index())
    }
}

impl Coefficient for BigRational {
    fn from_integer(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn to_scalar<S: Scalar>(&self) -> S {
        S::from_bigrational(self)
    }
}

/// Evaluation target for polynomials.
pub trait Scalar: Clone + Num + Neg<Output = Self> + PartialOrd + Debug {
    fn from_bigint(n: &BigInt) -> Self;
    fn from_bigrational(q: &BigRational) -> Self;
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn from_bigrational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl Scalar for f64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }

    fn from_bigrational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f32().unwrap_or(f32::NAN)
    }

    fn from_bigrational(q: &BigRational) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_exact_div() {
        let six = BigInt::from(6);
        assert_eq!(six.exact_div(&BigInt::from(-3)), Some(BigInt::from(-2)));
        assert_eq!(six.exact_div(&BigInt::from(4)), None);
        assert_eq!(six.exact_div(&BigInt::zero()), None);
    }

    #[test]
    fn rational_division_is_always_exact() {
        let a = BigRational::new(3.into(), 4.into());
        let b = BigRational::new((-1).into(), 2.into());
        assert_eq!(a.exact_div(&b), Some(BigRational::new((-3).into(), 2.into())));
    }

    #[test]
    fn float_embedding() {
        let q = BigRational::new(1.into(), 4.into());
        assert_eq!(<f64 as Scalar>::from_bigrational(&q), 0.25);
        assert_eq!(<f32 as Scalar>::from_bigint(&BigInt::from(-7)), -7.0);
    }
}
