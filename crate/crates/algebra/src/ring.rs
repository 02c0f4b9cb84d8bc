//! The coefficient interface shared by series and Laurent objects.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::ratfunc::RationalFunction;

/// Commutative ring with partial inverses and square roots.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_inv(&self) -> Result<Self, AlgebraError>;
    fn try_sqrt(&self) -> Result<Self, AlgebraError>;

    fn try_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.try_inv()?))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale_rational(&self, q: &BigRational) -> Self {
        self.mul(&Self::from_rational(q))
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn from_rational(q: &BigRational) -> Self {
        RationalFunction::from_rational(q)
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Result<Self, AlgebraError> {
        RationalFunction::try_inv(self)
    }
    fn try_sqrt(&self) -> Result<Self, AlgebraError> {
        RationalFunction::try_sqrt(self)
    }
    fn try_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        RationalFunction::try_div(self, other)
    }
    fn is_one(&self) -> bool {
        RationalFunction::is_one(self)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Result<Self, AlgebraError> {
        if Zero::is_zero(self) {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn try_sqrt(&self) -> Result<Self, AlgebraError> {
        if self.is_negative() {
            return Err(AlgebraError::NonSquareLeadingCoefficient);
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Ok(BigRational::new(n, d))
        } else {
            Err(AlgebraError::NonSquareLeadingCoefficient)
        }
    }
}
