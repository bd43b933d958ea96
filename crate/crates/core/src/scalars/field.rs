use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative field with exact arithmetic and a distinguished element `q`.
///
/// Elements that need ambient data (the cyclotomic modulus, for instance)
/// build their constants from a context value.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Ctx: Clone + fmt::Debug + Send + Sync;

    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_int_in(ctx: &Self::Ctx, n: &BigInt) -> Self;
    /// `q^e`; for a field without a parameter this is 1.
    fn q_pow_in(ctx: &Self::Ctx, e: i64) -> Self;
    fn ctx(&self) -> Self::Ctx;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        self.sub(&Self::one_in(&self.ctx())).is_zero()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

impl Field for BigRational {
    type Ctx = ();

    fn zero_in(_: &()) -> Self {
        BigRational::zero()
    }
    fn one_in(_: &()) -> Self {
        BigRational::one()
    }
    fn from_int_in(_: &(), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn q_pow_in(_: &(), _: i64) -> Self {
        BigRational::one()
    }
    fn ctx(&self) {}
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Field for super::RatFunc {
    type Ctx = ();

    fn zero_in(_: &()) -> Self {
        Self::zero()
    }
    fn one_in(_: &()) -> Self {
        Self::one()
    }
    fn from_int_in(_: &(), n: &BigInt) -> Self {
        Self::from(super::IntLaurent::constant(n.clone()))
    }
    fn q_pow_in(_: &(), e: i64) -> Self {
        Self::q_pow(e)
    }
    fn ctx(&self) {}
    fn is_zero(&self) -> bool {
        super::RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        super::RatFunc::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        super::RatFunc::inv(self).ok()
    }
}
