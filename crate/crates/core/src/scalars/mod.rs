//! Exact scalars: integer Laurent polynomials, the field Q(q), cyclotomic
//! fields for q a primitive root of unity, and q-combinatorics.

mod cyclotomic;
mod field;
mod laurent;
pub(crate) mod poly;
pub mod qnum;
mod ratfunc;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

pub use cyclotomic::{cyclotomic_field, CycloField, Cyclotomic};
pub use field::Field;
pub use laurent::IntLaurent;
pub use qnum::{q_binomial, q_factorial, q_int};
pub use ratfunc::RatFunc;

/// Which coefficient field a computation runs over.
#[derive(Clone, Debug)]
pub enum ScalarContext {
    Generic,
    RootOfUnity(Arc<CycloField>),
}

impl PartialEq for ScalarContext {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order()
    }
}

impl Eq for ScalarContext {}

impl ScalarContext {
    /// q a primitive r-th root of unity; r must be at least 3.
    pub fn root_of_unity(r: u32) -> crate::Result<Self> {
        if r < 3 {
            return Err(crate::Error::Domain(format!(
                "root of unity order must be at least 3, got {r}"
            )));
        }
        Ok(ScalarContext::RootOfUnity(cyclotomic_field(r)))
    }

    /// `None` in the generic regime.
    pub fn order(&self) -> Option<u32> {
        match self {
            ScalarContext::Generic => None,
            ScalarContext::RootOfUnity(k) => Some(k.order()),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            ScalarContext::Generic => Scalar::Generic(RatFunc::zero()),
            ScalarContext::RootOfUnity(k) => Scalar::Root(Cyclotomic::zero(k)),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            ScalarContext::Generic => Scalar::Generic(RatFunc::one()),
            ScalarContext::RootOfUnity(k) => Scalar::Root(Cyclotomic::one(k)),
        }
    }

    pub fn q_pow(&self, e: i64) -> Scalar {
        match self {
            ScalarContext::Generic => Scalar::Generic(RatFunc::q_pow(e)),
            ScalarContext::RootOfUnity(k) => Scalar::Root(Cyclotomic::zeta_pow(k, e)),
        }
    }

    pub fn from_laurent(&self, x: &IntLaurent) -> Scalar {
        match self {
            ScalarContext::Generic => Scalar::Generic(RatFunc::from(x.clone())),
            ScalarContext::RootOfUnity(k) => Scalar::Root(Cyclotomic::eval_laurent(k, x)),
        }
    }

    /// Bring a generic value into this regime (evaluation at the root of unity).
    pub fn from_ratfunc(&self, x: &RatFunc) -> crate::Result<Scalar> {
        match self {
            ScalarContext::Generic => Ok(Scalar::Generic(x.clone())),
            ScalarContext::RootOfUnity(k) => Cyclotomic::eval_ratfunc(k, x).map(Scalar::Root),
        }
    }
}

/// A scalar in one of the two regimes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Generic(RatFunc),
    Root(Cyclotomic),
}

impl Scalar {
    pub fn context(&self) -> ScalarContext {
        match self {
            Scalar::Generic(_) => ScalarContext::Generic,
            Scalar::Root(c) => ScalarContext::RootOfUnity(c.field().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Generic(x) => x.is_zero(),
            Scalar::Root(x) => x.is_zero(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> crate::Result<Self> {
        match (self, rhs) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Ok(Scalar::Generic(a + b)),
            (Scalar::Root(a), Scalar::Root(b)) if a.order() == b.order() => {
                Ok(Scalar::Root(a.add(b)))
            }
            _ => Err(crate::Error::ContextMismatch),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> crate::Result<Self> {
        match (self, rhs) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Ok(Scalar::Generic(a * b)),
            (Scalar::Root(a), Scalar::Root(b)) if a.order() == b.order() => {
                Ok(Scalar::Root(a.mul(b)))
            }
            _ => Err(crate::Error::ContextMismatch),
        }
    }

    pub fn checked_sub(&self, rhs: &Self) -> crate::Result<Self> {
        self.checked_add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            Scalar::Generic(a) => Scalar::Generic(-a),
            Scalar::Root(a) => Scalar::Root(a.neg()),
        }
    }

    pub fn inv(&self) -> crate::Result<Self> {
        match self {
            Scalar::Generic(a) => a.inv().map(Scalar::Generic),
            Scalar::Root(a) => a.inv().map(Scalar::Root),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> crate::Result<Self> {
        self.checked_mul(&rhs.inv()?)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Generic(x) => x.fmt(f),
            Scalar::Root(x) => x.fmt(f),
        }
    }
}

impl Field for Scalar {
    type Ctx = ScalarContext;

    fn zero_in(ctx: &ScalarContext) -> Self {
        ctx.zero()
    }
    fn one_in(ctx: &ScalarContext) -> Self {
        ctx.one()
    }
    fn from_int_in(ctx: &ScalarContext, n: &BigInt) -> Self {
        ctx.from_laurent(&IntLaurent::constant(n.clone()))
    }
    fn q_pow_in(ctx: &ScalarContext, e: i64) -> Self {
        ctx.q_pow(e)
    }
    fn ctx(&self) -> ScalarContext {
        self.context()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    // Mixing regimes inside one computation is a programming error.
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("scalar regimes do not match")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("scalar regimes do not match")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("scalar regimes do not match")
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        Scalar::inv(self).ok()
    }
}

/// Evaluation homomorphism Z[q, q^-1] -> Q(z), z a primitive r-th root of unity.
pub fn to_root_of_unity(x: &IntLaurent, r: u32) -> crate::Result<Cyclotomic> {
    if r < 3 {
        return Err(crate::Error::Domain(format!(
            "root of unity order must be at least 3, got {r}"
        )));
    }
    Ok(Cyclotomic::eval_laurent(&cyclotomic_field(r), x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn minus_one(r: u32) -> Cyclotomic {
        Cyclotomic::from_rational(&cyclotomic_field(r), BigRational::from_integer((-1).into()))
    }

    #[test]
    fn q_squared_at_fourth_root() {
        let x = to_root_of_unity(&IntLaurent::q_pow(2), 4).unwrap();
        assert_eq!(x, minus_one(4));
        let ctx = ScalarContext::root_of_unity(4).unwrap();
        assert_eq!(ctx.q_pow(2), Scalar::Root(minus_one(4)));
    }

    #[test]
    fn one_evaluates_to_one() {
        for r in 3..12 {
            assert!(to_root_of_unity(&IntLaurent::one(), r).unwrap().is_one());
        }
    }

    #[test]
    fn quantum_two_at_sixth_root() {
        let x = to_root_of_unity(&q_int(2), 6).unwrap();
        assert!(x.is_one());
    }

    #[test]
    fn small_orders_rejected() {
        assert!(ScalarContext::root_of_unity(2).is_err());
        assert!(to_root_of_unity(&IntLaurent::one(), 1).is_err());
    }

    #[test]
    fn mixed_regimes_are_an_error() {
        let a = ScalarContext::Generic.one();
        let b = ScalarContext::root_of_unity(5).unwrap().one();
        assert_eq!(a.checked_add(&b), Err(crate::Error::ContextMismatch));
        let c = ScalarContext::root_of_unity(7).unwrap().one();
        assert_eq!(b.checked_mul(&c), Err(crate::Error::ContextMismatch));
    }

    #[test]
    fn product_example() {
        let a = RatFunc::from(IntLaurent::from_i64s(0, &[-1, 1]));
        let b = RatFunc::from(IntLaurent::from_i64s(0, &[1, 1]));
        assert_eq!((&a * &b).to_string(), "-1 + q^2");
    }
}
