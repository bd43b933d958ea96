use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::IntLaurent;
use super::poly;

/// Element of Q(q) in canonical form.
///
/// `num` and `den` are coprime integer Laurent polynomials; `den` has shift 0,
/// a nonzero constant term and positive leading coefficient, and the integer
/// contents of `num` and `den` are coprime. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RatFunc {
    num: IntLaurent,
    den: IntLaurent,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: IntLaurent::zero(),
            den: IntLaurent::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(IntLaurent::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from(IntLaurent::constant(c))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from(IntLaurent::q_pow(e))
    }

    /// `num / den`, canonicalized. Errors when `den` is zero.
    pub fn new(num: IntLaurent, den: IntLaurent) -> crate::Result<Self> {
        if den.is_zero() {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn num(&self) -> &IntLaurent {
        &self.num
    }

    pub fn den(&self) -> &IntLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&IntLaurent> {
        self.is_laurent().then_some(&self.num)
    }

    fn canonical(num: IntLaurent, den: IntLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = num.shift() - den.shift();
        let mut a: Vec<BigInt> = num.coeffs().to_vec();
        let mut b: Vec<BigInt> = den.coeffs().to_vec();
        if b.len() > 1 {
            let g = poly::gcd(&a, &b);
            if g.len() > 1 {
                a = poly::div_exact(&a, &g);
                b = poly::div_exact(&b, &g);
            }
        }
        let c = poly::content(&a).gcd(&poly::content(&b));
        if !c.is_one() {
            a.iter_mut().for_each(|x| *x = &*x / &c);
            b.iter_mut().for_each(|x| *x = &*x / &c);
        }
        if b.last().unwrap().is_negative() {
            a.iter_mut().for_each(|x| *x = -&*x);
            b.iter_mut().for_each(|x| *x = -&*x);
        }
        RatFunc {
            num: IntLaurent::new(shift, a),
            den: IntLaurent::new(0, b),
        }
    }

    pub fn inv(&self) -> crate::Result<Self> {
        if self.is_zero() {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i64) -> crate::Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Multiply by `q^k` without any gcd work.
    pub fn shifted(&self, k: i64) -> Self {
        RatFunc {
            num: self.num.shifted(k),
            den: self.den.clone(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if self.is_laurent() {
            return RatFunc {
                num: self.num.scale(c),
                den: self.den.clone(),
            };
        }
        Self::canonical(self.num.scale(c), self.den.clone())
    }
}

impl From<IntLaurent> for RatFunc {
    fn from(num: IntLaurent) -> Self {
        RatFunc {
            num,
            den: IntLaurent::one(),
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_laurent() && rhs.is_laurent() {
            return RatFunc::from(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_laurent() && rhs.is_laurent() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        if rhs.num.is_monomial() && !self.den.is_one() && rhs.den.is_one() {
            // monomial times fraction: only the integer content can cancel
            return RatFunc::canonical(&self.num * &rhs.num, self.den.clone());
        }
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::inv`] for a checked version.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(shift: i64, c: &[i64]) -> IntLaurent {
        IntLaurent::from_i64s(shift, c)
    }

    #[test]
    fn inverse_of_quantum_two() {
        // (q^-1 + q)^-1 = q / (q^2 + 1)
        let two = RatFunc::from(l(-1, &[1, 0, 1]));
        let inv = two.inv().unwrap();
        assert_eq!(inv.num(), &l(1, &[1]));
        assert_eq!(inv.den(), &l(0, &[1, 0, 1]));
        assert!((&inv * &two).is_one());
        assert_eq!(inv.to_string(), "(q)/(1 + q^2)");
    }

    #[test]
    fn canonical_form_cancels() {
        // (q^2 - 1) / (2q - 2) = (q + 1)/2
        let x = RatFunc::new(l(0, &[-1, 0, 1]), l(0, &[-2, 2])).unwrap();
        assert_eq!(x.num(), &l(0, &[1, 1]));
        assert_eq!(x.den(), &l(0, &[2]));
        // negative denominators flip sign
        let y = RatFunc::new(l(0, &[1]), l(0, &[-3])).unwrap();
        assert_eq!(y.num(), &l(0, &[-1]));
        assert_eq!(y.den(), &l(0, &[3]));
        // shifts in the denominator move to the numerator
        let z = RatFunc::new(l(0, &[1]), l(2, &[1, 1])).unwrap();
        assert_eq!(z.num().shift(), -2);
        assert_eq!(z.den(), &l(0, &[1, 1]));
    }

    #[test]
    fn zero_division_is_an_error() {
        assert!(RatFunc::zero().inv().is_err());
        assert!(RatFunc::new(l(0, &[1]), IntLaurent::zero()).is_err());
    }
}
