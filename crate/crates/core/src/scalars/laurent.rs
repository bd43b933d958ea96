use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly;

/// Integer Laurent polynomial in `q`: `sum_i coeffs[i] * q^(shift + i)`.
///
/// Normalized so the first and last coefficients are nonzero; zero is the
/// empty coefficient list with shift 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct IntLaurent {
    shift: i64,
    #[serde(with = "bigint_vec")]
    coeffs: Vec<BigInt>,
}

impl IntLaurent {
    pub fn new(shift: i64, coeffs: Vec<BigInt>) -> Self {
        let mut out = IntLaurent { shift, coeffs };
        out.normalize();
        out
    }

    pub fn from_i64s(shift: i64, coeffs: &[i64]) -> Self {
        Self::new(shift, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        Self::new(exp, vec![c])
    }

    /// `q^exp`
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    fn normalize(&mut self) {
        poly::trim(&mut self.coeffs);
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.shift = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.shift += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest and highest exponent, `None` for zero.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            None
        } else {
            Some((self.shift, self.shift + self.coeffs.len() as i64 - 1))
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.shift;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntLaurent {
            shift: self.shift,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        IntLaurent {
            shift: self.shift + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `q -> q^k` (k may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        if k == 0 {
            let s: BigInt = self.coeffs.iter().sum();
            return Self::constant(s);
        }
        let mut acc = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &Self::monomial(c.clone(), (self.shift + i as i64) * k);
        }
        acc
    }

    /// Exact quotient, if `other` divides `self` in Z[q, q^-1].
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let g = poly::gcd(&self.coeffs, &other.coeffs);
        let pa = poly::primitive(&other.coeffs);
        if g != pa {
            return None;
        }
        let ca = poly::content(&self.coeffs);
        let cb = poly::content(&other.coeffs);
        if !(&ca % &cb).is_zero() {
            return None;
        }
        let q = poly::div_exact(&self.coeffs, &other.coeffs);
        Some(Self::new(self.shift - other.shift, q))
    }
}

impl Add for &IntLaurent {
    type Output = IntLaurent;
    fn add(self, rhs: &IntLaurent) -> IntLaurent {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(rhs.shift);
        let hi = (self.shift + self.coeffs.len() as i64).max(rhs.shift + rhs.coeffs.len() as i64);
        let mut out = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(self.shift - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[(rhs.shift - lo) as usize + i] += c;
        }
        IntLaurent::new(lo, out)
    }
}

impl Sub for &IntLaurent {
    type Output = IntLaurent;
    fn sub(self, rhs: &IntLaurent) -> IntLaurent {
        self + &(-rhs)
    }
}

impl Neg for &IntLaurent {
    type Output = IntLaurent;
    fn neg(self) -> IntLaurent {
        IntLaurent {
            shift: self.shift,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntLaurent {
    type Output = IntLaurent;
    fn mul(self, rhs: &IntLaurent) -> IntLaurent {
        if self.is_zero() || rhs.is_zero() {
            return IntLaurent::zero();
        }
        IntLaurent::new(self.shift + rhs.shift, poly::mul(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add, IntLaurent);
forward_owned!(Sub, sub, IntLaurent);
forward_owned!(Mul, mul, IntLaurent);

impl Neg for IntLaurent {
    type Output = IntLaurent;
    fn neg(self) -> IntLaurent {
        -&self
    }
}

/// Writes a polynomial-like sum of `c * var^e` terms, ascending in `e`.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, var: &str, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (i64, String, bool)>,
{
    // items: (exponent, |coefficient| rendered, negative?)
    let mut first = true;
    for (e, mag, neg) in terms {
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let unit = mag == "1";
        match e {
            0 => write!(f, "{mag}")?,
            _ => {
                if !unit {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.shift + i as i64, c.abs().to_string(), c.is_negative()));
        write_terms(f, "q", terms)
    }
}

mod bigint_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let strs: Vec<String> = Vec::deserialize(d)?;
        strs.iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_strips_zeros() {
        let x = IntLaurent::from_i64s(-2, &[0, 0, 3, 0, 1, 0]);
        assert_eq!(x.shift(), 0);
        assert_eq!(x.coeffs().len(), 3);
        assert!(IntLaurent::from_i64s(5, &[0, 0]).is_zero());
        assert_eq!(IntLaurent::from_i64s(5, &[0]).shift(), 0);
    }

    #[test]
    fn difference_of_squares() {
        let a = IntLaurent::from_i64s(0, &[-1, 1]);
        let b = IntLaurent::from_i64s(0, &[1, 1]);
        assert_eq!(&a * &b, IntLaurent::from_i64s(0, &[-1, 0, 1]));
    }

    #[test]
    fn display() {
        let x = IntLaurent::from_i64s(-1, &[1, 0, 1]);
        assert_eq!(x.to_string(), "q^-1 + q");
        let y = IntLaurent::from_i64s(0, &[-2, 0, 0, -1]);
        assert_eq!(y.to_string(), "-2 - q^3");
        assert_eq!(IntLaurent::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = IntLaurent::from_i64s(-2, &[-1, 0, 0, 0, 1]);
        let b = IntLaurent::from_i64s(-1, &[-1, 0, 1]);
        assert_eq!(
            a.div_exact(&b).unwrap(),
            IntLaurent::from_i64s(-1, &[1, 0, 1])
        );
        assert!(b.div_exact(&IntLaurent::from_i64s(0, &[2])).is_none());
    }
}
