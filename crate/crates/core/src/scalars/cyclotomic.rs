use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{write_terms, IntLaurent};
use super::poly;
use super::ratfunc::RatFunc;

/// The r-th cyclotomic field Q(z), z a primitive r-th root of unity,
/// presented as Q[z]/(Phi_r).
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    /// Monic Phi_r, low degree first.
    modulus: Vec<BigRational>,
    /// `powers[k]` = z^k reduced, for 0 <= k < r.
    powers: Vec<Vec<BigRational>>,
}

impl CycloField {
    fn build(order: u32) -> Self {
        let modulus: Vec<BigRational> = poly::cyclotomic_poly(order)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let deg = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigRational::zero(); deg];
        cur[0] = BigRational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by z and reduce
            let mut next = vec![BigRational::zero(); deg + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            let top = next.pop().unwrap();
            if !top.is_zero() {
                for (i, m) in modulus.iter().take(deg).enumerate() {
                    next[i] -= &top * m;
                }
            }
            cur = next;
        }
        CycloField {
            order,
            modulus,
            powers,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Euler phi of the order: the degree of the field over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut p: Vec<BigRational>) -> Vec<BigRational> {
        let deg = self.degree();
        if p.len() <= deg {
            p.resize(deg, BigRational::zero());
            return p;
        }
        let mut out = vec![BigRational::zero(); deg];
        for (k, c) in p.iter_mut().enumerate() {
            if c.is_zero() {
                continue;
            }
            let zk = &self.powers[k % self.order as usize];
            for (i, z) in zk.iter().enumerate() {
                if !z.is_zero() {
                    out[i] += &*c * z;
                }
            }
        }
        out
    }
}

/// Shared field instance for order `r`.
pub fn cyclotomic_field(r: u32) -> Arc<CycloField> {
    static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    let map = FIELDS.get_or_init(Default::default);
    let mut guard = map.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(r)
        .or_insert_with(|| Arc::new(CycloField::build(r)))
        .clone()
}

/// Element of Q(z) with z = exp(2 pi i / r), in power-basis coordinates.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CycloField>,
    coords: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        Cyclotomic {
            field: field.clone(),
            coords: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<CycloField>, c: BigRational) -> Self {
        let mut out = Self::zero(field);
        out.coords[0] = c;
        out
    }

    /// z^e for any integer e.
    pub fn zeta_pow(field: &Arc<CycloField>, e: i64) -> Self {
        let k = e.rem_euclid(field.order as i64) as usize;
        Cyclotomic {
            field: field.clone(),
            coords: field.powers[k].clone(),
        }
    }

    pub fn from_coords(field: &Arc<CycloField>, coords: Vec<BigRational>) -> Self {
        Cyclotomic {
            field: field.clone(),
            coords: field.reduce(coords),
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coords[0])
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(
            self.field.order, rhs.field.order,
            "cyclotomic operands from different fields"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.field);
        }
        let prod = poly::qmul(&self.coords, &rhs.coords);
        Cyclotomic {
            field: self.field.clone(),
            coords: self.field.reduce(prod),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn inv(&self) -> crate::Result<Self> {
        let mut a = self.coords.clone();
        poly::qtrim(&mut a);
        if a.is_empty() {
            return Err(crate::Error::DivisionByZero);
        }
        let s = poly::qinv_mod(&a, &self.field.modulus)
            .ok_or_else(|| crate::Error::Consistency("cyclotomic modulus is reducible".into()))?;
        Ok(Cyclotomic {
            field: self.field.clone(),
            coords: self.field.reduce(s),
        })
    }

    pub fn pow(&self, e: i64) -> crate::Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(&self.field);
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            n >>= 1;
        }
        Ok(acc)
    }

    /// Evaluate an integer Laurent polynomial at q = z.
    pub fn eval_laurent(field: &Arc<CycloField>, x: &IntLaurent) -> Self {
        let mut out = vec![BigRational::zero(); field.degree()];
        let r = field.order as i64;
        for (i, c) in x.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = (x.shift() + i as i64).rem_euclid(r) as usize;
            for (o, z) in out.iter_mut().zip(&field.powers[k]) {
                if !z.is_zero() {
                    *o += z * BigRational::from_integer(c.clone());
                }
            }
        }
        Cyclotomic {
            field: field.clone(),
            coords: out,
        }
    }

    /// Evaluate an element of Q(q) at q = z; fails when the denominator vanishes.
    pub fn eval_ratfunc(field: &Arc<CycloField>, x: &RatFunc) -> crate::Result<Self> {
        let num = Self::eval_laurent(field, x.num());
        if x.is_laurent() {
            return Ok(num);
        }
        let den = Self::eval_laurent(field, x.den());
        den.inv().map(|d| num.mul(&d)).map_err(|_| {
            crate::Error::Domain(format!(
                "denominator {} vanishes at a primitive {}-th root of unity",
                x.den(),
                field.order
            ))
        })
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coords == other.coords
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coords.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c.abs().to_string(), c.is_negative()));
        write_terms(f, "z", terms)?;
        write!(f, " [r={}]", self.field.order)
    }
}

impl super::field::Field for Cyclotomic {
    type Ctx = Arc<CycloField>;

    fn zero_in(ctx: &Self::Ctx) -> Self {
        Cyclotomic::zero(ctx)
    }
    fn one_in(ctx: &Self::Ctx) -> Self {
        Cyclotomic::one(ctx)
    }
    fn from_int_in(ctx: &Self::Ctx, n: &BigInt) -> Self {
        Cyclotomic::from_rational(ctx, BigRational::from_integer(n.clone()))
    }
    fn q_pow_in(ctx: &Self::Ctx, e: i64) -> Self {
        Cyclotomic::zeta_pow(ctx, e)
    }
    fn ctx(&self) -> Self::Ctx {
        self.field.clone()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Cyclotomic::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Cyclotomic::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Cyclotomic::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Cyclotomic::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        Cyclotomic::inv(self).ok()
    }
}
