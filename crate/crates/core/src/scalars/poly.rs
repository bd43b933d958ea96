//! Dense univariate polynomials over Z and Q, stored low degree first.
//!
//! Only the handful of routines the scalar types need: content, primitive
//! gcd via pseudo-remainders, exact division, and extended Euclid over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().unwrap().is_negative() {
        -c
    } else {
        c
    };
    p.iter().map(|x| x / &sign).collect()
}

fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[off + j] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd (positive leading coefficient) of two nonzero polynomials.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut x, mut y) = if a.len() >= b.len() {
        (primitive(a), primitive(b))
    } else {
        (primitive(b), primitive(a))
    };
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = prem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    x
}

/// Exact quotient `a / b` in Z[x]; panics if the division is not exact.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let top = r[i + db].clone();
        if top.is_zero() {
            continue;
        }
        let (qi, rem) = top.div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &qi * bj;
        }
        q[i] = qi;
    }
    assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(&mut q);
    q
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// The r-th cyclotomic polynomial, monic, low degree first.
pub(crate) fn cyclotomic_poly(r: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); r as usize + 1];
    num[0] = -BigInt::one();
    num[r as usize] = BigInt::one();
    for d in 1..r {
        if r.is_multiple_of(d) {
            num = div_exact(&num, &cyclotomic_poly(d));
        }
    }
    num
}

// ---- polynomials over Q -------------------------------------------------

pub(crate) fn qtrim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Returns (quotient, remainder) of a / b over Q; b nonzero.
pub(crate) fn qdivrem(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    qtrim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let inv_lb = b[db].recip();
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let i = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &inv_lb;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            r[i + j] -= t;
        }
        q[i] = c;
        r.pop();
        qtrim(&mut r);
    }
    qtrim(&mut q);
    (q, r)
}

pub(crate) fn qmul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(&mut out);
    out
}

pub(crate) fn qsub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    qtrim(&mut out);
    out
}

/// Inverse of `a` modulo `m` over Q, if gcd(a, m) = 1.
pub(crate) fn qinv_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    // Invariant: s_i * a == r_i (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    qtrim(&mut r1);
    let mut s0: Vec<BigRational> = Vec::new();
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = qdivrem(&r0, &r1);
        let s = qsub(&s0, &qmul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let mut out: Vec<BigRational> = s0.into_iter().map(|x| x * &c).collect();
    let (_, rem) = qdivrem(&out, m);
    out = rem;
    Some(out)
}
