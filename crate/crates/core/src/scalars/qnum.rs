//! Symmetric q-integers, q-factorials and Gaussian binomials.

use super::laurent::IntLaurent;
use super::{Scalar, ScalarContext};

/// `[n]_q = (q^n - q^-n)/(q - q^-1) = q^{-(n-1)} + q^{-(n-3)} + ... + q^{n-1}`.
pub fn q_int(n: i64) -> IntLaurent {
    if n == 0 {
        return IntLaurent::zero();
    }
    let m = n.unsigned_abs() as i64;
    let mut coeffs = vec![0i64; (2 * m - 1) as usize];
    for i in (0..coeffs.len()).step_by(2) {
        coeffs[i] = 1;
    }
    let pos = IntLaurent::from_i64s(-(m - 1), &coeffs);
    if n < 0 {
        -pos
    } else {
        pos
    }
}

/// `[n]_{q^d}`.
pub fn q_int_at(n: i64, d: i64) -> IntLaurent {
    q_int(n).substitute_power(d)
}

pub fn q_factorial(n: u32) -> IntLaurent {
    (1..=n as i64).fold(IntLaurent::one(), |acc, m| &acc * &q_int(m))
}

pub fn q_factorial_at(n: u32, d: i64) -> IntLaurent {
    q_factorial(n).substitute_power(d)
}

/// Gaussian binomial; the quotient of factorials is always a Laurent polynomial.
pub fn q_binomial(n: i64, j: i64) -> crate::Result<IntLaurent> {
    if n < 0 || j < 0 || j > n {
        return Err(crate::Error::Domain(format!(
            "q-binomial needs 0 <= j <= n, got n = {n}, j = {j}"
        )));
    }
    let num = q_factorial(n as u32);
    let den = &q_factorial(j as u32) * &q_factorial((n - j) as u32);
    num.div_exact(&den)
        .ok_or_else(|| crate::Error::Consistency("q-binomial division not exact".into()))
}

pub fn q_binomial_at(n: i64, j: i64, d: i64) -> crate::Result<IntLaurent> {
    Ok(q_binomial(n, j)?.substitute_power(d))
}

/// The q-integer in the given regime.
pub fn q_int_in(n: i64, ctx: &ScalarContext) -> Scalar {
    ctx.from_laurent(&q_int(n))
}

pub fn q_factorial_in(n: u32, ctx: &ScalarContext) -> Scalar {
    ctx.from_laurent(&q_factorial(n))
}

pub fn q_binomial_in(n: i64, j: i64, ctx: &ScalarContext) -> crate::Result<Scalar> {
    Ok(ctx.from_laurent(&q_binomial(n, j)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(shift: i64, c: &[i64]) -> IntLaurent {
        IntLaurent::from_i64s(shift, c)
    }

    /// (q^n - q^-n) divided by (q - q^-1), done by long division.
    fn q_int_by_division(n: i64) -> IntLaurent {
        let num = &IntLaurent::q_pow(n) - &IntLaurent::q_pow(-n);
        let den = &IntLaurent::q_pow(1) - &IntLaurent::q_pow(-1);
        num.div_exact(&den).unwrap()
    }

    #[test]
    fn small_q_integers() {
        assert!(q_int(0).is_zero());
        assert!(q_int(1).is_one());
        assert_eq!(q_int(2), l(-1, &[1, 0, 1]));
        assert_eq!(q_int(-2), -l(-1, &[1, 0, 1]));
        for n in -7..=7 {
            assert_eq!(q_int(n), q_int_by_division(n), "n = {n}");
            assert_eq!(q_int(-n), -q_int(n));
        }
    }

    #[test]
    fn factorials_and_binomials() {
        assert!(q_factorial(0).is_one());
        for n in 1..=8u32 {
            assert_eq!(q_factorial(n), &q_int(n as i64) * &q_factorial(n - 1));
        }
        for n in 0..=8 {
            assert!(q_binomial(n, 0).unwrap().is_one());
            assert!(q_binomial(n, n).unwrap().is_one());
        }
        assert_eq!(q_binomial(2, 1).unwrap(), l(-1, &[1, 0, 1]));
        assert!(q_binomial(2, 3).is_err());
        assert!(q_binomial(2, -1).is_err());
    }

    #[test]
    fn pascal_identity() {
        // Direct expansion shows both symmetric variants hold; these are the
        // recurrences the rest of the crate may rely on.
        for n in 1..=8i64 {
            for j in 1..n {
                let lhs = q_binomial(n, j).unwrap();
                let a = &IntLaurent::q_pow(j) * &q_binomial(n - 1, j).unwrap();
                let b = &IntLaurent::q_pow(j - n) * &q_binomial(n - 1, j - 1).unwrap();
                assert_eq!(lhs, &a + &b, "variant q^j, n={n} j={j}");
                let c = &IntLaurent::q_pow(-j) * &q_binomial(n - 1, j).unwrap();
                let d = &IntLaurent::q_pow(n - j) * &q_binomial(n - 1, j - 1).unwrap();
                assert_eq!(lhs, &c + &d, "variant q^-j, n={n} j={j}");
                // an ordinary (non-symmetric) Pascal rule does not hold
                let plain = &q_binomial(n - 1, j).unwrap() + &q_binomial(n - 1, j - 1).unwrap();
                if n > 1 && j > 0 && j < n {
                    assert_ne!(lhs, plain, "n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn q_int_at_power() {
        assert_eq!(q_int_at(2, 3), l(-3, &[1, 0, 0, 0, 0, 0, 1]));
    }
}
