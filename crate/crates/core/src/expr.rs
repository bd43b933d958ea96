//! Concrete syntax for algebra elements.
//!
//! ```text
//! sum      := ['+' | '-'] term (('+' | '-') term)*
//! term     := factor (['*' | '/'] factor)*        juxtaposition means '*'
//! factor   := atom ['^' exponent]
//! exponent := ['-'] digits | '(' ['-'] digits ')'
//! atom     := digits | 'q' | 'E' digits | 'F' digits | 'K' digits | '(' sum ')'
//! ```
//!
//! Whitespace is ignored. Generator indices are 1-based. Division is only
//! defined by scalars and negative exponents only on `q`, scalars and `K`s.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{full, AlgebraElement, BorelAlgebra, PreNormalMonomial, ReducedElement, Word};
use crate::cartan::RootVec;
use crate::lincomb::LinComb;
use crate::scalars::{IntLaurent, RatFunc};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenKind {
    E,
    F,
    K,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Op {
    Mul,
    Div,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(BigInt),
    Q,
    /// Generator with a 0-based index.
    Gen(GenKind, usize),
    Pow(Box<Expr>, i64),
    Neg(Box<Expr>),
    /// `f_0 op_1 f_1 op_2 f_2 ...`; the first operator is always `Mul`.
    Product(Vec<(Op, Expr)>),
    Sum(Vec<Expr>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn perr<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return perr(start, "expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<i64> {
        let pos = self.pos;
        let v = self.digits()?;
        i64::try_from(v).or_else(|_| perr(pos, "number too large"))
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let first_neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let t = self.term()?;
        terms.push(if first_neg { Expr::Neg(Box::new(t)) } else { t });
        loop {
            if self.eat(b'+') {
                terms.push(self.term()?);
            } else if self.eat(b'-') {
                terms.push(Expr::Neg(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Expr::Sum(terms)
        })
    }

    fn starts_factor(&mut self) -> bool {
        matches!(
            self.peek(),
            Some(b'0'..=b'9' | b'q' | b'E' | b'F' | b'K' | b'(')
        )
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![(Op::Mul, self.factor()?)];
        loop {
            let op = if self.eat(b'*') {
                Op::Mul
            } else if self.eat(b'/') {
                Op::Div
            } else if self.starts_factor() {
                Op::Mul
            } else {
                break;
            };
            factors.push((op, self.factor()?));
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor").1
        } else {
            Expr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr> {
        let a = self.atom()?;
        if self.eat(b'^') {
            let paren = self.eat(b'(');
            let neg = self.eat(b'-');
            let e = self.small()?;
            if paren && !self.eat(b')') {
                return perr(self.pos, "expected ')'");
            }
            return Ok(Expr::Pow(Box::new(a), if neg { -e } else { e }));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'0'..=b'9') => Ok(Expr::Int(self.digits()?)),
            Some(b'q') => {
                self.pos += 1;
                Ok(Expr::Q)
            }
            Some(c @ (b'E' | b'F' | b'K')) => {
                self.pos += 1;
                if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return perr(self.pos, "expected generator index");
                }
                let i = self.small()?;
                if i < 1 {
                    return perr(pos, "generator indices start at 1");
                }
                let kind = match c {
                    b'E' => GenKind::E,
                    b'F' => GenKind::F,
                    _ => GenKind::K,
                };
                Ok(Expr::Gen(kind, i as usize - 1))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(b')') {
                    return perr(self.pos, "expected ')'");
                }
                Ok(e)
            }
            Some(c) => perr(pos, format!("unexpected character '{}'", c as char)),
            None => perr(pos, "unexpected end of input"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return perr(
            p.pos,
            format!("unexpected character '{}'", p.src[p.pos] as char),
        );
    }
    Ok(e)
}

/// Parses and checks generator indices against `rank`.
pub fn parse_with_rank(text: &str, rank: usize) -> Result<Expr> {
    let e = parse(text)?;
    e.check_rank(rank)?;
    Ok(e)
}

impl Expr {
    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self {
            Expr::Gen(_, i) if *i >= rank => Err(Error::IndexOutOfRange { index: i + 1, rank }),
            Expr::Pow(b, _) | Expr::Neg(b) => b.check_rank(rank),
            Expr::Product(fs) => fs.iter().try_for_each(|(_, f)| f.check_rank(rank)),
            Expr::Sum(ts) => ts.iter().try_for_each(|t| t.check_rank(rank)),
            _ => Ok(()),
        }
    }

    pub fn has_f(&self) -> bool {
        match self {
            Expr::Gen(GenKind::F, _) => true,
            Expr::Pow(b, _) | Expr::Neg(b) => b.has_f(),
            Expr::Product(fs) => fs.iter().any(|(_, f)| f.has_f()),
            Expr::Sum(ts) => ts.iter().any(Expr::has_f),
            _ => false,
        }
    }

    fn is_atom(&self) -> bool {
        matches!(self, Expr::Int(_) | Expr::Q | Expr::Gen(..))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Q => f.write_str("q"),
            Expr::Gen(k, i) => write!(f, "{:?}{}", k, i + 1),
            Expr::Pow(b, e) => {
                if b.is_atom() {
                    write!(f, "{b}^{e}")
                } else {
                    write!(f, "({b})^{e}")
                }
            }
            Expr::Neg(x) => match **x {
                Expr::Sum(_) | Expr::Neg(_) => write!(f, "-({x})"),
                _ => write!(f, "-{x}"),
            },
            Expr::Product(fs) => {
                for (n, (op, x)) in fs.iter().enumerate() {
                    if n > 0 {
                        f.write_str(if *op == Op::Mul { "*" } else { "/" })?;
                    }
                    match x {
                        Expr::Sum(_) | Expr::Neg(_) | Expr::Product(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            Expr::Sum(ts) => {
                for (n, t) in ts.iter().enumerate() {
                    match (n, t) {
                        (0, Expr::Sum(_)) => write!(f, "({t})")?,
                        (0, _) => write!(f, "{t}")?,
                        (_, Expr::Neg(x)) => match **x {
                            Expr::Sum(_) | Expr::Neg(_) => write!(f, " - ({x})")?,
                            _ => write!(f, " - {x}")?,
                        },
                        (_, Expr::Sum(_)) => write!(f, " + ({t})")?,
                        _ => write!(f, " + {t}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

/// Evaluates in `U>=0`; expressions containing `F` are rejected.
pub fn eval(alg: &BorelAlgebra, e: &Expr) -> Result<ReducedElement> {
    e.check_rank(alg.rank())?;
    if e.has_f() {
        return Err(Error::Domain(
            "F generators are not available in U>=0".into(),
        ));
    }
    eval_borel(alg, e)
}

fn as_scalar(x: &ReducedElement, n: usize) -> Option<RatFunc> {
    match x.len() {
        0 => Some(RatFunc::zero()),
        1 => {
            let (m, c) = x.iter().next()?;
            (*m == crate::algebra::Mono::unit(n)).then(|| c.clone())
        }
        _ => None,
    }
}

fn eval_borel(alg: &BorelAlgebra, e: &Expr) -> Result<ReducedElement> {
    let n = alg.rank();
    Ok(match e {
        Expr::Int(v) => alg.scalar(RatFunc::from(IntLaurent::constant(v.clone()))),
        Expr::Q => alg.scalar(RatFunc::q_pow(1)),
        Expr::Gen(GenKind::E, i) => alg.e(*i)?,
        Expr::Gen(GenKind::K, i) => alg.k_gen(*i, 1)?,
        Expr::Gen(GenKind::F, _) => {
            return Err(Error::Domain(
                "F generators are not available in U>=0".into(),
            ))
        }
        Expr::Neg(x) => eval_borel(alg, x)?.neg(),
        Expr::Sum(ts) => {
            let mut out = ReducedElement::zero();
            for t in ts {
                out = out.add(&eval_borel(alg, t)?);
            }
            out
        }
        Expr::Product(fs) => {
            let mut out = alg.one();
            for (op, f) in fs {
                let y = eval_borel(alg, f)?;
                out = match op {
                    Op::Mul => alg.mul(&out, &y)?,
                    Op::Div => {
                        let s = as_scalar(&y, n)
                            .ok_or_else(|| Error::Domain(format!("cannot divide by {f}")))?;
                        out.scale(&s.inv()?)
                    }
                };
            }
            out
        }
        Expr::Pow(b, p) => {
            let base = eval_borel(alg, b)?;
            if *p >= 0 {
                alg.pow(&base, *p as u32)?
            } else if let Some(s) = as_scalar(&base, n) {
                alg.scalar(s.pow(*p)?)
            } else if let Some((m, c)) = base
                .iter()
                .next()
                .filter(|(m, _)| base.len() == 1 && m.word.is_empty())
            {
                let inv = c.inv()?.pow(-*p)?;
                let lambda = m.k.scale(*p);
                alg.k(lambda)?.scale(&inv)
            } else {
                return Err(Error::Domain(format!(
                    "negative power of {b}, which is not invertible here"
                )));
            }
        }
    })
}

/// Evaluates in the full algebra, keeping `F` content, and straightens with
/// the triangular relations plus Serre reduction of both halves.
pub fn eval_full(alg: &BorelAlgebra, e: &Expr) -> Result<LinComb<PreNormalMonomial>> {
    e.check_rank(alg.rank())?;
    let a = eval_free(alg, e)?;
    alg.reduce_full(&a)
}

fn eval_free(alg: &BorelAlgebra, e: &Expr) -> Result<AlgebraElement> {
    let n = alg.rank();
    let datum = alg.datum();
    Ok(match e {
        Expr::Int(v) => AlgebraElement::scalar(n, RatFunc::from(IntLaurent::constant(v.clone()))),
        Expr::Q => AlgebraElement::scalar(n, RatFunc::q_pow(1)),
        Expr::Gen(GenKind::E, i) => AlgebraElement::e_word(n, Word::letter(*i), RatFunc::one()),
        Expr::Gen(GenKind::K, i) => AlgebraElement::k(n, RootVec::simple(n, *i)),
        Expr::Gen(GenKind::F, i) => full::straighten(datum, &[full::Letter::F(*i)])?,
        Expr::Neg(x) => eval_free(alg, x)?.scale(&RatFunc::from_int(-1)),
        Expr::Sum(ts) => {
            let mut out = AlgebraElement::zero(n);
            for t in ts {
                out = out.add(&eval_free(alg, t)?);
            }
            out
        }
        Expr::Product(fs) => {
            let mut out = AlgebraElement::one(n);
            for (op, f) in fs {
                let y = eval_free(alg, f)?;
                out = match op {
                    Op::Mul => full::multiply(datum, &out, &y),
                    Op::Div => {
                        let s = free_scalar(&y)
                            .ok_or_else(|| Error::Domain(format!("cannot divide by {f}")))?;
                        out.scale(&s.inv()?)
                    }
                };
            }
            out
        }
        Expr::Pow(b, p) => {
            let base = eval_free(alg, b)?;
            if *p >= 0 {
                let mut out = AlgebraElement::one(n);
                for _ in 0..*p {
                    out = full::multiply(datum, &out, &base);
                }
                out
            } else if let Some(s) = free_scalar(&base) {
                AlgebraElement::scalar(n, s.pow(*p)?)
            } else if let Some((m, c)) = base.terms().iter().next().filter(|(m, _)| {
                base.terms().len() == 1 && m.fword.is_empty() && m.eword.is_empty()
            }) {
                AlgebraElement::k(n, m.lambda.scale(*p)).scale(&c.inv()?.pow(-*p)?)
            } else {
                return Err(Error::Domain(format!(
                    "negative power of {b}, which is not invertible here"
                )));
            }
        }
    })
}

fn free_scalar(x: &AlgebraElement) -> Option<RatFunc> {
    let t = x.terms();
    match t.len() {
        0 => Some(RatFunc::zero()),
        1 => {
            let (m, c) = t.iter().next()?;
            (m.fword.is_empty() && m.eword.is_empty() && m.lambda.is_zero()).then(|| c.clone())
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        match parse("E1*E2 + (q - q^-1)*E2*E1").unwrap() {
            Expr::Sum(ts) => {
                assert_eq!(ts.len(), 2);
                assert!(ts.iter().all(|t| matches!(t, Expr::Product(_))));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            parse("K1^-1 E1").unwrap(),
            Expr::Product(vec![
                (Op::Mul, Expr::Pow(Box::new(Expr::Gen(GenKind::K, 0)), -1)),
                (Op::Mul, Expr::Gen(GenKind::E, 0)),
            ])
        );
    }

    #[test]
    fn errors() {
        let e = parse_with_rank("E3", 2).unwrap_err();
        assert!(e.to_string().contains("generator index out of range"));
        assert!(matches!(parse("E1 +"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse("E"), Err(Error::Parse { .. })));
        assert!(matches!(parse("(E1"), Err(Error::Parse { .. })));
        assert!(matches!(parse("E1 $"), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn printing_is_a_fixpoint() {
        for s in [
            "E1*E2 + (q - q^-1)*E2*E1",
            "-(-E1)",
            "a",
            "(E1 E2) E3",
            "(E1^2)^3 - (E2 + E1)",
            "K1^(-2) / 3 + -q",
            "E1 + (E2 + E1)",
        ] {
            let Ok(e) = parse(s) else { continue };
            let printed = e.to_string();
            assert_eq!(parse(&printed).unwrap(), e, "{s} -> {printed}");
        }
    }

    #[test]
    fn evaluation() {
        let a2 = BorelAlgebra::of_type("A2").unwrap();
        let serre = parse("E1*E1*E2 - (q+q^-1)*E1*E2*E1 + E2*E1*E1").unwrap();
        assert!(eval(&a2, &serre).unwrap().is_zero());
        let a1 = BorelAlgebra::of_type("A1").unwrap();
        assert_eq!(eval(&a1, &parse("K1*K1^-1").unwrap()).unwrap(), a1.one());
        assert_eq!(
            eval(&a1, &parse("q^2").unwrap()).unwrap(),
            a1.scalar(RatFunc::q_pow(2))
        );
        assert_eq!(
            eval(&a1, &parse("q^2/q").unwrap()).unwrap(),
            a1.scalar(RatFunc::q_pow(1))
        );
        assert!(matches!(
            eval(&a1, &parse("F1").unwrap()),
            Err(Error::Domain(_))
        ));
        assert!(eval(&a1, &parse("E1^-1").unwrap()).is_err());
        assert!(eval(&a1, &parse("E1/E1").unwrap()).is_err());
    }

    #[test]
    fn full_evaluation_keeps_f() {
        let a1 = BorelAlgebra::of_type("A1").unwrap();
        let x = eval_full(&a1, &parse("E1 F1 - F1 E1").unwrap()).unwrap();
        // [E, F] = (K - K^-1)/(q - q^-1)
        assert_eq!(x.len(), 2);
        assert!(x.keys().all(|m| m.fword.is_empty() && m.eword.is_empty()));
    }

    #[test]
    fn rendered_elements_parse_back() {
        let a2 = BorelAlgebra::of_type("A2").unwrap();
        for s in [
            "(E1 K2 + q E2)^2",
            "E1 E2 E1 / (q + 1)",
            "K1^-1 E1 - 3 E1 K1^-1",
        ] {
            let x = eval(&a2, &parse(s).unwrap()).unwrap();
            let back = eval(&a2, &parse(&x.render()).unwrap()).unwrap();
            assert_eq!(back, x, "{s}: {}", x.render());
        }
    }
}
