//! Elements of the full quantum group in triangular pre-normal form
//! `F_word * K_lambda * E_word`, and straightening by relations (1)-(4).

use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::{CartanDatum, RootVec};
use crate::scalars::{qnum, IntLaurent, RatFunc};
use crate::{Error, Result};

use super::word::Word;
use super::{fmt_sum, render_k};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PreNormalMonomial {
    pub fword: Word,
    pub lambda: RootVec,
    pub eword: Word,
}

impl PreNormalMonomial {
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if !self.fword.is_empty() {
            parts.push(self.fword.render('F'));
        }
        if let Some(k) = render_k(&self.lambda) {
            parts.push(k);
        }
        if !self.eword.is_empty() {
            parts.push(self.eword.render('E'));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Letter of a free word in the generators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    E(usize),
    F(usize),
    /// `K_i^e`
    K(usize, i64),
}

/// Finite linear combination of pre-normal monomials over Q(q).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    rank: usize,
    terms: BTreeMap<PreNormalMonomial, RatFunc>,
}

impl AlgebraElement {
    pub fn zero(rank: usize) -> Self {
        AlgebraElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(rank: usize, m: PreNormalMonomial, c: RatFunc) -> Self {
        let mut out = Self::zero(rank);
        out.add_term(m, c);
        out
    }

    pub fn scalar(rank: usize, c: RatFunc) -> Self {
        Self::monomial(
            rank,
            PreNormalMonomial {
                fword: Word::empty(),
                lambda: RootVec::zero(rank),
                eword: Word::empty(),
            },
            c,
        )
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, RatFunc::one())
    }

    /// `c * E_word`
    pub fn e_word(rank: usize, w: Word, c: RatFunc) -> Self {
        Self::monomial(
            rank,
            PreNormalMonomial {
                fword: Word::empty(),
                lambda: RootVec::zero(rank),
                eword: w,
            },
            c,
        )
    }

    pub fn k(rank: usize, lambda: RootVec) -> Self {
        Self::monomial(
            rank,
            PreNormalMonomial {
                fword: Word::empty(),
                lambda,
                eword: Word::empty(),
            },
            RatFunc::one(),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<PreNormalMonomial, RatFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: PreNormalMonomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        AlgebraElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// True when every term lies in U^+ (no F letters, no K factor).
    pub fn is_positive_part(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.fword.is_empty() && m.lambda.is_zero())
    }

    pub fn has_f(&self) -> bool {
        self.terms.keys().any(|m| !m.fword.is_empty())
    }

    /// Q-degree `deg E_word - deg F_word` of every term, if homogeneous.
    pub fn degree(&self) -> Option<RootVec> {
        let mut it = self
            .terms
            .keys()
            .map(|m| &m.eword.degree(self.rank) - &m.fword.degree(self.rank));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_sum(self.terms.iter().map(|(m, c)| (c, m.render()))))
    }
}

/// `1 / (q_i - q_i^-1)`
fn inv_qdiff(datum: &CartanDatum, i: usize) -> RatFunc {
    let di = datum.d(i);
    let diff = &IntLaurent::q_pow(di) - &IntLaurent::q_pow(-di);
    RatFunc::from(diff).inv().expect("q_i - q_i^-1 is nonzero")
}

/// `E_i * x`.
pub fn left_mul_e(datum: &CartanDatum, i: usize, x: &AlgebraElement) -> AlgebraElement {
    let n = datum.rank();
    let ai = RootVec::simple(n, i);
    let inv = inv_qdiff(datum, i);
    let mut out = AlgebraElement::zero(n);
    for (m, c) in &x.terms {
        // E_i passes the whole F-word
        let mu_ai = datum.form(&m.lambda, &ai);
        let mut e = Vec::with_capacity(m.eword.len() + 1);
        e.push(i as u8);
        e.extend_from_slice(&m.eword.0);
        out.add_term(
            PreNormalMonomial {
                fword: m.fword.clone(),
                lambda: m.lambda.clone(),
                eword: Word(e),
            },
            c.shifted(-mu_ai),
        );
        // commutator with each F_i in the word
        for (t, &jt) in m.fword.0.iter().enumerate() {
            if jt as usize != i {
                continue;
            }
            let prefix = &m.fword.0[..t];
            let suffix = Word(m.fword.0[t + 1..].to_vec());
            let s = datum.form(&ai, &suffix.degree(n));
            let mut fw = prefix.to_vec();
            fw.extend_from_slice(&suffix.0);
            let base = c * &inv;
            out.add_term(
                PreNormalMonomial {
                    fword: Word(fw.clone()),
                    lambda: &m.lambda + &ai,
                    eword: m.eword.clone(),
                },
                base.shifted(-s),
            );
            out.add_term(
                PreNormalMonomial {
                    fword: Word(fw),
                    lambda: &m.lambda - &ai,
                    eword: m.eword.clone(),
                },
                -&base.shifted(s),
            );
        }
    }
    out
}

/// `F_j * x`.
pub fn left_mul_f(j: usize, x: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero(x.rank);
    for (m, c) in &x.terms {
        let mut f = Vec::with_capacity(m.fword.len() + 1);
        f.push(j as u8);
        f.extend_from_slice(&m.fword.0);
        out.add_term(
            PreNormalMonomial {
                fword: Word(f),
                lambda: m.lambda.clone(),
                eword: m.eword.clone(),
            },
            c.clone(),
        );
    }
    out
}

/// `K_lambda * x`.
pub fn left_mul_k(datum: &CartanDatum, lambda: &RootVec, x: &AlgebraElement) -> AlgebraElement {
    let n = datum.rank();
    let mut out = AlgebraElement::zero(n);
    for (m, c) in &x.terms {
        let s = datum.form(lambda, &m.fword.degree(n));
        out.add_term(
            PreNormalMonomial {
                fword: m.fword.clone(),
                lambda: lambda + &m.lambda,
                eword: m.eword.clone(),
            },
            c.shifted(-s),
        );
    }
    out
}

/// Product in U, straightened to pre-normal form.
pub fn multiply(datum: &CartanDatum, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero(datum.rank());
    for (m, c) in &a.terms {
        let mut y = b.clone();
        for i in m.eword.letters().collect::<Vec<_>>().into_iter().rev() {
            y = left_mul_e(datum, i, &y);
        }
        if !m.lambda.is_zero() {
            y = left_mul_k(datum, &m.lambda, &y);
        }
        for j in m.fword.letters().collect::<Vec<_>>().into_iter().rev() {
            y = left_mul_f(j, &y);
        }
        out = out.add(&y.scale(c));
    }
    out
}

/// Straightens a free word using relations (1)-(4) only.
pub fn straighten(datum: &CartanDatum, w: &[Letter]) -> Result<AlgebraElement> {
    let n = datum.rank();
    let mut y = AlgebraElement::one(n);
    for &l in w.iter().rev() {
        y = match l {
            Letter::E(i) => {
                datum.check_index(i)?;
                left_mul_e(datum, i, &y)
            }
            Letter::F(j) => {
                datum.check_index(j)?;
                left_mul_f(j, &y)
            }
            Letter::K(i, e) => {
                datum.check_index(i)?;
                left_mul_k(datum, &RootVec::simple(n, i).scale(e), &y)
            }
        };
    }
    Ok(y)
}

/// Coefficients of the q-Serre relation in degree `(1 - a_ij) alpha_i + alpha_j`,
/// as (word, coefficient) pairs; the same data serves E- and F-words.
pub fn serre_terms(datum: &CartanDatum, i: usize, j: usize) -> Result<Vec<(Word, IntLaurent)>> {
    datum.check_index(i)?;
    datum.check_index(j)?;
    if i == j {
        return Err(Error::Domain("Serre relation needs i != j".into()));
    }
    let m = (1 - datum.a(i, j)) as usize;
    let di = datum.d(i);
    let mut out = Vec::with_capacity(m + 1);
    for s in 0..=m {
        let mut w = vec![i as u8; m - s];
        w.push(j as u8);
        w.extend(std::iter::repeat_n(i as u8, s));
        let mut c = qnum::q_binomial_at(m as i64, s as i64, di)?;
        if s % 2 == 1 {
            c = -c;
        }
        out.push((Word(w), c));
    }
    Ok(out)
}

/// The left-hand side of the q-Serre relation for `(i, j)`.
pub fn serre_element(datum: &CartanDatum, i: usize, j: usize) -> Result<AlgebraElement> {
    let n = datum.rank();
    let mut out = AlgebraElement::zero(n);
    for (w, c) in serre_terms(datum, i, j)? {
        out = out.add(&AlgebraElement::e_word(n, w, RatFunc::from(c)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> CartanDatum {
        CartanDatum::parse("A1").unwrap()
    }

    #[test]
    fn e_f_commutator() {
        let d = a1();
        let x = straighten(&d, &[Letter::E(0), Letter::F(0)]).unwrap();
        let fe = straighten(&d, &[Letter::F(0), Letter::E(0)]).unwrap();
        let k = AlgebraElement::k(1, RootVec(vec![1]));
        let kinv = AlgebraElement::k(1, RootVec(vec![-1]));
        let qdiff = RatFunc::from(IntLaurent::from_i64s(-1, &[-1, 0, 1]));
        let expected = fe.add(&k.sub(&kinv).scale(&qdiff.inv().unwrap()));
        assert_eq!(x, expected);
    }

    #[test]
    fn k_inverse_cancels() {
        let d = a1();
        let x = straighten(&d, &[Letter::K(0, 1), Letter::K(0, -1)]).unwrap();
        assert_eq!(x, AlgebraElement::one(1));
    }

    #[test]
    fn k_past_f() {
        // K F = q^-2 F K
        let d = a1();
        let kf = straighten(&d, &[Letter::K(0, 1), Letter::F(0)]).unwrap();
        let fk = straighten(&d, &[Letter::F(0), Letter::K(0, 1)]).unwrap();
        assert_eq!(kf, fk.scale(&RatFunc::q_pow(-2)));
    }

    #[test]
    fn serre_a2() {
        let d = CartanDatum::parse("A2").unwrap();
        let s = serre_element(&d, 0, 1).unwrap();
        let two = RatFunc::from(qnum::q_int(2));
        let expected = AlgebraElement::e_word(2, Word(vec![0, 0, 1]), RatFunc::one())
            .sub(&AlgebraElement::e_word(2, Word(vec![0, 1, 0]), two))
            .add(&AlgebraElement::e_word(
                2,
                Word(vec![1, 0, 0]),
                RatFunc::one(),
            ));
        assert_eq!(s, expected);
        assert!(serre_element(&d, 1, 1).is_err());
        assert_eq!(s.degree(), Some(RootVec(vec![2, 1])));
    }

    #[test]
    fn serre_g2_has_five_terms() {
        let d = CartanDatum::parse("G2").unwrap();
        let t = serre_terms(&d, 1, 0).unwrap();
        assert_eq!(t.len(), 5);
        // coefficients are +-[4 choose s]_{q_2} with q_2 = q
        for (s, (_, c)) in t.iter().enumerate() {
            let b = qnum::q_binomial(4, s as i64).unwrap();
            assert_eq!(*c, if s % 2 == 0 { b } else { -b });
        }
    }

    #[test]
    fn multiplication_matches_straightening() {
        let d = CartanDatum::parse("A2").unwrap();
        let w1 = [Letter::E(0), Letter::F(1), Letter::K(0, -1), Letter::F(0)];
        let w2 = [Letter::E(1), Letter::F(0), Letter::E(0)];
        let whole: Vec<Letter> = w1.iter().chain(&w2).copied().collect();
        let a = straighten(&d, &w1).unwrap();
        let b = straighten(&d, &w2).unwrap();
        assert_eq!(multiply(&d, &a, &b), straighten(&d, &whole).unwrap());
    }
}
