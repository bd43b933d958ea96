//! Braid automorphisms, root vectors and the PBW basis.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cartan::RootVec;
use crate::linalg;
use crate::lincomb::LinComb;
use crate::scalars::{qnum, IntLaurent, RatFunc};
use crate::{Error, Result};

use super::full::{multiply, AlgebraElement, PreNormalMonomial};
use super::word::Word;
use super::{render_k, BorelAlgebra, Mono, ReducedElement};

/// How far the computation of a root vector had to go before the transient
/// F-terms produced by `T_i(E_i) = -F_i K_i` disappeared.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CancellationLevel {
    /// No F-term was ever produced.
    None,
    /// F-terms cancelled during straightening.
    Word,
    /// F-terms only vanished after Serre reduction of the F-words.
    Serre,
}

impl fmt::Display for CancellationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CancellationLevel::None => "none",
            CancellationLevel::Word => "word",
            CancellationLevel::Serre => "serre",
        })
    }
}

/// `T_i(E_j)` as a pre-normal element.
pub fn braid_t_generator(alg: &BorelAlgebra, i: usize, j: usize) -> Result<AlgebraElement> {
    let datum = alg.datum();
    datum.check_index(i)?;
    datum.check_index(j)?;
    let n = datum.rank();
    if i == j {
        return Ok(AlgebraElement::monomial(
            n,
            PreNormalMonomial {
                fword: Word::letter(i),
                lambda: RootVec::simple(n, i),
                eword: Word::empty(),
            },
            RatFunc::from_int(-1),
        ));
    }
    let r = -datum.a(i, j);
    let di = datum.d(i);
    let mut out = AlgebraElement::zero(n);
    for l in 0..=r {
        let den = &qnum::q_factorial_at((r - l) as u32, di) * &qnum::q_factorial_at(l as u32, di);
        let mut c = RatFunc::new(IntLaurent::one(), den)?.shifted(-di * l);
        if (l + r) % 2 == 1 {
            c = -c;
        }
        let mut w = Word::power(i, (r - l) as usize);
        w = w
            .concat(&Word::letter(j))
            .concat(&Word::power(i, l as usize));
        out = out.add(&AlgebraElement::e_word(n, w, c));
    }
    Ok(out)
}

/// `T_i` applied to an element of U^+ given by E-words.
pub fn braid_t(alg: &BorelAlgebra, i: usize, a: &AlgebraElement) -> Result<AlgebraElement> {
    let datum = alg.datum();
    let n = datum.rank();
    datum.check_index(i)?;
    let images: Vec<AlgebraElement> = (0..n)
        .map(|j| braid_t_generator(alg, i, j))
        .collect::<Result<_>>()?;
    let mut out = AlgebraElement::zero(n);
    for (m, c) in a.terms() {
        if !m.fword.is_empty() || !m.lambda.is_zero() {
            return Err(Error::Domain(format!(
                "T_{} expects an element of U^+, got term {}",
                i + 1,
                m.render()
            )));
        }
        let mut y = AlgebraElement::one(n);
        for l in m.eword.letters() {
            y = multiply(datum, &y, &images[l]);
        }
        out = out.add(&y.scale(c));
    }
    Ok(out)
}

/// Root vectors of a frame with their bookkeeping.
#[derive(Clone, Debug)]
pub struct PbwData {
    pub root_vectors: Vec<ReducedElement>,
    pub levels: Vec<CancellationLevel>,
}

fn has_f(a: &AlgebraElement) -> bool {
    a.terms().keys().any(|m| !m.fword.is_empty())
}

fn compute_root_vector(
    alg: &BorelAlgebra,
    s: usize,
) -> Result<(ReducedElement, CancellationLevel)> {
    let frame = alg.frame();
    let n = alg.rank();
    let word = &frame.w0_word;
    let mut x = AlgebraElement::e_word(n, Word::letter(word[s]), RatFunc::one());
    let mut level = CancellationLevel::None;
    for m in (0..s).rev() {
        let i = word[m];
        let y = braid_t(alg, i, &x)?;
        if x.terms().keys().any(|t| t.eword.letters().any(|l| l == i)) {
            level = level.max(CancellationLevel::Word);
        }
        if has_f(&y) {
            level = level.max(CancellationLevel::Serre);
        }
        let red = alg.reduce(&y).map_err(|e| match e {
            Error::NotInBorel(msg) => Error::Consistency(format!(
                "root vector {} keeps F-content after Serre reduction: {msg}",
                s + 1
            )),
            other => other,
        })?;
        if red.keys().any(|m| !m.k.is_zero()) {
            return Err(Error::Consistency(format!(
                "root vector {} keeps a K-factor",
                s + 1
            )));
        }
        x = alg.lift(&red);
    }
    let red = alg.reduce(&x)?;
    let beta = &frame.betas[s];
    if red.is_zero() {
        return Err(Error::Consistency(format!(
            "root vector {} vanishes",
            s + 1
        )));
    }
    if let Some(m) = red.keys().find(|m| m.degree() != *beta) {
        return Err(Error::Consistency(format!(
            "root vector {} has a term {m} outside degree {beta}",
            s + 1
        )));
    }
    if let Some(t) = (0..n).find(|&t| *beta == RootVec::simple(n, t)) {
        if red != alg.e(t)? {
            return Err(Error::Consistency(format!(
                "root vector {} has simple degree but differs from E{}",
                s + 1,
                t + 1
            )));
        }
    }
    Ok((red, level))
}

/// Key of a PBW monomial `E^k K_lambda`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct PbwKey {
    pub k: Vec<u32>,
    pub lambda: RootVec,
}

impl fmt::Display for PbwKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .k
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(s, &m)| {
                if m == 1 {
                    format!("Eb{}", s + 1)
                } else {
                    format!("Eb{}^{}", s + 1, m)
                }
            })
            .collect();
        parts.extend(render_k(&self.lambda));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Change of basis between basis words and PBW monomials in one degree.
#[derive(Clone, Debug)]
pub struct PbwChange {
    pub degree: RootVec,
    pub keys: Vec<Vec<u32>>,
    /// Column `c` holds the word coordinates of `E^{keys[c]}`.
    pub matrix: Vec<Vec<RatFunc>>,
    pub inverse: Vec<Vec<RatFunc>>,
}

impl BorelAlgebra {
    /// Root vectors `E_{beta_1}, ..., E_{beta_N}` along the frame's word.
    pub fn pbw_data(&self) -> Result<Arc<PbwData>> {
        let mut guard = self.pbw.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(d) = guard.as_ref() {
            return Ok(d.clone());
        }
        let mut root_vectors = Vec::new();
        let mut levels = Vec::new();
        for s in 0..self.frame().num_roots() {
            let (v, l) = compute_root_vector(self, s)?;
            root_vectors.push(v);
            levels.push(l);
        }
        let d = Arc::new(PbwData {
            root_vectors,
            levels,
        });
        *guard = Some(d.clone());
        Ok(d)
    }

    pub fn root_vectors(&self) -> Result<Vec<ReducedElement>> {
        Ok(self.pbw_data()?.root_vectors.clone())
    }

    fn e_power(&self, k: &[u32]) -> Result<ReducedElement> {
        if let Some(v) = self
            .pbw_powers
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .get(k)
        {
            return Ok(v.clone());
        }
        let val = match k.iter().rposition(|&m| m > 0) {
            None => self.one(),
            Some(s) => {
                let mut lower = k.to_vec();
                lower[s] -= 1;
                let head = self.e_power(&lower)?;
                let data = self.pbw_data()?;
                self.mul(&head, &data.root_vectors[s])?
            }
        };
        self.pbw_powers
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .insert(k.to_vec(), val.clone());
        Ok(val)
    }

    /// `E^k K_lambda`, reduced.
    pub fn pbw_monomial(&self, k: &[u32], lambda: &RootVec) -> Result<ReducedElement> {
        if k.len() != self.frame().num_roots() {
            return Err(Error::Domain(format!(
                "PBW exponent has length {} but there are {} positive roots",
                k.len(),
                self.frame().num_roots()
            )));
        }
        let e = self.e_power(k)?;
        self.mul(&e, &self.k(lambda.clone())?)
    }

    /// PBW change of basis in degree `eta`; fails if the PBW monomials are
    /// dependent or miscounted.
    pub fn pbw_change(&self, eta: &RootVec) -> Result<Arc<PbwChange>> {
        if let Some(c) = self
            .pbw_changes
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(eta)
        {
            return Ok(c.clone());
        }
        let basis = self.graded_basis(eta)?;
        let keys = self.frame().pbw_exponents(eta);
        let dim = basis.dim();
        if keys.len() != dim {
            return Err(Error::Consistency(format!(
                "degree {eta}: {} PBW monomials for a space of dimension {dim}",
                keys.len()
            )));
        }
        let mut matrix = vec![vec![RatFunc::zero(); dim]; dim];
        let zero = RootVec::zero(self.rank());
        for (c, k) in keys.iter().enumerate() {
            let v = self.e_power(k)?;
            for (m, x) in &v {
                let row = basis
                    .basis_position(&m.word)
                    .filter(|_| m.k == zero)
                    .ok_or_else(|| {
                        Error::Consistency(format!("PBW monomial has stray term {m}"))
                    })?;
                matrix[row][c] = x.clone();
            }
        }
        let inverse = linalg::inverse(&matrix, &()).ok_or_else(|| {
            Error::Consistency(format!(
                "degree {eta}: PBW monomials are linearly dependent"
            ))
        })?;
        let change = Arc::new(PbwChange {
            degree: eta.clone(),
            keys,
            matrix,
            inverse,
        });
        self.pbw_changes
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .insert(eta.clone(), change.clone());
        Ok(change)
    }

    /// Coordinates of a reduced element in the PBW basis.
    pub fn to_pbw(&self, x: &ReducedElement) -> Result<LinComb<PbwKey>> {
        use std::collections::BTreeMap;
        // group by (degree, lambda)
        let mut groups: BTreeMap<(RootVec, RootVec), Vec<(&Mono, &RatFunc)>> = BTreeMap::new();
        for (m, c) in x {
            groups
                .entry((m.degree(), m.k.clone()))
                .or_default()
                .push((m, c));
        }
        let mut out = LinComb::zero();
        for ((eta, lambda), terms) in groups {
            let change = self.pbw_change(&eta)?;
            let basis = self.graded_basis(&eta)?;
            let mut v = vec![RatFunc::zero(); basis.dim()];
            for (m, c) in terms {
                let pos = basis
                    .basis_position(&m.word)
                    .ok_or_else(|| Error::Domain(format!("{m} is not in normal form")))?;
                v[pos] = c.clone();
            }
            let y = linalg::mat_vec(&change.inverse, &v, &());
            for (k, c) in change.keys.iter().zip(y) {
                out.add_term(
                    PbwKey {
                        k: k.clone(),
                        lambda: lambda.clone(),
                    },
                    c,
                );
            }
        }
        Ok(out)
    }

    /// Inverse of [`BorelAlgebra::to_pbw`].
    pub fn from_pbw(&self, x: &LinComb<PbwKey>) -> Result<ReducedElement> {
        let mut out = LinComb::zero();
        for (key, c) in x {
            out.add_scaled(&self.pbw_monomial(&key.k, &key.lambda)?, c);
        }
        Ok(out)
    }
}
