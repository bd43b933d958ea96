//! Graded pieces of U^+ as quotients of the free algebra by the homogeneous
//! slice of the two-sided q-Serre ideal.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, RootVec};
use crate::linalg::rref;
use crate::scalars::RatFunc;
use crate::{Error, Result};

use super::full::serre_terms;
use super::word::{words_of_degree, Word};

/// Basis of `(U^+)_eta` chosen among words, with coordinates of every word.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GradedBasis {
    pub degree: RootVec,
    /// All words of this degree, shortlex.
    pub words: Vec<Word>,
    /// Positions in `words` of the basis words, increasing.
    pub basis: Vec<usize>,
    /// For each word, its coordinates `(basis position, coefficient)`.
    pub coords: Vec<Vec<(usize, RatFunc)>>,
    #[serde(skip)]
    index: HashMap<Word, usize>,
}

impl GradedBasis {
    fn finish(mut self) -> Self {
        self.index = self
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        self
    }

    /// Rebuilds lookup tables after deserialization and checks shape.
    pub fn restore(self) -> Option<Self> {
        let ok = self.coords.len() == self.words.len()
            && self.basis.iter().all(|&b| b < self.words.len())
            && self
                .coords
                .iter()
                .all(|c| c.iter().all(|(k, _)| *k < self.basis.len()));
        ok.then(|| self.finish())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_words(&self) -> impl Iterator<Item = &Word> {
        self.basis.iter().map(|&i| &self.words[i])
    }

    pub fn basis_word(&self, k: usize) -> &Word {
        &self.words[self.basis[k]]
    }

    /// Position of a basis word among the basis, if it is one.
    pub fn basis_position(&self, w: &Word) -> Option<usize> {
        let i = *self.index.get(w)?;
        self.basis.binary_search(&i).ok()
    }

    pub fn word_index(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinates of an arbitrary word of this degree over the basis.
    pub fn coords_of(&self, w: &Word) -> Option<&[(usize, RatFunc)]> {
        self.index.get(w).map(|&i| self.coords[i].as_slice())
    }

    /// Dense coordinate vector of a word.
    pub fn dense_coords(&self, w: &Word) -> Option<Vec<RatFunc>> {
        let mut v = vec![RatFunc::zero(); self.dim()];
        for (k, c) in self.coords_of(w)? {
            v[*k] = c.clone();
        }
        Some(v)
    }
}

/// Builds the basis in degree `eta`. `lower(eta - alpha_i)` must return the
/// bases one letter below; the ideal slice is
/// `sum_i E_i I_{eta - alpha_i} + sum_{i != j} S_ij * (words of degree eta - deg S_ij)`.
pub fn build(
    datum: &CartanDatum,
    eta: &RootVec,
    expected_dim: u64,
    mut lower: impl FnMut(&RootVec) -> Result<std::sync::Arc<GradedBasis>>,
) -> Result<GradedBasis> {
    let n = datum.rank();
    if !eta.is_nonneg() || eta.rank() != n {
        return Err(Error::Domain(format!("degree {eta} is not in Q_+")));
    }
    let words = words_of_degree(eta);
    let index: HashMap<Word, usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let ncols = words.len();
    let mut rows: Vec<Vec<RatFunc>> = Vec::new();

    for i in 0..n {
        if eta.0[i] == 0 {
            continue;
        }
        let below = lower(&(eta - &RootVec::simple(n, i)))?;
        let prefix = Word::letter(i);
        for (wi, w) in below.words.iter().enumerate() {
            if below.basis.binary_search(&wi).is_ok() {
                continue;
            }
            let mut row = vec![RatFunc::zero(); ncols];
            row[index[&prefix.concat(w)]] = RatFunc::one();
            for (k, c) in &below.coords[wi] {
                let col = index[&prefix.concat(below.basis_word(*k))];
                row[col] = &row[col] - c;
            }
            rows.push(row);
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let terms = serre_terms(datum, i, j)?;
            let delta = terms[0].0.degree(n);
            if !delta.le(eta) {
                continue;
            }
            for v in words_of_degree(&(eta - &delta)) {
                let mut row = vec![RatFunc::zero(); ncols];
                for (s, c) in &terms {
                    let col = index[&s.concat(&v)];
                    row[col] = &row[col] + &RatFunc::from(c.clone());
                }
                rows.push(row);
            }
        }
    }

    let order: Vec<usize> = (0..ncols).rev().collect();
    let pivots = if rows.is_empty() {
        Vec::new()
    } else {
        rref(&mut rows, Some(&order))
    };
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<usize> = (0..ncols).filter(|&c| !is_pivot[c]).collect();
    if basis.len() as u64 != expected_dim {
        return Err(Error::Consistency(format!(
            "degree {eta}: quotient dimension {} differs from the partition count {expected_dim}",
            basis.len()
        )));
    }
    let basis_pos: HashMap<usize, usize> = basis.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut coords: Vec<Vec<(usize, RatFunc)>> = vec![Vec::new(); ncols];
    for (k, &c) in basis.iter().enumerate() {
        coords[c] = vec![(k, RatFunc::one())];
    }
    for (row, &p) in rows.iter().zip(&pivots) {
        coords[p] = basis
            .iter()
            .filter(|&&c| !row[c].is_zero())
            .map(|&c| (basis_pos[&c], -&row[c]))
            .collect();
    }
    Ok(GradedBasis {
        degree: eta.clone(),
        words,
        basis,
        coords,
        index: HashMap::new(),
    }
    .finish())
}
