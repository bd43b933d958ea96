//! Cartan data, root lattice vectors, Weyl groups and the ordered positive
//! roots attached to a reduced word of the longest element.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Mutex;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Integer vector in the basis of simple roots. Also used for the exponent
/// vector of `K_lambda`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn zero(n: usize) -> Self {
        RootVec(vec![0; n])
    }

    /// The simple root alpha_i (0-based).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVec(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Membership in Q_+.
    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        RootVec(self.0.iter().map(|x| x * k).collect())
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Add for &RootVec {
    type Output = RootVec;
    fn add(self, rhs: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVec {
    type Output = RootVec;
    fn sub(self, rhs: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub fn height(v: &RootVec) -> i64 {
    v.height()
}

/// All `eta` in Q_+ of rank `n` with the given height, in lexicographically
/// decreasing order of coordinates.
pub fn degrees_of_height(n: usize, h: i64) -> Vec<RootVec> {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<RootVec>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(RootVec(cur.clone()));
            cur.pop();
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(n, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if h >= 0 && n > 0 {
        rec(n, h, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A Cartan matrix `C = (a_ij)` with its minimal symmetrizer `D`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CartanDatum {
    series: Series,
    rank: usize,
    c: Vec<Vec<i64>>,
    d: Vec<i64>,
}

fn humphreys_matrix(series: Series, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match series {
        Series::A | Series::B | Series::C | Series::F | Series::G => {
            for i in 0..n.saturating_sub(1) {
                link(&mut c, i, i + 1);
            }
        }
        Series::D => {
            for i in 0..n - 2 {
                link(&mut c, i, i + 1);
            }
            link(&mut c, n - 3, n - 1);
        }
        Series::E => {
            link(&mut c, 0, 2);
            link(&mut c, 1, 3);
            for i in 2..n - 1 {
                link(&mut c, i, i + 1);
            }
        }
    }
    match series {
        Series::B => c[n - 2][n - 1] = -2,
        Series::C => c[n - 1][n - 2] = -2,
        Series::F => c[1][2] = -2,
        Series::G => c[1][0] = -3,
        _ => {}
    }
    c
}

fn valid_type(series: Series, n: usize) -> bool {
    match series {
        Series::A => n >= 1,
        Series::B => n >= 2,
        Series::C => n >= 3,
        Series::D => n >= 4,
        Series::E => (6..=8).contains(&n),
        Series::F => n == 4,
        Series::G => n == 2,
    }
}

/// Minimal positive integer `d` with `d_i a_ij = d_j a_ji`, propagated along
/// the Dynkin graph.
fn minimal_symmetrizer(c: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = c.len();
    // rational d_i = num/den, start from d_0 = 1
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    d[0] = Some((1, 1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let (ni, di) = d[i].unwrap();
        for j in 0..n {
            if j == i || c[i][j] == 0 {
                continue;
            }
            // d_j = d_i a_ij / a_ji
            let (mut nj, mut dj) = (ni * c[i][j], di * c[j][i]);
            let g = nj.gcd(&dj);
            nj /= g;
            dj /= g;
            if dj < 0 {
                nj = -nj;
                dj = -dj;
            }
            match d[j] {
                None => {
                    d[j] = Some((nj, dj));
                    stack.push(j);
                }
                Some((a, b)) if a * dj != nj * b => {
                    return Err(Error::Domain("Cartan matrix is not symmetrizable".into()))
                }
                _ => {}
            }
        }
    }
    let d: Vec<(i64, i64)> = d
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::Domain("Dynkin diagram is not connected".into())))
        .collect::<Result<_>>()?;
    let l = d.iter().fold(1i64, |acc, &(_, b)| acc.lcm(&b));
    let ints: Vec<i64> = d.iter().map(|&(a, b)| a * (l / b)).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    Ok(ints.into_iter().map(|x| x / g).collect())
}

impl CartanDatum {
    /// The simple type `series_rank`, Humphreys numbering.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if !valid_type(series, rank) {
            return Err(Error::Domain(format!(
                "no simple Lie algebra of type {}{}",
                series.letter(),
                rank
            )));
        }
        let c = humphreys_matrix(series, rank);
        let d = minimal_symmetrizer(&c)?;
        Ok(CartanDatum { series, rank, c, d })
    }

    /// Parses names such as `A2`, `g2`, `E6`.
    pub fn parse(name: &str) -> Result<Self> {
        let name = name.trim();
        let mut chars = name.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| Error::Domain(format!("unknown Cartan type `{name}`")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Domain(format!("unknown Cartan type `{name}`")))?;
        Self::new(series, rank)
    }

    /// A datum from an explicit matrix; used for fixtures.
    pub fn from_matrix(series: Series, c: Vec<Vec<i64>>) -> Result<Self> {
        let n = c.len();
        if n == 0 || c.iter().any(|r| r.len() != n) {
            return Err(Error::Domain(
                "Cartan matrix must be square and nonempty".into(),
            ));
        }
        for i in 0..n {
            if c[i][i] != 2 {
                return Err(Error::Domain("diagonal entries must be 2".into()));
            }
            for j in 0..n {
                if i != j && (c[i][j] > 0 || (c[i][j] == 0) != (c[j][i] == 0)) {
                    return Err(Error::Domain("invalid off-diagonal entries".into()));
                }
            }
        }
        let d = minimal_symmetrizer(&c)?;
        Ok(CartanDatum {
            series,
            rank: n,
            c,
            d,
        })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.series.letter(), self.rank)
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.c
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.c[i][j]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    /// `max d_i`.
    pub fn d0(&self) -> i64 {
        *self.d.iter().max().unwrap()
    }

    /// The symmetric matrix `DC`, i.e. the Gram matrix `(alpha_i, alpha_j)`.
    pub fn dc(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.d[i] * self.c[i][j]).collect())
            .collect()
    }

    /// `(alpha_i, alpha_j) = d_i a_ij`.
    pub fn form_simple(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.c[i][j]
    }

    /// Bilinear form `(u, v) = u DC v^t`.
    pub fn form(&self, u: &RootVec, v: &RootVec) -> i64 {
        let mut s = 0;
        for (i, &ui) in u.0.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.0.iter().enumerate() {
                s += ui * self.d[i] * self.c[i][j] * vj;
            }
        }
        s
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i + 1,
                rank: self.rank,
            })
        }
    }

    fn reflect_unchecked(&self, i: usize, v: &RootVec) -> RootVec {
        let s: i64 = (0..self.rank).map(|j| self.c[i][j] * v.0[j]).sum();
        let mut out = v.clone();
        out.0[i] -= s;
        out
    }

    /// `gamma_i v`, with `gamma_i alpha_j = alpha_j - a_ij alpha_i`.
    pub fn reflect_root(&self, i: usize, v: &RootVec) -> Result<RootVec> {
        self.check_index(i)?;
        Ok(self.reflect_unchecked(i, v))
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        Ok(WeylElement {
            matrix: self.reflection_matrix(i),
            word: vec![i],
        })
    }

    fn reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.rank;
        // columns are images of the simple roots
        let mut m = vec![vec![0i64; n]; n];
        for j in 0..n {
            let img = self.reflect_unchecked(i, &RootVec::simple(n, j));
            for (k, x) in img.0.into_iter().enumerate() {
                m[k][j] = x;
            }
        }
        m
    }

    /// Order of the Weyl group from the classification.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match (self.series, self.rank) {
            (Series::A, _) => fact(n + 1),
            (Series::B, _) | (Series::C, _) => (1u128 << n) * fact(n),
            (Series::D, _) => (1u128 << (n - 1)) * fact(n),
            (Series::E, 6) => 51_840,
            (Series::E, 7) => 2_903_040,
            (Series::E, 8) => 696_729_600,
            (Series::F, _) => 1152,
            (Series::G, _) => 12,
            _ => 0,
        }
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match (self.series, n) {
            (Series::A, _) => n * (n + 1) / 2,
            (Series::B, _) | (Series::C, _) => n * n,
            (Series::D, _) => n * (n - 1),
            (Series::E, 6) => 36,
            (Series::E, 7) => 63,
            (Series::E, 8) => 120,
            (Series::F, _) => 24,
            (Series::G, _) => 6,
            _ => 0,
        }
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn mat_apply(m: &[Vec<i64>], v: &RootVec) -> RootVec {
    RootVec(
        m.iter()
            .map(|row| row.iter().zip(&v.0).map(|(a, b)| a * b).sum())
            .collect(),
    )
}

/// A Weyl group element: its matrix on the simple-root basis and a reduced word.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    /// 0-based generator indices.
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, v: &RootVec) -> RootVec {
        mat_apply(&self.matrix, v)
    }
}

/// The whole Weyl group, in BFS order (by length, then shortlex word).
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
}

pub const WEYL_LIMIT: usize = 1_000_000;

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().unwrap()
    }
}

/// Enumerates W by breadth-first search; each element keeps its
/// shortlex-minimal reduced word.
pub fn weyl_group(datum: &CartanDatum) -> Result<WeylGroup> {
    if datum.weyl_order() > WEYL_LIMIT as u128 {
        return Err(Error::Resource(format!(
            "Weyl group of {} has {} elements (limit {WEYL_LIMIT})",
            datum.name(),
            datum.weyl_order()
        )));
    }
    let n = datum.rank;
    let gens: Vec<Vec<Vec<i64>>> = (0..n).map(|i| datum.reflection_matrix(i)).collect();
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: HashMap<Vec<Vec<i64>>, ()> = HashMap::new();
    seen.insert(identity.clone(), ());
    let mut elements = vec![WeylElement {
        matrix: identity,
        word: vec![],
    }];
    let mut level_start = 0;
    loop {
        let level_end = elements.len();
        for idx in level_start..level_end {
            for (i, g) in gens.iter().enumerate() {
                let m = mat_mul(&elements[idx].matrix, g);
                if seen.contains_key(&m) {
                    continue;
                }
                seen.insert(m.clone(), ());
                let mut word = elements[idx].word.clone();
                word.push(i);
                elements.push(WeylElement { matrix: m, word });
                if elements.len() > WEYL_LIMIT {
                    return Err(Error::Resource(
                        "Weyl group enumeration limit exceeded".into(),
                    ));
                }
            }
        }
        if elements.len() == level_end {
            break;
        }
        level_start = level_end;
    }
    Ok(WeylGroup { elements })
}

pub fn longest_element(datum: &CartanDatum) -> Result<WeylElement> {
    Ok(weyl_group(datum)?.longest().clone())
}

/// Reduced word of w0 and the induced ordering of the positive roots.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PositiveRootFrame {
    pub datum: CartanDatum,
    /// 0-based generator indices.
    pub w0_word: Vec<usize>,
    pub betas: Vec<RootVec>,
}

fn default_w0_word(datum: &CartanDatum) -> Result<Vec<usize>> {
    static CACHE: Mutex<Vec<(CartanDatum, Vec<usize>)>> = Mutex::new(Vec::new());
    {
        let guard = CACHE.lock().unwrap_or_else(|e| e.into_inner());
        if let Some((_, w)) = guard.iter().find(|(d, _)| d == datum) {
            return Ok(w.clone());
        }
    }
    let w = longest_element(datum)?.word;
    CACHE
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .push((datum.clone(), w.clone()));
    Ok(w)
}

pub fn positive_root_frame(
    datum: &CartanDatum,
    word: Option<&[usize]>,
) -> Result<PositiveRootFrame> {
    let n = datum.rank;
    let word: Vec<usize> = match word {
        None => default_w0_word(datum)?,
        Some(w) => {
            for &i in w {
                datum.check_index(i)?;
            }
            w.to_vec()
        }
    };
    let big_n = datum.num_positive_roots();
    if word.len() != big_n {
        return Err(Error::Domain(format!(
            "word has length {} but the longest element has length {big_n}",
            word.len()
        )));
    }
    let mut betas = Vec::with_capacity(big_n);
    let mut prefix: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for &i in &word {
        let beta = mat_apply(&prefix, &RootVec::simple(n, i));
        if !beta.is_nonneg() {
            return Err(Error::Domain("word is not reduced".into()));
        }
        betas.push(beta);
        prefix = mat_mul(&prefix, &datum.reflection_matrix(i));
    }
    // a reduced word of maximal length represents w0, which negates every simple root
    // up to a diagram automorphism
    for i in 0..n {
        if mat_apply(&prefix, &RootVec::simple(n, i)).is_nonneg() {
            return Err(Error::Domain(
                "word is not a reduced expression of w0".into(),
            ));
        }
    }
    Ok(PositiveRootFrame {
        datum: datum.clone(),
        w0_word: word,
        betas,
    })
}

impl PositiveRootFrame {
    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn num_roots(&self) -> usize {
        self.betas.len()
    }

    /// Degree `sum_s k_s beta_s` of the PBW monomial `E^k`.
    pub fn degree_of(&self, k: &[u32]) -> RootVec {
        let mut out = RootVec::zero(self.rank());
        for (b, &m) in self.betas.iter().zip(k) {
            for (o, x) in out.0.iter_mut().zip(&b.0) {
                *o += x * m as i64;
            }
        }
        out
    }

    /// Index `s` with `beta_s = alpha_t`.
    pub fn simple_position(&self, t: usize) -> Option<usize> {
        let a = RootVec::simple(self.rank(), t);
        self.betas.iter().position(|b| *b == a)
    }

    /// All exponent vectors `k` with `deg E^k = eta`, lexicographically
    /// decreasing.
    pub fn pbw_exponents(&self, eta: &RootVec) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        if !eta.is_nonneg() {
            return out;
        }
        let mut cur = vec![0u32; self.num_roots()];
        self.enum_rec(0, eta.clone(), &mut cur, &mut out);
        out
    }

    fn enum_rec(&self, s: usize, rest: RootVec, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if s == self.betas.len() {
            if rest.is_zero() {
                out.push(cur.clone());
            }
            return;
        }
        let b = &self.betas[s];
        let max =
            b.0.iter()
                .zip(&rest.0)
                .filter(|(x, _)| **x > 0)
                .map(|(x, r)| r / x)
                .min()
                .unwrap_or(0);
        for m in (0..=max).rev() {
            cur[s] = m as u32;
            self.enum_rec(s + 1, &rest - &b.scale(m), cur, out);
        }
        cur[s] = 0;
    }

    /// Kostant partition function: the number of `k` with `deg E^k = eta`.
    pub fn kostant_dim(&self, eta: &RootVec) -> u64 {
        if !eta.is_nonneg() {
            return 0;
        }
        let mut memo = HashMap::new();
        self.kostant_rec(0, eta, &mut memo)
    }

    fn kostant_rec(
        &self,
        s: usize,
        eta: &RootVec,
        memo: &mut HashMap<(usize, RootVec), u64>,
    ) -> u64 {
        if s == self.betas.len() {
            return u64::from(eta.is_zero());
        }
        if let Some(&v) = memo.get(&(s, eta.clone())) {
            return v;
        }
        let mut total = 0;
        let mut rest = eta.clone();
        while rest.is_nonneg() {
            total += self.kostant_rec(s + 1, &rest, memo);
            rest = &rest - &self.betas[s];
        }
        memo.insert((s, eta.clone()), total);
        total
    }

    /// All PBW exponents of height at most `h`, ordered by height and then by
    /// degree as in [`degrees_of_height`].
    pub fn pbw_up_to_height(&self, h: i64) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for t in 0..=h {
            for eta in degrees_of_height(self.rank(), t) {
                out.extend(self.pbw_exponents(&eta));
            }
        }
        out
    }
}

pub fn kostant_dim(frame: &PositiveRootFrame, eta: &RootVec) -> u64 {
    frame.kostant_dim(eta)
}

/// Formats a 0-based word 1-based, e.g. `(1,2,1)`.
pub fn word_to_string(w: &[usize]) -> String {
    let parts: Vec<String> = w.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[i64]) -> RootVec {
        RootVec(v.to_vec())
    }

    #[test]
    fn small_types() {
        let a2 = CartanDatum::parse("A2").unwrap();
        assert_eq!(a2.matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.symmetrizer(), &[1, 1]);
        let a1 = CartanDatum::parse("A1").unwrap();
        assert_eq!(a1.matrix(), &[vec![2]]);
        assert_eq!(a1.symmetrizer(), &[1]);
        let g2 = CartanDatum::parse("G2").unwrap();
        assert_eq!(g2.dc(), vec![vec![6, -3], vec![-3, 2]]);
        assert_eq!(g2.d0(), 3);
        let b2 = CartanDatum::parse("B2").unwrap();
        assert_eq!(b2.symmetrizer(), &[1, 2]);
        assert!(CartanDatum::parse("C2").is_err());
        assert!(CartanDatum::parse("E9").is_err());
        assert!(CartanDatum::parse("X3").is_err());
    }

    #[test]
    fn symmetrizers_symmetrize() {
        for name in ["A4", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let dat = CartanDatum::parse(name).unwrap();
            let dc = dat.dc();
            for i in 0..dat.rank() {
                for j in 0..dat.rank() {
                    assert_eq!(dc[i][j], dc[j][i], "{name}");
                }
            }
        }
    }

    #[test]
    fn reflections() {
        let a2 = CartanDatum::parse("A2").unwrap();
        assert_eq!(a2.reflect_root(0, &rv(&[0, 1])).unwrap(), rv(&[1, 1]));
        assert_eq!(a2.reflect_root(0, &rv(&[1, 0])).unwrap(), rv(&[-1, 0]));
        assert!(a2.reflect_root(2, &rv(&[1, 0])).is_err());
        let g2 = CartanDatum::parse("G2").unwrap();
        // from DC: gamma_1 alpha_2 = alpha_2 - a_12 alpha_1 with a_12 = -1
        assert_eq!(g2.reflect_root(0, &rv(&[0, 1])).unwrap(), rv(&[1, 1]));
        assert_eq!(g2.reflect_root(1, &rv(&[1, 0])).unwrap(), rv(&[1, 3]));
        for i in 0..2 {
            let v = rv(&[2, -5]);
            let w = g2
                .reflect_root(i, &g2.reflect_root(i, &v).unwrap())
                .unwrap();
            assert_eq!(v, w);
        }
    }

    #[test]
    fn weyl_groups() {
        let a1 = weyl_group(&CartanDatum::parse("A1").unwrap()).unwrap();
        assert_eq!(a1.order(), 2);
        assert_eq!(a1.longest().word, vec![0]);
        let a2 = weyl_group(&CartanDatum::parse("A2").unwrap()).unwrap();
        assert_eq!(a2.order(), 6);
        assert_eq!(a2.longest().word, vec![0, 1, 0]);
        let g2 = weyl_group(&CartanDatum::parse("G2").unwrap()).unwrap();
        assert_eq!(g2.order(), 12);
        assert_eq!(g2.longest().length(), 6);
        let f4 = CartanDatum::parse("F4").unwrap();
        assert_eq!(weyl_group(&f4).unwrap().order(), 1152);
        assert!(matches!(
            weyl_group(&CartanDatum::parse("E7").unwrap()),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn frames() {
        let a2 = CartanDatum::parse("A2").unwrap();
        let f = positive_root_frame(&a2, Some(&[0, 1, 0])).unwrap();
        assert_eq!(f.betas, vec![rv(&[1, 0]), rv(&[1, 1]), rv(&[0, 1])]);
        assert!(positive_root_frame(&a2, Some(&[0, 0, 1])).is_err());
        assert!(positive_root_frame(&a2, Some(&[0, 1])).is_err());
        let a1 = positive_root_frame(&CartanDatum::parse("A1").unwrap(), None).unwrap();
        assert_eq!(a1.betas, vec![rv(&[1])]);
        let b2 = positive_root_frame(&CartanDatum::parse("B2").unwrap(), None).unwrap();
        assert_eq!(b2.num_roots(), 4);
        assert!(b2.betas.contains(&rv(&[1, 0])));
        assert!(b2.betas.contains(&rv(&[0, 1])));
        assert!(b2.betas.contains(&rv(&[1, 1])));
    }

    #[test]
    fn root_counts_match_dimension_formula() {
        for (name, dim_g) in [
            ("A1", 3),
            ("A2", 8),
            ("B2", 10),
            ("G2", 14),
            ("F4", 52),
            ("D4", 28),
        ] {
            let dat = CartanDatum::parse(name).unwrap();
            let f = positive_root_frame(&dat, None).unwrap();
            assert_eq!(f.num_roots(), (dim_g - dat.rank()) / 2, "{name}");
        }
    }

    #[test]
    fn kostant_small() {
        let a2 = positive_root_frame(&CartanDatum::parse("A2").unwrap(), None).unwrap();
        assert_eq!(a2.kostant_dim(&rv(&[0, 0])), 1);
        assert_eq!(a2.kostant_dim(&rv(&[1, 1])), 2);
        assert_eq!(a2.kostant_dim(&rv(&[2, 1])), 2);
        assert_eq!(a2.kostant_dim(&rv(&[-1, 1])), 0);
        assert_eq!(
            a2.pbw_exponents(&rv(&[1, 1])),
            vec![vec![1, 0, 1], vec![0, 1, 0]]
        );
        let a1 = positive_root_frame(&CartanDatum::parse("A1").unwrap(), None).unwrap();
        for m in 0..10 {
            assert_eq!(a1.kostant_dim(&rv(&[m])), 1);
        }
    }

    #[test]
    fn heights() {
        assert_eq!(height(&rv(&[1, 0])), 1);
        assert_eq!(height(&rv(&[1, 1])), 2);
        assert_eq!(height(&rv(&[3, 2])), 5);
        assert_eq!(
            degrees_of_height(2, 2),
            vec![rv(&[2, 0]), rv(&[1, 1]), rv(&[0, 2])]
        );
    }
}
