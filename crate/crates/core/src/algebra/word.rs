use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::RootVec;

/// A word in generator indices (0-based), ordered shortlex.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u8])
    }

    pub fn from_indices(w: &[usize]) -> Self {
        Word(w.iter().map(|&i| i as u8).collect())
    }

    /// `i` repeated `m` times.
    pub fn power(i: usize, m: usize) -> Self {
        Word(vec![i as u8; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn degree(&self, n: usize) -> RootVec {
        let mut v = vec![0i64; n];
        for &i in &self.0 {
            v[i as usize] += 1;
        }
        RootVec(v)
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    /// Renders e.g. `E1*E2*E1` with the given generator letter; the empty
    /// word renders as `1`.
    pub fn render(&self, gen: char) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == g {
                j += 1;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&format!("{gen}{}", g + 1));
            if j - i > 1 {
                out.push_str(&format!("^{}", j - i));
            }
            i = j;
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('E'))
    }
}

/// All words with letter multiplicities `eta`, in shortlex order.
pub fn words_of_degree(eta: &RootVec) -> Vec<Word> {
    fn rec(counts: &mut [i64], cur: &mut Vec<u8>, left: usize, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(i as u8);
                rec(counts, cur, left - 1, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    if !eta.is_nonneg() {
        return out;
    }
    let mut counts = eta.0.clone();
    let total = eta.height() as usize;
    rec(&mut counts, &mut Vec::with_capacity(total), total, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortlex() {
        let a = Word(vec![1]);
        let b = Word(vec![0, 0]);
        assert!(a < b);
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
    }

    #[test]
    fn enumeration() {
        let w = words_of_degree(&RootVec(vec![2, 1]));
        assert_eq!(
            w,
            vec![
                Word(vec![0, 0, 1]),
                Word(vec![0, 1, 0]),
                Word(vec![1, 0, 0])
            ]
        );
        assert_eq!(words_of_degree(&RootVec(vec![0, 0])), vec![Word::empty()]);
        assert_eq!(words_of_degree(&RootVec(vec![3, 3])).len(), 20);
    }

    #[test]
    fn rendering() {
        assert_eq!(Word(vec![0, 0, 1, 0]).render('E'), "E1^2*E2*E1");
        assert_eq!(Word::empty().render('F'), "1");
    }
}
