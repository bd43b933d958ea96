use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;

use crate::scalars::{Field, RatFunc};

/// A finite linear combination of keys with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<K: Ord, F = RatFunc> {
    terms: BTreeMap<K, F>,
}

impl<K: Ord, F> Default for LinComb<K, F> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, F: Field> LinComb<K, F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: F) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, F> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, F> {
        self.terms.keys()
    }

    pub fn get(&self, k: &K) -> Option<&F> {
        self.terms.get(k)
    }

    pub fn add_term(&mut self, k: K, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, x) in &other.terms {
            out.add_term(k.clone(), x.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, x) in &other.terms {
            out.add_term(k.clone(), x.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.clone(), x.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.clone(), x.mul(c)))
                .collect(),
        }
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<K2, F>, E>,
    ) -> Result<LinComb<K2, F>, E> {
        let mut out = LinComb::zero();
        for (k, x) in &self.terms {
            out.add_scaled(&f(k)?, x);
        }
        Ok(out)
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, x)| (k.clone(), x.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<F2: Field, E>(
        &self,
        mut f: impl FnMut(&F) -> Result<F2, E>,
    ) -> Result<LinComb<K, F2>, E> {
        let mut out = LinComb::zero();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), f(x)?);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone, F: Field> FromIterator<(K, F)> for LinComb<K, F> {
    fn from_iter<I: IntoIterator<Item = (K, F)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, K: Ord, F> IntoIterator for &'a LinComb<K, F> {
    type Item = (&'a K, &'a F);
    type IntoIter = btree_map::Iter<'a, K, F>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Formats `sum c * m` given rendered monomials; `1` monomials show the bare
/// coefficient.
pub fn fmt_sum<'a, F: Field + 'a>(terms: impl IntoIterator<Item = (&'a F, String)>) -> String {
    let mut out = String::new();
    for (c, m) in terms {
        let t = render_term(c, &m);
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn render_term<F: Field>(c: &F, m: &str) -> String {
    let is_unit = m == "1";
    if c.is_one() {
        return m.to_string();
    }
    if c.neg().is_one() {
        return format!("-{m}");
    }
    let s = c.to_string();
    let compound = s.contains(' ') || s.contains('/');
    match (is_unit, compound) {
        (true, true) => format!("({s})"),
        (true, false) => s,
        (false, true) => format!("({s})*{m}"),
        (false, false) => format!("{s}*{m}"),
    }
}
