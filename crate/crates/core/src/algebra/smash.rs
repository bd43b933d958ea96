//! The smash product U^0 # U^+ and its comparison map to U>=0.

use std::fmt;

use crate::cartan::{degrees_of_height, RootVec};
use crate::lincomb::LinComb;
use crate::{par, Result};

use super::{render_k, BorelAlgebra, Mono, ReducedElement, Word};

/// `K_lambda (x) E_word`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SmashKey {
    pub lambda: RootVec,
    pub word: Word,
}

impl fmt::Display for SmashKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = render_k(&self.lambda).unwrap_or_else(|| "1".into());
        let e = if self.word.is_empty() {
            "1".to_string()
        } else {
            self.word.render('E')
        };
        write!(f, "{k} # {e}")
    }
}

pub type SmashElement = LinComb<SmashKey>;

impl BorelAlgebra {
    /// `K_lambda (x) E_w` with the word reduced in U^+.
    pub fn smash_elem(&self, lambda: &RootVec, w: &Word) -> Result<SmashElement> {
        let red = self.reduce_word(w)?;
        Ok(red
            .iter()
            .map(|(b, c)| {
                (
                    SmashKey {
                        lambda: lambda.clone(),
                        word: b.clone(),
                    },
                    c.clone(),
                )
            })
            .collect())
    }

    /// `(K_l (x) x)(K_m (x) y) = K_{l+m} (x) (x . K_m) y` with the right
    /// action `E_j . K_m = q^{-(m, alpha_j)} E_j`.
    pub fn smash_mul(&self, a: &SmashElement, b: &SmashElement) -> Result<SmashElement> {
        let n = self.rank();
        let mut out = LinComb::zero();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let e = -self.datum().form(&kb.lambda, &ka.word.degree(n));
                let lambda = &ka.lambda + &kb.lambda;
                let prod = self.smash_elem(&lambda, &ka.word.concat(&kb.word))?;
                out.add_scaled(&prod, &(ca * cb).shifted(e));
            }
        }
        Ok(out)
    }

    /// The comparison map `K_l (x) x -> K_l x`.
    pub fn smash_to_borel(&self, a: &SmashElement) -> ReducedElement {
        let n = self.rank();
        let mut out = LinComb::zero();
        for (k, c) in a {
            let e = self.datum().form(&k.lambda, &k.word.degree(n));
            out.add_term(
                Mono {
                    word: k.word.clone(),
                    k: k.lambda.clone(),
                },
                c.shifted(e),
            );
        }
        out
    }

    /// Checks that the comparison map is multiplicative on all pairs of basis
    /// elements `K_l (x) b` with `l` in `[-1, 1]^n` and total height of the two
    /// words at most `max_height`. Returns the number of pairs checked and the
    /// failing pairs.
    pub fn smash_check(&self, max_height: i64) -> Result<SmashReport> {
        let n = self.rank();
        let lambdas = cube(n, 1);
        let mut basis: Vec<(Word, i64)> = Vec::new();
        for h in 0..=max_height {
            for eta in degrees_of_height(n, h) {
                let b = self.graded_basis(&eta)?;
                basis.extend(b.basis_words().map(|w| (w.clone(), h)));
            }
        }
        let mut pairs = Vec::new();
        for (x, hx) in &basis {
            for (y, hy) in &basis {
                if hx + hy <= max_height {
                    pairs.push((x.clone(), y.clone()));
                }
            }
        }
        let results = par::try_map(&pairs, |(x, y)| {
            let mut fails = Vec::new();
            let mut count = 0usize;
            for l in &lambdas {
                let a = self.smash_elem(l, x)?;
                let fa = self.smash_to_borel(&a);
                for m in &lambdas {
                    let b = self.smash_elem(m, y)?;
                    let lhs = self.smash_to_borel(&self.smash_mul(&a, &b)?);
                    let rhs = self.mul(&fa, &self.smash_to_borel(&b))?;
                    count += 1;
                    if lhs != rhs {
                        fails.push(format!(
                            "({}) * ({})",
                            SmashKey {
                                lambda: l.clone(),
                                word: x.clone()
                            },
                            SmashKey {
                                lambda: m.clone(),
                                word: y.clone()
                            }
                        ));
                    }
                }
            }
            Ok((count, fails))
        })?;
        let mut report = SmashReport::default();
        for (c, f) in results {
            report.checked += c;
            report.failures.extend(f);
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct SmashReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SmashReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All vectors in `[-r, r]^n`, lexicographic.
pub fn cube(n: usize, r: i64) -> Vec<RootVec> {
    let mut out = vec![RootVec(Vec::new())];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-r..=r).map(move |x| {
                    let mut w = v.0.clone();
                    w.push(x);
                    RootVec(w)
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFunc;

    #[test]
    fn e_times_k_in_a1() {
        let alg = BorelAlgebra::of_type("A1").unwrap();
        let a = alg.smash_elem(&RootVec(vec![0]), &Word::letter(0)).unwrap();
        let b = alg.smash_elem(&RootVec(vec![1]), &Word::empty()).unwrap();
        let p = alg.smash_mul(&a, &b).unwrap();
        let expected = LinComb::single(
            SmashKey {
                lambda: RootVec(vec![1]),
                word: Word::letter(0),
            },
            RatFunc::q_pow(-2),
        );
        assert_eq!(p, expected);
        let ek = alg
            .mul(&alg.e(0).unwrap(), &alg.k(RootVec(vec![1])).unwrap())
            .unwrap();
        assert_eq!(alg.smash_to_borel(&p), ek);
    }

    #[test]
    fn k_times_k() {
        let alg = BorelAlgebra::of_type("A2").unwrap();
        let a = alg
            .smash_elem(&RootVec(vec![1, 0]), &Word::empty())
            .unwrap();
        let b = alg
            .smash_elem(&RootVec(vec![-1, 1]), &Word::empty())
            .unwrap();
        let p = alg.smash_mul(&a, &b).unwrap();
        assert_eq!(
            p,
            alg.smash_elem(&RootVec(vec![0, 1]), &Word::empty())
                .unwrap()
        );
    }

    #[test]
    fn comparison_is_multiplicative_a1() {
        let alg = BorelAlgebra::of_type("A1").unwrap();
        let r = alg.smash_check(3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(cube(2, 1).len(), 9);
    }
}
