//! The half quantum group U>=0 with exact normal forms.
//!
//! Elements of U>=0 are stored as `E_w K_lambda` with `w` a basis word of its
//! degree. Basis words come from [`graded::build`], which quotients the free
//! algebra degree by degree by the q-Serre ideal; the same coordinates reduce
//! F-words, since the relations in U^- have the same shape.

pub mod full;
pub mod graded;
pub mod pbw;
pub mod smash;
pub mod word;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, RwLock};

use crate::cache::DiskCache;
use crate::cartan::{
    degrees_of_height, positive_root_frame, CartanDatum, PositiveRootFrame, RootVec,
};
use crate::lincomb::LinComb;
use crate::scalars::RatFunc;
use crate::{par, Error, Result};

pub use full::{AlgebraElement, Letter, PreNormalMonomial};
pub use graded::GradedBasis;
pub use pbw::{CancellationLevel, PbwChange, PbwData, PbwKey};
pub use word::Word;

pub(crate) use crate::lincomb::fmt_sum;

/// Renders `K_lambda` as `K1^2*K2^-1`; `None` for lambda = 0.
pub fn render_k(lambda: &RootVec) -> Option<String> {
    let parts: Vec<String> = lambda
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("K{}", i + 1)
            } else {
                format!("K{}^{}", i + 1, e)
            }
        })
        .collect();
    (!parts.is_empty()).then(|| parts.join("*"))
}

/// The monomial `E_word K_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono {
    pub word: Word,
    pub k: RootVec,
}

impl Mono {
    pub fn unit(rank: usize) -> Self {
        Mono {
            word: Word::empty(),
            k: RootVec::zero(rank),
        }
    }

    pub fn k_only(k: RootVec) -> Self {
        Mono {
            word: Word::empty(),
            k,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.word.is_empty() && self.k.is_zero()
    }

    pub fn degree(&self) -> RootVec {
        self.word.degree(self.k.rank())
    }

    pub fn height(&self) -> i64 {
        self.word.len() as i64
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.word.is_empty() {
            parts.push(self.word.render('E'));
        }
        if let Some(k) = render_k(&self.k) {
            parts.push(k);
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Element of U>=0 in normal form over `{basis word} x {K_lambda}`.
pub type ReducedElement = LinComb<Mono>;

impl<K: Ord + Clone + fmt::Display, F: crate::scalars::Field> LinComb<K, F> {
    pub fn render(&self) -> String {
        fmt_sum(self.iter().map(|(k, c)| (c, k.to_string())))
    }
}

/// U>=0 for one Cartan datum and one reduced word of w0, with caches.
pub struct BorelAlgebra {
    frame: PositiveRootFrame,
    bases: RwLock<HashMap<RootVec, Arc<GradedBasis>>>,
    disk: Option<DiskCache>,
    pub(crate) pbw: Mutex<Option<Arc<PbwData>>>,
    pub(crate) pbw_powers: Mutex<HashMap<Vec<u32>, ReducedElement>>,
    pub(crate) pbw_changes: RwLock<HashMap<RootVec, Arc<PbwChange>>>,
    disk_hits: AtomicUsize,
    computed: AtomicUsize,
}

impl fmt::Debug for BorelAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BorelAlgebra")
            .field("type", &self.frame.datum.name())
            .field("w0", &self.frame.w0_word)
            .finish()
    }
}

impl BorelAlgebra {
    pub fn new(frame: PositiveRootFrame) -> Arc<Self> {
        Self::with_cache(frame, None)
    }

    pub fn with_cache(frame: PositiveRootFrame, disk: Option<DiskCache>) -> Arc<Self> {
        Arc::new(BorelAlgebra {
            frame,
            bases: RwLock::new(HashMap::new()),
            disk,
            pbw: Mutex::new(None),
            pbw_powers: Mutex::new(HashMap::new()),
            pbw_changes: RwLock::new(HashMap::new()),
            disk_hits: AtomicUsize::new(0),
            computed: AtomicUsize::new(0),
        })
    }

    /// Convenience: the algebra of a named type with the default w0 word.
    pub fn of_type(name: &str) -> Result<Arc<Self>> {
        let datum = CartanDatum::parse(name)?;
        Ok(Self::new(positive_root_frame(&datum, None)?))
    }

    pub fn frame(&self) -> &PositiveRootFrame {
        &self.frame
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.frame.datum
    }

    pub fn rank(&self) -> usize {
        self.frame.datum.rank()
    }

    /// (bases loaded from disk, bases computed) so far.
    pub fn cache_stats(&self) -> (usize, usize) {
        (
            self.disk_hits.load(Ordering::Relaxed),
            self.computed.load(Ordering::Relaxed),
        )
    }

    /// The chosen basis of `(U^+)_eta`.
    pub fn graded_basis(&self, eta: &RootVec) -> Result<Arc<GradedBasis>> {
        if let Some(b) = self
            .bases
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(eta)
        {
            return Ok(b.clone());
        }
        let datum = &self.frame.datum;
        let w0 = &self.frame.w0_word;
        let basis = match self.disk.as_ref().and_then(|d| d.load(datum, w0, eta)) {
            Some(b) => {
                self.disk_hits.fetch_add(1, Ordering::Relaxed);
                b
            }
            None => {
                let expected = self.frame.kostant_dim(eta);
                let b = graded::build(datum, eta, expected, |lower| self.graded_basis(lower))?;
                self.computed.fetch_add(1, Ordering::Relaxed);
                if let Some(d) = &self.disk {
                    // a failed write only costs a recomputation later
                    let _ = d.store(datum, w0, &b);
                }
                b
            }
        };
        let mut guard = self.bases.write().unwrap_or_else(|e| e.into_inner());
        Ok(guard
            .entry(eta.clone())
            .or_insert_with(|| Arc::new(basis))
            .clone())
    }

    /// Computes every graded piece up to the given height, one height at a
    /// time, degrees of equal height in parallel.
    pub fn prefill(&self, max_height: i64) -> Result<()> {
        for h in 0..=max_height {
            let degs = degrees_of_height(self.rank(), h);
            par::try_map(&degs, |eta| self.graded_basis(eta).map(|_| ()))?;
        }
        Ok(())
    }

    /// Coordinates of a word over the basis words of its degree.
    pub fn reduce_word(&self, w: &Word) -> Result<LinComb<Word>> {
        let eta = w.degree(self.rank());
        let b = self.graded_basis(&eta)?;
        let coords = b
            .coords_of(w)
            .ok_or_else(|| Error::Consistency(format!("word {w} missing from its degree")))?;
        Ok(coords
            .iter()
            .map(|(k, c)| (b.basis_word(*k).clone(), c.clone()))
            .collect())
    }

    fn check_k(&self, lambda: &RootVec) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::Domain(format!(
                "K exponent {lambda} has the wrong length for rank {}",
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn one(&self) -> ReducedElement {
        LinComb::single(Mono::unit(self.rank()), RatFunc::one())
    }

    pub fn scalar(&self, c: RatFunc) -> ReducedElement {
        LinComb::single(Mono::unit(self.rank()), c)
    }

    pub fn e(&self, i: usize) -> Result<ReducedElement> {
        self.datum().check_index(i)?;
        Ok(LinComb::single(
            Mono {
                word: Word::letter(i),
                k: RootVec::zero(self.rank()),
            },
            RatFunc::one(),
        ))
    }

    pub fn k(&self, lambda: RootVec) -> Result<ReducedElement> {
        self.check_k(&lambda)?;
        Ok(LinComb::single(Mono::k_only(lambda), RatFunc::one()))
    }

    /// `K_i^e`
    pub fn k_gen(&self, i: usize, e: i64) -> Result<ReducedElement> {
        self.datum().check_index(i)?;
        self.k(RootVec::simple(self.rank(), i).scale(e))
    }

    /// `E_w K_lambda` for an arbitrary word, reduced.
    pub fn word_k(&self, w: &Word, lambda: &RootVec) -> Result<ReducedElement> {
        self.check_k(lambda)?;
        let red = self.reduce_word(w)?;
        Ok(red
            .iter()
            .map(|(b, c)| {
                (
                    Mono {
                        word: b.clone(),
                        k: lambda.clone(),
                    },
                    c.clone(),
                )
            })
            .collect())
    }

    /// `(E_a K_l)(E_b K_m) = q^{(l, deg b)} E_{ab} K_{l+m}`, reduced.
    pub fn mul_mono(&self, a: &Mono, b: &Mono) -> Result<ReducedElement> {
        let n = self.rank();
        let e = self.datum().form(&a.k, &b.word.degree(n));
        let w = a.word.concat(&b.word);
        let k = &a.k + &b.k;
        let red = self.reduce_word(&w)?;
        Ok(red
            .iter()
            .map(|(bw, c)| {
                (
                    Mono {
                        word: bw.clone(),
                        k: k.clone(),
                    },
                    c.shifted(e),
                )
            })
            .collect())
    }

    pub fn mul(&self, x: &ReducedElement, y: &ReducedElement) -> Result<ReducedElement> {
        let mut out = LinComb::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                let prod = self.mul_mono(a, b)?;
                out.add_scaled(&prod, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, x: &ReducedElement, m: u32) -> Result<ReducedElement> {
        let mut acc = self.one();
        for _ in 0..m {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// Reduces both word sides of a pre-normal element.
    pub fn reduce_full(&self, a: &AlgebraElement) -> Result<LinComb<PreNormalMonomial>> {
        let mut out = LinComb::zero();
        for (m, c) in a.terms() {
            let fr = self.reduce_word(&m.fword)?;
            let er = self.reduce_word(&m.eword)?;
            for (fw, cf) in &fr {
                for (ew, ce) in &er {
                    out.add_term(
                        PreNormalMonomial {
                            fword: fw.clone(),
                            lambda: m.lambda.clone(),
                            eword: ew.clone(),
                        },
                        &(c * cf) * ce,
                    );
                }
            }
        }
        Ok(out)
    }

    /// Normal form in U>=0; fails when F-content survives Serre reduction.
    pub fn reduce(&self, a: &AlgebraElement) -> Result<ReducedElement> {
        if a.rank() != self.rank() {
            return Err(Error::Domain("element has the wrong rank".into()));
        }
        let full = self.reduce_full(a)?;
        let mut out = LinComb::zero();
        for (m, c) in &full {
            if !m.fword.is_empty() {
                return Err(Error::NotInBorel(format!(
                    "term with F-part {} survives reduction",
                    m.fword.render('F')
                )));
            }
            // K_l E_w = q^{(l, deg w)} E_w K_l
            let e = self.datum().form(&m.lambda, &m.eword.degree(self.rank()));
            out.add_term(
                Mono {
                    word: m.eword.clone(),
                    k: m.lambda.clone(),
                },
                c.shifted(e),
            );
        }
        Ok(out)
    }

    /// The same element written in pre-normal form `K_lambda E_w`.
    pub fn lift(&self, x: &ReducedElement) -> AlgebraElement {
        let n = self.rank();
        let mut out = AlgebraElement::zero(n);
        for (m, c) in x {
            let e = self.datum().form(&m.k, &m.word.degree(n));
            out.add_term(
                PreNormalMonomial {
                    fword: Word::empty(),
                    lambda: m.k.clone(),
                    eword: m.word.clone(),
                },
                c.shifted(-e),
            );
        }
        out
    }

    /// Largest height among the terms, `None` for zero.
    pub fn max_height(&self, x: &ReducedElement) -> Option<i64> {
        x.keys().map(Mono::height).max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qnum;

    fn word(w: &[u8]) -> Word {
        Word(w.to_vec())
    }

    #[test]
    fn a2_bases() {
        let alg = BorelAlgebra::of_type("A2").unwrap();
        let b = alg.graded_basis(&RootVec(vec![1, 0])).unwrap();
        assert_eq!(b.basis_words().collect::<Vec<_>>(), vec![&word(&[0])]);
        let b = alg.graded_basis(&RootVec(vec![1, 1])).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(
            b.basis_words().cloned().collect::<Vec<_>>(),
            vec![word(&[0, 1]), word(&[1, 0])]
        );
        let b = alg.graded_basis(&RootVec(vec![2, 1])).unwrap();
        assert_eq!(b.dim(), 2);
        // shortlex-earliest independent words win
        assert_eq!(
            b.basis_words().cloned().collect::<Vec<_>>(),
            vec![word(&[0, 0, 1]), word(&[0, 1, 0])]
        );
    }

    #[test]
    fn serre_reduces_to_zero() {
        let alg = BorelAlgebra::of_type("A2").unwrap();
        let s = full::serre_element(alg.datum(), 0, 1).unwrap();
        assert!(alg.reduce(&s).unwrap().is_zero());
        // solving the relation for the non-basis word E2 E1 E1
        let red = alg.reduce_word(&word(&[1, 0, 0])).unwrap();
        let two = RatFunc::from(qnum::q_int(2));
        let expected: LinComb<Word> = [
            (word(&[0, 0, 1]), RatFunc::from_int(-1)),
            (word(&[0, 1, 0]), two),
        ]
        .into_iter()
        .collect();
        assert_eq!(red, expected);
    }

    #[test]
    fn k_moves_right_with_q_squared() {
        let alg = BorelAlgebra::of_type("A1").unwrap();
        let ke = full::straighten(alg.datum(), &[Letter::K(0, 1), Letter::E(0)]).unwrap();
        let red = alg.reduce(&ke).unwrap();
        let ek = LinComb::single(
            Mono {
                word: word(&[0]),
                k: RootVec(vec![1]),
            },
            RatFunc::q_pow(2),
        );
        assert_eq!(red, ek);
        // (E K)(E K) = q^2 E^2 K^2
        let x = alg
            .mul(&alg.e(0).unwrap(), &alg.k(RootVec(vec![1])).unwrap())
            .unwrap();
        let sq = alg.mul(&x, &x).unwrap();
        assert_eq!(
            sq,
            LinComb::single(
                Mono {
                    word: word(&[0, 0]),
                    k: RootVec(vec![2])
                },
                RatFunc::q_pow(2)
            )
        );
    }

    #[test]
    fn reduce_rejects_f() {
        let alg = BorelAlgebra::of_type("A1").unwrap();
        let f = full::straighten(alg.datum(), &[Letter::F(0)]).unwrap();
        assert!(matches!(alg.reduce(&f), Err(Error::NotInBorel(_))));
    }

    #[test]
    fn k_element_reduces_to_unit_coefficient() {
        let alg = BorelAlgebra::of_type("A2").unwrap();
        let lam = RootVec(vec![2, -1]);
        let k = AlgebraElement::k(2, lam.clone());
        assert_eq!(alg.reduce(&k).unwrap(), alg.k(lam).unwrap());
    }

    #[test]
    fn lift_round_trip() {
        let alg = BorelAlgebra::of_type("A2").unwrap();
        let x = alg
            .mul(
                &alg.k(RootVec(vec![1, -1])).unwrap(),
                &alg.word_k(&word(&[1, 0, 0]), &RootVec(vec![0, 1])).unwrap(),
            )
            .unwrap();
        assert_eq!(alg.reduce(&alg.lift(&x)).unwrap(), x);
    }
}
