//! Hopf structure of U>=0: coproduct, counit, antipode and its inverse.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::algebra::{BorelAlgebra, Mono, ReducedElement, Word};
use crate::cartan::{degrees_of_height, RootVec};
use crate::lincomb::LinComb;
use crate::scalars::RatFunc;
use crate::{par, Error, Result};

pub type Tensor2 = LinComb<(Mono, Mono)>;
pub type Tensor3 = LinComb<(Mono, Mono, Mono)>;

pub fn render_tensor2(t: &Tensor2) -> String {
    crate::lincomb::fmt_sum(t.iter().map(|((a, b), c)| (c, format!("{a} (x) {b}"))))
}

pub fn render_tensor3(t: &Tensor3) -> String {
    crate::lincomb::fmt_sum(
        t.iter()
            .map(|((a, b, x), c)| (c, format!("{a} (x) {b} (x) {x}"))),
    )
}

/// Hopf operations on one algebra.
pub struct Hopf {
    alg: Arc<BorelAlgebra>,
    s_gen: Vec<ReducedElement>,
    s_inv_gen: Vec<ReducedElement>,
    delta_words: Mutex<HashMap<Word, Tensor2>>,
}

impl Hopf {
    pub fn new(alg: Arc<BorelAlgebra>) -> Result<Self> {
        let n = alg.rank();
        let s_gen = (0..n)
            .map(|i| {
                let kinv = alg.k_gen(i, -1)?;
                Ok(alg.mul(&kinv, &alg.e(i)?)?.neg())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::build(alg, s_gen)
    }

    /// Same structure but with `S(E_i)` replaced by the given elements; used
    /// to check that the axiom suite detects a wrong antipode.
    pub fn with_antipode_override(
        alg: Arc<BorelAlgebra>,
        s_gen: Vec<ReducedElement>,
    ) -> Result<Self> {
        if s_gen.len() != alg.rank() {
            return Err(Error::Domain(
                "one antipode image per generator is needed".into(),
            ));
        }
        Self::build(alg, s_gen)
    }

    fn build(alg: Arc<BorelAlgebra>, s_gen: Vec<ReducedElement>) -> Result<Self> {
        let mut h = Hopf {
            alg,
            s_gen,
            s_inv_gen: Vec::new(),
            delta_words: Mutex::new(HashMap::new()),
        };
        h.s_inv_gen = (0..h.alg.rank())
            .map(|i| h.solve_s_inv(i))
            .collect::<Result<_>>()?;
        Ok(h)
    }

    /// `S^{-1}(E_i)`: `S` sends `E_i K_mu` to a multiple of `E_i K_{-mu-alpha_i}`
    /// on the degree `alpha_i` slice, so `mu = -alpha_i` is the only candidate.
    fn solve_s_inv(&self, i: usize) -> Result<ReducedElement> {
        let alg = &self.alg;
        let n = alg.rank();
        let mu = RootVec::simple(n, i).scale(-1);
        let cand = alg.mul(&alg.e(i)?, &alg.k(mu.clone())?)?;
        let img = self.antipode(&cand)?;
        let target = alg.e(i)?;
        let key = Mono {
            word: Word::letter(i),
            k: RootVec::zero(n),
        };
        let c = img
            .get(&key)
            .filter(|_| img.len() == 1)
            .ok_or_else(|| Error::Consistency(format!("S is not invertible on E{}", i + 1)))?;
        let inv = c.inv()?;
        let sol = cand.scale(&inv);
        if self.antipode(&sol)? != target {
            return Err(Error::Consistency(format!(
                "S^-1(E{}) fails to invert S",
                i + 1
            )));
        }
        Ok(sol)
    }

    pub fn algebra(&self) -> &Arc<BorelAlgebra> {
        &self.alg
    }

    fn delta_word(&self, w: &Word) -> Result<Tensor2> {
        if let Some(t) = self
            .delta_words
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .get(w)
        {
            return Ok(t.clone());
        }
        let alg = &self.alg;
        let datum = alg.datum();
        let n = alg.rank();
        let len = w.len();
        let letters: Vec<usize> = w.letters().collect();
        let mut out = Tensor2::zero();
        // R = positions sent to the right factor
        for mask in 0u64..(1u64 << len) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut kl = RootVec::zero(n);
            let mut e = 0i64;
            for t in 0..len {
                if mask >> t & 1 == 1 {
                    right.push(letters[t] as u8);
                    kl = &kl + &RootVec::simple(n, letters[t]);
                    for s in t + 1..len {
                        if mask >> s & 1 == 0 {
                            e += datum.form_simple(letters[t], letters[s]);
                        }
                    }
                } else {
                    left.push(letters[t] as u8);
                }
            }
            let l = alg.word_k(&Word(left), &kl)?;
            let r = alg.word_k(&Word(right), &RootVec::zero(n))?;
            let c = RatFunc::q_pow(e);
            for (a, ca) in &l {
                for (b, cb) in &r {
                    out.add_term((a.clone(), b.clone()), &(ca * cb) * &c);
                }
            }
        }
        self.delta_words
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .insert(w.clone(), out.clone());
        Ok(out)
    }

    fn delta_mono(&self, m: &Mono) -> Result<Tensor2> {
        let dw = self.delta_word(&m.word)?;
        Ok(dw
            .iter()
            .map(|((a, b), c)| {
                (
                    (
                        Mono {
                            word: a.word.clone(),
                            k: &a.k + &m.k,
                        },
                        Mono {
                            word: b.word.clone(),
                            k: &b.k + &m.k,
                        },
                    ),
                    c.clone(),
                )
            })
            .collect())
    }

    pub fn delta(&self, x: &ReducedElement) -> Result<Tensor2> {
        x.map_linear(|m| self.delta_mono(m))
    }

    pub fn counit(&self, x: &ReducedElement) -> RatFunc {
        let mut out = RatFunc::zero();
        for (m, c) in x {
            if m.word.is_empty() {
                out = &out + c;
            }
        }
        out
    }

    fn mono_elem(m: &Mono) -> ReducedElement {
        LinComb::single(m.clone(), RatFunc::one())
    }

    fn anti_apply(&self, m: &Mono, gens: &[ReducedElement]) -> Result<ReducedElement> {
        let alg = &self.alg;
        // image of E_w K_l is image(K_l) image(E_wn) ... image(E_w1)
        let mut acc = alg.k(m.k.scale(-1))?;
        for i in m.word.letters().collect::<Vec<_>>().into_iter().rev() {
            acc = alg.mul(&acc, &gens[i])?;
        }
        Ok(acc)
    }

    pub fn antipode(&self, x: &ReducedElement) -> Result<ReducedElement> {
        x.map_linear(|m| self.anti_apply(m, &self.s_gen))
    }

    pub fn antipode_inv(&self, x: &ReducedElement) -> Result<ReducedElement> {
        x.map_linear(|m| self.anti_apply(m, &self.s_inv_gen))
    }

    pub fn tensor_mul(&self, a: &Tensor2, b: &Tensor2) -> Result<Tensor2> {
        let alg = &self.alg;
        let mut out = Tensor2::zero();
        for ((a1, a2), ca) in a {
            for ((b1, b2), cb) in b {
                let l = alg.mul_mono(a1, b1)?;
                let r = alg.mul_mono(a2, b2)?;
                let c = ca * cb;
                for (x, cx) in &l {
                    for (y, cy) in &r {
                        out.add_term((x.clone(), y.clone()), &(&c * cx) * cy);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(Delta (x) id) Delta`, checked against `(id (x) Delta) Delta`.
    pub fn delta2(&self, x: &ReducedElement) -> Result<Tensor3> {
        let (l, r) = self.both_bracketings(x)?;
        if l != r {
            return Err(Error::Consistency(
                "the two iterated coproducts differ".into(),
            ));
        }
        Ok(l)
    }

    fn both_bracketings(&self, x: &ReducedElement) -> Result<(Tensor3, Tensor3)> {
        let d = self.delta(x)?;
        let mut left = Tensor3::zero();
        let mut right = Tensor3::zero();
        for ((a, b), c) in &d {
            for ((a1, a2), c1) in &self.delta_mono(a)? {
                left.add_term((a1.clone(), a2.clone(), b.clone()), c * c1);
            }
            for ((b1, b2), c2) in &self.delta_mono(b)? {
                right.add_term((a.clone(), b1.clone(), b2.clone()), c * c2);
            }
        }
        Ok((left, right))
    }

    /// Checks the five Hopf laws on `E^k K_lambda` for all PBW exponents of
    /// height at most `max_height` and all `lambda` in `[-radius, radius]^n`.
    pub fn axiom_check(&self, max_height: i64, radius: i64) -> Result<HopfReport> {
        let alg = &self.alg;
        let n = alg.rank();
        let lambdas = crate::algebra::smash::cube(n, radius);
        let ks = alg.frame().pbw_up_to_height(max_height);
        let mut items = Vec::new();
        for k in &ks {
            for l in &lambdas {
                items.push((k.clone(), l.clone()));
            }
        }
        let results = par::try_map(&items, |(k, l)| {
            let x = alg.pbw_monomial(k, l)?;
            self.laws_on(&x).map(|r| (k.clone(), l.clone(), r))
        })?;
        let mut report = HopfReport::new();
        for (k, l, r) in results {
            report.elements += 1;
            for (law, ok) in LAWS.iter().zip(r) {
                let entry = report
                    .laws
                    .iter_mut()
                    .find(|e| e.law == *law)
                    .expect("law listed");
                entry.checked += 1;
                if !ok && entry.counterexample.is_none() {
                    entry.counterexample = Some(
                        crate::algebra::PbwKey {
                            k: k.clone(),
                            lambda: l.clone(),
                        }
                        .to_string(),
                    );
                }
                if !ok {
                    entry.failed += 1;
                }
            }
        }
        Ok(report)
    }

    /// Which of the five laws hold on `x`, in the order of [`LAWS`].
    pub fn laws_on(&self, x: &ReducedElement) -> Result<[bool; 5]> {
        let alg = &self.alg;
        let d = self.delta(x)?;
        let (l, r) = self.both_bracketings(x)?;
        let mut eps_id = LinComb::zero();
        let mut id_eps = LinComb::zero();
        let mut s_id = LinComb::zero();
        let mut id_s = LinComb::zero();
        for ((a, b), c) in &d {
            let ea = self.counit(&Self::mono_elem(a));
            let eb = self.counit(&Self::mono_elem(b));
            eps_id.add_scaled(&Self::mono_elem(b), &(c * &ea));
            id_eps.add_scaled(&Self::mono_elem(a), &(c * &eb));
            let sa = self.antipode(&Self::mono_elem(a))?;
            s_id.add_scaled(&alg.mul(&sa, &Self::mono_elem(b))?, c);
            let sb = self.antipode(&Self::mono_elem(b))?;
            id_s.add_scaled(&alg.mul(&Self::mono_elem(a), &sb)?, c);
        }
        let unit = alg.scalar(self.counit(x));
        Ok([
            l == r,
            eps_id == *x,
            id_eps == *x,
            s_id == unit,
            id_s == unit,
        ])
    }

    /// Checks `Delta((U^+)_eta) in sum_mu (U^+)_{eta-mu} K_mu (x) (U^+)_mu` on
    /// every basis word of height at most `max_height`.
    pub fn graded_containment(&self, max_height: i64) -> Result<bool> {
        let alg = &self.alg;
        for h in 0..=max_height {
            for eta in degrees_of_height(alg.rank(), h) {
                for w in alg.graded_basis(&eta)?.basis_words() {
                    let d = self.delta_word(w)?;
                    for (a, b) in d.keys() {
                        let mu = b.degree();
                        let ok = b.k.is_zero() && a.k == mu && &a.degree() + &mu == eta;
                        if !ok {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

pub const LAWS: [&str; 5] = [
    "coassociativity",
    "left counit",
    "right counit",
    "left antipode",
    "right antipode",
];

#[derive(Clone, Debug, Serialize)]
pub struct LawResult {
    pub law: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfReport {
    pub elements: usize,
    pub laws: Vec<LawResult>,
}

impl HopfReport {
    fn new() -> Self {
        HopfReport {
            elements: 0,
            laws: LAWS
                .iter()
                .map(|&law| LawResult {
                    law,
                    checked: 0,
                    failed: 0,
                    counterexample: None,
                })
                .collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.failed == 0)
    }
}

/// Height `h(E^k K_lambda) = sum_j k_j ht(beta_j)` of a monomial.
pub fn height(m: &Mono) -> i64 {
    m.height()
}
