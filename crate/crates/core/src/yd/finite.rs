//! The finite quotient `u>=0 = U>=0 / (K_i^d - 1, E_i^d)` at a primitive
//! `r`-th root of unity, with basis `E^k K^lambda`, `k_s < d`, `lambda mod d`.
//!
//! Structure constants come from the generic algebra: a product, coproduct or
//! antipode is computed over Q(q), written in the PBW basis, evaluated at
//! `q = zeta_r`, and terms with an exponent `k_s >= d` are dropped.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::algebra::{BorelAlgebra, Mono, ReducedElement};
use crate::cartan::RootVec;
use crate::hopf::{Hopf, LAWS};
use crate::linalg;
use crate::lincomb::LinComb;
use crate::rmatrix::QuotientSpec;
use crate::scalars::{CycloField, Cyclotomic};
use crate::{Error, Result};

/// Basis element `E^k K^lambda` of the quotient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct FKey {
    pub k: Vec<u32>,
    pub lambda: Vec<u32>,
}

impl FKey {
    pub fn is_group_like(&self) -> bool {
        self.k.iter().all(|&x| x == 0)
    }

    pub fn group_like(num_roots: usize, lambda: Vec<u32>) -> Self {
        FKey {
            k: vec![0; num_roots],
            lambda,
        }
    }
}

pub type FElem = LinComb<FKey, Cyclotomic>;
pub type FTensor2 = LinComb<(FKey, FKey), Cyclotomic>;
pub type FTensor3 = LinComb<(FKey, FKey, FKey), Cyclotomic>;

/// Largest dimension for which the basis is enumerated.
pub const BASIS_LIMIT: u64 = 1 << 16;
/// Largest `dim(u)^2` for dense solves in `u (x) u`.
pub const TENSOR_SOLVE_LIMIT: usize = 1 << 12;

#[derive(Default)]
struct Caches {
    mono: HashMap<Mono, FElem>,
    mul: HashMap<(Vec<u32>, Vec<u32>), FElem>,
    delta: HashMap<Vec<u32>, FTensor2>,
    delta2: HashMap<FKey, FTensor3>,
    s: HashMap<FKey, FElem>,
    s_inv: HashMap<FKey, FElem>,
}

pub struct FiniteHopf {
    spec: QuotientSpec,
    hopf: Hopf,
    field: Arc<CycloField>,
    basis: OnceLock<Vec<FKey>>,
    caches: Mutex<Caches>,
}

impl fmt::Debug for FiniteHopf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteHopf({})", self.spec)
    }
}

impl FiniteHopf {
    /// Builds the quotient; for rank one the whole structure is computed and
    /// the Hopf axioms are checked on every basis element.
    pub fn new(spec: &QuotientSpec) -> Result<Self> {
        spec.check_valid()?;
        let alg = BorelAlgebra::of_type(&spec.datum.name())?;
        let h = FiniteHopf {
            spec: spec.clone(),
            hopf: Hopf::new(alg)?,
            field: spec.field(),
            basis: OnceLock::new(),
            caches: Mutex::new(Caches::default()),
        };
        if spec.datum.rank() == 1 {
            let rep = h.axiom_check(None)?;
            if !rep.passed() {
                return Err(Error::Consistency(format!(
                    "{spec}: Hopf axioms fail: {rep:?}"
                )));
            }
        }
        Ok(h)
    }

    pub fn of_type(name: &str, r: u32) -> Result<Self> {
        let datum = crate::cartan::CartanDatum::parse(name)?;
        Self::new(&QuotientSpec::new(&datum, r)?)
    }

    pub fn spec(&self) -> &QuotientSpec {
        &self.spec
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn algebra(&self) -> &Arc<BorelAlgebra> {
        self.hopf.algebra()
    }

    pub fn rank(&self) -> usize {
        self.spec.datum.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.algebra().frame().num_roots()
    }

    pub fn d(&self) -> u32 {
        self.spec.d
    }

    /// `d^{N + n}`.
    pub fn dim(&self) -> u64 {
        (self.d() as u64).pow((self.num_roots() + self.rank()) as u32)
    }

    pub fn zeta_pow(&self, e: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(&self.field, e)
    }

    /// All basis keys: exponents `k` lexicographically, then `lambda`.
    pub fn basis(&self) -> &[FKey] {
        self.basis.get_or_init(|| {
            if self.dim() > BASIS_LIMIT {
                return Vec::new();
            }
            let d = self.d();
            let ks = tuples(self.num_roots(), d);
            let ls = tuples(self.rank(), d);
            let mut out = Vec::with_capacity(ks.len() * ls.len());
            for k in &ks {
                for l in &ls {
                    out.push(FKey {
                        k: k.clone(),
                        lambda: l.clone(),
                    });
                }
            }
            out
        })
    }

    /// The enumerated basis, or a resource error when it is too large.
    pub fn basis_checked(&self) -> Result<&[FKey]> {
        if self.dim() > BASIS_LIMIT {
            return Err(Error::Resource(format!(
                "{}: dimension {} exceeds the enumeration limit {BASIS_LIMIT}",
                self.spec,
                self.dim()
            )));
        }
        Ok(self.basis())
    }

    pub fn index_of(&self, key: &FKey) -> usize {
        let d = self.d() as usize;
        key.k
            .iter()
            .chain(&key.lambda)
            .fold(0usize, |acc, &x| acc * d + x as usize)
    }

    /// `h(E^k K^lambda) = sum_s k_s ht(beta_s)`.
    pub fn height(&self, key: &FKey) -> i64 {
        let frame = self.algebra().frame();
        key.k
            .iter()
            .zip(&frame.betas)
            .map(|(&m, b)| m as i64 * b.height())
            .sum()
    }

    pub fn degree(&self, key: &FKey) -> RootVec {
        self.algebra().frame().degree_of(&key.k)
    }

    pub fn render_key(&self, key: &FKey) -> String {
        let frame = self.algebra().frame();
        let n = self.rank();
        let mut parts = Vec::new();
        for (s, &m) in key.k.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let b = &frame.betas[s];
            let name = match (0..n).find(|&t| *b == RootVec::simple(n, t)) {
                Some(t) => format!("E{}", t + 1),
                None => format!("Eb{}", s + 1),
            };
            parts.push(if m == 1 { name } else { format!("{name}^{m}") });
        }
        let lam = RootVec(key.lambda.iter().map(|&x| x as i64).collect());
        parts.extend(crate::algebra::render_k(&lam));
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn render(&self, x: &FElem) -> String {
        crate::lincomb::fmt_sum(x.iter().map(|(k, c)| (c, self.render_key(k))))
    }

    pub fn render2(&self, x: &FTensor2) -> String {
        crate::lincomb::fmt_sum(x.iter().map(|((a, b), c)| {
            (
                c,
                format!("{} (x) {}", self.render_key(a), self.render_key(b)),
            )
        }))
    }

    fn wrap(&self, lambda: &[i64]) -> Vec<u32> {
        lambda
            .iter()
            .map(|&x| x.rem_euclid(self.d() as i64) as u32)
            .collect()
    }

    fn rep(&self, key: &FKey) -> RootVec {
        RootVec(key.lambda.iter().map(|&x| x as i64).collect())
    }

    pub fn one(&self) -> FElem {
        self.basis_elem(&FKey::group_like(self.num_roots(), vec![0; self.rank()]))
    }

    pub fn basis_elem(&self, key: &FKey) -> FElem {
        LinComb::single(key.clone(), Cyclotomic::one(&self.field))
    }

    pub fn e(&self, i: usize) -> Result<FElem> {
        self.spec.datum.check_index(i)?;
        let s = self.algebra().frame().simple_position(i).ok_or_else(|| {
            Error::Consistency(format!("no simple root alpha_{} in the frame", i + 1))
        })?;
        let mut k = vec![0; self.num_roots()];
        k[s] = 1;
        Ok(self.basis_elem(&FKey {
            k,
            lambda: vec![0; self.rank()],
        }))
    }

    /// `K_i`.
    pub fn k_gen(&self, i: usize) -> Result<FElem> {
        self.spec.datum.check_index(i)?;
        let mut l = vec![0; self.rank()];
        l[i] = 1 % self.d();
        Ok(self.basis_elem(&FKey::group_like(self.num_roots(), l)))
    }

    pub fn k(&self, lambda: &[i64]) -> FElem {
        self.basis_elem(&FKey::group_like(self.num_roots(), self.wrap(lambda)))
    }

    /// The image of a generic element.
    pub fn from_generic(&self, x: &ReducedElement) -> Result<FElem> {
        self.convert_generic(x)
    }

    fn from_generic_mono(&self, m: &Mono) -> Result<FElem> {
        if let Some(v) = self
            .caches
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .mono
            .get(m)
        {
            return Ok(v.clone());
        }
        let alg = self.algebra();
        let single: ReducedElement = LinComb::single(m.clone(), crate::scalars::RatFunc::one());
        let pbw = alg.to_pbw(&single)?;
        let d = self.d();
        let mut out = FElem::zero();
        for (key, c) in &pbw {
            if key.k.iter().any(|&x| x >= d) {
                continue;
            }
            let v = Cyclotomic::eval_ratfunc(&self.field, c)?;
            out.add_term(
                FKey {
                    k: key.k.clone(),
                    lambda: self.wrap(&key.lambda.0),
                },
                v,
            );
        }
        self.caches
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .mono
            .insert(m.clone(), out.clone());
        Ok(out)
    }

    fn convert_generic(&self, x: &ReducedElement) -> Result<FElem> {
        let mut out = FElem::zero();
        for (m, c) in x {
            let v = Cyclotomic::eval_ratfunc(&self.field, c)?;
            out.add_scaled(&self.from_generic_mono(m)?, &v);
        }
        Ok(out)
    }

    fn generic_basis(&self, key: &FKey) -> Result<ReducedElement> {
        self.algebra().pbw_monomial(&key.k, &self.rep(key))
    }

    /// `E^k E^m` in the quotient.
    fn mul_e(&self, k: &[u32], m: &[u32]) -> Result<FElem> {
        let ck = (k.to_vec(), m.to_vec());
        if let Some(v) = self
            .caches
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .mul
            .get(&ck)
        {
            return Ok(v.clone());
        }
        let alg = self.algebra();
        let zero = RootVec::zero(self.rank());
        let p = alg.mul(&alg.pbw_monomial(k, &zero)?, &alg.pbw_monomial(m, &zero)?)?;
        let out = self.convert_generic(&p)?;
        self.caches
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .mul
            .insert(ck, out.clone());
        Ok(out)
    }

    /// `K^nu x`, moving `K^nu` to the right of the E-part.
    pub fn left_k(&self, nu: &[i64], x: &FElem) -> FElem {
        let datum = &self.spec.datum;
        let mut out = FElem::zero();
        for (key, c) in x {
            let e = datum.form(&RootVec(nu.to_vec()), &self.degree(key));
            let lam: Vec<i64> = key
                .lambda
                .iter()
                .zip(nu)
                .map(|(&a, b)| a as i64 + b)
                .collect();
            out.add_term(
                FKey {
                    k: key.k.clone(),
                    lambda: self.wrap(&lam),
                },
                c.mul(&self.zeta_pow(e)),
            );
        }
        out
    }

    /// `x K^nu`.
    pub fn right_k(&self, x: &FElem, nu: &[i64]) -> FElem {
        let mut out = FElem::zero();
        for (key, c) in x {
            let lam: Vec<i64> = key
                .lambda
                .iter()
                .zip(nu)
                .map(|(&a, b)| a as i64 + b)
                .collect();
            out.add_term(
                FKey {
                    k: key.k.clone(),
                    lambda: self.wrap(&lam),
                },
                c.clone(),
            );
        }
        out
    }

    pub fn mul_basis(&self, a: &FKey, b: &FKey) -> Result<FElem> {
        let datum = &self.spec.datum;
        let e = datum.form(&self.rep(a), &self.degree(b));
        let ee = self.mul_e(&a.k, &b.k)?;
        let lam: Vec<i64> = a
            .lambda
            .iter()
            .zip(&b.lambda)
            .map(|(&x, &y)| x as i64 + y as i64)
            .collect();
        Ok(self.right_k(&ee, &lam).scale(&self.zeta_pow(e)))
    }

    pub fn mul(&self, x: &FElem, y: &FElem) -> Result<FElem> {
        let mut out = FElem::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_scaled(&self.mul_basis(a, b)?, &ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn counit(&self, x: &FElem) -> Cyclotomic {
        let mut out = Cyclotomic::zero(&self.field);
        for (k, c) in x {
            if k.is_group_like() {
                out = out.add(c);
            }
        }
        out
    }

    fn delta_e(&self, k: &[u32]) -> Result<FTensor2> {
        if let Some(v) = self
            .caches
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .delta
            .get(k)
        {
            return Ok(v.clone());
        }
        let alg = self.algebra();
        let x = alg.pbw_monomial(k, &RootVec::zero(self.rank()))?;
        let t = self.hopf.delta(&x)?;
        let mut out = FTensor2::zero();
        for ((a, b), c) in &t {
            let v = Cyclotomic::eval_ratfunc(&self.field, c)?;
            if v.is_zero() {
                continue;
            }
            let fa = self.from_generic_mono(a)?;
            let fb = self.from_generic_mono(b)?;
            for (ka, xa) in &fa {
                for (kb, xb) in &fb {
                    out.add_term((ka.clone(), kb.clone()), v.mul(xa).mul(xb));
                }
            }
        }
        self.caches
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .delta
            .insert(k.to_vec(), out.clone());
        Ok(out)
    }

    pub fn delta_basis(&self, key: &FKey) -> Result<FTensor2> {
        let de = self.delta_e(&key.k)?;
        let lam: Vec<i64> = key.lambda.iter().map(|&x| x as i64).collect();
        let mut out = FTensor2::zero();
        for ((a, b), c) in &de {
            let ra = self.right_k(&self.basis_elem(a), &lam);
            let rb = self.right_k(&self.basis_elem(b), &lam);
            for (ka, _) in &ra {
                for (kb, _) in &rb {
                    out.add_term((ka.clone(), kb.clone()), c.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn delta(&self, x: &FElem) -> Result<FTensor2> {
        x.map_linear(|k| self.delta_basis(k))
    }

    pub fn delta2_basis(&self, key: &FKey) -> Result<FTensor3> {
        if let Some(v) = self
            .caches
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .delta2
            .get(key)
        {
            return Ok(v.clone());
        }
        let d = self.delta_basis(key)?;
        let mut left = FTensor3::zero();
        let mut right = FTensor3::zero();
        for ((a, b), c) in &d {
            for ((a1, a2), c1) in &self.delta_basis(a)? {
                left.add_term((a1.clone(), a2.clone(), b.clone()), c.mul(c1));
            }
            for ((b1, b2), c2) in &self.delta_basis(b)? {
                right.add_term((a.clone(), b1.clone(), b2.clone()), c.mul(c2));
            }
        }
        if left != right {
            return Err(Error::Consistency(format!(
                "{}: coproduct is not coassociative on {}",
                self.spec,
                self.render_key(key)
            )));
        }
        self.caches
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .delta2
            .insert(key.clone(), left.clone());
        Ok(left)
    }

    pub fn delta2(&self, x: &FElem) -> Result<FTensor3> {
        x.map_linear(|k| self.delta2_basis(k))
    }

    fn antipode_basis_with(&self, key: &FKey, inverse: bool) -> Result<FElem> {
        {
            let c = self.caches.lock().unwrap_or_else(|e| e.into_inner());
            let map = if inverse { &c.s_inv } else { &c.s };
            if let Some(v) = map.get(key) {
                return Ok(v.clone());
            }
        }
        let x = self.generic_basis(key)?;
        let y = if inverse {
            self.hopf.antipode_inv(&x)?
        } else {
            self.hopf.antipode(&x)?
        };
        let out = self.convert_generic(&y)?;
        let mut c = self.caches.lock().unwrap_or_else(|e| e.into_inner());
        let map = if inverse { &mut c.s_inv } else { &mut c.s };
        map.insert(key.clone(), out.clone());
        Ok(out)
    }

    pub fn antipode(&self, x: &FElem) -> Result<FElem> {
        x.map_linear(|k| self.antipode_basis_with(k, false))
    }

    pub fn antipode_inv(&self, x: &FElem) -> Result<FElem> {
        x.map_linear(|k| self.antipode_basis_with(k, true))
    }

    pub fn tensor_one(&self) -> FTensor2 {
        let one = FKey::group_like(self.num_roots(), vec![0; self.rank()]);
        LinComb::single((one.clone(), one), Cyclotomic::one(&self.field))
    }

    pub fn tensor_mul(&self, a: &FTensor2, b: &FTensor2) -> Result<FTensor2> {
        let mut out = FTensor2::zero();
        for ((a1, a2), ca) in a {
            for ((b1, b2), cb) in b {
                let l = self.mul_basis(a1, b1)?;
                let r = self.mul_basis(a2, b2)?;
                let c = ca.mul(cb);
                for (x, cx) in &l {
                    for (y, cy) in &r {
                        out.add_term((x.clone(), y.clone()), c.mul(cx).mul(cy));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Two-sided inverse of `t` in `u (x) u`, if it exists.
    pub fn tensor_inverse(&self, t: &FTensor2) -> Result<Option<FTensor2>> {
        let basis = self.basis_checked()?.to_vec();
        let m = basis.len();
        let size = m * m;
        if size > TENSOR_SOLVE_LIMIT {
            return Err(Error::Resource(format!(
                "u (x) u has dimension {size}, above the dense limit {TENSOR_SOLVE_LIMIT}"
            )));
        }
        let idx = |a: &FKey, b: &FKey| self.index_of(a) * m + self.index_of(b);
        let mut mat = vec![vec![Cyclotomic::zero(&self.field); size]; size];
        for a in &basis {
            for b in &basis {
                let col = idx(a, b);
                let unit = LinComb::single((a.clone(), b.clone()), Cyclotomic::one(&self.field));
                for ((x, y), c) in &self.tensor_mul(t, &unit)? {
                    mat[idx(x, y)][col] = c.clone();
                }
            }
        }
        let one = self.tensor_one();
        let mut rhs = vec![Cyclotomic::zero(&self.field); size];
        for ((x, y), c) in &one {
            rhs[idx(x, y)] = c.clone();
        }
        let Some(sol) = linalg::solve(&mat, &rhs, &self.field) else {
            return Ok(None);
        };
        let mut inv = FTensor2::zero();
        for a in &basis {
            for b in &basis {
                inv.add_term((a.clone(), b.clone()), sol[idx(a, b)].clone());
            }
        }
        // a right inverse in a finite-dimensional algebra is two-sided; check anyway
        if self.tensor_mul(&inv, t)? != one {
            return Ok(None);
        }
        Ok(Some(inv))
    }

    /// Group-likes `K^lambda`, each checked to satisfy `Delta g = g (x) g`
    /// and `epsilon(g) = 1`.
    pub fn group_likes(&self) -> Result<Vec<FKey>> {
        let mut out = Vec::new();
        for l in tuples(self.rank(), self.d()) {
            let key = FKey::group_like(self.num_roots(), l);
            let g = self.basis_elem(&key);
            let dg = self.delta(&g)?;
            let expected =
                LinComb::single((key.clone(), key.clone()), Cyclotomic::one(&self.field));
            if dg != expected || !self.counit(&g).is_one() {
                return Err(Error::Consistency(format!(
                    "{} is not group-like",
                    self.render_key(&key)
                )));
            }
            out.push(key);
        }
        Ok(out)
    }

    /// Hopf laws on every basis element (of height at most `max_height` if
    /// given), plus `S S^{-1} = S^{-1} S = id`.
    pub fn axiom_check(&self, max_height: Option<i64>) -> Result<FiniteAxiomReport> {
        let basis = self.basis_checked()?.to_vec();
        let mut report = FiniteAxiomReport {
            elements: 0,
            failures: Vec::new(),
        };
        let one = self.one();
        for key in &basis {
            if max_height.is_some_and(|h| self.height(key) > h) {
                continue;
            }
            report.elements += 1;
            let x = self.basis_elem(key);
            let d = self.delta(&x)?;
            let mut eps_id = FElem::zero();
            let mut id_eps = FElem::zero();
            let mut s_id = FElem::zero();
            let mut id_s = FElem::zero();
            for ((a, b), c) in &d {
                let ea = self.counit(&self.basis_elem(a));
                let eb = self.counit(&self.basis_elem(b));
                eps_id.add_scaled(&self.basis_elem(b), &c.mul(&ea));
                id_eps.add_scaled(&self.basis_elem(a), &c.mul(&eb));
                let sa = self.antipode(&self.basis_elem(a))?;
                s_id.add_scaled(&self.mul(&sa, &self.basis_elem(b))?, c);
                let sb = self.antipode(&self.basis_elem(b))?;
                id_s.add_scaled(&self.mul(&self.basis_elem(a), &sb)?, c);
            }
            let unit = one.scale(&self.counit(&x));
            let coassoc = self.delta2_basis(key).is_ok();
            let inv_ok = self.antipode(&self.antipode_inv(&x)?)? == x
                && self.antipode_inv(&self.antipode(&x)?)? == x;
            let laws = [
                coassoc,
                eps_id == x,
                id_eps == x,
                s_id == unit,
                id_s == unit,
            ];
            for (law, ok) in LAWS.iter().zip(laws) {
                if !ok {
                    report
                        .failures
                        .push(format!("{law} on {}", self.render_key(key)));
                }
            }
            if !inv_ok {
                report
                    .failures
                    .push(format!("inverse antipode on {}", self.render_key(key)));
            }
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FiniteAxiomReport {
    pub elements: usize,
    pub failures: Vec<String>,
}

impl FiniteAxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All vectors in `{0..d-1}^n`, lexicographic.
pub fn tuples(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..d).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_dimension_and_relations() {
        let h = FiniteHopf::of_type("A1", 4).unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.basis().len(), 4);
        let e = h.e(0).unwrap();
        let k = h.k_gen(0).unwrap();
        assert!(h.mul(&e, &e).unwrap().is_zero());
        assert_eq!(h.mul(&k, &k).unwrap(), h.one());
        // K E = q^2 E K = -E K
        let ke = h.mul(&k, &e).unwrap();
        let ek = h.mul(&e, &k).unwrap();
        assert_eq!(ke, ek.neg());
        assert_eq!(h.group_likes().unwrap().len(), 2);
    }

    #[test]
    fn dimensions() {
        assert_eq!(FiniteHopf::of_type("A1", 5).unwrap().dim(), 25);
        assert_eq!(FiniteHopf::of_type("A2", 5).unwrap().dim(), 3125);
        assert!(matches!(
            FiniteHopf::of_type("G2", 6),
            Err(Error::NotHopf { d: 3, d0: 3 })
        ));
    }

    #[test]
    fn r5_axioms_and_antipode() {
        let h = FiniteHopf::of_type("A1", 5).unwrap();
        assert!(h.axiom_check(None).unwrap().passed());
        let e = h.e(0).unwrap();
        // S^{-1}(E) = -E K^{-1}
        let expected = h.right_k(&e, &[-1]).neg();
        assert_eq!(h.antipode_inv(&e).unwrap(), expected);
        assert_eq!(h.group_likes().unwrap().len(), 5);
    }

    #[test]
    fn tensor_inverse_of_unipotent() {
        let h = FiniteHopf::of_type("A1", 4).unwrap();
        let one = h.one();
        let e = h.e(0).unwrap();
        let mut t = FTensor2::zero();
        for (a, c) in &one.add(&e) {
            t.add_term((a.clone(), one.keys().next().unwrap().clone()), c.clone());
        }
        let inv = h.tensor_inverse(&t).unwrap().unwrap();
        assert_eq!(h.tensor_mul(&t, &inv).unwrap(), h.tensor_one());
        let p = crate::rmatrix::project_degree_zero(&t);
        assert_eq!(p, h.tensor_one());
    }
}
