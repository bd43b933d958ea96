//! Yetter-Drinfel'd modules over the finite quotient from the beta-twisted
//! adjoint action `h ._beta a = beta(h_(2)) h_(3) a S^{-1}(h_(1))` and the
//! comodule structure given by the coproduct.

mod finite;

use std::collections::BTreeSet;

use serde::Serialize;

pub use finite::{
    tuples, FElem, FKey, FTensor2, FTensor3, FiniteAxiomReport, FiniteHopf, BASIS_LIMIT,
};

use crate::linalg::Echelon;
use crate::scalars::Cyclotomic;
use crate::{par, Error, Result};

/// Algebra character `beta` with `beta(K_i) = zeta_d^{exps[i]}` and
/// `beta(E_i) = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct BetaChar {
    pub exps: Vec<u32>,
}

impl BetaChar {
    pub fn all(h: &FiniteHopf) -> Vec<BetaChar> {
        tuples(h.rank(), h.d())
            .into_iter()
            .map(|exps| BetaChar { exps })
            .collect()
    }

    /// `beta(K_i)`.
    pub fn value(&self, h: &FiniteHopf, i: usize) -> Cyclotomic {
        let step = (h.spec().r / h.d()) as i64;
        h.zeta_pow(step * self.exps[i] as i64)
    }

    pub fn eval_key(&self, h: &FiniteHopf, key: &FKey) -> Cyclotomic {
        if !key.is_group_like() {
            return Cyclotomic::zero(h.field());
        }
        let step = (h.spec().r / h.d()) as i64;
        let e: i64 = key
            .lambda
            .iter()
            .zip(&self.exps)
            .map(|(&l, &b)| l as i64 * b as i64)
            .sum();
        h.zeta_pow(step * e)
    }
}

/// Which antipode the action uses; `Antipode` is the deliberate fault.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ActionMode {
    InverseAntipode,
    Antipode,
}

impl FiniteHopf {
    fn twist(&self, x: &FElem, mode: ActionMode) -> Result<FElem> {
        match mode {
            ActionMode::InverseAntipode => self.antipode_inv(x),
            ActionMode::Antipode => self.antipode(x),
        }
    }

    /// `h ._beta a` for a basis element `h`.
    pub fn beta_action_basis(
        &self,
        beta: &BetaChar,
        h: &FKey,
        a: &FElem,
        mode: ActionMode,
    ) -> Result<FElem> {
        let d2 = self.delta2_basis(h)?;
        let mut out = FElem::zero();
        for ((h1, h2, h3), c) in &d2 {
            let b = beta.eval_key(self, h2);
            if b.is_zero() {
                continue;
            }
            let s1 = self.twist(&self.basis_elem(h1), mode)?;
            let t = self.mul(&self.mul(&self.basis_elem(h3), a)?, &s1)?;
            out.add_scaled(&t, &c.mul(&b));
        }
        Ok(out)
    }

    pub fn beta_action(
        &self,
        beta: &BetaChar,
        h: &FElem,
        a: &FElem,
        mode: ActionMode,
    ) -> Result<FElem> {
        let mut out = FElem::zero();
        for (k, c) in h {
            out.add_scaled(&self.beta_action_basis(beta, k, a, mode)?, c);
        }
        Ok(out)
    }

    fn coords(&self, x: &FElem) -> Vec<Cyclotomic> {
        let mut v = vec![Cyclotomic::zero(self.field()); self.basis().len()];
        for (k, c) in x {
            v[self.index_of(k)] = c.clone();
        }
        v
    }

    /// Generators `E_i, K_i` as elements.
    pub fn generators(&self) -> Result<Vec<(String, FElem)>> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            out.push((format!("E{}", i + 1), self.e(i)?));
            out.push((format!("K{}", i + 1), self.k_gen(i)?));
        }
        Ok(out)
    }

    /// Left factors of `Delta(x)`, one per right basis key: the span of these
    /// is the subcomodule generated by `x`.
    fn coaction_components(&self, x: &FElem) -> Result<Vec<FElem>> {
        let d = self.delta(x)?;
        let mut by_right: std::collections::BTreeMap<FKey, FElem> = Default::default();
        for ((a, b), c) in &d {
            by_right
                .entry(b.clone())
                .or_default()
                .add_term(a.clone(), c.clone());
        }
        Ok(by_right.into_values().collect())
    }

    /// Builds `H_{beta,g} = H ._beta g`.
    pub fn build_h_beta_g(&self, beta: &BetaChar, g: &FKey, mode: ActionMode) -> Result<YdModule> {
        self.basis_checked()?;
        if !g.is_group_like() {
            return Err(Error::Domain(format!(
                "{} is not group-like",
                self.render_key(g)
            )));
        }
        let gens = self.generators()?;
        let mut ech = Echelon::new(self.basis().len());
        let mut carrier = Vec::new();
        let mut queue = vec![self.basis_elem(g)];
        while let Some(v) = queue.pop() {
            if !ech.insert(&self.coords(&v)) {
                continue;
            }
            for (_, x) in &gens {
                let w = self.beta_action(beta, x, &v, mode)?;
                if !w.is_zero() {
                    queue.push(w);
                }
            }
            carrier.push(v);
        }
        let closed_under_coaction = carrier.iter().try_fold(true, |ok, v| {
            Ok::<_, Error>(
                ok && self
                    .coaction_components(v)?
                    .iter()
                    .all(|c| ech.contains(&self.coords(c))),
            )
        })?;
        Ok(YdModule {
            beta: beta.clone(),
            g: g.clone(),
            mode,
            carrier,
            echelon: ech,
            closed_under_coaction,
        })
    }

    /// Test elements `h` for the compatibility checks: the generators and all
    /// basis elements of height at most `max_height`.
    pub fn test_elements(&self, max_height: i64) -> Result<Vec<(String, FElem)>> {
        let mut out = self.generators()?;
        for key in self.basis_checked()? {
            if self.height(key) <= max_height {
                out.push((self.render_key(key), self.basis_elem(key)));
            }
        }
        Ok(out)
    }
}

/// The cyclic module `H ._beta g` as a subspace of `H`.
#[derive(Clone, Debug)]
pub struct YdModule {
    pub beta: BetaChar,
    pub g: FKey,
    pub mode: ActionMode,
    /// Spanning vectors found by the closure, independent.
    pub carrier: Vec<FElem>,
    echelon: Echelon<Cyclotomic>,
    pub closed_under_coaction: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct YdReport {
    pub dim: usize,
    pub closed_under_coaction: bool,
    pub coaction_rule_checked: usize,
    pub coaction_rule_failures: Vec<String>,
    pub crossed_rule_checked: usize,
    pub crossed_rule_failures: Vec<String>,
    pub associative: bool,
    pub unital: bool,
    pub coaction_counit: bool,
    pub weight_module: bool,
    pub cyclic_from_weight_vectors: bool,
}

impl YdReport {
    pub fn passed(&self) -> bool {
        self.closed_under_coaction
            && self.coaction_rule_failures.is_empty()
            && self.crossed_rule_failures.is_empty()
            && self.associative
            && self.unital
            && self.coaction_counit
            && self.weight_module
            && self.cyclic_from_weight_vectors
    }
}

/// Readout of `(beta, g)` from a module.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct PhiReadout {
    pub g: Option<Vec<u32>>,
    pub beta: Option<Vec<u32>>,
    /// Number of group-likes lying in the carrier.
    pub group_likes_found: usize,
    pub ambiguous: bool,
}

impl YdModule {
    pub fn dim(&self) -> usize {
        self.carrier.len()
    }

    pub fn contains(&self, h: &FiniteHopf, x: &FElem) -> bool {
        self.echelon.contains(&h.coords(x))
    }

    fn act(&self, h: &FiniteHopf, x: &FElem, a: &FElem) -> Result<FElem> {
        h.beta_action(&self.beta, x, a, self.mode)
    }

    /// Coaction of an acted-on element: `rho(h.m) = h_(2).m_(0) (x) h_(3) m_(1) S^{-1}(h_(1))`.
    fn coaction_rule(&self, h: &FiniteHopf, x: &FElem, m: &FElem) -> Result<bool> {
        let lhs = h.delta(&self.act(h, x, m)?)?;
        let d2 = h.delta2(x)?;
        let dm = h.delta(m)?;
        let mut rhs = FTensor2::zero();
        for ((h1, h2, h3), c) in &d2 {
            let s1 = h.antipode_inv(&h.basis_elem(h1))?;
            for ((m0, m1), cm) in &dm {
                let left = self.act(h, &h.basis_elem(h2), &h.basis_elem(m0))?;
                if left.is_zero() {
                    continue;
                }
                let right = h.mul(&h.mul(&h.basis_elem(h3), &h.basis_elem(m1))?, &s1)?;
                let coef = c.mul(cm);
                for (a, ca) in &left {
                    for (b, cb) in &right {
                        rhs.add_term((a.clone(), b.clone()), coef.mul(ca).mul(cb));
                    }
                }
            }
        }
        Ok(lhs == rhs)
    }

    /// Crossed-module identity: `h_(1).m_(0) (x) h_(2) m_(1) = (h_(2).m)_(0) (x) (h_(2).m)_(1) h_(1)`.
    fn crossed_rule(&self, h: &FiniteHopf, x: &FElem, m: &FElem) -> Result<bool> {
        let dh = h.delta(x)?;
        let dm = h.delta(m)?;
        let mut lhs = FTensor2::zero();
        let mut rhs = FTensor2::zero();
        for ((h1, h2), c) in &dh {
            for ((m0, m1), cm) in &dm {
                let left = self.act(h, &h.basis_elem(h1), &h.basis_elem(m0))?;
                if left.is_zero() {
                    continue;
                }
                let right = h.mul(&h.basis_elem(h2), &h.basis_elem(m1))?;
                let coef = c.mul(cm);
                for (a, ca) in &left {
                    for (b, cb) in &right {
                        lhs.add_term((a.clone(), b.clone()), coef.mul(ca).mul(cb));
                    }
                }
            }
            let y = self.act(h, &h.basis_elem(h2), m)?;
            for ((y0, y1), cy) in &h.delta(&y)? {
                let right = h.mul(&h.basis_elem(y1), &h.basis_elem(h1))?;
                let coef = c.mul(cy);
                for (b, cb) in &right {
                    rhs.add_term((y0.clone(), b.clone()), coef.mul(cb));
                }
            }
        }
        Ok(lhs == rhs)
    }

    /// Runs the compatibility checks with `h` over the generators and the
    /// basis elements of height at most `max_height`, `m` over the carrier.
    pub fn check(&self, h: &FiniteHopf, max_height: i64) -> Result<YdReport> {
        let tests = h.test_elements(max_height)?;
        let pairs: Vec<(usize, usize)> = (0..tests.len())
            .flat_map(|t| (0..self.carrier.len()).map(move |m| (t, m)))
            .collect();
        let results = par::try_map(&pairs, |&(t, m)| {
            let (_, x) = &tests[t];
            let v = &self.carrier[m];
            Ok((self.coaction_rule(h, x, v)?, self.crossed_rule(h, x, v)?))
        })?;
        let mut coaction_rule_failures = Vec::new();
        let mut crossed_rule_failures = Vec::new();
        for (&(t, m), (ok15, ok14)) in pairs.iter().zip(results) {
            let w = format!("h={}, m={}", tests[t].0, h.render(&self.carrier[m]));
            if !ok15 {
                coaction_rule_failures.push(w.clone());
            }
            if !ok14 {
                crossed_rule_failures.push(w);
            }
        }
        let gens = h.generators()?;
        let mut associative = true;
        let mut unital = true;
        let mut coaction_counit = true;
        for a in &self.carrier {
            unital &= self.act(h, &h.one(), a)? == *a;
            let mut back = FElem::zero();
            for ((x, y), c) in &h.delta(a)? {
                back.add_scaled(&h.basis_elem(x), &c.mul(&h.counit(&h.basis_elem(y))));
            }
            coaction_counit &= back == *a;
            for (_, x) in &gens {
                for (_, y) in &gens {
                    let lhs = self.act(h, &h.mul(x, y)?, a)?;
                    let rhs = self.act(h, x, &self.act(h, y, a)?)?;
                    associative &= lhs == rhs;
                }
            }
        }
        let components = self.weight_components(h);
        let weight_module = components.iter().all(|c| self.contains(h, c));
        let mut cyclic = true;
        for c in &components {
            cyclic &= self.closure_dim(h, c)? == self.dim();
        }
        Ok(YdReport {
            dim: self.dim(),
            closed_under_coaction: self.closed_under_coaction,
            coaction_rule_checked: pairs.len(),
            coaction_rule_failures,
            crossed_rule_checked: pairs.len(),
            crossed_rule_failures,
            associative,
            unital,
            coaction_counit,
            weight_module,
            cyclic_from_weight_vectors: cyclic,
        })
    }

    /// Components of the carrier vectors in each E-degree; these are
    /// eigenvectors of every `K_i ._beta -`.
    fn weight_components(&self, h: &FiniteHopf) -> Vec<FElem> {
        let mut out = Vec::new();
        for v in &self.carrier {
            let degs: BTreeSet<_> = v.keys().map(|k| h.degree(k)).collect();
            for d in degs {
                out.push(v.filter(|k| h.degree(k) == d));
            }
        }
        out
    }

    /// Dimension of the smallest subspace containing `v` and closed under the
    /// action and the coaction.
    fn closure_dim(&self, h: &FiniteHopf, v: &FElem) -> Result<usize> {
        let gens = h.generators()?;
        let mut ech = Echelon::new(h.basis().len());
        let mut queue = vec![v.clone()];
        while let Some(x) = queue.pop() {
            if !ech.insert(&h.coords(&x)) {
                continue;
            }
            for (_, g) in &gens {
                let y = self.act(h, g, &x)?;
                if !y.is_zero() {
                    queue.push(y);
                }
            }
            for c in h.coaction_components(&x)? {
                if !c.is_zero() {
                    queue.push(c);
                }
            }
        }
        Ok(ech.rank())
    }

    /// Reads off `g` as the group-like spanning a one-dimensional
    /// subcomodule of the carrier and `beta` from `K_i ._beta g = beta(K_i) g`.
    pub fn phi_invariants(&self, h: &FiniteHopf) -> Result<PhiReadout> {
        let found: Vec<FKey> = h
            .group_likes()?
            .into_iter()
            .filter(|g| self.contains(h, &h.basis_elem(g)))
            .collect();
        let mut out = PhiReadout {
            g: None,
            beta: None,
            group_likes_found: found.len(),
            ambiguous: found.len() > 1,
        };
        if found.len() != 1 {
            return Ok(out);
        }
        let g = &found[0];
        let ge = h.basis_elem(g);
        let step = (h.spec().r / h.d()) as i64;
        let mut exps = Vec::new();
        for i in 0..h.rank() {
            let y = self.act(h, &h.k_gen(i)?, &ge)?;
            let c =
                y.get(g).filter(|_| y.len() == 1).cloned().ok_or_else(|| {
                    Error::Consistency("K_i does not act on g by a scalar".into())
                })?;
            let e = (0..h.d()).find(|&e| h.zeta_pow(step * e as i64) == c);
            match e {
                Some(e) => exps.push(e),
                None => return Ok(out),
            }
        }
        out.g = Some(g.lambda.clone());
        out.beta = Some(exps);
        Ok(out)
    }
}

/// One row of a scan over all `(beta, g)`.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub beta: Vec<u32>,
    pub g: Vec<u32>,
    pub dim: usize,
    pub yd_ok: bool,
    pub invariants: PhiReadout,
    pub round_trip: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub case: String,
    pub rows: Vec<ScanRow>,
    pub all_yd_ok: bool,
    pub all_round_trip: bool,
    pub readouts_distinct: bool,
}

/// Builds and checks `H_{beta,g}` for every pair.
pub fn scan(h: &FiniteHopf, max_height: i64) -> Result<ScanReport> {
    let betas = BetaChar::all(h);
    let gs = h.group_likes()?;
    let pairs: Vec<(BetaChar, FKey)> = betas
        .iter()
        .flat_map(|b| gs.iter().map(move |g| (b.clone(), g.clone())))
        .collect();
    let rows = par::try_map(&pairs, |(b, g)| {
        let m = h.build_h_beta_g(b, g, ActionMode::InverseAntipode)?;
        let rep = m.check(h, max_height)?;
        let inv = m.phi_invariants(h)?;
        let round_trip = inv.g.as_ref() == Some(&g.lambda) && inv.beta.as_ref() == Some(&b.exps);
        Ok(ScanRow {
            beta: b.exps.clone(),
            g: g.lambda.clone(),
            dim: m.dim(),
            yd_ok: rep.passed(),
            invariants: inv,
            round_trip,
        })
    })?;
    let distinct: BTreeSet<_> = rows
        .iter()
        .map(|r| (&r.invariants.beta, &r.invariants.g))
        .collect();
    Ok(ScanReport {
        case: h.spec().to_string(),
        all_yd_ok: rows.iter().all(|r| r.yd_ok),
        all_round_trip: rows.iter().all(|r| r.round_trip),
        readouts_distinct: distinct.len() == rows.len(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sweedler() -> FiniteHopf {
        FiniteHopf::of_type("A1", 4).unwrap()
    }

    #[test]
    fn action_of_k_and_one() {
        let h = FiniteHopf::of_type("A1", 5).unwrap();
        let beta = BetaChar { exps: vec![2] };
        let a = h.mul(&h.e(0).unwrap(), &h.k(&[3])).unwrap();
        let k = h.k_gen(0).unwrap();
        // K ._beta a = beta(K) K a K^-1
        let expected = h
            .mul(&h.mul(&k, &a).unwrap(), &h.k(&[-1]))
            .unwrap()
            .scale(&beta.value(&h, 0));
        assert_eq!(
            h.beta_action(&beta, &k, &a, ActionMode::InverseAntipode)
                .unwrap(),
            expected
        );
        assert_eq!(
            h.beta_action(&beta, &h.one(), &a, ActionMode::InverseAntipode)
                .unwrap(),
            a
        );
    }

    #[test]
    fn action_of_e_on_k_power() {
        // E ._beta K^m = (beta(K) - q^{2m}) E K^{m-1}
        let h = FiniteHopf::of_type("A1", 5).unwrap();
        let e = h.e(0).unwrap();
        for b in 0..5 {
            let beta = BetaChar { exps: vec![b] };
            for m in 0..5i64 {
                let lhs = h
                    .beta_action(&beta, &e, &h.k(&[m]), ActionMode::InverseAntipode)
                    .unwrap();
                let c = beta.value(&h, 0).sub(&h.zeta_pow(2 * m));
                let rhs = h.mul(&e, &h.k(&[m - 1])).unwrap().scale(&c);
                assert_eq!(lhs, rhs, "beta={b} m={m}");
            }
        }
    }

    #[test]
    fn sweedler_carriers() {
        let h = sweedler();
        let g = FKey::group_like(1, vec![0]);
        let trivial = h
            .build_h_beta_g(&BetaChar { exps: vec![0] }, &g, ActionMode::InverseAntipode)
            .unwrap();
        assert_eq!(trivial.dim(), 1);
        let sign = h
            .build_h_beta_g(&BetaChar { exps: vec![1] }, &g, ActionMode::InverseAntipode)
            .unwrap();
        assert_eq!(sign.dim(), 2);
        assert!(sign.contains(&h, &h.mul(&h.e(0).unwrap(), &h.k_gen(0).unwrap()).unwrap()));
    }

    #[test]
    fn sweedler_scan() {
        let h = sweedler();
        let rep = scan(&h, 3).unwrap();
        assert_eq!(rep.rows.len(), 4);
        assert!(
            rep.all_yd_ok && rep.all_round_trip && rep.readouts_distinct,
            "{rep:?}"
        );
    }

    #[test]
    fn fault_injection_breaks_compatibility() {
        let h = FiniteHopf::of_type("A1", 5).unwrap();
        let g = FKey::group_like(1, vec![0]);
        let m = h
            .build_h_beta_g(&BetaChar { exps: vec![1] }, &g, ActionMode::Antipode)
            .unwrap();
        let rep = m.check(&h, 1).unwrap();
        assert!(!rep.coaction_rule_failures.is_empty());
    }
}
