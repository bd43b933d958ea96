//! Quasi-cocommutativity: the linear constraints on a degree-zero R-matrix
//! `R = sum a_{j,l} K^j (x) K^l`, for generic q (finitely supported
//! coefficients) and for the finite quotients at roots of unity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, RootVec};
use crate::linalg;
use crate::scalars::{cyclotomic_field, CycloField, Cyclotomic, Field, RatFunc};
use crate::yd::{FElem, FKey, FTensor2, FiniteHopf};
use crate::{par, Error, Result};
use std::sync::Arc;

/// The quotient `u>=0` at a primitive `r`-th root of unity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct QuotientSpec {
    #[serde(skip)]
    pub datum: CartanDatum,
    pub r: u32,
    pub d: u32,
    pub d0: u32,
}

impl QuotientSpec {
    pub fn new(datum: &CartanDatum, r: u32) -> Result<Self> {
        if r < 3 {
            return Err(Error::Domain(format!(
                "root of unity order must be at least 3, got {r}"
            )));
        }
        let d = if r % 2 == 1 { r } else { r / 2 };
        Ok(QuotientSpec {
            datum: datum.clone(),
            r,
            d,
            d0: datum.d0() as u32,
        })
    }

    /// Whether `d > d0`, the condition for `u>=0` to be a Hopf algebra.
    pub fn is_valid(&self) -> bool {
        self.d > self.d0
    }

    pub fn check_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::NotHopf {
                d: self.d,
                d0: self.d0,
            })
        }
    }

    pub fn field(&self) -> Arc<CycloField> {
        cyclotomic_field(self.r)
    }

    /// Whether `q^{d (alpha_k, alpha_i)} = 1` for all k, i. Otherwise
    /// `K_k^d` is not central and `K_k^d = 1` collapses generators.
    pub fn k_power_central(&self) -> bool {
        let n = self.datum.rank();
        (0..n).all(|i| {
            (0..n).all(|k| {
                (self.d as i64 * self.datum.form_simple(i, k)).rem_euclid(self.r as i64) == 0
            })
        })
    }
}

impl fmt::Display for QuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} r={}", self.datum.name(), self.r)
    }
}

/// `A(j, l) = j X l^t` with `X = DC`.
pub fn bilinear_a(datum: &CartanDatum, j: &[i64], l: &[i64]) -> i64 {
    datum.form(&RootVec(j.to_vec()), &RootVec(l.to_vec()))
}

/// Index set of the unknowns `a_{j,l}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Support {
    /// `j, l in [-B, B]^n`, coefficients outside the box are zero.
    Box(u32),
    /// `j, l in (Z/d)^n`, representatives in `[0, d)`, q of order `r`.
    Modular { d: u32, r: u32 },
}

/// One constraint: `a_lhs = q^exp a_rhs`, or `a_lhs = 0` when `rhs` is `None`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Equation {
    pub lhs: usize,
    pub rhs: Option<usize>,
    pub exp: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstraintSystem {
    pub support: Support,
    pub rank: usize,
    /// `(j, l)` for each unknown.
    pub unknowns: Vec<(Vec<i64>, Vec<i64>)>,
    pub equations: Vec<Equation>,
}

fn points(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

impl ConstraintSystem {
    fn index_of(&self, j: &[i64], l: &[i64]) -> Option<usize> {
        let (lo, side) = match self.support {
            Support::Box(b) => (-(b as i64), 2 * b as i64 + 1),
            Support::Modular { d, .. } => (0, d as i64),
        };
        let mut idx = 0usize;
        for x in j.iter().chain(l) {
            let off = x - lo;
            if off < 0 || off >= side {
                return None;
            }
            idx = idx * side as usize + off as usize;
        }
        Some(idx)
    }

    fn normalize(&self, v: &mut [i64]) {
        if let Support::Modular { d, .. } = self.support {
            for x in v.iter_mut() {
                *x = x.rem_euclid(d as i64);
            }
        }
    }

    pub fn modulus(&self) -> Option<i64> {
        match self.support {
            Support::Box(_) => None,
            Support::Modular { r, .. } => Some(r as i64),
        }
    }

    pub fn describe(&self, e: &Equation) -> String {
        let name = |k: usize| {
            let (j, l) = &self.unknowns[k];
            format!("a[{:?},{:?}]", j, l)
        };
        match e.rhs {
            None => format!("{} = 0", name(e.lhs)),
            Some(r) => format!("{} = q^{} {}", name(e.lhs), e.exp, name(r)),
        }
    }
}

/// The constraints `a_{j,l} = q^{(l, alpha_i)} a_{j - e_i, l}` and
/// `a_{j,l} = q^{(j, alpha_i)} a_{j, l + e_i}` for every generator `i`.
pub fn build_constraints(datum: &CartanDatum, support: Support) -> ConstraintSystem {
    let n = datum.rank();
    let pts = match support {
        Support::Box(b) => points(n, -(b as i64), b as i64),
        Support::Modular { d, .. } => points(n, 0, d as i64 - 1),
    };
    let mut unknowns = Vec::with_capacity(pts.len() * pts.len());
    for j in &pts {
        for l in &pts {
            unknowns.push((j.clone(), l.clone()));
        }
    }
    let mut sys = ConstraintSystem {
        support,
        rank: n,
        unknowns,
        equations: Vec::new(),
    };
    let reduce_exp = |e: i64| match support {
        Support::Box(_) => e,
        Support::Modular { r, .. } => e.rem_euclid(r as i64),
    };
    let mut eqs = Vec::new();
    for (x, (j, l)) in sys.unknowns.iter().enumerate() {
        for i in 0..n {
            let ai = RootVec::simple(n, i);
            let mut jm = j.clone();
            jm[i] -= 1;
            sys.normalize(&mut jm);
            let e1 = reduce_exp(datum.form(&RootVec(l.clone()), &ai));
            eqs.push(Equation {
                lhs: x,
                rhs: sys.index_of(&jm, l),
                exp: e1,
            });
            let mut lp = l.clone();
            lp[i] += 1;
            sys.normalize(&mut lp);
            let e2 = reduce_exp(datum.form(&RootVec(j.clone()), &ai));
            eqs.push(Equation {
                lhs: x,
                rhs: sys.index_of(j, &lp),
                exp: e2,
            });
        }
    }
    sys.equations = eqs;
    sys
}

/// Solution of a constraint system: each unknown is either forced to zero or
/// equals `q^potential` times the free unknown of its component.
#[derive(Clone, Debug, Serialize)]
pub struct Solution {
    pub kernel_dim: usize,
    /// Per unknown: `(component root, exponent)` or `None` if forced zero.
    pub values: Vec<Option<(usize, i64)>>,
}

struct UnionFind {
    parent: Vec<usize>,
    /// `a_x = q^{pot[x]} a_{parent[x]}`
    pot: Vec<i64>,
    zero: Vec<bool>,
    modulus: Option<i64>,
}

impl UnionFind {
    fn new(n: usize, modulus: Option<i64>) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            pot: vec![0; n],
            zero: vec![false; n],
            modulus,
        }
    }

    fn norm(&self, e: i64) -> i64 {
        match self.modulus {
            Some(m) => e.rem_euclid(m),
            None => e,
        }
    }

    /// Root of `x` and `a_x = q^e a_root`.
    fn find(&mut self, x: usize) -> (usize, i64) {
        let p = self.parent[x];
        if p == x {
            return (x, 0);
        }
        let (root, e) = self.find(p);
        let total = self.norm(self.pot[x] + e);
        self.parent[x] = root;
        self.pot[x] = total;
        (root, total)
    }

    /// Imposes `a_x = q^e a_y`.
    fn relate(&mut self, x: usize, y: usize, e: i64) {
        let (rx, ex) = self.find(x);
        let (ry, ey) = self.find(y);
        if rx == ry {
            // q^{ex} a_r = q^{e + ey} a_r
            if self.norm(ex - e - ey) != 0 {
                self.zero[rx] = true;
            }
            return;
        }
        // a_rx = q^{e + ey - ex} a_ry
        self.parent[rx] = ry;
        self.pot[rx] = self.norm(e + ey - ex);
        if self.zero[rx] {
            self.zero[ry] = true;
        }
    }

    fn kill(&mut self, x: usize) {
        let (r, _) = self.find(x);
        self.zero[r] = true;
    }
}

/// Solves a system whose equations all have monomial coefficients.
pub fn solve(sys: &ConstraintSystem) -> Solution {
    let n = sys.unknowns.len();
    let mut uf = UnionFind::new(n, sys.modulus());
    for e in &sys.equations {
        match e.rhs {
            None => uf.kill(e.lhs),
            Some(y) => uf.relate(e.lhs, y, e.exp),
        }
    }
    let mut values = Vec::with_capacity(n);
    let mut roots = std::collections::BTreeSet::new();
    for x in 0..n {
        let (r, e) = uf.find(x);
        if uf.zero[r] {
            values.push(None);
        } else {
            roots.insert(r);
            values.push(Some((r, e)));
        }
    }
    Solution {
        kernel_dim: roots.len(),
        values,
    }
}

/// Dense matrix of the system over a field, for cross-checking [`solve`].
pub fn dense_matrix<F: Field>(
    sys: &ConstraintSystem,
    q_pow: impl Fn(i64) -> F,
    ctx: &F::Ctx,
) -> Vec<Vec<F>> {
    let n = sys.unknowns.len();
    sys.equations
        .iter()
        .map(|e| {
            let mut row = vec![F::zero_in(ctx); n];
            row[e.lhs] = F::one_in(ctx);
            if let Some(y) = e.rhs {
                row[y] = row[y].sub(&q_pow(e.exp));
            }
            row
        })
        .collect()
}

/// Dimension of the space of finitely supported solutions inside the box of
/// radius `b` for generic q.
pub fn solve_generic(datum: &CartanDatum, b: u32) -> GenericReport {
    let sys = build_constraints(datum, Support::Box(b));
    let sol = solve(&sys);
    GenericReport {
        case: format!("{} box={b}", datum.name()),
        unknowns: sys.unknowns.len(),
        equations: sys.equations.len(),
        kernel_dim: sol.kernel_dim,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericReport {
    pub case: String,
    pub unknowns: usize,
    pub equations: usize,
    pub kernel_dim: usize,
}

/// Coefficients `a_{j,l}` of a degree-zero element of `u (x) u`.
#[derive(Clone, Debug)]
pub struct GroupTensorCoeffs {
    pub d: u32,
    pub entries: Vec<(Vec<i64>, Vec<i64>, Cyclotomic)>,
}

impl GroupTensorCoeffs {
    /// The element as a tensor over a finite quotient with `num_roots`
    /// positive roots.
    pub fn to_tensor(&self, num_roots: usize) -> FTensor2 {
        let key = |v: &[i64]| FKey::group_like(num_roots, v.iter().map(|&x| x as u32).collect());
        self.entries
            .iter()
            .map(|(j, l, c)| ((key(j), key(l)), c.clone()))
            .collect()
    }

    pub fn render(&self) -> String {
        let terms: Vec<(Cyclotomic, String)> = self
            .entries
            .iter()
            .map(|(j, l, c)| {
                let kj =
                    crate::algebra::render_k(&RootVec(j.clone())).unwrap_or_else(|| "1".into());
                let kl =
                    crate::algebra::render_k(&RootVec(l.clone())).unwrap_or_else(|| "1".into());
                (c.clone(), format!("{kj} (x) {kl}"))
            })
            .collect();
        crate::lincomb::fmt_sum(terms.iter().map(|(c, s)| (c, s.clone())))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FiniteReport {
    pub case: String,
    pub valid: bool,
    pub d: u32,
    pub d0: u32,
    pub kernel_dim: usize,
    /// Whether `q^{2A(j,l)} = 1` for all index pairs.
    pub consistent: bool,
    /// Whether every solution is `a_{j,l} = q^{-A(j,l)} a_{0,0}`.
    pub canonical: bool,
    /// Whether `K_i^d` is central; when false the quotient collapses.
    pub k_power_central: bool,
    pub invertible_exists: bool,
    pub witness: Option<String>,
    #[serde(skip)]
    pub witness_coeffs: Option<GroupTensorCoeffs>,
}

/// Size limit for the dense invertibility test in the group algebra.
pub const GROUP_ALGEBRA_LIMIT: usize = 1024;

/// Solves the modular system for `spec` and decides whether an invertible
/// solution exists.
pub fn solve_finite(spec: &QuotientSpec) -> Result<FiniteReport> {
    spec.check_valid()?;
    let datum = &spec.datum;
    let n = datum.rank();
    let r = spec.r as i64;
    let sys = build_constraints(
        datum,
        Support::Modular {
            d: spec.d,
            r: spec.r,
        },
    );
    let sol = solve(&sys);
    let consistent = sys
        .unknowns
        .iter()
        .all(|(j, l)| (2 * bilinear_a(datum, j, l)).rem_euclid(r) == 0);
    let origin = sys
        .index_of(&vec![0; n], &vec![0; n])
        .expect("origin in range");
    let canonical = sol
        .values
        .iter()
        .zip(&sys.unknowns)
        .all(|(v, (j, l))| match v {
            None => true,
            Some((root, e)) => {
                let (r0, e0) = sol.values[origin].expect("origin survives when anything does");
                *root == r0 && (e - e0 + bilinear_a(datum, j, l)).rem_euclid(r) == 0
            }
        });
    let mut report = FiniteReport {
        case: spec.to_string(),
        valid: true,
        d: spec.d,
        d0: spec.d0,
        kernel_dim: sol.kernel_dim,
        consistent,
        canonical,
        k_power_central: spec.k_power_central(),
        invertible_exists: false,
        witness: None,
        witness_coeffs: None,
    };
    if sol.kernel_dim == 0 {
        return Ok(report);
    }
    if sol.kernel_dim > 1 {
        return Err(Error::Consistency(format!(
            "{spec}: solution space of dimension {} exceeds one",
            sol.kernel_dim
        )));
    }
    let field = spec.field();
    let scale = Cyclotomic::from_rational(
        &field,
        num_rational::BigRational::new(1.into(), num_bigint::BigInt::from(spec.d).pow(n as u32)),
    );
    let (_, e0) = sol.values[origin].expect("origin survives");
    let entries: Vec<(Vec<i64>, Vec<i64>, Cyclotomic)> = sys
        .unknowns
        .iter()
        .zip(&sol.values)
        .filter_map(|((j, l), v)| {
            v.map(|(_, e)| {
                (
                    j.clone(),
                    l.clone(),
                    Cyclotomic::zeta_pow(&field, e - e0).mul(&scale),
                )
            })
        })
        .collect();
    let coeffs = GroupTensorCoeffs { d: spec.d, entries };
    report.invertible_exists = group_algebra_invertible(&coeffs, n, &field)?;
    if report.invertible_exists {
        report.witness = Some(coeffs.render());
        report.witness_coeffs = Some(coeffs);
    }
    Ok(report)
}

/// Whether `sum a_{j,l} K^j (x) K^l` is a unit of the group algebra of
/// `(Z/d)^n x (Z/d)^n`, by solving `R X = 1` densely.
pub fn group_algebra_invertible(
    c: &GroupTensorCoeffs,
    n: usize,
    field: &Arc<CycloField>,
) -> Result<bool> {
    let d = c.d as usize;
    let size = d.pow(2 * n as u32);
    if size > GROUP_ALGEBRA_LIMIT {
        return Err(Error::Resource(format!(
            "group algebra of dimension {size} exceeds the limit {GROUP_ALGEBRA_LIMIT}"
        )));
    }
    let encode = |v: &[i64]| {
        v.iter()
            .fold(0usize, |acc, &x| acc * d + x.rem_euclid(d as i64) as usize)
    };
    let decode = |mut idx: usize| {
        let mut v = vec![0i64; 2 * n];
        for x in v.iter_mut().rev() {
            *x = (idx % d) as i64;
            idx /= d;
        }
        v
    };
    let mut m = vec![vec![Cyclotomic::zero(field); size]; size];
    for (j, l, a) in &c.entries {
        let h: Vec<i64> = j.iter().chain(l).copied().collect();
        for col in 0..size {
            let g = decode(col);
            let sum: Vec<i64> = g.iter().zip(&h).map(|(x, y)| x + y).collect();
            let row = encode(&sum);
            m[row][col] = m[row][col].add(a);
        }
    }
    let mut rhs = vec![Cyclotomic::zero(field); size];
    rhs[0] = Cyclotomic::one(field);
    Ok(linalg::solve(&m, &rhs, field).is_some())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridEntry {
    #[serde(rename = "type")]
    pub type_name: String,
    #[serde(default)]
    pub rank: Option<usize>,
    pub r: u32,
}

pub fn default_grid() -> Vec<GridEntry> {
    let rows: [(&str, &[u32]); 4] = [
        ("A1", &[3, 4, 5, 6, 8]),
        ("A2", &[3, 4, 5, 7]),
        ("B2", &[5, 6, 8]),
        ("G2", &[7, 8, 9]),
    ];
    rows.iter()
        .flat_map(|(t, rs)| {
            rs.iter().map(move |&r| GridEntry {
                type_name: t.to_string(),
                rank: None,
                r,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyRow {
    #[serde(rename = "type")]
    pub type_name: String,
    pub r: u32,
    pub d: u32,
    pub d0: u32,
    pub valid: bool,
    pub kernel_dim: Option<usize>,
    pub invertible_exists: bool,
    pub note: String,
}

fn resolve_type(e: &GridEntry) -> Result<CartanDatum> {
    let datum = CartanDatum::parse(&e.type_name)?;
    if let Some(rk) = e.rank {
        if rk != datum.rank() {
            return Err(Error::Domain(format!(
                "{} does not have rank {rk}",
                e.type_name
            )));
        }
    }
    Ok(datum)
}

/// Runs [`solve_finite`] over a grid; invalid specs are reported, not solved.
pub fn classify(grid: &[GridEntry]) -> Result<Vec<ClassifyRow>> {
    par::try_map(grid, |e| {
        let datum = resolve_type(e)?;
        let spec = QuotientSpec::new(&datum, e.r)?;
        let mut row = ClassifyRow {
            type_name: datum.name(),
            r: e.r,
            d: spec.d,
            d0: spec.d0,
            valid: spec.is_valid(),
            kernel_dim: None,
            invertible_exists: false,
            note: String::new(),
        };
        if !spec.is_valid() {
            row.note = "invalid: not a Hopf algebra".into();
            return Ok(row);
        }
        let rep = solve_finite(&spec)?;
        row.kernel_dim = Some(rep.kernel_dim);
        row.invertible_exists = rep.invertible_exists;
        let mut notes = Vec::new();
        if !rep.k_power_central {
            notes.push("K^d not central");
        }
        if !rep.consistent {
            notes.push("q^2A != 1");
        }
        row.note = notes.join("; ");
        Ok(row)
    })
}

/// The R-matrix of Sweedler's algebra, `(1 (x) 1 + 1 (x) K + K (x) 1 - K (x) K)/2`.
pub fn sweedler_r(field: &Arc<CycloField>) -> GroupTensorCoeffs {
    let half = Cyclotomic::from_rational(field, num_rational::BigRational::new(1.into(), 2.into()));
    let entries = vec![
        (vec![0], vec![0], half.clone()),
        (vec![0], vec![1], half.clone()),
        (vec![1], vec![0], half.clone()),
        (vec![1], vec![1], half.neg()),
    ];
    GroupTensorCoeffs { d: 2, entries }
}

#[derive(Clone, Debug, Serialize)]
pub struct QccReport {
    pub checked: usize,
    pub failures: Vec<String>,
    pub invertible: bool,
    pub triangular: bool,
}

impl QccReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.invertible
    }
}

/// Checks `R Delta(h) = Delta^op(h) R` for the generators and all basis
/// elements of height at most `max_height`, two-sided invertibility of `R`,
/// and whether `R_21 R = 1 (x) 1`.
pub fn verify_qcc(h: &FiniteHopf, r: &FTensor2, max_height: i64) -> Result<QccReport> {
    let mut elems: Vec<(String, FElem)> = Vec::new();
    for i in 0..h.rank() {
        elems.push((format!("E{}", i + 1), h.e(i)?));
        elems.push((format!("K{}", i + 1), h.k_gen(i)?));
    }
    for key in h.basis() {
        if h.height(key) <= max_height {
            elems.push((h.render_key(key), h.basis_elem(key)));
        }
    }
    let results = par::try_map(&elems, |(name, x)| {
        let d = h.delta(x)?;
        let dop = flip(&d);
        let lhs = h.tensor_mul(r, &d)?;
        let rhs = h.tensor_mul(&dop, r)?;
        Ok((lhs == rhs)
            .then_some(())
            .map_or_else(|| Some(name.clone()), |_| None))
    })?;
    let failures: Vec<String> = results.into_iter().flatten().collect();
    let one = h.tensor_one();
    let invertible = h.tensor_inverse(r)?.is_some();
    let triangular = h.tensor_mul(&flip(r), r)? == one;
    Ok(QccReport {
        checked: elems.len(),
        failures,
        invertible,
        triangular,
    })
}

pub fn flip(t: &FTensor2) -> FTensor2 {
    t.iter()
        .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
        .collect()
}

/// The component of `R` in degree (0, 0): terms whose factors carry no E.
pub fn project_degree_zero(t: &FTensor2) -> FTensor2 {
    t.filter(|(a, b)| a.is_group_like() && b.is_group_like())
}

/// Same projection on generic tensors.
pub fn project_degree_zero_generic(t: &crate::hopf::Tensor2) -> crate::hopf::Tensor2 {
    t.filter(|(a, b)| a.word.is_empty() && b.word.is_empty())
}

/// Oracle for tests and diagnostics: kernel dimension by dense elimination.
pub fn kernel_dim_dense_generic(sys: &ConstraintSystem) -> usize {
    let m = dense_matrix(sys, RatFunc::q_pow, &());
    sys.unknowns.len() - linalg::rank(&m)
}

pub fn kernel_dim_dense_modular(sys: &ConstraintSystem, field: &Arc<CycloField>) -> usize {
    let m = dense_matrix(sys, |e| Cyclotomic::zeta_pow(field, e), field);
    sys.unknowns.len() - linalg::rank(&m)
}
