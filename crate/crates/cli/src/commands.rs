use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use borelq::algebra::{BorelAlgebra, Mono, PbwKey, ReducedElement};
use borelq::cache::DiskCache;
use borelq::cartan::{
    degrees_of_height, positive_root_frame, word_to_string, CartanDatum, RootVec,
};
use borelq::expr::{self, Expr};
use borelq::hopf::{render_tensor2, Hopf};
use borelq::lincomb::{fmt_sum, LinComb};
use borelq::repmod::{f_sigma_injective, tensor_of_type, TruncatedVerma, WeightSymbol};
use borelq::rmatrix::{self, GridEntry, QuotientSpec};
use borelq::scalars::{cyclotomic_field, Cyclotomic};
use borelq::yd::{self, ActionMode, BetaChar, FKey, FiniteHopf};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::{ExprArgs, RmatrixCmd, TypeArgs, VermaCmd, YdArgs, YdCmd};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] borelq::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use borelq::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                E::Parse { .. }
                | E::IndexOutOfRange { .. }
                | E::Domain(_)
                | E::NotInBorel(_)
                | E::NotHopf { .. },
            ) => 2,
            _ => 1,
        }
    }
}

type Res<T> = Result<T, CliError>;

/// Rendered output of one command.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

fn outcome(text: String, json: impl Serialize, ok: bool) -> Res<Outcome> {
    let json = serde_json::to_value(json).map_err(|e| CliError::Io(e.to_string()))?;
    Ok(Outcome { text, json, ok })
}

fn parse_list(s: &str, what: &str) -> Res<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            CliError::Usage(format!(
                "invalid {what} '{s}': expected comma-separated integers"
            ))
        })
}

fn parse_word(s: &Option<String>) -> Res<Option<Vec<usize>>> {
    let Some(s) = s else { return Ok(None) };
    let w = parse_list(s, "word")?;
    if w.iter().any(|&i| i < 1) {
        return Err(CliError::Usage("word indices start at 1".into()));
    }
    Ok(Some(w.iter().map(|&i| i as usize - 1).collect()))
}

fn cache_for(dir: Option<PathBuf>) -> Option<DiskCache> {
    dir.map(DiskCache::new).or_else(DiskCache::from_env)
}

fn algebra(
    type_name: &str,
    word: &Option<String>,
    cache: Option<PathBuf>,
) -> Res<Arc<BorelAlgebra>> {
    let datum = CartanDatum::parse(type_name)?;
    let word = parse_word(word)?;
    let frame = positive_root_frame(&datum, word.as_deref())?;
    Ok(BorelAlgebra::with_cache(frame, cache_for(cache)))
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn matrix_text(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            format!("  [{} ]", cells.join(""))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn cartan(t: &TypeArgs) -> Res<Outcome> {
    let datum = CartanDatum::parse(&t.type_name)?;
    let frame = positive_root_frame(&datum, parse_word(&t.word)?.as_deref())?;
    let betas: Vec<Vec<i64>> = frame.betas.iter().map(|b| b.0.clone()).collect();
    let w0: Vec<usize> = frame.w0_word.iter().map(|i| i + 1).collect();
    let mut text = String::new();
    writeln!(text, "type {}", datum.name()).unwrap();
    writeln!(text, "C =\n{}", matrix_text(datum.matrix())).unwrap();
    writeln!(text, "D = {:?}", datum.symmetrizer()).unwrap();
    writeln!(text, "DC =\n{}", matrix_text(&datum.dc())).unwrap();
    writeln!(text, "|W| = {}", datum.weyl_order()).unwrap();
    writeln!(text, "N = {}", datum.num_positive_roots()).unwrap();
    writeln!(text, "w0 = {}", word_to_string(&frame.w0_word)).unwrap();
    for (s, b) in frame.betas.iter().enumerate() {
        writeln!(text, "beta_{} = {b}", s + 1).unwrap();
    }
    outcome(
        text,
        json!({
            "type": datum.name(),
            "rank": datum.rank(),
            "cartan_matrix": datum.matrix(),
            "symmetrizer": datum.symmetrizer(),
            "dc": datum.dc(),
            "weyl_order": datum.weyl_order() as u64,
            "num_positive_roots": datum.num_positive_roots(),
            "w0_word": w0,
            "betas": betas,
        }),
        true,
    )
}

#[derive(Serialize)]
struct RootRow {
    index: usize,
    beta: Vec<i64>,
    level: String,
    element: String,
}

pub fn roots(t: &TypeArgs, cache: Option<PathBuf>) -> Res<Outcome> {
    let alg = algebra(&t.type_name, &t.word, cache)?;
    let data = alg.pbw_data()?;
    let frame = alg.frame();
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut simple_ok = true;
    for (s, (x, level)) in data.root_vectors.iter().zip(&data.levels).enumerate() {
        let beta = &frame.betas[s];
        if let Some(t) = (0..alg.rank()).find(|&t| *beta == RootVec::simple(alg.rank(), t)) {
            simple_ok &= *x == alg.e(t)?;
        }
        writeln!(text, "E_b{} [{beta}] ({level}) = {}", s + 1, x.render()).unwrap();
        rows.push(RootRow {
            index: s + 1,
            beta: beta.0.clone(),
            level: level.to_string(),
            element: x.render(),
        });
    }
    writeln!(text, "simple roots give generators: {}", mark(simple_ok)).unwrap();
    outcome(
        text,
        json!({
            "type": alg.datum().name(),
            "w0_word": frame.w0_word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "roots": rows,
            "simple_roots_are_generators": simple_ok,
        }),
        simple_ok,
    )
}

pub fn dim(t: &TypeArgs, eta: &str, cache: Option<PathBuf>) -> Res<Outcome> {
    let alg = algebra(&t.type_name, &t.word, cache)?;
    let eta = RootVec(parse_list(eta, "eta")?);
    if eta.rank() != alg.rank() {
        return Err(CliError::Usage(format!(
            "eta needs {} coordinates",
            alg.rank()
        )));
    }
    if !eta.is_nonneg() {
        return Err(CliError::Usage(
            "eta must have nonnegative coordinates".into(),
        ));
    }
    let kostant = alg.frame().kostant_dim(&eta);
    let quotient = alg.graded_basis(&eta)?.dim() as u64;
    let ok = kostant == quotient;
    let text = if ok {
        format!("{quotient}\n")
    } else {
        format!("{quotient} (Kostant partition function gives {kostant})\n")
    };
    outcome(
        text,
        json!({"type": alg.datum().name(), "eta": eta.0, "quotient_dim": quotient, "kostant_dim": kostant, "agree": ok}),
        ok,
    )
}

#[derive(Serialize)]
struct PbwDegree {
    eta: Vec<i64>,
    kostant_dim: u64,
    quotient_dim: usize,
    monomials: Vec<String>,
    independent: bool,
}

pub fn pbw(t: &TypeArgs, height: i64, cache: Option<PathBuf>) -> Res<Outcome> {
    let alg = algebra(&t.type_name, &t.word, cache)?;
    let n = alg.rank();
    let mut rows = Vec::new();
    let mut text = String::new();
    for h in 1..=height {
        for eta in degrees_of_height(n, h) {
            let kostant = alg.frame().kostant_dim(&eta);
            if kostant == 0 {
                continue;
            }
            let quotient = alg.graded_basis(&eta)?.dim();
            let (keys, independent) = match alg.pbw_change(&eta) {
                Ok(c) => (c.keys.clone(), true),
                Err(borelq::Error::Consistency(_)) => (alg.frame().pbw_exponents(&eta), false),
                Err(e) => return Err(e.into()),
            };
            let monomials: Vec<String> = keys
                .iter()
                .map(|k| {
                    PbwKey {
                        k: k.clone(),
                        lambda: RootVec::zero(n),
                    }
                    .to_string()
                })
                .collect();
            let ok = independent && quotient as u64 == kostant && monomials.len() as u64 == kostant;
            writeln!(
                text,
                "{eta} dim {quotient} {}: {}",
                mark(ok),
                monomials.join(", ")
            )
            .unwrap();
            rows.push(PbwDegree {
                eta: eta.0.clone(),
                kostant_dim: kostant,
                quotient_dim: quotient,
                monomials,
                independent,
            });
        }
    }
    let pass = rows
        .iter()
        .all(|r| r.independent && r.quotient_dim as u64 == r.kostant_dim);
    outcome(
        text,
        json!({"type": alg.datum().name(), "height": height, "degrees": rows, "pass": pass}),
        pass,
    )
}

#[derive(Serialize)]
struct Term {
    monomial: String,
    coefficient: String,
}

fn terms_of<F: borelq::scalars::Field>(x: &LinComb<Mono, F>) -> Vec<Term> {
    x.iter()
        .map(|(m, c)| Term {
            monomial: m.to_string(),
            coefficient: c.to_string(),
        })
        .collect()
}

fn parse_expr(ex: &ExprArgs, alg: &BorelAlgebra) -> Res<Expr> {
    Ok(expr::parse_with_rank(&ex.expr, alg.rank())?)
}

pub fn nf(ex: &ExprArgs, r: Option<u32>, cache: Option<PathBuf>) -> Res<Outcome> {
    let alg = algebra(&ex.type_name, &ex.word, cache)?;
    let e = parse_expr(ex, &alg)?;
    let name = alg.datum().name();
    if e.has_f() {
        if r.is_some() {
            return Err(CliError::Usage(
                "--r is only supported for expressions in U>=0".into(),
            ));
        }
        let x = expr::eval_full(&alg, &e)?;
        let rendered = fmt_sum(x.iter().map(|(m, c)| (c, m.render())));
        let terms: Vec<Term> = x
            .iter()
            .map(|(m, c)| Term {
                monomial: m.render(),
                coefficient: c.to_string(),
            })
            .collect();
        return outcome(
            format!("{rendered}\n"),
            json!({"type": name, "regime": "generic", "input": e.to_string(), "normal_form": rendered, "terms": terms}),
            true,
        );
    }
    let x = expr::eval(&alg, &e)?;
    match r {
        None => outcome(
            format!("{}\n", x.render()),
            json!({"type": name, "regime": "generic", "input": e.to_string(), "normal_form": x.render(), "terms": terms_of(&x)}),
            true,
        ),
        Some(r) => {
            if r < 2 {
                return Err(CliError::Usage("--r must be at least 2".into()));
            }
            let field = cyclotomic_field(r);
            let mut y: LinComb<Mono, Cyclotomic> = LinComb::zero();
            for (m, c) in &x {
                y.add_term(m.clone(), Cyclotomic::eval_ratfunc(&field, c)?);
            }
            outcome(
                format!("{}\n", y.render()),
                json!({"type": name, "regime": format!("r={r}"), "input": e.to_string(), "normal_form": y.render(), "terms": terms_of(&y)}),
                true,
            )
        }
    }
}

fn hopf_for(ex: &ExprArgs, cache: Option<PathBuf>) -> Res<(Hopf, ReducedElement, Expr)> {
    let alg = algebra(&ex.type_name, &ex.word, cache)?;
    let e = parse_expr(ex, &alg)?;
    let x = expr::eval(&alg, &e)?;
    Ok((Hopf::new(alg)?, x, e))
}

pub fn delta(ex: &ExprArgs, cache: Option<PathBuf>) -> Res<Outcome> {
    let (h, x, e) = hopf_for(ex, cache)?;
    let d = render_tensor2(&h.delta(&x)?);
    outcome(
        format!("{d}\n"),
        json!({"type": h.algebra().datum().name(), "input": e.to_string(), "delta": d}),
        true,
    )
}

pub fn antipode(ex: &ExprArgs, inverse: bool, cache: Option<PathBuf>) -> Res<Outcome> {
    let (h, x, e) = hopf_for(ex, cache)?;
    let y = if inverse {
        h.antipode_inv(&x)?
    } else {
        h.antipode(&x)?
    };
    outcome(
        format!("{}\n", y.render()),
        json!({"type": h.algebra().datum().name(), "input": e.to_string(), "inverse": inverse, "result": y.render()}),
        true,
    )
}

pub fn serre_check(t: &TypeArgs, cache: Option<PathBuf>) -> Res<Outcome> {
    let alg = algebra(&t.type_name, &t.word, cache)?;
    let n = alg.rank();
    let mut pairs = Vec::new();
    let mut text = String::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let s = borelq::algebra::full::serre_element(alg.datum(), i, j)?;
            let zero = alg.reduce(&s)?.is_zero();
            let deg = s.degree().map(|d| d.0).unwrap_or_default();
            writeln!(
                text,
                "S_{}{} degree {:?}: {}",
                i + 1,
                j + 1,
                deg,
                mark(zero)
            )
            .unwrap();
            pairs.push(json!({"i": i + 1, "j": j + 1, "degree": deg, "reduces_to_zero": zero}));
        }
    }
    let pass = pairs.iter().all(|p| p["reduces_to_zero"] == true);
    outcome(
        text,
        json!({"type": alg.datum().name(), "pairs": pairs, "pass": pass}),
        pass,
    )
}

pub fn hopf_check(t: &TypeArgs, height: i64, radius: i64, cache: Option<PathBuf>) -> Res<Outcome> {
    let alg = algebra(&t.type_name, &t.word, cache)?;
    let name = alg.datum().name();
    let rep = Hopf::new(alg)?.axiom_check(height, radius)?;
    let mut text = format!("{} elements\n", rep.elements);
    for l in &rep.laws {
        writeln!(
            text,
            "{:<16} {:>6} checked  {}",
            l.law,
            l.checked,
            mark(l.failed == 0)
        )
        .unwrap();
        if let Some(c) = &l.counterexample {
            writeln!(text, "  counterexample: {c}").unwrap();
        }
    }
    let pass = rep.passed();
    outcome(
        text,
        json!({"type": name, "height": height, "radius": radius, "elements": rep.elements, "laws": rep.laws, "pass": pass}),
        pass,
    )
}

pub fn smash_check(t: &TypeArgs, height: i64, cache: Option<PathBuf>) -> Res<Outcome> {
    let alg = algebra(&t.type_name, &t.word, cache)?;
    let rep = alg.smash_check(height)?;
    let pass = rep.passed();
    let mut text = format!("{} products checked: {}\n", rep.checked, mark(pass));
    for f in rep.failures.iter().take(10) {
        writeln!(text, "  {f}").unwrap();
    }
    outcome(
        text,
        json!({"type": alg.datum().name(), "height": height, "checked": rep.checked, "failures": rep.failures, "pass": pass}),
        pass,
    )
}

pub fn rmatrix(cmd: &RmatrixCmd) -> Res<Outcome> {
    match cmd {
        RmatrixCmd::Solve { type_name, r } => {
            let datum = CartanDatum::parse(type_name)?;
            let spec = QuotientSpec::new(&datum, *r)?;
            if !spec.is_valid() {
                let text = format!(
                    "{spec}: d = {} <= d0 = {}, not a Hopf algebra\n",
                    spec.d, spec.d0
                );
                return outcome(
                    text,
                    json!({"case": spec.to_string(), "valid": false, "d": spec.d, "d0": spec.d0,
                           "kernel_dim": null, "invertible_exists": false, "checks": []}),
                    true,
                );
            }
            let rep = rmatrix::solve_finite(&spec)?;
            let mut checks = Vec::new();
            if let Some(w) = &rep.witness_coeffs {
                let h = FiniteHopf::new(&spec)?;
                let r = w.to_tensor(h.num_roots());
                let q = rmatrix::verify_qcc(&h, &r, 2)?;
                checks.push(json!({"name": "quasi-cocommutativity", "pass": q.failures.is_empty(), "checked": q.checked}));
                checks.push(json!({"name": "invertible", "pass": q.invertible}));
                checks.push(json!({"name": "triangular", "pass": q.triangular}));
            }
            let ok = checks.iter().all(|c| c["pass"] == true);
            let mut text = format!(
                "{}: d = {}, kernel dimension {}, invertible solution: {}\n",
                rep.case,
                rep.d,
                rep.kernel_dim,
                if rep.invertible_exists { "yes" } else { "no" }
            );
            if !rep.k_power_central {
                text.push_str("note: K^d is not central in this quotient\n");
            }
            if let Some(w) = &rep.witness {
                writeln!(text, "R0 = {w}").unwrap();
            }
            for c in &checks {
                writeln!(
                    text,
                    "{}: {}",
                    c["name"].as_str().unwrap_or(""),
                    mark(c["pass"] == true)
                )
                .unwrap();
            }
            let mut json = serde_json::to_value(&rep).map_err(|e| CliError::Io(e.to_string()))?;
            json["checks"] = Value::Array(checks);
            Ok(Outcome { text, json, ok })
        }
        RmatrixCmd::Classify { grid } => {
            let entries: Vec<GridEntry> = if grid == "default" {
                rmatrix::default_grid()
            } else {
                let s = std::fs::read_to_string(grid)
                    .map_err(|e| CliError::Usage(format!("cannot read {grid}: {e}")))?;
                serde_json::from_str(&s)
                    .map_err(|e| CliError::Usage(format!("invalid grid file {grid}: {e}")))?
            };
            let rows = rmatrix::classify(&entries)?;
            let mut text = format!(
                "{:<6}{:>4}{:>4}{:>4}  {:<7}{:>8}  {:<10} note\n",
                "type", "r", "d", "d0", "valid", "kernel", "invertible"
            );
            for r in &rows {
                writeln!(
                    text,
                    "{:<6}{:>4}{:>4}{:>4}  {:<7}{:>8}  {:<10} {}",
                    r.type_name,
                    r.r,
                    r.d,
                    r.d0,
                    r.valid,
                    r.kernel_dim.map_or("-".to_string(), |k| k.to_string()),
                    if r.invertible_exists { "yes" } else { "no" },
                    r.note
                )
                .unwrap();
            }
            let positive: Vec<Value> = rows
                .iter()
                .filter(|r| r.invertible_exists)
                .map(|r| json!({"type": r.type_name, "r": r.r}))
                .collect();
            outcome(
                text,
                json!({"grid": grid, "rows": rows, "positive": positive}),
                true,
            )
        }
        RmatrixCmd::Generic { type_name, radius } => {
            let datum = CartanDatum::parse(type_name)?;
            let rep = rmatrix::solve_generic(&datum, *radius);
            let ok = rep.kernel_dim == 0;
            let text = format!(
                "{}: {} unknowns, {} equations, kernel dimension {}\n",
                rep.case, rep.unknowns, rep.equations, rep.kernel_dim
            );
            let mut json = serde_json::to_value(&rep).map_err(|e| CliError::Io(e.to_string()))?;
            json["pass"] = Value::Bool(ok);
            Ok(Outcome { text, json, ok })
        }
    }
}

pub fn verma(cmd: &VermaCmd, cache: Option<PathBuf>) -> Res<Outcome> {
    match cmd {
        VermaCmd::Weights { ty, height } => {
            let alg = algebra(&ty.type_name, &ty.word, cache)?;
            let n = alg.rank();
            let injective = f_sigma_injective(alg.datum(), *height);
            let m = TruncatedVerma::new(alg.clone(), WeightSymbol::symbol("σ", n), *height);
            let mut text = String::new();
            let mut rows = Vec::new();
            for (eta, w, d) in m.weights() {
                writeln!(text, "{eta}  {w}  dim {d}").unwrap();
                rows.push(json!({"degree": eta.0, "weight": w.to_string(), "dim": d}));
            }
            writeln!(
                text,
                "F_sigma injective up to height {height}: {}",
                mark(injective)
            )
            .unwrap();
            outcome(
                text,
                json!({"type": alg.datum().name(), "height": height, "weights": rows, "f_sigma_injective": injective}),
                injective,
            )
        }
        VermaCmd::TensorDecompose { ty, height } => {
            if ty.word.is_some() {
                return Err(CliError::Usage(
                    "tensor-decompose uses the default w0 word".into(),
                ));
            }
            let rep = tensor_of_type(&ty.type_name, *height)?.decompose()?;
            let mut text = String::new();
            for s in &rep.slices {
                let ranks: Vec<String> = s
                    .generator_ranks
                    .iter()
                    .map(|g| g.rank.to_string())
                    .collect();
                writeln!(
                    text,
                    "{:?} {} dim {} ranks [{}] {}",
                    s.degree,
                    s.weight,
                    s.dim,
                    ranks.join(","),
                    mark(s.pass)
                )
                .unwrap();
            }
            text.push_str("multiplicities:\n");
            for m in &rep.multiplicities {
                writeln!(text, "  M({}) x {}", m.weight, m.count).unwrap();
            }
            let pass = rep.pass;
            outcome(text, rep, pass)
        }
    }
}

fn finite(type_name: &str, r: u32) -> Res<FiniteHopf> {
    Ok(FiniteHopf::of_type(type_name, r)?)
}

fn beta_g(h: &FiniteHopf, a: &YdArgs) -> Res<(BetaChar, FKey)> {
    let n = h.rank();
    let d = h.d() as i64;
    let b = parse_list(&a.beta, "beta")?;
    let g = parse_list(&a.g, "g")?;
    if b.len() != n || g.len() != n {
        return Err(CliError::Usage(format!("beta and g need {n} entries")));
    }
    let red = |v: Vec<i64>| {
        v.into_iter()
            .map(|x| x.rem_euclid(d) as u32)
            .collect::<Vec<_>>()
    };
    Ok((
        BetaChar { exps: red(b) },
        FKey::group_like(h.num_roots(), red(g)),
    ))
}

pub fn yd(cmd: &YdCmd) -> Res<Outcome> {
    match cmd {
        YdCmd::Build(a) => {
            let h = finite(&a.type_name, a.r)?;
            let (beta, g) = beta_g(&h, a)?;
            let m = h.build_h_beta_g(&beta, &g, ActionMode::InverseAntipode)?;
            let inv = m.phi_invariants(&h)?;
            let carrier: Vec<String> = m.carrier.iter().map(|v| h.render(v)).collect();
            let mut text = format!(
                "{} beta={:?} g={:?}: dim {}\n",
                h.spec(),
                beta.exps,
                g.lambda,
                m.dim()
            );
            for c in &carrier {
                writeln!(text, "  {c}").unwrap();
            }
            writeln!(text, "invariants: g={:?} beta={:?}", inv.g, inv.beta).unwrap();
            outcome(
                text,
                json!({"case": h.spec().to_string(), "beta": beta.exps, "g": g.lambda, "dim": m.dim(),
                       "carrier": carrier, "invariants": inv}),
                true,
            )
        }
        YdCmd::Check {
            yd: a,
            height,
            fault_antipode,
        } => {
            let h = finite(&a.type_name, a.r)?;
            let (beta, g) = beta_g(&h, a)?;
            let mode = if *fault_antipode {
                ActionMode::Antipode
            } else {
                ActionMode::InverseAntipode
            };
            let m = h.build_h_beta_g(&beta, &g, mode)?;
            let rep = m.check(&h, *height)?;
            let inv = m.phi_invariants(&h)?;
            let ok = rep.passed();
            let text = format!(
                "{} beta={:?} g={:?}: dim {}, coaction_rule {}/{} failed, crossed_rule {}/{} failed, yd {}\n",
                h.spec(),
                beta.exps,
                g.lambda,
                m.dim(),
                rep.coaction_rule_failures.len(),
                rep.coaction_rule_checked,
                rep.crossed_rule_failures.len(),
                rep.crossed_rule_checked,
                mark(ok)
            );
            outcome(
                text,
                json!({"case": h.spec().to_string(), "beta": beta.exps, "g": g.lambda, "dim": m.dim(),
                       "yd_ok": ok, "invariants": inv, "report": rep}),
                ok,
            )
        }
        YdCmd::Scan {
            type_name,
            r,
            height,
        } => {
            let h = finite(type_name, *r)?;
            let rep = yd::scan(&h, *height)?;
            let mut text = format!("{}: {} pairs\n", rep.case, rep.rows.len());
            for row in &rep.rows {
                writeln!(
                    text,
                    "beta={:?} g={:?} dim {:>3} yd {} readout g={:?} beta={:?}",
                    row.beta,
                    row.g,
                    row.dim,
                    mark(row.yd_ok),
                    row.invariants.g,
                    row.invariants.beta
                )
                .unwrap();
            }
            writeln!(
                text,
                "all YD: {}, round trip: {}, distinct readouts: {}",
                mark(rep.all_yd_ok),
                mark(rep.all_round_trip),
                mark(rep.readouts_distinct)
            )
            .unwrap();
            let ok = rep.all_yd_ok && rep.all_round_trip && rep.readouts_distinct;
            outcome(text, rep, ok)
        }
    }
}
