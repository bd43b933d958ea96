//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use borelq::algebra::BorelAlgebra;
use borelq::cache::DiskCache;
use borelq::cartan::{degrees_of_height, positive_root_frame, CartanDatum, RootVec};
use borelq::expr;
use borelq::hopf::Hopf;
use borelq::repmod::tensor_of_type;
use borelq::rmatrix::{self, QuotientSpec};
use borelq::yd::{self, FiniteHopf};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cold_algebra(name: &str, dir: &std::path::Path) -> std::sync::Arc<BorelAlgebra> {
    let datum = CartanDatum::parse(name).unwrap();
    BorelAlgebra::with_cache(
        positive_root_frame(&datum, None).unwrap(),
        Some(DiskCache::new(dir)),
    )
}

fn graded_dimensions() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut checked = 0;
    for (name, h) in [("A1", 6), ("A2", 6), ("B2", 6), ("G2", 5)] {
        let alg = cold_algebra(name, dir.path());
        for t in 0..=h {
            for eta in degrees_of_height(alg.rank(), t) {
                let got = alg.graded_basis(&eta).map_err(|e| e.to_string())?.dim() as u64;
                let want = alg.frame().kostant_dim(&eta);
                ensure(
                    got == want,
                    format!("{name} {eta}: quotient {got}, Kostant {want}"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} degrees match the Kostant partition function"
    ))
}

fn pbw_basis() -> Outcome {
    let mut degrees = 0;
    for name in ["A2", "B2"] {
        let alg = BorelAlgebra::of_type(name).unwrap();
        let data = alg.pbw_data().map_err(|e| e.to_string())?;
        for (s, x) in data.root_vectors.iter().enumerate() {
            ensure(
                x.keys().all(|m| m.k.is_zero()),
                format!("{name}: root vector {} has K content", s + 1),
            )?;
            let beta = &alg.frame().betas[s];
            for t in 0..alg.rank() {
                if *beta == RootVec::simple(alg.rank(), t) {
                    ensure(
                        *x == alg.e(t).unwrap(),
                        format!("{name}: E_beta{} differs from E{}", s + 1, t + 1),
                    )?;
                }
            }
        }
        for h in 1..=5 {
            for eta in degrees_of_height(alg.rank(), h) {
                let want = alg.frame().kostant_dim(&eta);
                if want == 0 {
                    continue;
                }
                let change = alg
                    .pbw_change(&eta)
                    .map_err(|e| format!("{name} {eta}: {e}"))?;
                ensure(
                    change.keys.len() as u64 == want,
                    format!("{name} {eta}: wrong monomial count"),
                )?;
                degrees += 1;
            }
        }
    }
    Ok(format!(
        "root vectors in U+, simple ones are generators, {degrees} PBW degrees independent"
    ))
}

fn hopf_axioms() -> Outcome {
    let mut total = 0;
    for name in ["A1", "A2"] {
        let h = Hopf::new(BorelAlgebra::of_type(name).unwrap()).map_err(|e| e.to_string())?;
        let rep = h.axiom_check(4, 1).map_err(|e| e.to_string())?;
        for l in &rep.laws {
            ensure(
                l.failed == 0,
                format!("{name}: {} fails on {:?}", l.law, l.counterexample),
            )?;
        }
        total += rep.elements;
    }
    Ok(format!("five laws hold on {total} elements"))
}

fn smash_product() -> Outcome {
    let alg = BorelAlgebra::of_type("A2").unwrap();
    let rep = alg.smash_check(4).map_err(|e| e.to_string())?;
    ensure(
        rep.passed(),
        format!(
            "{} failures, first {:?}",
            rep.failures.len(),
            rep.failures.first()
        ),
    )?;
    Ok(format!("{} products respected", rep.checked))
}

fn generic_kernel() -> Outcome {
    let a1 = rmatrix::solve_generic(&CartanDatum::parse("A1").unwrap(), 3);
    let a2 = rmatrix::solve_generic(&CartanDatum::parse("A2").unwrap(), 2);
    ensure(a1.kernel_dim == 0 && a2.kernel_dim == 0, "nonzero kernel")?;
    Ok(format!(
        "kernel 0 for A1 box 3 ({} unknowns) and A2 box 2 ({} unknowns)",
        a1.unknowns, a2.unknowns
    ))
}

fn classification() -> Outcome {
    let rows = rmatrix::classify(&rmatrix::default_grid()).map_err(|e| e.to_string())?;
    let positive: Vec<_> = rows
        .iter()
        .filter(|r| r.invertible_exists)
        .map(|r| (r.type_name.clone(), r.r))
        .collect();
    ensure(
        positive == vec![("A1".to_string(), 4)],
        format!("positive rows {positive:?}"),
    )?;
    ensure(
        rows.iter().all(|r| r.valid == (r.d > r.d0)),
        "validity flag mismatch",
    )?;
    let h = FiniteHopf::of_type("A1", 4).map_err(|e| e.to_string())?;
    let sweedler = rmatrix::sweedler_r(h.field()).to_tensor(h.num_roots());
    let rep = rmatrix::verify_qcc(&h, &sweedler, 2).map_err(|e| e.to_string())?;
    ensure(rep.passed(), format!("verify_qcc: {:?}", rep.failures))?;
    ensure(rep.triangular, "R21 R != 1 (x) 1")?;
    let spec = QuotientSpec::new(&CartanDatum::parse("A1").unwrap(), 4).unwrap();
    let witness = rmatrix::solve_finite(&spec)
        .map_err(|e| e.to_string())?
        .witness_coeffs;
    ensure(
        witness.map(|w| w.to_tensor(1)) == Some(sweedler),
        "witness is not the a = 1/2 member",
    )?;
    let probe = rmatrix::classify(&[rmatrix::GridEntry {
        type_name: "G2".into(),
        rank: None,
        r: 6,
    }])
    .map_err(|e| e.to_string())?;
    ensure(
        !probe[0].valid && !probe[0].invertible_exists,
        "G2 r=6 (d = d0 = 3) not flagged invalid",
    )?;
    Ok(format!(
        "{} grid cases, only (A1, r=4) positive, G2 r=6 flagged invalid, Sweedler R triangular",
        rows.len()
    ))
}

fn verma_decomposition() -> Outcome {
    let mut slices = 0;
    for (name, cutoff) in [("A1", 6), ("A2", 4)] {
        let rep = tensor_of_type(name, cutoff)
            .and_then(|t| t.decompose())
            .map_err(|e| e.to_string())?;
        for s in &rep.slices {
            ensure(s.pass, format!("{name}: slice {:?} fails", s.degree))?;
            if name == "A1" {
                ensure(
                    s.dim as i64 == s.degree[0] + 1,
                    format!("A1 slice {:?} has dim {}", s.degree, s.dim),
                )?;
            }
        }
        ensure(
            rep.multiplicities.iter().all(|m| m.count == m.kostant),
            format!("{name}: multiplicities"),
        )?;
        ensure(rep.pass, format!("{name}: report fails"))?;
        slices += rep.slices.len();
    }
    Ok(format!(
        "{slices} slices direct and exhaustive, multiplicities equal Kostant"
    ))
}

fn yd_suite() -> Outcome {
    let mut pairs = 0;
    for r in [4, 5] {
        let h = FiniteHopf::of_type("A1", r).map_err(|e| e.to_string())?;
        let rep = yd::scan(&h, 3).map_err(|e| e.to_string())?;
        ensure(
            rep.all_yd_ok,
            format!("r={r}: some H_(beta,g) fails a check"),
        )?;
        ensure(
            rep.all_round_trip,
            format!("r={r}: readout does not round-trip"),
        )?;
        ensure(rep.readouts_distinct, format!("r={r}: readouts collide"))?;
        pairs += rep.rows.len();
    }
    Ok(format!(
        "{pairs} pairs pass both compatibility checks and round-trip"
    ))
}

fn run_cli(args: &[&str], cache: &std::path::Path) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_borelq"))
        .args(args)
        .env("BORELQ_CACHE_DIR", cache)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn parser_and_cli() -> Outcome {
    let corpus = include_str!("../../core/tests/data/expr_corpus.txt");
    let mut n = 0;
    for line in corpus.lines().filter(|l| !l.trim().is_empty()) {
        let e = expr::parse(line).map_err(|e| format!("{line}: {e}"))?;
        let p = e.to_string();
        let again = expr::parse(&p).map_err(|e| format!("{p}: {e}"))?;
        ensure(
            again == e && again.to_string() == p,
            format!("not a fixpoint: {line}"),
        )?;
        n += 1;
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let serre = "E1*E1*E2 - (q+q^-1)*E1*E2*E1 + E2*E1*E1";
    let (code, out) = run_cli(&["nf", serre, "--type", "A2"], dir.path());
    ensure(
        code == 0 && out == b"0\n",
        format!("serre nf gave {:?}", String::from_utf8_lossy(&out)),
    )?;
    let runs: [&[&str]; 4] = [
        &["--json", "nf", "(E1 + K2)^3 E2", "--type", "A2"],
        &["--json", "pbw", "--type", "B2", "--height", "3"],
        &["--json", "rmatrix", "classify", "--grid", "default"],
        &["--json", "yd", "scan", "--type", "A1", "--r", "4"],
    ];
    for args in runs {
        let first = run_cli(args, dir.path());
        let second = run_cli(args, dir.path());
        ensure(
            first.0 == 0 && first == second,
            format!("{args:?} is not reproducible"),
        )?;
    }
    Ok(format!(
        "{n} corpus expressions are fixpoints, Serre evaluates to 0, repeated runs identical"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("graded dimensions", graded_dimensions),
        ("PBW basis", pbw_basis),
        ("Hopf axioms", hopf_axioms),
        ("smash product", smash_product),
        ("generic R-matrix kernel", generic_kernel),
        ("R-matrix classification", classification),
        ("Verma tensor decomposition", verma_decomposition),
        ("Yetter-Drinfel'd suite", yd_suite),
        ("parser and CLI determinism", parser_and_cli),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
