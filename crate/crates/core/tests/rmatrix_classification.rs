use borelq::cartan::CartanDatum;
use borelq::rmatrix::{
    classify, default_grid, solve_finite, solve_generic, sweedler_r, verify_qcc, QuotientSpec,
};
use borelq::yd::FiniteHopf;

#[test]
fn default_grid_has_one_positive_case() {
    let rows = classify(&default_grid()).unwrap();
    let positive: Vec<_> = rows.iter().filter(|r| r.invertible_exists).collect();
    assert_eq!(positive.len(), 1);
    assert_eq!((positive[0].type_name.as_str(), positive[0].r), ("A1", 4));
    for r in rows.iter().filter(|r| r.d <= r.d0) {
        assert!(!r.valid);
    }
}

#[test]
fn sweedler_r_is_triangular() {
    let h = FiniteHopf::of_type("A1", 4).unwrap();
    let r = sweedler_r(h.field()).to_tensor(1);
    let rep = verify_qcc(&h, &r, 2).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.triangular);
    let spec = QuotientSpec::new(&CartanDatum::parse("A1").unwrap(), 4).unwrap();
    let witness = solve_finite(&spec)
        .unwrap()
        .witness_coeffs
        .unwrap()
        .to_tensor(1);
    assert_eq!(witness, r);
}

#[test]
fn generic_kernels() {
    assert_eq!(
        solve_generic(&CartanDatum::parse("A1").unwrap(), 3).kernel_dim,
        0
    );
    assert_eq!(
        solve_generic(&CartanDatum::parse("A2").unwrap(), 2).kernel_dim,
        0
    );
}
