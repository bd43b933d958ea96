use borelq::yd::{scan, FiniteHopf};

#[test]
fn a1_r5_scan_round_trips() {
    let h = FiniteHopf::of_type("A1", 5).unwrap();
    let rep = scan(&h, 3).unwrap();
    assert_eq!(rep.rows.len(), 25);
    assert!(
        rep.all_yd_ok,
        "{:?}",
        rep.rows.iter().filter(|r| !r.yd_ok).collect::<Vec<_>>()
    );
    assert!(rep.all_round_trip);
    assert!(rep.readouts_distinct);
}

#[test]
fn a1_r4_scan_round_trips() {
    let h = FiniteHopf::of_type("A1", 4).unwrap();
    let rep = scan(&h, 3).unwrap();
    assert_eq!(rep.rows.len(), 4);
    assert!(rep.all_yd_ok && rep.all_round_trip && rep.readouts_distinct);
}
