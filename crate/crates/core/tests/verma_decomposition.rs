use borelq::repmod::tensor_of_type;

#[test]
fn a1_cutoff_6() {
    let rep = tensor_of_type("A1", 6).unwrap().decompose().unwrap();
    assert!(rep.pass);
    for s in &rep.slices {
        assert_eq!(s.dim as i64, s.degree[0] + 1);
    }
}

#[test]
fn a2_cutoff_4() {
    let rep = tensor_of_type("A2", 4).unwrap().decompose().unwrap();
    assert!(rep.pass);
    assert!(rep.multiplicities.iter().all(|m| m.count == m.kostant));
}
