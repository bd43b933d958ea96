use borelq::algebra::BorelAlgebra;
use borelq::cartan::degrees_of_height;

fn check_dims(name: &str, max_height: i64) {
    let alg = BorelAlgebra::of_type(name).unwrap();
    for h in 0..=max_height {
        for eta in degrees_of_height(alg.rank(), h) {
            let b = alg.graded_basis(&eta).unwrap();
            assert_eq!(
                b.dim() as u64,
                alg.frame().kostant_dim(&eta),
                "{name} {eta}"
            );
        }
    }
}

#[test]
fn a1_up_to_height_6() {
    check_dims("A1", 6);
}

#[test]
fn a2_up_to_height_6() {
    check_dims("A2", 6);
}

#[test]
fn b2_up_to_height_6() {
    check_dims("B2", 6);
}

#[test]
fn g2_up_to_height_5() {
    check_dims("G2", 5);
}

#[test]
fn pbw_monomials_form_a_basis() {
    for name in ["A2", "B2"] {
        let alg = BorelAlgebra::of_type(name).unwrap();
        let data = alg.pbw_data().unwrap();
        for (v, beta) in data.root_vectors.iter().zip(&alg.frame().betas) {
            assert!(v.keys().all(|m| m.k.is_zero() && m.degree() == *beta));
        }
        for h in 1..=5 {
            for eta in degrees_of_height(alg.rank(), h) {
                let change = alg.pbw_change(&eta).unwrap();
                assert_eq!(change.keys.len() as u64, alg.frame().kostant_dim(&eta));
            }
        }
    }
}
