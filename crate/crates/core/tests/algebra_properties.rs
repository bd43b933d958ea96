use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use borelq::algebra::{BorelAlgebra, ReducedElement, Word};
use borelq::cartan::RootVec;
use borelq::hopf::Hopf;
use borelq::lincomb::LinComb;
use borelq::scalars::RatFunc;

fn b2() -> &'static Hopf {
    static H: OnceLock<Hopf> = OnceLock::new();
    H.get_or_init(|| Hopf::new(BorelAlgebra::of_type("B2").unwrap()).unwrap())
}

fn alg() -> &'static Arc<BorelAlgebra> {
    b2().algebra()
}

type Term = (Vec<u8>, [i64; 2], i64, i64);

fn term() -> impl Strategy<Value = Term> {
    (
        prop::collection::vec(0u8..2, 0..=3),
        [-1i64..=1, -1i64..=1],
        -3i64..=3,
        -2i64..=2,
    )
}

fn element(terms: &[Term]) -> ReducedElement {
    let mut out = LinComb::zero();
    for (w, k, c, e) in terms {
        let x = alg()
            .word_k(&Word(w.clone()), &RootVec(k.to_vec()))
            .unwrap();
        out.add_scaled(&x, &RatFunc::from_int(*c).shifted(*e));
    }
    out
}

fn elem() -> impl Strategy<Value = ReducedElement> {
    prop::collection::vec(term(), 1..=2).prop_map(|t| element(&t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(x in elem(), y in elem(), z in elem()) {
        let a = alg();
        let left = a.mul(&a.mul(&x, &y).unwrap(), &z).unwrap();
        let right = a.mul(&x, &a.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn coproduct_is_an_algebra_map(x in elem(), y in elem()) {
        let h = b2();
        let lhs = h.delta(&alg().mul(&x, &y).unwrap()).unwrap();
        let rhs = h.tensor_mul(&h.delta(&x).unwrap(), &h.delta(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_is_multiplicative(x in elem(), y in elem()) {
        let h = b2();
        let lhs = h.counit(&alg().mul(&x, &y).unwrap());
        prop_assert_eq!(lhs, &h.counit(&x) * &h.counit(&y));
    }

    #[test]
    fn antipode_reverses_products(x in elem(), y in elem()) {
        let h = b2();
        let a = alg();
        let lhs = h.antipode(&a.mul(&x, &y).unwrap()).unwrap();
        let rhs = a.mul(&h.antipode(&y).unwrap(), &h.antipode(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_antipode_inverts(x in elem()) {
        let h = b2();
        prop_assert_eq!(&h.antipode(&h.antipode_inv(&x).unwrap()).unwrap(), &x);
        prop_assert_eq!(&h.antipode_inv(&h.antipode(&x).unwrap()).unwrap(), &x);
    }

    #[test]
    fn hopf_laws_hold(x in elem()) {
        prop_assert_eq!(b2().laws_on(&x).unwrap(), [true; 5]);
    }

    #[test]
    fn lift_then_reduce_is_identity(x in elem()) {
        let a = alg();
        prop_assert_eq!(a.reduce(&a.lift(&x)).unwrap(), x);
    }

    #[test]
    fn products_stay_homogeneous(s in term(), t in term()) {
        let a = alg();
        let x = element(std::slice::from_ref(&s));
        let y = element(std::slice::from_ref(&t));
        let want = &Word(s.0).degree(2) + &Word(t.0).degree(2);
        for (m, _) in &a.mul(&x, &y).unwrap() {
            prop_assert_eq!(m.degree(), want.clone());
        }
    }
}
