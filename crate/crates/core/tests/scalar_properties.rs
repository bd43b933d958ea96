use proptest::prelude::*;

use borelq::scalars::{cyclotomic_field, Cyclotomic, IntLaurent, RatFunc};

fn laurent() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 1..=3).prop_map(|terms| {
        terms.into_iter().fold(RatFunc::zero(), |acc, (c, e)| {
            &acc + &RatFunc::from_int(c).shifted(e)
        })
    })
}

fn nonzero_laurent() -> impl Strategy<Value = RatFunc> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_field_laws(a in laurent(), b in laurent(), c in nonzero_laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let quotient = &a * &c.inv().unwrap();
        prop_assert_eq!(&quotient * &c, a);
    }

    #[test]
    fn evaluation_is_a_ring_map(r in 3u32..=12, a in laurent(), b in laurent()) {
        let f = cyclotomic_field(r);
        let ea = Cyclotomic::eval_ratfunc(&f, &a).unwrap();
        let eb = Cyclotomic::eval_ratfunc(&f, &b).unwrap();
        prop_assert_eq!(Cyclotomic::eval_ratfunc(&f, &(&a * &b)).unwrap(), ea.mul(&eb));
        prop_assert_eq!(Cyclotomic::eval_ratfunc(&f, &(&a + &b)).unwrap(), ea.add(&eb));
    }

    #[test]
    fn zeta_has_exact_order(r in 2u32..=16, e in -40i64..=40) {
        let f = cyclotomic_field(r);
        prop_assert_eq!(Cyclotomic::zeta_pow(&f, e), Cyclotomic::zeta_pow(&f, e + r as i64));
        prop_assert_eq!(Cyclotomic::zeta_pow(&f, e).is_one(), e.rem_euclid(r as i64) == 0);
    }

    #[test]
    fn nonzero_cyclotomics_invert(r in 3u32..=12, a in nonzero_laurent()) {
        let f = cyclotomic_field(r);
        let x = Cyclotomic::eval_laurent(&f, a.as_laurent().unwrap());
        prop_assume!(!x.is_zero());
        prop_assert!(x.mul(&x.inv().unwrap()).is_one());
    }
}

#[test]
fn laurent_is_reexported() {
    let x: IntLaurent = RatFunc::q_pow(2).as_laurent().unwrap().clone();
    assert_eq!(RatFunc::from(x), RatFunc::q_pow(2));
}
