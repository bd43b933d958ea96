use borelq::algebra::BorelAlgebra;
use borelq::expr::{eval, parse, Expr, GenKind, Op};
use num_bigint::BigInt;
use proptest::prelude::*;

const CORPUS: &str = include_str!("data/expr_corpus.txt");

#[test]
fn corpus_is_a_fixpoint() {
    let mut n = 0;
    for line in CORPUS.lines().filter(|l| !l.trim().is_empty()) {
        let e = parse(line).unwrap_or_else(|err| panic!("{line}: {err}"));
        let printed = e.to_string();
        let again = parse(&printed).unwrap();
        assert_eq!(again, e, "{line}");
        assert_eq!(again.to_string(), printed);
        n += 1;
    }
    assert_eq!(n, 200);
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..20).prop_map(|v| Expr::Int(BigInt::from(v))),
        Just(Expr::Q),
        (0usize..3, 0usize..3).prop_map(|(k, i)| {
            let kind = [GenKind::E, GenKind::F, GenKind::K][k];
            Expr::Gen(kind, i)
        }),
    ];
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            (inner.clone(), -3i64..4).prop_map(|(b, e)| Expr::Pow(Box::new(b), e)),
            inner.clone().prop_map(|x| Expr::Neg(Box::new(x))),
            prop::collection::vec((prop::bool::ANY, inner.clone()), 2..4).prop_map(|fs| {
                Expr::Product(
                    fs.into_iter()
                        .enumerate()
                        .map(|(n, (d, f))| (if d && n > 0 { Op::Div } else { Op::Mul }, f))
                        .collect(),
                )
            }),
            prop::collection::vec(inner, 2..4).prop_map(Expr::Sum),
        ]
    })
}

proptest! {
    #[test]
    fn print_parse_is_identity(e in arb_expr()) {
        let printed = e.to_string();
        let back = parse(&printed).unwrap();
        prop_assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn evaluation_ignores_bracketing(word in prop::collection::vec(0usize..4, 1..6), split in 0usize..6) {
        let alg = BorelAlgebra::of_type("A2").unwrap();
        let names: Vec<&str> = word.iter().map(|&g| ["E1", "E2", "K1", "K2^-1"][g]).collect();
        let flat = names.join(" ");
        let s = split.min(names.len());
        let grouped = format!("({}) ({})", if s == 0 { "1".to_string() } else { names[..s].join("*") },
            if s == names.len() { "1".to_string() } else { names[s..].join(" ") });
        let a = eval(&alg, &parse(&flat).unwrap()).unwrap();
        let b = eval(&alg, &parse(&grouped).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}
