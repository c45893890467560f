use std::process::Command;

use posetlab_cli::expr::{parse, Expr};
use posetlab_core::FamilySpec;
use proptest::prelude::*;

fn posetlab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_posetlab")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn whitney_and_report() {
    assert_eq!(posetlab(&["whitney", "B(2)[2]"]), (0, "(1,2,3,2,1)\n".into(), String::new()));
    let (code, out, _) = posetlab(&["report", "ex2[2]"]);
    assert_eq!(code, 0);
    assert!(out.contains("rank_unimodal     false  witness triple (2,3,4)"), "{out}");
    let (code, out, _) = posetlab(&["report", "I(1)[2]", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["poset"]["whitney"], serde_json::json!([1, 2, 2]));
    assert_eq!(v["properties"]["normal"]["verdict"], "true");
}

#[test]
fn exit_codes() {
    assert_eq!(posetlab(&["check", "B(3)[2]", "--property", "sperner"]).0, 0);
    assert_eq!(posetlab(&["check", "ex1[2]", "--property", "symmetric"]).0, 1);
    let (code, _, err) = posetlab(&["check", "B(3", "--property", "normal"]);
    assert_eq!(code, 2);
    assert!(err.contains("offset 3"), "{err}");
    assert_eq!(posetlab(&["check", "B(1)", "--property", "bogus"]).0, 2);
    assert_eq!(posetlab(&["whitney", "load(\"/nonexistent.json\")"]).0, 3);
    assert_eq!(posetlab(&["iso", "B(2)[2]", "T(2)*T(2)"]).0, 0);
    assert_eq!(posetlab(&["iso", "ex1", "ex2"]).0, 1);
}

#[test]
fn dot_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b2.dot");
    let (code, out, _) = posetlab(&["dot", "B(2)", "-o", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(text.matches(" -> ").count(), 4);
    assert_eq!(text.matches("rank=same").count(), 3);
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0usize..5).prop_map(|k| Expr::Family(FamilySpec::Total { k })),
        (0usize..5).prop_map(|n| Expr::Family(FamilySpec::Boolean { n })),
        (0usize..4).prop_map(|n| Expr::Family(FamilySpec::Isotropic { n })),
        (0usize..3, 1usize..4).prop_map(|(n, m)| Expr::Family(FamilySpec::IsotropicGeneral { n, m })),
        Just(Expr::Family(FamilySpec::ExampleSym)),
        Just(Expr::Family(FamilySpec::ExampleUni)),
        "[a-z0-9_./ ]{1,12}".prop_map(Expr::Load),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), 1usize..5).prop_map(|(e, k)| Expr::Chain(Box::new(e), k)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Prod(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #[test]
    fn print_parse_round_trip(e in arb_expr()) {
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
    }
}
