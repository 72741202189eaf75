use std::process::{Command, Output};

use arborium::cli::PolyJson;
use arborium::verify::Report;
use arborium::{Poly, Rat};
use serde_json::Value;

const SIZE_EIGHT: &str = "{1,2}({3}({6,7},{8}),{4,5})";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arborium"))
        .args(args)
        .env_remove("ARBORIUM_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn compute_single_invariants() {
    let cases = [
        (
            &["compute", "--tn", "2", "--invariant", "ehrhart"][..],
            "1 + 5/2*u + 3/2*u^2",
        ),
        (
            &["compute", "--arbor", "{1}", "--invariant", "laplace"][..],
            "V - V*E",
        ),
        (&["compute", "--tn", "3", "--invariant", "volume"][..], "2"),
        (
            &["compute", "--arbor", "{1}", "--invariant", "k"][..],
            "1 + X*Y",
        ),
        (
            &["compute", "--arbor", "{1}", "--invariant", "m"][..],
            "1 - Y + X*Y",
        ),
    ];
    for (args, want) in cases {
        let o = run(args);
        assert_eq!(code(&o), 0, "{args:?}");
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
}

#[test]
fn compute_json_parses_back() {
    let o = run(&[
        "compute",
        "--arbor",
        SIZE_EIGHT,
        "--invariant",
        "zeta,k,volume",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["size"], 8);
    assert!(v["invariants"]["volume"]["text"].is_string());
    for name in ["zeta", "k"] {
        let pj: PolyJson = serde_json::from_value(v["invariants"][name].clone()).unwrap();
        let p: Poly = pj.to_poly::<Rat>().unwrap();
        assert_eq!(p.to_string(), pj.text, "{name}");
    }
}

#[test]
fn verify_all_theorems_to_order_ten() {
    let o = run(&[
        "verify",
        "--theorem",
        "all",
        "--order",
        "10",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let reports: Vec<Report> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 4);
    for r in &reports {
        assert!(r.overall, "{}", r.theorem);
        assert_eq!(r.per_order.len(), 10);
    }
}

#[test]
fn order_comes_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_arborium"))
        .args(["verify", "--theorem", "zeta"])
        .env("ARBORIUM_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("theorem zeta to order 3: PASS"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--order", "0"][..],
        &["compute", "--arbor", "{1}("][..],
        &["compute", "--arbor", "{1,1}"][..],
        &["compute", "--arbor", "{1}", "--tn", "2"][..],
        &["tn", "0"][..],
    ] {
        let o = run(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn oracle_check_default_corpus() {
    let o = run(&["oracle-check"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 24);
    assert!(out.contains("24 of 24 arbors agree"));
}

#[test]
fn oracle_check_size_eight_json() {
    let o = run(&["oracle-check", "--arbor", SIZE_EIGHT, "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["overall"], true);
    assert_eq!(v["arbors"][0]["points"], 3464);
}

#[test]
fn injected_fault_is_reported() {
    let o = run(&["oracle-check", "--arbor", "{1}({2})", "--inject-fault"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.starts_with("FAIL {1}({2})"));
    assert!(out.contains("k_poly disagrees"));
}

#[test]
fn tn_matches_closed_forms() {
    let o = run(&["tn", "5"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("t_5 = "));
    assert!(!out.contains("!= closed form"), "{out}");
    assert!(out.contains("volume: 3"));
}
