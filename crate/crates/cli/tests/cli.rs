use std::io::Write;

use wqo_meter_cli::{exit, run_with_env};

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, None)
}

fn run_env(args: &[&str], seed: Option<&str>) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("wqo-meter").chain(args.iter().copied());
    let code = run_with_env(argv, seed.map(str::to_string), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn invariants_table() {
    let (code, out, _) = run(&["invariants", "(w+w)|(w+w)"]);
    assert_eq!(code, exit::OK);
    assert!(out.starts_with("o = w*4\nh = w*2\nw = 2\n"), "{out}");
}

#[test]
fn json_agrees_with_text() {
    let (_, out, _) = run(&["--json", "invariants", "Pf((w+w)|(w+w))"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["mot"]["value"], "w^2*4");
    assert_eq!(v["height"]["value"], "w*3");
    assert_eq!(v["width"]["value"], "w*3");
    let (_, text, _) = run(&["invariants", "Pf((w+w)|(w+w))"]);
    assert!(text.starts_with("o = w^2*4\nh = w*3\nw = w*3\n"));
}

#[test]
fn normalize_and_trace() {
    let (code, out, _) = run(&["normalize", "M(o(w^w)|o(w^w))"]);
    assert_eq!(code, exit::OK);
    assert_eq!(out, "M(o(w^w))*M(o(w^w))\n");
    let (_, out, _) = run(&[
        "normalize",
        "--trace",
        "--strategy",
        "outermost",
        "Pf(o(w^w)|o(w^w))",
    ]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("o(w^w)*o(w^w)"));
    assert!(lines.next().unwrap().contains("Pf-of-union at root"));
    let (_, out, _) = run(&["--json", "normalize", "--trace", "M(o(w^w)|o(w^w))"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["normal_form"], "M(o(w^w))*M(o(w^w))");
    assert!(!v["trace"].as_array().unwrap().is_empty());
}

#[test]
fn check_passes() {
    let (code, out, _) = run(&["check", "Pf(G(4))"]);
    assert_eq!(code, exit::OK);
    assert_eq!(out.matches("match").count(), 3, "{out}");
    let (code, out, _) = run(&["--json", "check", "Pf(G(4))"]);
    assert_eq!(code, exit::OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["oracle"]["width"], 6);
}

#[test]
fn random_check_is_seeded() {
    let a = run(&["check", "--random", "20", "--seed", "5"]);
    let b = run_env(&["check", "--random", "20", "--seed", "9"], Some("5"));
    assert_eq!(a.0, exit::OK);
    assert_eq!(a, b);
    assert!(a.1.contains("seed 5: 20 checked, 0 mismatched"));
    let (code, _, err) = run_env(&["check", "--random", "1"], Some("x"));
    assert_eq!(code, exit::PARSE);
    assert!(err.contains("WQO_METER_SEED"));
}

#[test]
fn bounds_and_weakmot() {
    let (code, out, _) = run(&["bounds", "G(3)"]);
    assert_eq!(code, exit::OK);
    assert!(
        out.starts_with("o = [4, 8]\nh = [2, 2*m] for some finite m\nw = >= 3\n"),
        "{out}"
    );
    let (code, out, _) = run(&["weakmot", "o(w^w)^<w"]);
    assert_eq!(code, exit::OK);
    assert_eq!(out, "w^w\n");
    let (code, _, err) = run(&["weakmot", "G(2)"]);
    assert_eq!(code, exit::HYPOTHESIS);
    assert!(err.contains("elementary"));
}

#[test]
fn oracle_on_expr_and_file() {
    let (code, out, _) = run(&["oracle", "Pf(G(3))"]);
    assert_eq!(code, exit::OK);
    assert!(out.contains("o = 8\nh = 4\nw = 3"));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"n": 4, "leq": [[0, 1], [1, 0], [1, 2]]}}"#).unwrap();
    let path = f.path().to_str().unwrap();
    let (code, out, _) = run(&["--json", "oracle", "--poset", path]);
    assert_eq!(code, exit::OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        (v["mot"].as_u64(), v["height"].as_u64(), v["width"].as_u64()),
        (Some(3), Some(2), Some(2))
    );
    let (code, out, _) = run(&["--word-len-cap", "2", "oracle", "G(2)^<w"]);
    assert_eq!(code, exit::OK);
    assert!(out.starts_with("size = 7\n"));
}

#[test]
fn iso_subcommand() {
    assert_eq!(run(&["iso", "Pf(3)", "4"]).1, "isomorphic\n");
    assert_eq!(run(&["iso", "G(2)", "2"]).1, "not isomorphic\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["invariants", "Pf("]).0, exit::PARSE);
    assert_eq!(run(&["frobnicate"]).0, exit::PARSE);
    assert_eq!(run(&["invariants", "w.o(w+1)"]).0, exit::HYPOTHESIS);
    assert_eq!(run(&["invariants", "Sim(w^2)"]).0, exit::HYPOTHESIS);
    assert_eq!(run(&["invariants", "Mn(w,2)"]).0, exit::UNSUPPORTED);
    assert_eq!(run(&["oracle", "Pf(G(20))"]).0, exit::TOO_LARGE);
    assert_eq!(run(&["oracle", "w"]).0, exit::UNSUPPORTED);
    assert_eq!(run(&["--help"]).0, exit::OK);
}

#[test]
fn deterministic_output() {
    for args in [
        &["--json", "invariants", "M(w)*Pf(o(w^w))"][..],
        &["normalize", "--trace", "Pf(M(o(w^w)|o(w^w^2)))"],
        &["--json", "check", "--random", "10", "--seed", "11"],
    ] {
        assert_eq!(run(args), run(args));
    }
}
