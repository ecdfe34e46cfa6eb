use std::process::{Command, Output};

use grothmn::cli::render::{expansion_from_json, expansion_json, poly_from_json, poly_json};

fn grothmn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grothmn")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = grothmn(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    grothmn(args).status.code().unwrap()
}

#[test]
fn classical_example_has_four_signed_terms() {
    assert_eq!(
        stdout(&["expand", "--lambda", "2,1", "--k", "3", "--n", "5", "--mode", "classical"]),
        "p3 * s(2,1) = s(5,1) - s(3,3) - s(2,2,2) + s(2,1,1,1,1)\n"
    );
}

#[test]
fn stable_example_latex() {
    let s = stdout(&["expand", "--lambda", "3,2,1", "--k", "3", "--n", "3", "--mode", "stable", "--format", "latex"]);
    let (lhs, rhs) = s.trim_end().split_once(" = ").unwrap();
    assert_eq!(lhs, r"p_{3}(X^{3}) G^{\beta}_{(3,2,1)}(X^{3})");
    let g = |nu: &str| format!(r"G^{{\beta}}_{{({nu})}}(X^{{3}})");
    let mut expected = vec![
        format!("+{}", g("6,2,1")),
        format!("-{}", g("4,4,1")),
        format!(r"-\beta {}", g("5,4,1")),
        format!(r"+\beta^{{2}} {}", g("5,5,1")),
        format!("-{}", g("3,3,3")),
        format!(r"+\beta^{{2}} {}", g("4,4,3")),
        format!(r"-\beta^{{3}} {}", g("4,4,4")),
    ];
    let normalised = format!("+{}", rhs).replace(" + ", "\n+").replace(" - ", "\n-");
    let mut got: Vec<String> = normalised.lines().map(String::from).collect();
    got.sort();
    expected.sort();
    assert_eq!(got, expected);
}

#[test]
fn proposition_row_json_has_three_terms() {
    let s = stdout(&[
        "expand", "--lambda", "3,2,1", "--k", "3", "--n", "3", "--mode", "stable", "--row", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["row"], 2);
    let terms = v["terms"].as_array().unwrap();
    let nus: Vec<&serde_json::Value> = terms.iter().map(|t| &t["nu"]).collect();
    assert_eq!(nus, [&serde_json::json!([4, 4, 1]), &serde_json::json!([5, 4, 1]), &serde_json::json!([5, 5, 1])]);
    assert_eq!(terms[1]["coeff"], serde_json::json!([{"a": 0, "b": 1, "c": "-1"}]));
}

#[test]
fn json_output_round_trips_byte_for_byte() {
    for args in [
        vec!["expand", "--lambda", "3,2,1", "--k", "3", "--n", "3", "--mode", "canonical", "--format", "json"],
        vec!["expand", "--lambda", "2,1", "--k", "3", "--n", "5", "--mode", "classical", "--format", "json"],
        vec!["expand", "--lambda", "", "--k", "2", "--n", "2", "--format", "json"],
    ] {
        let s = stdout(&args);
        let e = expansion_from_json(&s).unwrap();
        assert_eq!(format!("{}\n", expansion_json(&e)), s);
    }
    let s = stdout(&["poly", "--lambda", "2,1", "--n", "2", "--construction", "hvt", "--cap", "5", "--format", "json"]);
    let p = poly_from_json(&s).unwrap();
    assert_eq!(format!("{}\n", poly_json(&p)), s);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["verify", "--k-max", "2", "--n-max", "2", "--format", "json"];
    assert_eq!(grothmn(&args).stdout, grothmn(&args).stdout);
    let args = ["tableaux", "--lambda", "2,1", "--n", "3", "--family", "hvt", "--cap", "4"];
    assert_eq!(grothmn(&args).stdout, grothmn(&args).stdout);
}

#[test]
fn poly_examples() {
    assert_eq!(stdout(&["poly", "--lambda", "1", "--n", "2", "--construction", "svt"]), "x1 + x2 + b*x1*x2\n");
    assert_eq!(
        stdout(&["poly", "--lambda", "1", "--n", "1", "--construction", "hvt", "--cap", "3"]),
        "x1 + a*x1^2 + a^2*x1^3\n"
    );
    assert_eq!(stdout(&["poly", "--lambda", "", "--n", "2", "--construction", "det"]), "1\n");
    assert_eq!(
        stdout(&["poly", "--lambda", "1", "--n", "2", "--construction", "svt", "--format", "latex"]),
        "x_{1} + x_{2} + \\beta x_{1} x_{2}\n"
    );
}

#[test]
fn tableaux_examples() {
    assert_eq!(stdout(&["tableaux", "--lambda", "2,1", "--n", "3", "--family", "ssyt", "--count-only"]), "8\n");
    assert_eq!(stdout(&["tableaux", "--lambda", "1", "--n", "2", "--family", "svt"]), "1\n1(|2)\n2\n");
    assert_eq!(stdout(&["tableaux", "--lambda", "1,1,1", "--n", "2", "--family", "ssyt", "--count-only"]), "0\n");
}

#[test]
fn verify_examples() {
    let out = grothmn(&["verify", "--max-box", "3x3", "--k-max", "4", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let last = text.lines().last().unwrap();
    let total: usize = last.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!(total >= 500, "{last}");
    assert!(last.ends_with(" 0 failed"), "{last}");

    let s = stdout(&["verify", "--identity", "lemma", "--gamma", "1,0", "--r", "1", "--n", "2"]);
    assert_eq!(s, "PASS lemma gamma=(1,0) r=1 n=2\nchecked 1 instances: 1 passed, 0 failed\n");

    let out = grothmn(&["verify", "--self-test"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("FAIL theorem_stable_mutant "), "{text}");
    assert!(text.contains(" witness ["), "{text}");
}

#[test]
fn verify_json_report() {
    let s = stdout(&["verify", "--identity", "construction", "--n-max", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["kind"], "verify_report");
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["total"], v["results"].as_array().unwrap().len());
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["expand", "--lambda", "1,2", "--k", "1", "--n", "2"]), 2);
    assert_eq!(code(&["expand", "--lambda", "x", "--k", "1", "--n", "2"]), 2);
    assert_eq!(code(&["expand", "--lambda", "1", "--k", "0", "--n", "2"]), 2);
    assert_eq!(code(&["expand", "--lambda", "1", "--k", "1", "--n", "2", "--row", "0"]), 2);
    assert_eq!(code(&["poly", "--lambda", "1", "--n", "2", "--construction", "subst"]), 2);
    assert_eq!(code(&["tableaux", "--lambda", "1", "--n", "2", "--family", "hvt"]), 2);
    assert_eq!(code(&["verify", "--format", "latex"]), 2);
    assert_eq!(code(&["verify", "--max-box", "0x3"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("grothmn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.txt");
    let out =
        grothmn(&["poly", "--lambda", "1", "--n", "2", "--construction", "schur", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "x1 + x2\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn show_vanishing_lists_zero_coefficients() {
    let s = stdout(&["expand", "--lambda", "1", "--k", "3", "--n", "2", "--show-vanishing"]);
    assert!(s.lines().nth(1).unwrap().starts_with("vanishing: "), "{s}");
}
