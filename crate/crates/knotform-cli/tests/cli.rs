use std::process::Command;

use knotform_cli::run;
use serde_json::Value;

fn knotform(args: &[&str]) -> knotform_cli::Output {
    let mut v = vec!["knotform"];
    v.extend_from_slice(args);
    run(v)
}

fn json_of(args: &[&str]) -> Value {
    let mut v = vec!["--json"];
    v.extend_from_slice(args);
    let out = knotform(&v);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let s: Value = serde_json::from_str(include_str!("../schema/output.schema.json")).unwrap();
    jsonschema::JSONSchema::compile(&s).unwrap()
}

fn assert_valid(v: &Value) {
    let s = schema();
    let msgs: Vec<String> = match s.validate(v) {
        Ok(()) => return,
        Err(errs) => errs.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("{}\n{}", msgs.join("\n"), serde_json::to_string_pretty(v).unwrap());
}

#[test]
fn torus_blanchfield_text() {
    let out = knotform(&["blanchfield", "--builtin", "torus:2,3"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().any(|l| l == "Bl(g,g) = 1 mod t^2 - t + 1"), "{}", out.stdout);
}

#[test]
fn twisted_alex_12a169() {
    let out = knotform(&["twisted-alex", "--builtin", "12a169", "--rep", "builtin:chi5"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("primitive: 4*t^2 + (z^3+z^2+5)*t + 4"), "{}", out.stdout);
    assert!(out.stdout.contains("a = 1, N = 2"));
}

#[test]
fn diagram_file_matches_builtin() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/trefoil.xrl");
    let a = json_of(&["blanchfield", "--diagram", path]);
    let b = json_of(&["blanchfield", "--builtin", "trefoil"]);
    assert_eq!(a["result"]["gram"], b["result"]["gram"]);
}

#[test]
fn every_json_output_validates() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["color", "--builtin", "fig8"],
        vec!["color", "--builtin", "trefoil", "--quandle", "F_7,t=3"],
        vec!["pairing", "--builtin", "fig8-adjoint:1,zeta3", "--value-at", "t=0.5+0.5i"],
        vec!["pairing", "--builtin", "12a169", "--rep", "builtin:chi5"],
        vec!["blanchfield", "--builtin", "torus:2,5"],
        vec!["cup-product", "--builtin", "fig8-adjoint:1,zeta3"],
        vec!["twisted-alex", "--builtin", "12a169", "--rep", "builtin:chi5"],
        vec!["cg-signature", "--builtin", "12a169", "--rep", "builtin:chi5", "--w", "-0.6+0.8i"],
        vec!["seifert", "--matrix", "builtin:trefoil"],
        vec!["crosscheck", "--builtin", "trefoil", "--matrix", "builtin:trefoil"],
        vec!["quandle-invariant", "--builtin", "trefoil", "--quandle", "F_7,T=0,1;6,0", "--psi", "1,1;6,1"],
        vec!["builtin", "list"],
    ];
    for c in cases {
        let v = json_of(&c);
        assert_valid(&v);
    }
    let mut bad = json_of(&["seifert", "--matrix", "builtin:fig8"]);
    bad["result"]["genus"] = Value::from("one");
    assert!(!schema().is_valid(&bad));
}

#[test]
fn sweep_json_validates_even_when_flagged() {
    let out = knotform(&["--json", "cg-signature", "--builtin", "12a169", "--rep", "builtin:chi5", "--sweep", "24"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_valid(&v);
    assert_eq!(v["result"]["samples"].as_array().unwrap().len(), 24);
}

#[test]
fn text_and_json_agree() {
    let text = knotform(&["twisted-alex", "--builtin", "12a169", "--rep", "builtin:chi5"]).stdout;
    let j = json_of(&["twisted-alex", "--builtin", "12a169", "--rep", "builtin:chi5"]);
    let line = |k: &str| text.lines().find_map(|l| l.strip_prefix(k)).unwrap().to_string();
    assert_eq!(line("Delta = "), j["result"]["polynomial"].as_str().unwrap());
    assert_eq!(line("primitive: "), j["result"]["primitive"].as_str().unwrap());
    let roots: Vec<String> = text.lines().filter_map(|l| l.strip_prefix("root: ")).map(String::from).collect();
    for (r, jr) in roots.iter().zip(j["result"]["roots"].as_array().unwrap()) {
        let z = knotform_cli::parse_complex(r).unwrap();
        assert!((z.re - jr["re"].as_f64().unwrap()).abs() < 1e-9);
        assert!((z.im - jr["im"].as_f64().unwrap()).abs() < 1e-9);
    }

    let text = knotform(&["pairing", "--builtin", "fig8-adjoint:1,zeta3"]).stdout;
    let j = json_of(&["pairing", "--builtin", "fig8-adjoint:1,zeta3"]);
    let entry = text.lines().find_map(|l| l.strip_prefix("Q(g,g) = ")).unwrap();
    let (val, modulus) = entry.split_once(" mod ").unwrap();
    assert_eq!(val, j["result"]["gram"][0][0].as_str().unwrap());
    assert_eq!(modulus, j["result"]["modulus"].as_str().unwrap());

    let text = knotform(&["seifert", "--matrix", "builtin:trefoil"]).stdout;
    let j = json_of(&["seifert", "--matrix", "builtin:trefoil"]);
    let sig: i64 = text.lines().find_map(|l| l.strip_prefix("signature of V+V': ")).unwrap().parse().unwrap();
    assert_eq!(sig, j["result"]["classical_signature"].as_i64().unwrap());

    let text = knotform(&["cg-signature", "--builtin", "12a169", "--rep", "builtin:chi5", "--w", "-0.6+0.8i"]).stdout;
    let j = json_of(&["cg-signature", "--builtin", "12a169", "--rep", "builtin:chi5", "--w", "-0.6+0.8i"]);
    let v: f64 = text.lines().find_map(|l| l.strip_prefix("difference = ")).unwrap().parse().unwrap();
    assert!((v - j["result"]["value"].as_f64().unwrap()).abs() < 1e-9);
}

#[test]
fn exit_codes() {
    assert_eq!(knotform(&["bogus"]).code, 2);
    assert_eq!(knotform(&["blanchfield"]).code, 2);
    assert_eq!(knotform(&["blanchfield", "--builtin", "nope"]).code, 2);
    assert_eq!(knotform(&["blanchfield", "--builtin", "trefoil", "--diagram", "x"]).code, 2);
    assert_eq!(knotform(&["pairing", "--builtin", "trefoil", "--psi", "wrong"]).code, 2);
    assert_eq!(knotform(&["--help"]).code, 0);
    let failed = knotform(&["crosscheck", "--builtin", "trefoil", "--matrix", "builtin:fig8"]);
    assert_eq!(failed.code, 1);
    assert!(failed.stdout.contains("mismatch"), "{}", failed.stdout);
    let premise = knotform(&["quandle-invariant", "--builtin", "trefoil", "--quandle", "F_7,t=3", "--psi", "xy"]);
    assert_eq!(premise.code, 1);
    assert!(premise.stderr.contains("not a quandle 2-cocycle"));
}

#[test]
fn nongeneric_w_prints_question_mark() {
    let out = knotform(&["cg-signature", "--builtin", "12a169", "--rep", "builtin:chi5", "--w", "-1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("difference = ?"));
}

#[test]
fn csv_rows() {
    let out = knotform(&["cg-signature", "--builtin", "12a169", "--rep", "builtin:chi5", "--sweep", "12", "--csv"]);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("theta,value"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 12);
    assert!(rows[0].ends_with(",?"), "w = 1 is a breakpoint");
}

#[test]
fn jobs() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/");
    let out = knotform(&["job", &format!("{dir}job_blanchfield.json")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("Bl(g,g) = 1 mod t^2 - t + 1"));
    let out = knotform(&["job", &format!("{dir}job_unknown_key.json")]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("colour"));
}

#[test]
fn deterministic_and_precision() {
    let a = knotform(&["--precision", "4", "twisted-alex", "--builtin", "12a169", "--rep", "builtin:chi5"]);
    let b = knotform(&["--precision", "4", "twisted-alex", "--builtin", "12a169", "--rep", "builtin:chi5"]);
    assert_eq!(a, b);
    assert!(a.stdout.contains("root: -0.4227-0.9062i"), "{}", a.stdout);
}

#[test]
fn binary_reads_precision_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_knotform"))
        .args(["twisted-alex", "--builtin", "12a169", "--rep", "builtin:chi5"])
        .env("KNOTFORM_PRECISION", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("root: -0.42-0.91i"));
    let bad = Command::new(env!("CARGO_BIN_EXE_knotform")).args(["builtin", "list"]).env("KNOTFORM_PRECISION", "lots").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
