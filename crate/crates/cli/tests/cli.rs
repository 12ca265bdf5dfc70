use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vir25"))
        .args(args)
        .env_remove("VIR25_ORDER")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn weight() {
    let v = json(&["weight", "--t", "-1", "--r", "2", "--s", "1"]);
    assert_eq!(v["command"], "weight");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["output"]["h"], "-5/4");
    assert_eq!(v["inputs"]["t"], "-1");
}

#[test]
fn rigidity() {
    let v = json(&["rigidity"]);
    assert_eq!(v["output"]["c3"], "9/32");
    assert_eq!(v["output"]["R"], "1/2");
    assert_eq!(v["output"]["chain"]["pairings"]["L-3"], "-11/2");
    assert_eq!(v["output"]["chain"]["pairings"]["L-1L-2"], "17/4");
}

#[test]
fn fusion_and_induction() {
    assert_eq!(
        json(&["fuse", "--r", "1", "--rp", "9"])["output"],
        serde_json::json!({"9": 1})
    );
    assert_eq!(
        json(&["fuse", "--r", "2", "--rp", "2"])["output"],
        serde_json::json!({"1": 1, "3": 1})
    );
    assert_eq!(json(&["induce", "--r", "4"])["output"]["module"], "X");
    assert_eq!(
        json(&["induce", "--r", "2", "--rp", "2"])["output"],
        serde_json::json!({"1": 1, "3": 1})
    );
    assert_eq!(
        json(&["centralizer-fusion", "--r", "2", "--rp", "3"])["output"],
        serde_json::json!({"2": 1, "4": 1})
    );
    let g = json(&["generic-fusion", "--a", "2,1,1", "--b", "2,2,1"]);
    assert_eq!(g["output"].as_array().unwrap().len(), 2);
    let d = json(&["decompose", "--algebra", "W(-1)", "--count", "3"]);
    assert_eq!(d["output"][2]["lowest_weight"], "-8");
}

#[test]
fn module_data() {
    let g = json(&[
        "gram",
        "--c",
        "25",
        "--h",
        "-3",
        "--quotient-level",
        "3",
        "--level",
        "3",
    ]);
    assert_eq!(
        g["output"]["entries"],
        serde_json::json!([["32", "2"], ["2", "-55"]])
    );
    let s = json(&["singular", "--c", "25", "--h", "-5/4", "--level", "2"]);
    assert_eq!(s["output"].as_array().unwrap().len(), 1);
    let d = json(&[
        "dual-basis",
        "--c",
        "25",
        "--h",
        "-3",
        "--quotient-level",
        "3",
        "--level",
        "3",
    ]);
    assert_eq!(d["output"][0][0]["coeff"]["re"], "55/1764");
    let c = json(&["character", "--c", "25", "--h", "0", "--order", "4"]);
    assert_eq!(c["inputs"]["order"], 4);
}

#[test]
fn order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_vir25"))
        .args(["character", "--c", "25", "--h", "0"])
        .env("VIR25_ORDER", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["inputs"]["order"], 3);
    let v = json(&["--order", "5", "character", "--c", "25", "--h", "0"]);
    assert_eq!(v["inputs"]["order"], 5);
}

#[test]
fn category_commands() {
    let b = json(&["braiding"]);
    assert_eq!(b["output"]["solution_count"], 2);
    assert_eq!(b["output"]["mutual_inverses"], true);
    assert_eq!(
        json(&["twist", "--c", "25", "--r", "3"])["output"]["theta"]["re"],
        "1"
    );
    assert_eq!(
        json(&["parity-check", "--r", "3"])["output"]["integral"],
        true
    );
    assert_eq!(
        json(&["parity-check", "--r", "4"])["output"]["integral"],
        false
    );
    let bpz = json(&["bpz", "--order", "6"]);
    assert_eq!(bpz["output"]["solutions"].as_array().unwrap().len(), 2);
}

#[test]
fn emitted_rationals_parse_back() {
    fn walk(v: &Value) {
        match v {
            Value::String(s)
                if s.chars()
                    .next()
                    .is_some_and(|c| c.is_ascii_digit() || c == '-') =>
            {
                if s.chars()
                    .all(|c| c.is_ascii_digit() || c == '-' || c == '/')
                {
                    vir25::scalar::parse_rational(s).unwrap();
                }
            }
            Value::Array(a) => a.iter().for_each(walk),
            Value::Object(o) => o.values().for_each(walk),
            _ => {}
        }
    }
    walk(&json(&["rigidity"]));
    walk(&json(&[
        "dual-basis",
        "--c",
        "25",
        "--h",
        "-3",
        "--quotient-level",
        "3",
        "--level",
        "3",
    ]));
}

#[test]
fn output_is_deterministic() {
    assert_eq!(run(&["braiding"]).stdout, run(&["braiding"]).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&["weight", "--t", "1/x", "--r", "1", "--s", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["weight", "--t", "0", "--r", "1", "--s", "1"])
            .status
            .code(),
        Some(2)
    );
    let out = run(&["fuse", "--r", "0", "--rp", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["status"]["error"]
        .as_str()
        .unwrap()
        .starts_with("domain error"));
}

#[test]
fn reproduction_suite() {
    let out = run(&["paper-suite"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["output"]["all_passed"], true);
    assert!(v["output"]["checks"].as_array().unwrap().len() >= 20);
}

#[test]
fn text_and_latex() {
    let out = run(&["--format", "text", "fuse", "--r", "2", "--rp", "2"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        "L(1,1) ⊕ L(3,1)"
    );
    let out = run(&[
        "--format", "latex", "singular", "--c", "25", "--h", "-5/4", "--level", "2",
    ]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("L_{-"));
}
