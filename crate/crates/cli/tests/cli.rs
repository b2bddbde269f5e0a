use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn funbox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_funbox")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json_file(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_then_compute() {
    let dir = tempfile::tempdir().unwrap();
    let q3 = dir.path().join("q3.json");
    assert_eq!(code(&funbox(&["gen", "hypercube", "--n", "3", "-o", s(&q3)])), 0);
    let g = json_file(&q3);
    assert_eq!(g["n"], 8);
    assert_eq!(g["edges"].as_array().unwrap().len(), 12);
    assert_eq!(g["labels"]["5"], "Q:101");

    let out = funbox(&["compute", "fun-vertex", "-i", s(&q3), "--x", "0"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["fun"], 1);
    assert_eq!(v["witness"]["args"], serde_json::json!([7]));
    assert_eq!(v["witness"]["table_bits"], "10");

    let out = funbox(&["compute", "sd-pair", "-i", s(&q3), "--x", "0", "--y", "7"]);
    assert_eq!(serde_json::from_slice::<Value>(&out.stdout).unwrap()["sd"], 6);
    for mode in [&[][..], &["--sequential"][..]] {
        let mut args = vec!["compute", "sd-graph", "-i", s(&q3)];
        args.extend_from_slice(mode);
        let out = funbox(&args);
        assert_eq!(code(&out), 0);
        assert!(serde_json::from_slice::<Value>(&out.stdout).unwrap()["sd"].is_u64());
    }
}

#[test]
fn max_n_env_controls_the_guard() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    funbox(&["gen", "random", "--n", "13", "--seed", "3", "-o", s(&g)]);
    let blocked = funbox(&["compute", "fun-graph", "-i", s(&g)]);
    assert_eq!(code(&blocked), 2);
    assert!(String::from_utf8_lossy(&blocked.stderr).contains("FUNBOX_MAX_N"));
    let out = Command::new(env!("CARGO_BIN_EXE_funbox"))
        .args(["compute", "fun-graph", "-i", s(&g)])
        .env("FUNBOX_MAX_N", "13")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn realize_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let abc = dir.path().join("abc.json");
    assert_eq!(code(&funbox(&["gen", "abc", "--n", "6", "--seed", "4", "-o", s(&abc)])), 0);
    let boxes = dir.path().join("boxes.json");
    assert_eq!(code(&funbox(&["realize", "abc-units", "-i", s(&abc), "-o", s(&boxes)])), 0);
    let b = json_file(&boxes);
    assert_eq!(b["d"], 2);
    assert_eq!(b["scale_denominator"], 24);
    assert_eq!(b["boxes"].as_array().unwrap().len(), 18);

    let iv = dir.path().join("iv.json");
    assert_eq!(code(&funbox(&["realize", "abc-intervals", "-i", s(&abc), "-o", s(&iv)])), 0);
    let w = funbox(&["witness", "interval", "-i", s(&iv)]);
    assert_eq!(code(&w), 0);
    let w: Value = serde_json::from_slice(&w.stdout).unwrap();
    assert!(w["args"].as_array().unwrap().len() <= 8);

    let plane = dir.path().join("plane.json");
    assert_eq!(code(&funbox(&["realize", "pointbox-plane", "--n", "2", "--level", "2", "-o", s(&plane)])), 0);
    assert_eq!(json_file(&plane)["points"].as_array().unwrap().len(), 4);
    let r3 = funbox(&["realize", "pointbox-r3", "-i", s(&plane)]);
    assert_eq!(code(&r3), 0);
    let r3: Value = serde_json::from_slice(&r3.stdout).unwrap();
    assert_eq!(r3["d"], 3);
    assert_eq!(r3["boxes"].as_array().unwrap().len(), 8);

    // a half graph is not an ABC graph
    let half = dir.path().join("half.json");
    funbox(&["gen", "half", "--n", "3", "-o", s(&half)]);
    assert_eq!(code(&funbox(&["realize", "abc-units", "-i", s(&half)])), 2);
}

#[test]
fn verify_and_report_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let raw = dir.path().join("raw.json");
    fs::write(&cfg, format!(r#"{{"seed": 1, "sizes": [9, 20], "trials": 8, "output": "{}"}}"#, s(&raw))).unwrap();
    assert_eq!(code(&funbox(&["verify", "thm-fun8", "--config", s(&cfg)])), 0);
    let report = json_file(&raw);
    assert_eq!(report["campaign"], "thm-fun8");
    assert_eq!(report["summary"]["instances"], 8);
    assert_eq!(report["config"]["seed"], 1);
    assert!(report["version"].is_string());

    let md = funbox(&["report", "--in", s(&raw), "--format", "md"]);
    assert_eq!(code(&md), 0);
    assert!(String::from_utf8_lossy(&md.stdout).starts_with("# Campaign `thm-fun8`: PASS"));

    // a report with a failing record re-renders with exit code 1
    let mut failed = report.clone();
    failed["records"][0]["pass"] = Value::Bool(false);
    failed["summary"]["passed"] = 7.into();
    failed["summary"]["failed"] = 1.into();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, failed.to_string()).unwrap();
    let out = funbox(&["report", "--in", s(&bad), "--format", "md"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("## Failures"));

    // usage and config errors
    assert_eq!(code(&funbox(&["verify", "no-such", "--config", s(&cfg)])), 2);
    fs::write(&cfg, r#"{"seed": 1, "sizes": [4], "trials": 0}"#).unwrap();
    assert_eq!(code(&funbox(&["verify", "lemma-sd", "--config", s(&cfg)])), 2);
    assert_eq!(code(&funbox(&["verify", "lemma-sd"])), 2);
}

#[test]
fn same_seed_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"seed": 77, "sizes": [6, 9], "trials": 10}"#).unwrap();
    let strip = |out: Output| {
        let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
        v["elapsed_ms"] = 0.into();
        for r in v["records"].as_array_mut().unwrap() {
            r["elapsed_us"] = 0.into();
        }
        v.to_string()
    };
    let a = strip(funbox(&["verify", "threshold-fun0", "--config", s(&cfg)]));
    let b = strip(funbox(&["verify", "threshold-fun0", "--config", s(&cfg), "--sequential"]));
    assert_eq!(a, b);
}
