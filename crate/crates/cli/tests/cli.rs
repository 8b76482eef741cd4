use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motivic-zeta")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn output_is_byte_stable() {
    let cases: Vec<Vec<String>> = vec![
        vec!["motive".into(), "zeta".into(), "--in".into(), fixture("elliptic_f5_motive.json")],
        vec!["variety".into(), "weil".into(), "--in".into(), fixture("elliptic_f5.json"), "--dim".into(), "1".into()],
        vec!["hw".into(), "poles".into(), "--in".into(), fixture("p1.json"), "--q".into(), "5".into()],
        vec!["numk0".into(), "compute".into(), "--in".into(), fixture("beilinson_p2.json")],
        vec!["regdet-check".into(), "--in".into(), fixture("p1.json"), "--q".into(), "5".into(), "--seed".into(), "7".into()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stdout));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(a.stdout.ends_with(b"}\n"));
    }
}

#[test]
fn envelope_shape() {
    let out = run(&["motive", "zeta", "--in", &fixture("p1.json"), "--precision", "4"]);
    let v = json(&out);
    assert_eq!(v["status"], "ok");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["payload", "status"]);
    assert_eq!(v["payload"]["series"]["coeffs"].as_array().unwrap().len(), 5);
}

#[test]
fn exit_codes_follow_error_class() {
    let missing = run(&["motive", "zeta", "--in", "/nonexistent/motive.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert_eq!(json(&missing)["status"], "validation_error");

    let bad = scratch("bad_motive.json");
    std::fs::write(&bad, r#"{"f_plus": [[1, 2]], "f_minus": []}"#).unwrap();
    let malformed = run(&["motive", "zeta", "--in", bad.to_str().unwrap()]);
    assert_eq!(malformed.status.code(), Some(1));
    assert_eq!(json(&malformed)["payload"]["input"], bad.to_str().unwrap());

    let budget = run(&["variety", "count", "--in", &fixture("p2_f5.json"), "--budget", "3"]);
    assert_eq!(budget.status.code(), Some(2));
    let v = json(&budget);
    assert_eq!(v["status"], "resource_error");
    assert_eq!(v["payload"]["kind"], "resource");

    let pole = run(&["hw", "eval", "--in", &fixture("p1.json"), "--q", "5", "--re", "1", "--im", "0"]);
    assert_eq!(pole.status.code(), Some(3));
    let v = json(&pole);
    assert_eq!(v["status"], "numeric_error");
    assert_eq!(v["payload"]["detail"]["nearest_pole"]["re"], 1.0);
}

#[test]
fn toml_and_json_inputs_agree() {
    let a = run(&["variety", "count", "--in", &fixture("p1_f5.toml"), "--nmax", "3"]);
    let b = run(&["variety", "count", "--in", &fixture("p1_f5.json"), "--nmax", "3"]);
    assert!(a.status.success());
    assert_eq!(json(&a)["payload"]["counts"], json(&b)["payload"]["counts"]);
    assert_eq!(json(&a)["payload"]["counts"], serde_json::json!([6, 26, 126]));
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("zeta.json");
    let _ = std::fs::remove_file(&path);
    let out = run(&["motive", "zeta", "--in", &fixture("p1.json"), "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let direct = run(&["motive", "zeta", "--in", &fixture("p1.json")]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn thread_count_does_not_change_results() {
    let base = run(&["variety", "zeta", "--in", &fixture("elliptic_f7.json"), "--nmax", "4", "--threads", "1"]);
    for t in ["2", "4"] {
        for s in ["exhaustive", "fibered", "auto"] {
            let other = run(&["variety", "zeta", "--in", &fixture("elliptic_f7.json"), "--nmax", "4", "--threads", t, "--strategy", s]);
            assert_eq!(base.stdout, other.stdout, "threads {t}, strategy {s}");
        }
    }
}

#[test]
fn measure_commands() {
    let v = json(&run(&["measure", "eval", "--in", &fixture("class_p2.json"), "--q", "4"]));
    assert_eq!(v["payload"]["mu_count"], "21");
    assert_eq!(v["payload"]["mu_rig"], "3");
    let w = run(&["measure", "witness", "--n", "2", "--q", "3"]);
    assert!(w.status.success());
    let w = json(&w);
    assert_eq!(w["payload"]["nc_equal"], true);
    assert_eq!(w["payload"]["count_differs"], true);
    let bad_q = run(&["measure", "eval", "--in", &fixture("class_p2.json"), "--q", "6"]);
    assert_eq!(bad_q.status.code(), Some(1));
}
