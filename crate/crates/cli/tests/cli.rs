use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ajw(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ajw"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().expect("stdin");
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).expect("write stdin");
        }
    }
    child.wait_with_output().expect("binary finishes")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

const SIGMA3: &str = r#"{"picture":"spin","terms":[{"coeff":[1,0],"factors":[{"site":0,"axis":3}]}]}"#;

#[test]
fn transform_sigma3_to_fermion() {
    let out = ajw(&["transform", "--direction", "to-fermion"], Some(SIGMA3));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let terms = v["output"]["terms"].as_array().unwrap();
    assert_eq!(v["output"]["picture"], "fermion");
    assert_eq!(terms.len(), 2);
    let number = terms.iter().find(|t| t["factors"].as_array().unwrap().len() == 2).unwrap();
    assert_eq!(number["coeff"], serde_json::json!([2.0, 0.0]));
    assert_eq!(number["factors"][0], serde_json::json!({"site": 0, "dagger": true}));
    assert_eq!(number["factors"][1], serde_json::json!({"site": 0, "dagger": false}));
}

#[test]
fn transform_round_trip_via_pipes() {
    let spec = r#"{"picture":"spin","terms":[
        {"coeff":[1.5,0],"factors":[{"site":0,"axis":1},{"site":1,"axis":1}]},
        {"coeff":[0.5,0],"factors":[{"site":0,"axis":2},{"site":1,"axis":2}]},
        {"coeff":[0,-1],"factors":[{"site":-1,"axis":3}]}]}"#;
    let there = ajw(&["transform", "--direction", "to-fermion"], Some(spec));
    assert!(there.status.success());
    let fermion = serde_json::to_string(&json(&there)["output"]).unwrap();
    let back = ajw(&["transform", "--direction", "to-spin"], Some(&fermion));
    assert!(back.status.success(), "{}", String::from_utf8_lossy(&back.stderr));
    let got = &json(&back)["output"]["terms"];
    let want: serde_json::Value = serde_json::from_str(spec).unwrap();
    let mut got: Vec<String> = got.as_array().unwrap().iter().map(canonical).collect();
    let mut want: Vec<String> = want["terms"].as_array().unwrap().iter().map(canonical).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

fn canonical(t: &serde_json::Value) -> String {
    let c = t["coeff"].as_array().unwrap();
    format!("{:?} {}", c.iter().map(|x| x.as_f64().unwrap()).collect::<Vec<_>>(), t["factors"])
}

#[test]
fn empty_spec_transforms_to_empty() {
    let out = ajw(&["transform", "--direction", "to-fermion"], Some(r#"{"picture":"spin","terms":[]}"#));
    assert!(out.status.success());
    assert_eq!(json(&out)["output"]["terms"], serde_json::json!([]));
}

#[test]
fn verify_car_full_range() {
    let out = ajw(&["verify", "car", "--range", "-6:6"], None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    let sym = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "car.symbolic").unwrap();
    assert_eq!(sym["cases"], 169);
    assert_eq!(sym["passed"], true);
}

#[test]
fn verify_norms_includes_the_value_two() {
    let out = ajw(&["verify", "norms"], None);
    assert!(out.status.success());
    let v = json(&out);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "norms.z_string_difference" && c["passed"] == true));
}

#[test]
fn verify_jw_window_four() {
    let out = ajw(&["verify", "jw", "--window", "4"], None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "jw.vartheta_multiplicative" && c["passed"] == true));
}

#[test]
fn verify_is_deterministic() {
    let a = ajw(&["verify", "all", "--range", "-3:3", "--seed", "7"], None);
    let b = ajw(&["verify", "all", "--range", "-3:3", "--seed", "7"], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn impossible_tolerance_fails_with_exit_one() {
    let out = ajw(&["verify", "norms", "--tol=-1"], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);
}

#[test]
fn norm_of_z_string_difference() {
    let spec = r#"{"picture":"spin","terms":[
        {"coeff":[1,0],"factors":[{"site":1,"axis":3},{"site":2,"axis":3},{"site":3,"axis":3}]},
        {"coeff":[-1,0],"factors":[{"site":1,"axis":3},{"site":2,"axis":3}]}]}"#;
    let out = ajw(&["norm"], Some(spec));
    assert!(out.status.success());
    assert!((json(&out)["norm"].as_f64().unwrap() - 2.0).abs() < 1e-10);
}

#[test]
fn norm_of_fermion_sum() {
    let spec = r#"{"picture":"fermion","terms":[
        {"coeff":[1,0],"factors":[{"site":0,"dagger":false}]},
        {"coeff":[1,0],"factors":[{"site":0,"dagger":true}]}]}"#;
    let out = ajw(&["norm"], Some(spec));
    assert!((json(&out)["norm"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn files_and_text_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("h.json");
    let output = dir.path().join("r.txt");
    std::fs::write(&input, SIGMA3).unwrap();
    let out = ajw(
        &["transform", "--direction", "to-fermion", "--in", input.to_str().unwrap(), "--out", output.to_str().unwrap(), "--output", "text"],
        None,
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(&output).unwrap();
    assert!(text.contains("2 * ad(0) a(0)"), "{text}");
    assert!(text.contains("all checks passed"));
}

#[test]
fn malformed_input_exits_two() {
    let out = ajw(&["norm"], Some("{not json"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    let out = ajw(&["transform", "--direction", "to-spin"], Some(SIGMA3));
    assert_eq!(out.status.code(), Some(2));
}
