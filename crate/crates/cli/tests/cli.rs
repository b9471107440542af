use std::process::{Command, Output};

use serde_json::Value;

fn modforms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modforms")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn coeffs(v: &Value) -> Vec<String> {
    v["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect()
}

fn strip_runtime(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("runtime_ms").expect("runtime field present");
    v
}

#[test]
fn eis_json_uses_fraction_strings() {
    let v = json_of(&modforms(&["eis", "--weight", "4", "--prec", "3", "--json"]));
    assert_eq!(v["weight"], 4);
    assert_eq!(v["series"]["prec"], 3);
    assert_eq!(coeffs(&v["series"]), ["1/1", "240/1", "2160/1", "6720/1"]);
    let v = json_of(&modforms(&["eis", "--weight", "2", "--prec", "2", "--json"]));
    assert_eq!(coeffs(&v["series"]), ["1/1", "-24/1", "-72/1"]);
}

#[test]
fn delta_text_and_json() {
    let out = modforms(&["delta", "--weight", "12", "--prec", "4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "Delta12 = q - 24q^2 + 252q^3 - 1472q^4 + O(q^5)");
    let v = json_of(&modforms(&["delta", "--weight", "16", "--prec", "2", "--json"]));
    assert_eq!(coeffs(&v["series"]), ["0/1", "1/1", "216/1"]);
    assert_eq!(modforms(&["delta", "--weight", "14", "--prec", "4"]).status.code(), Some(2));
}

#[test]
fn hecke_on_names_and_expressions_agree() {
    let by_name = json_of(&modforms(&["hecke", "--input", "E8", "--n", "2", "--prec", "20", "--json"]));
    let by_expr = json_of(&modforms(&["hecke", "--input", "(E4)^2", "--n", "2", "--prec", "20", "--json"]));
    assert_eq!(by_name["result"], by_expr["result"]);
    assert_eq!(by_name["result"]["series"]["prec"], 10);
    // T_2 E8 = sigma_7(2) E8 = 129 E8
    assert_eq!(coeffs(&by_name["result"]["series"])[..2], ["129/1", "61920/1"]);
    assert!(by_name["warning"].is_null());
}

#[test]
fn hecke_warns_when_precision_is_below_n() {
    let out = modforms(&["hecke", "--input", "E4", "--n", "7", "--prec", "3", "--json"]);
    let v = json_of(&out);
    assert!(v["warning"].as_str().unwrap().contains("prec 3 < n 7"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(v["result"]["series"]["prec"], 0);
}

#[test]
fn hecke_on_e2_star_keeps_the_convention() {
    let v = json_of(&modforms(&["hecke", "--input", "E2star", "--n", "3", "--prec", "12", "--json"]));
    assert_eq!(v["result"]["convention"], "Y=1/(pi*Im z)");
    let comps = v["result"]["components"].as_array().unwrap();
    assert_eq!(coeffs(&comps[1]), ["-12/1", "0/1", "0/1", "0/1", "0/1"]);
}

#[test]
fn eigen_reports_witnesses() {
    let v = json_of(&modforms(&["eigen", "--input", "E2*E4", "--json"]));
    let r = &v["report"];
    assert_eq!(r["is_eigen_up_to_bound"], false);
    let w = &r["first_violation"];
    assert_eq!((w["n"].as_u64(), w["exponent"].as_u64()), (Some(2), Some(1)));
    assert_ne!(w["expected"], w["actual"]);

    let v = json_of(&modforms(&["eigen", "--input", "Delta12", "--json"]));
    let lambdas: Vec<&str> = v["report"]["eigenvalues"].as_array().unwrap().iter().map(|e| e["lambda"].as_str().unwrap()).collect();
    assert_eq!(lambdas[..4], ["1/1", "-24/1", "252/1", "-1472/1"]);

    let v = json_of(&modforms(&["eigen", "--input", "E2*", "--json"]));
    assert_eq!(v["report"]["is_eigen_up_to_bound"], true);
    let v = json_of(&modforms(&["eigen", "--input", "1/1728 * E2 * (E4^3 - E6^2)", "--json"]));
    assert_eq!(v["report"]["is_eigen_up_to_bound"], true);
}

#[test]
fn eigen_rejects_low_precision() {
    let out = modforms(&["eigen", "--input", "E4", "--prec", "50"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("insufficient precision"));
}

#[test]
fn bracket_e4_e6_is_a_multiple_of_delta() {
    let v = json_of(&modforms(&["bracket", "--g", "E4", "--h", "E6", "--m", "1", "--prec", "30", "--json"]));
    assert_eq!(v["result"]["weight"], 12);
    assert_eq!(coeffs(&v["result"]["series"])[..4], ["0/1", "-3456/1", "82944/1", "-870912/1"]);
    assert_eq!(v["modular_basis"], serde_json::json!(["E4^3", "E6^2"]));
    assert_eq!(v["modular_coordinates"], serde_json::json!(["-2/1", "2/1"]));
}

#[test]
fn decompose_splits_e2_e4() {
    // E2 E4 = E6 + 3 D(E4)
    let v = json_of(&modforms(&["decompose", "--expr", "E2*E4", "--weight", "6", "--depth", "1", "--json"]));
    let parts = v["parts"].as_array().unwrap();
    assert_eq!(parts[0]["terms"], serde_json::json!([{ "monomial": "E6", "coeff": "1/1" }]));
    assert_eq!(parts[1]["terms"], serde_json::json!([{ "monomial": "E4", "coeff": "3/1" }]));
    let text = modforms(&["decompose", "--expr", "E2*E4", "--weight", "6", "--depth", "1"]);
    assert_eq!(String::from_utf8(text.stdout).unwrap().trim(), "D^0[ (1)*E6 ] + D^1[ (3)*E4 ]");
}

#[test]
fn decompose_errors() {
    let wrong_weight = modforms(&["decompose", "--expr", "E2*E4", "--weight", "8", "--depth", "1"]);
    assert_eq!(wrong_weight.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&wrong_weight.stderr).contains("weight 6"));
    let mixed = modforms(&["decompose", "--expr", "E4 + E6", "--weight", "6", "--depth", "1"]);
    assert!(String::from_utf8_lossy(&mixed.stderr).contains("not weight-homogeneous"));
    let too_deep = modforms(&["decompose", "--expr", "E2*E4", "--weight", "6", "--depth", "3"]);
    assert_eq!(too_deep.status.code(), Some(2));
    let bad = modforms(&["decompose", "--expr", "E2*E8", "--weight", "10", "--depth", "1"]);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("parse error at byte 4"));
}

#[test]
fn verify_report_schema() {
    let v = json_of(&modforms(&["verify", "--suite", "ghitza", "--json"]));
    let obj = v.as_object().unwrap();
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    assert_eq!(keys, ["suite", "checks", "passed", "failed", "runtime_ms"]);
    assert_eq!(v["suite"], "ghitza");
    assert_eq!((v["passed"].as_u64(), v["failed"].as_u64()), (Some(6), Some(0)));
    for c in v["checks"].as_array().unwrap() {
        let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["id", "anchor", "pass", "witness"]);
        assert!(c["witness"].is_object() || c["witness"].is_null());
    }
    let d16 = &v["checks"][0]["witness"];
    assert_eq!((d16["n"].as_u64(), d16["a_n(Delta_k)"].as_str()), (Some(2), Some("216/1")));
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let first = modforms(&["verify", "--suite", "all", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0));
    let a = strip_runtime(json_of(&first));
    assert_eq!(a["suite"], "all");
    assert_eq!(a["failed"], 0);
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(strip_runtime(file), a);
    let b = strip_runtime(json_of(&modforms(&["verify", "--suite", "all", "--json"])));
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn verify_exit_code_tracks_failures() {
    // Below B*M = 120 the product candidates cannot be tested, so checks fail.
    let out = modforms(&["verify", "--suite", "products", "--prec", "60"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL  products:hit-set"));
    assert_eq!(modforms(&["verify", "--suite", "diophantine"]).status.code(), Some(0));
    assert_eq!(modforms(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}
