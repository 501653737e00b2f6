use std::process::{Command, Output};

use serde_json::Value;

fn bstir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bstir")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Vec<Value>) {
    let out = bstir(args);
    let doc: Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    (out.status.code().unwrap(), doc["records"].as_array().expect("records array").clone())
}

fn values(records: &[Value], key: &str) -> Vec<String> {
    records.iter().map(|r| r["values"][key].as_str().unwrap().to_string()).collect()
}

#[test]
fn tab_bernoulli() {
    let (code, recs) = json(&["tab", "bernoulli", "0..6"]);
    assert_eq!(code, 0);
    assert_eq!(values(&recs, "value"), ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42"]);
}

#[test]
fn tab_bernoulli_other_route() {
    let (code, recs) = json(&["tab", "bernoulli", "2..2", "--route", "det_tan"]);
    assert_eq!(code, 0);
    assert_eq!(values(&recs, "value"), ["1/6"]);
    assert_eq!(recs[0]["provenance"], "bernoulli:det-tan");
    let (_, recs) = json(&["tab", "bernoulli", "1..6", "--route", "rec_integral"]);
    assert_eq!(values(&recs, "value"), ["1/6", "-1/30", "1/42"]);
    assert_eq!(bstir(&["tab", "bernoulli", "0..1", "--route", "det_tan"]).status.code(), Some(2));
}

#[test]
fn tab_stirling2_row() {
    let (code, recs) = json(&["tab", "stirling2", "n=4"]);
    assert_eq!(code, 0);
    let row: Vec<&str> = recs[0]["values"]["row"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(row, ["0", "1", "7", "6", "1"]);
}

#[test]
fn tab_zeta_and_gen_bernoulli() {
    let (_, recs) = json(&["tab", "zeta_neg", "1..2"]);
    assert_eq!(values(&recs, "value"), ["-1/12", "1/120"]);
    let (_, recs) = json(&["tab", "gen_bernoulli", "0..2", "--r", "2"]);
    assert_eq!(values(&recs, "value"), ["1", "-1", "5/6"]);
    assert_eq!(bstir(&["tab", "gen_bernoulli", "0..2"]).status.code(), Some(2));
}

#[test]
fn expand_examples() {
    let (code, recs) = json(&["expand", "sqrt_log1p_over_x", "0..2"]);
    assert_eq!(code, 0);
    assert_eq!(values(&recs, "coeff"), ["1", "-1/4", "13/96"]);
    assert!(recs.iter().all(|r| r["values"]["pass"] == true));

    let (code, recs) = json(&["expand", "expm1_over_x_pow_r", "--r=-1", "0..4"]);
    assert_eq!(code, 0);
    assert_eq!(values(&recs, "egf"), ["1", "-1/2", "1/6", "0", "-1/30"]);

    let (_, recs) = json(&["expand", "log_cosh", "0..3"]);
    assert_eq!(values(&recs, "coeff"), ["0", "0", "1/2", "0"]);
}

#[test]
fn expand_rejects_bad_parameters() {
    assert_eq!(bstir(&["expand", "log_cosh", "0..3", "--r", "2"]).status.code(), Some(2));
    assert_eq!(bstir(&["expand", "log1p_over_x_pow_r", "0..3"]).status.code(), Some(2));
    assert_eq!(bstir(&["expand", "log_cosh", "0..3", "--variant", "stirling1"]).status.code(), Some(2));
    assert_eq!(bstir(&["expand", "no_such_id"]).status.code(), Some(2));
}

#[test]
fn verify_passes_and_records_misprints() {
    let (code, recs) = json(&["verify", "--max-n", "10"]);
    assert_eq!(code, 0);
    let misprints: Vec<&Value> = recs.iter().filter(|r| r["inputs"]["check"] == "misprint").collect();
    assert_eq!(misprints.len(), 3);
    for m in misprints {
        assert_eq!(m["values"]["printed_pass"], false);
        assert_eq!(m["values"]["corrected_pass"], true);
    }
    let (code, recs) = json(&["verify", "--max-n", "1"]);
    assert_eq!(code, 0);
    assert!(!recs.is_empty());
}

#[test]
fn verify_reports_injected_fault() {
    let (code, recs) = json(&["verify", "--max-n", "3", "--inject-fault", "closed_eta"]);
    assert_eq!(code, 1);
    let failed: Vec<&Value> = recs.iter().filter(|r| r["values"]["pass"] == false).collect();
    assert!(!failed.is_empty());
    for f in failed {
        assert_eq!(f["inputs"]["route"], "closed_eta");
        assert_eq!(f["provenance"], "bernoulli:closed-eta-s2");
    }
}

#[test]
fn bench_records_and_caps() {
    for (kernel, size) in [("hessenberg", "50"), ("fps", "128"), ("bell", "30")] {
        let (code, recs) = json(&["bench", kernel, size]);
        assert_eq!(code, 0);
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0]["kind"], "benchmark");
        assert!(recs[0]["values"]["wall_time_ns"].is_u64());
    }
    for (kernel, size) in [("hessenberg", "201"), ("fps", "513"), ("bell", "41"), ("bell", "0")] {
        assert_eq!(bstir(&["bench", kernel, size]).status.code(), Some(2), "{kernel} {size}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(bstir(&["tab", "nonsense"]).status.code(), Some(2));
    assert_eq!(bstir(&["tab", "bernoulli", "4..1"]).status.code(), Some(2));
    assert_eq!(bstir(&["verify", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(bstir(&["verify", "--r", "1/0"]).status.code(), Some(2));
    assert_eq!(bstir(&["tab", "bernoulli", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(bstir(&[]).status.code(), Some(2));
}

#[test]
fn every_record_has_schema_fields() {
    for args in [
        &["tab", "stirling1", "0..3"][..],
        &["expand", "log_cos", "0..3"],
        &["verify", "--max-n", "2", "--r", "1/2"],
        &["bench", "bell", "5"],
    ] {
        let (_, recs) = json(args);
        for r in &recs {
            for key in ["kind", "inputs", "values", "provenance"] {
                assert!(r.get(key).is_some(), "{args:?} missing {key}");
            }
            assert!(!r["provenance"].as_str().unwrap().is_empty());
        }
    }
}

/// Flattens JSON records into the long CSV layout.
fn flatten(records: &[Value]) -> Vec<Vec<String>> {
    let text = |v: &Value| match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(|i| i.as_str().unwrap().to_string()).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    };
    let mut rows = Vec::new();
    for (i, r) in records.iter().enumerate() {
        for section in ["inputs", "values"] {
            for (k, v) in r[section].as_object().unwrap() {
                rows.push(vec![
                    i.to_string(),
                    r["kind"].as_str().unwrap().to_string(),
                    section.to_string(),
                    k.clone(),
                    text(v),
                    r["provenance"].as_str().unwrap().to_string(),
                ]);
            }
        }
    }
    rows
}

#[test]
fn csv_matches_json() {
    for args in [
        &["tab", "stirling2", "0..4"][..],
        &["expand", "log1p_over_x_pow_r", "0..5", "--r", "-1/2", "--variant", "mixed"],
        &["verify", "--max-n", "2", "--r", "2"],
    ] {
        let (_, recs) = json(args);
        let mut csv_args = args.to_vec();
        csv_args.extend(["--format", "csv"]);
        let out = bstir(&csv_args);
        let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
        let rows: Vec<Vec<String>> =
            reader.records().map(|r| r.unwrap().iter().map(str::to_string).collect()).collect();
        assert_eq!(rows, flatten(&recs), "{args:?}");
    }
}

#[test]
fn out_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("bstir-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("verify.json");
    let out = bstir(&["verify", "--max-n", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    let again = bstir(&["verify", "--max-n", "3"]).stdout;
    assert_eq!(first, again);
    std::fs::remove_dir_all(&dir).unwrap();
}
