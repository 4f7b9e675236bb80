use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("verify binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn zero_elapsed(mut v: Value) -> Value {
    for claim in v["claims"].as_array_mut().unwrap() {
        claim["elapsed_ms"] = Value::from(0);
    }
    v
}

fn statuses(v: &Value) -> Vec<String> {
    v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["status"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn list_claims_covers_every_command() {
    let out = verify(&["list-claims"]);
    assert_eq!(out.status.code(), Some(0));
    let claims = json(&out);
    let claims = claims.as_array().unwrap();
    let ids: Vec<&str> = claims
        .iter()
        .map(|c| c["claim_id"].as_str().unwrap())
        .collect();
    for id in ["census", "pqrs", "p2qr", "thm26-final", "lemma34-a"] {
        assert!(ids.contains(&id), "{id} missing from {ids:?}");
    }
    let mut unique = ids.clone();
    unique.sort_unstable();
    unique.dedup();
    assert_eq!(unique.len(), ids.len());

    let text = verify(&["list-claims", "--format", "text"]);
    let text = String::from_utf8(text.stdout).unwrap();
    assert_eq!(text.lines().count(), ids.len());
    assert!(text.lines().all(|l| l.split('\t').count() == 4));
}

#[test]
fn census_reports_a_counterexample() {
    let out = verify(&["census", "--bound", "400", "--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(statuses(&report), ["refuted"]);
    let evidence = report["claims"][0]["evidence"].as_array().unwrap();
    let extras: Vec<&str> = evidence
        .iter()
        .filter_map(|e| e.get("counterexample"))
        .map(|c| c["label"].as_str().unwrap())
        .collect();
    assert_eq!(extras, ["Dic3"]);
}

#[test]
fn pqrs_and_p2qr_small_bounds_verify() {
    let out = verify(&["pqrs", "--bound", "210"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(statuses(&json(&out)), ["verified"]);

    let out = verify(&["p2qr", "--prime-bound", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(statuses(&json(&out)), ["verified"]);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(verify(&[]).status.code(), Some(2));
    assert_eq!(verify(&["census"]).status.code(), Some(2));
    assert_eq!(verify(&["census", "--bound", "x"]).status.code(), Some(2));
    assert_eq!(
        verify(&["theorems", "--cache", "c", "--no-cache"])
            .status
            .code(),
        Some(2)
    );
    let out = verify(&[
        "census",
        "--bound",
        "10",
        "--out",
        "/nonexistent/dir/report.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("verify: "));
}

#[test]
fn out_file_and_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = verify(&[
        "p2qr",
        "--prime-bound",
        "7",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["claims"][0]["claim_id"], "p2qr");

    let out = verify(&["census", "--bound", "100", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.starts_with("VERIFIED  census") || text.starts_with("REFUTED   census"),
        "{text}"
    );
}

#[test]
fn cache_does_not_change_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let cache = cache.to_str().unwrap();
    let fresh = zero_elapsed(json(&verify(&["census", "--bound", "200", "--no-cache"])));
    let cold = zero_elapsed(json(&verify(&[
        "census", "--bound", "200", "--cache", cache,
    ])));
    assert!(fs::metadata(cache).unwrap().len() > 0);
    let warm = zero_elapsed(json(&verify(&[
        "census", "--bound", "200", "--cache", cache,
    ])));
    assert_eq!(fresh, cold);
    assert_eq!(fresh, warm);

    // a truncated or garbage line is skipped, not fatal
    let mut contents = fs::read_to_string(cache).unwrap();
    contents.push_str("{\"spec\": \"C6\", \"rep\nnot json at all\n");
    fs::write(cache, contents).unwrap();
    let out = verify(&["census", "--bound", "200", "--cache", cache]);
    assert_eq!(zero_elapsed(json(&out)), fresh);
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    let one = zero_elapsed(json(&verify(&["pqrs", "--bound", "1000", "--jobs", "1"])));
    let many = zero_elapsed(json(&verify(&["pqrs", "--bound", "1000", "--jobs", "4"])));
    assert_eq!(one, many);
    let a = zero_elapsed(json(&verify(&[
        "p2qr",
        "--prime-bound",
        "13",
        "--jobs",
        "2",
    ])));
    let b = zero_elapsed(json(&verify(&["p2qr", "--prime-bound", "13"])));
    assert_eq!(a, b);
}
