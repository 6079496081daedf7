use std::process::Command;

use hirzebruch::cli::{self, OutputRecord, RunOutcome, Scalar};

fn run(args: &[&str]) -> RunOutcome {
    let mut argv = vec!["hirz"];
    argv.extend_from_slice(args);
    cli::run(argv)
}

fn json(args: &[&str]) -> OutputRecord {
    let mut full = args.to_vec();
    full.extend_from_slice(&["--format", "json"]);
    let out = run(&full);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid JSON record")
}

fn int(rec: &OutputRecord, row: usize, key: &str) -> i64 {
    match rec.results[row].get(key) {
        Some(Scalar::Int(n)) => *n,
        other => panic!("{key}: {other:?}"),
    }
}

#[test]
fn coh_single_class() {
    let rec = json(&["coh", "--e", "1", "--class", "1,1"]);
    assert_eq!(rec.command, "coh");
    assert_eq!((int(&rec, 0, "h0"), int(&rec, 0, "h1"), int(&rec, 0, "h2")), (3, 0, 0));
}

#[test]
fn coh_profile_with_negative_values() {
    let rec = json(&["coh", "--e", "2", "--class", "-3,-1", "--twist-by", "1,2", "--t", "-2..2"]);
    assert_eq!(rec.results.len(), 5);
    assert_eq!(int(&rec, 0, "t"), -2);
    for row in 0..5 {
        let chi = int(&rec, row, "h0") - int(&rec, row, "h1") + int(&rec, row, "h2");
        assert_eq!(chi, int(&rec, row, "chi"));
    }
}

#[test]
fn check_line_witness() {
    let rec = json(&["check", "--e", "2", "--line", "1,0", "--wrt", "M"]);
    let row = &rec.results[0];
    assert_eq!(row["holds"], Scalar::Bool(false));
    assert_eq!(row["verdict"], Scalar::Text("FAILS".into()));
    assert_eq!((int(&rec, 0, "witness_t"), int(&rec, 0, "witness_h0"), int(&rec, 0, "witness_h1")), (0, 1, 1));
}

#[test]
fn check_other_models() {
    let rec = json(&["check", "--e", "2", "--sum", "0,0;-2,2"]);
    assert_eq!(rec.results[0]["holds"], Scalar::Bool(false));
    let rec = json(&["check", "--e", "2", "--ideal", "section:1:1,1"]);
    assert_eq!(rec.results[0]["holds"], Scalar::Bool(false));
    let rec = json(&["check", "--e", "1", "--ideal", "general:5:2,1"]);
    assert_eq!(rec.results[0]["holds"], Scalar::Bool(true));
    let rec = json(&["check", "--e", "1", "--line", "1,2", "--wrt", "1,4", "--pp"]);
    assert_eq!(rec.results[0]["holds"], Scalar::Bool(false));
    let rec = json(&["check", "--e", "1", "--line", "2,1", "--wrt", "R"]);
    assert_eq!(rec.results[0]["holds"], Scalar::Bool(true));
}

#[test]
fn check_extension() {
    let rec = json(&["check", "--e", "2", "--extension", "2,1,0,0", "--evidence"]);
    assert_eq!(rec.results[0]["verdict"], Scalar::Text("FAILS".into()));
    assert_eq!((int(&rec, 0, "witness_t"), int(&rec, 0, "witness_h0"), int(&rec, 0, "witness_h1")), (0, 3, 1));
    assert!(rec.results.len() > 1);
    assert!(!rec.findings.is_empty());
    let rec = json(&["check", "--e", "1", "--extension", "2,1,0,2"]);
    assert_eq!(rec.results[0]["verdict"], Scalar::Text("HOLDS".into()));
}

#[test]
fn construct_reports_certificates() {
    let rec = json(&["construct", "--e", "1", "--u", "3", "--v", "2", "--m", "0", "--s", "3"]);
    let row = &rec.results[0];
    assert_eq!(row["section_min"], Scalar::Bool(true));
    assert_eq!(row["stable_R"], Scalar::Bool(true));
    assert_eq!(row["stable_M"], Scalar::Bool(true));
    let out = run(&["construct", "--e", "1", "--u", "2", "--v", "1", "--m", "0", "--s", "4"]);
    assert_eq!(out.code, cli::EXIT_DOMAIN);
    assert!(out.stderr.contains("s_out_of_range"));
}

#[test]
fn classify_and_enumerate() {
    let rec = json(&["classify", "--e", "1", "--r", "2", "--u", "2..2", "--v", "-1..1"]);
    let labels: Vec<_> = rec.results.iter().map(|r| r["label"].clone()).collect();
    assert_eq!(
        labels,
        vec![
            Scalar::Text("NONEXISTENT".into()),
            Scalar::Text("EXISTENT".into()),
            Scalar::Text("EXISTENT".into())
        ]
    );
    assert_eq!(rec.results[2]["witness"], Scalar::Text("1..24".into()));
    let out = run(&["enumerate", "--e", "1", "--r", "2", "--u", "2", "--v", "1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("u,v,label,witness\n"), "{}", out.stdout);
}

#[test]
fn audit_a3_confirms_for_each_e() {
    let rec = json(&["audit", "--claims", "a3", "--e", "1..4"]);
    assert_eq!(rec.results[0]["status"], Scalar::Text("agrees".into()));
    for e in 1..=4 {
        assert!(rec
            .findings
            .iter()
            .any(|f| f.contains(&format!("e={e}:")) && f.contains("fails £ at t=0") && f.contains("confirming")));
    }
}

#[test]
fn audit_is_deterministic() {
    let a = run(&["audit", "--format", "json"]);
    let b = run(&["audit", "--format", "json"]);
    assert_eq!(a.code, 0);
    assert_eq!(a, b);
    let rec: OutputRecord = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(rec.results.len(), 10);
}

#[test]
fn oracle_grid_exits_zero() {
    let out = run(&["oracle", "--e", "1..5", "--a", "-8..10", "--b", "-15..20"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let rec: OutputRecord = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(rec.results.len(), 5);
    assert_eq!(int(&rec, 0, "classes"), 19 * 36);
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["coh", "--e", "3", "--class", "2,-1", "--twist-by", "1,3", "--t", "0..3"],
        vec!["check", "--e", "2", "--extension", "3,3,0,3", "--evidence"],
        vec!["construct", "--e", "1", "--u", "3", "--v", "1", "--m", "0", "--s", "1"],
        vec!["audit", "--claims", "a2,o3"],
    ] {
        let rec = json(&args);
        let text = serde_json::to_string_pretty(&rec).unwrap() + "\n";
        let again: OutputRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(rec, again);
        let mut full = args.clone();
        full.extend_from_slice(&["--format", "json"]);
        assert_eq!(run(&full).stdout, text);
    }
}

#[test]
fn csv_and_json_agree() {
    for args in [
        vec!["coh", "--e", "2", "--class", "1,0", "--twist-by", "1,2", "--t", "-3..3"],
        vec!["check", "--e", "2", "--line", "1,0", "--evidence"],
        vec!["construct", "--e", "1", "--u", "3", "--v", "2", "--m", "0", "--s", "4"],
        vec!["classify", "--e", "2", "--r", "2", "--u", "-1..3", "--v", "-3..6"],
        vec!["oracle", "--e", "1..2", "--a", "-2..2", "--b", "-2..2"],
    ] {
        let rec = json(&args);
        let mut full = args.clone();
        full.extend_from_slice(&["--format", "csv"]);
        let out = run(&full);
        assert_eq!(out.code, 0);
        let rows = OutputRecord::rows_from_csv(&out.stdout).unwrap();
        assert_eq!(rows, rec.results, "{args:?}");
    }
}

#[test]
fn csv_renders_verdict_labels() {
    let out = run(&["check", "--e", "1", "--line", "1,1", "--format", "csv"]);
    assert!(out.stdout.contains(",HOLDS,"), "{}", out.stdout);
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        vec!["coh", "--e", "1", "--class", "1;1"],
        vec!["coh", "--e", "1", "--class", "a,1"],
        vec!["oracle", "--e", "3..1", "--a", "0..1", "--b", "0..1"],
        vec!["check", "--e", "1"],
        vec!["check", "--e", "1", "--line", "1,1", "--sum", "0,0"],
        vec!["frobnicate"],
        vec!["audit", "--claims", "z9"],
        vec!["check", "--e", "1", "--ideal", "curve:1:1,1"],
    ] {
        let out = run(&args);
        assert_eq!(out.code, cli::EXIT_USAGE, "{args:?}: {}", out.stderr);
        assert_eq!(out.stderr.trim_end().lines().count(), 1, "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty());
    }
    let out = run(&["coh", "--e", "1", "--class", "1,zz"]);
    assert!(out.stderr.contains("zz"));
}

#[test]
fn domain_errors_exit_3() {
    for args in [
        vec!["coh", "--e", "0", "--class", "1,1"],
        vec!["coh", "--e", "-2", "--class", "1,1"],
        vec!["coh", "--e", "1", "--class", "2000000,1"],
        vec!["classify", "--e", "1", "--r", "3", "--u", "0..1", "--v", "0..1"],
        vec!["check", "--e", "1", "--line", "1,1", "--wrt", "1,0"],
        vec!["construct", "--e", "1", "--u", "2", "--v", "-1", "--m", "0", "--s", "0"],
    ] {
        let out = run(&args);
        assert_eq!(out.code, cli::EXIT_DOMAIN, "{args:?}: {}", out.stderr);
    }
}

#[test]
fn binary_matches_library() {
    let out = Command::new(env!("CARGO_BIN_EXE_hirz"))
        .args(["coh", "--e", "1", "--class", "1,1", "--format", "table"])
        .env_remove(cli::FORMAT_ENV)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, run(&["coh", "--e", "1", "--class", "1,1", "--format", "table"]).stdout);

    let out = Command::new(env!("CARGO_BIN_EXE_hirz"))
        .args(["coh", "--e", "1", "--class", "1,1"])
        .env(cli::FORMAT_ENV, "csv")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("a,b,h0,h1,h2,chi\n"));

    let out = Command::new(env!("CARGO_BIN_EXE_hirz"))
        .args(["coh", "--e", "0", "--class", "1,1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(cli::EXIT_DOMAIN));
}
