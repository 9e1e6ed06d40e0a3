use std::path::PathBuf;
use std::process::{Command, Output};

use catalan_cli::report::{Record, Report};
use serde_json::json;

fn catalan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalan")).args(args).env_remove("CATALAN_THREADS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn parse(o: &Output) -> Report {
    let records: Vec<Record> = stdout(o).lines().map(|l| serde_json::from_str(l).expect("json record")).collect();
    Report::from_records(&records).expect("consistent record stream")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).expect("golden file")
}

#[test]
fn mordell_lists_five_solutions() {
    let o = catalan(&["--format", "json", "mordell", "--bound", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    let r = parse(&o);
    assert_eq!(r.results, [json!([-3, 2]), json!([-1, 0]), json!([0, -1]), json!([1, 0]), json!([3, 2])]);
}

#[test]
fn consecutive_powers_up_to_1e8() {
    let o = catalan(&["--format", "json", "consecutive-powers", "--max", "100000000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(parse(&o).results, [json!([8, 9])]);
}

#[test]
fn wieferich_up_to_5000() {
    let o = catalan(&["--format", "json", "wieferich", "--limit", "5000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(parse(&o).results, [json!([83, 4871])]);
}

#[test]
fn json_matches_golden_files() {
    let cases: [(&str, &[&str]); 7] = [
        ("mordell.jsonl", &["mordell", "--bound", "1_000"]),
        ("consecutive_powers.jsonl", &["consecutive-powers", "--max", "100_000_000"]),
        ("wieferich.jsonl", &["wieferich", "--limit", "5_000"]),
        ("fmn.jsonl", &["fmn", "--m", "5", "--n", "3", "--l", "2"]),
        ("factor_gaussian.jsonl", &["factor-gaussian", "--re", "5", "--im", "0"]),
        ("deduction.jsonl", &["deduction", "--q-limit", "1000"]),
        ("pell.jsonl", &["pell", "--d", "3", "--count", "4"]),
    ];
    for (file, args) in cases {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let o = catalan(&full);
        assert_eq!(o.status.code(), Some(0), "{file}");
        assert_eq!(stdout(&o), golden(file), "{file}");
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    for format in ["text", "json"] {
        let args = ["--format", format, "wakulicz", "--bound", "30"];
        let a = catalan(&args);
        let b = catalan(&args);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let base = catalan(&["--format", "json", "wieferich", "--limit", "3000"]);
    for n in ["2", "4", "8"] {
        let o = catalan(&["--format", "json", "--threads", n, "wieferich", "--limit", "3000"]);
        assert_eq!(o.stdout, base.stdout, "--threads {n}");
    }
    let env = Command::new(env!("CARGO_BIN_EXE_catalan"))
        .args(["--format", "json", "wieferich", "--limit", "3000"])
        .env("CATALAN_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, base.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_catalan"))
        .args(["mordell", "--bound", "10"])
        .env("CATALAN_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn out_file_receives_the_report() {
    let path = std::env::temp_dir().join(format!("catalan-cli-out-{}.jsonl", std::process::id()));
    let o = catalan(&["--format", "json", "--out", path.to_str().unwrap(), "mordell", "--bound", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, golden("mordell.jsonl"));
}

#[test]
fn timing_is_opt_in() {
    let plain = parse(&catalan(&["--format", "json", "fmn", "--m", "7", "--n", "3", "--l", "1"]));
    assert_eq!(plain.timing_ms, None);
    let timed = parse(&catalan(&["--format", "json", "--timing", "fmn", "--m", "7", "--n", "3", "--l", "1"]));
    assert!(timed.timing_ms.is_some());
    assert_eq!(timed.results, [json!("1"), json!("7/3")]);
}

#[test]
fn text_format_is_one_line_per_record() {
    let o = catalan(&["mordell", "--bound", "1000"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    let json = parse(&catalan(&["--format", "json", "mordell", "--bound", "1000"]));
    assert_eq!(lines.len(), json.records().len());
    assert!(lines.last().unwrap().starts_with("summary mordell"));
    assert!(lines.last().unwrap().ends_with("PASS"));
}

#[test]
fn usage_errors_exit_2() {
    let cases: [&[&str]; 8] = [
        &["frobnicate"],
        &["mordell"],
        &["mordell", "--bound", "1__000"],
        &["mordell", "--bound", "12x"],
        &["chao-ko", "--q", "9", "--bound", "10"],
        &["catalan-pq", "--p", "3", "--q", "5", "--bound", "10"],
        &["lebesgue", "--m", "4", "--bound", "10"],
        &["verify-lemma", "no-such-lemma"],
    ];
    for args in cases {
        let o = catalan(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn searches_pass_on_their_stated_ranges() {
    let cases: [&[&str]; 7] = [
        &["quartic", "--k", "2", "--bound", "10000"],
        &["quartic", "--k", "3", "--bound", "10000"],
        &["chao-ko", "--q", "7", "--bound", "100000"],
        &["lebesgue", "--m", "5", "--bound", "10000"],
        &["catalan-pq", "--p", "7", "--q", "3", "--bound", "500"],
        &["wakulicz", "--bound", "40", "--cubic-bound", "1000"],
        &["factor-gaussian", "--re", "-1_000", "--im", "999"],
    ];
    for args in cases {
        let o = catalan(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn every_lemma_verifies() {
    let lemmas = [
        "sqrt3-identities",
        "pythagorean",
        "onab",
        "mordell-cases",
        "conrad-base",
        "euler-descent",
        "chein",
        "gcd-quotient",
        "monotonicity",
        "dz-pipeline",
        "lifting",
        "denominators",
    ];
    for name in lemmas {
        let o = catalan(&["--format", "json", "verify-lemma", name]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        let r = parse(&o);
        assert!(!r.checks.is_empty() && r.passed(), "{name}");
    }
}
