//! End-to-end tests of the `maxmult` binary: exit codes, output shapes, the
//! result cache, the crystal size gate, and the trace chain.

use std::path::Path;
use std::process::{Command, Output};

fn maxmult(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxmult"))
        .args(args)
        .env_remove("MAXMULT_CACHE")
        .output()
        .expect("binary runs")
}

fn maxmult_with_env(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxmult"))
        .args(args)
        .env("MAXMULT_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

const HEADLINE: &[&str] = &[
    "--n", "12", "--k", "7", "--ell", "10", "--a", "4,3,3", "--b", "3,2,2,1,1,1",
];

fn headline_args<'a>(extra: &[&'a str]) -> Vec<&'a str> {
    let mut args = vec!["multiplicity"];
    args.extend_from_slice(HEADLINE);
    args.extend_from_slice(extra);
    args
}

#[test]
fn headline_multiplicity_by_every_method() {
    for method in ["triples", "syt", "rsk", "crystal", "all"] {
        let output = maxmult(&headline_args(&["--method", method]));
        assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
        assert_eq!(
            stdout(&output).lines().next(),
            Some("488"),
            "method {method} did not print 488"
        );
    }
}

#[test]
fn multiplicity_json_format_lists_per_method_records() {
    let output = maxmult(&headline_args(&["--method", "all", "--format", "json"]));
    assert_eq!(exit_code(&output), 0);
    let records: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("json");
    let records = records.as_array().expect("array");
    assert_eq!(records.len(), 4, "triples, syt, rsk, and crystal (within gate)");
    for record in records {
        assert_eq!(record["multiplicity"], 488);
        assert_eq!(record["n"], 12);
        assert!(record["elapsed_ms"].is_f64());
    }
}

#[test]
fn maxweights_table_and_json() {
    let table = maxmult(&["maxweights", "--n", "2", "--k", "2"]);
    assert_eq!(exit_code(&table), 0);
    let text = stdout(&table);
    assert!(text.contains("2 weights"), "got: {text}");
    assert!(text.contains("(1)"), "got: {text}");

    let json = maxmult(&["maxweights", "--n", "2", "--k", "2", "--format", "json"]);
    assert_eq!(exit_code(&json), 0);
    let weights: serde_json::Value = serde_json::from_str(&stdout(&json)).expect("json");
    let weights = weights.as_array().expect("array");
    assert_eq!(weights.len(), 2);
    assert_eq!(weights[0]["ell"], 0);
    assert_eq!(weights[1]["A"], serde_json::json!([1]));

    // The headline weight appears in the rank-12 listing.
    let big = maxmult(&["maxweights", "--n", "12", "--k", "7", "--format", "json"]);
    let weights: serde_json::Value = serde_json::from_str(&stdout(&big)).expect("json");
    let expected_alpha = serde_json::json!([10, 7, 5, 3, 2, 1, 0, 0, 0, 0, 3, 6]);
    assert!(
        weights
            .as_array()
            .unwrap()
            .iter()
            .any(|w| w["alpha"] == expected_alpha),
        "rank-12 listing is missing the worked example weight"
    );
}

#[test]
fn invalid_rank_or_level_is_a_usage_error() {
    let output = maxmult(&["maxweights", "--n", "2", "--k", "0"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("k must be at least 1"));

    let output = maxmult(&["maxweights", "--n", "1", "--k", "2"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn inadmissible_input_is_a_usage_error() {
    // a₁ + b₁ = 7 > k = 2.
    let output = maxmult(&[
        "multiplicity", "--n", "12", "--k", "2", "--ell", "10", "--a", "4,3,3", "--b",
        "3,2,2,1,1,1",
    ]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("inadmissible"), "got: {}", stderr(&output));

    // Sizes disagree with ell.
    let output = maxmult(&[
        "multiplicity", "--n", "6", "--k", "2", "--ell", "3", "--a", "1,1", "--b", "1,1,1",
    ]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn unsorted_partition_is_rejected_by_the_parser() {
    let output = maxmult(&[
        "multiplicity", "--n", "6", "--k", "2", "--ell", "3", "--a", "1,2", "--b", "1,1,1",
    ]);
    assert_eq!(exit_code(&output), 2, "clap reports value errors as usage errors");
    assert!(
        stderr(&output).contains("decreasing") || stderr(&output).contains("sorted"),
        "the message should say why: {}",
        stderr(&output)
    );
}

#[test]
fn cache_appends_and_verifies() {
    let dir = tempfile::tempdir().expect("tempdir");
    let cache = dir.path().join("results.ndjson");
    let cache_str = cache.to_str().unwrap();

    let run = maxmult(&headline_args(&["--method", "triples", "--cache", cache_str]));
    assert_eq!(exit_code(&run), 0);
    let run = maxmult(&headline_args(&["--method", "all", "--cache", cache_str]));
    assert_eq!(exit_code(&run), 0);

    let contents = std::fs::read_to_string(&cache).expect("cache written");
    let lines: Vec<&str> = contents.lines().collect();
    assert_eq!(lines.len(), 5, "1 + 4 records, got: {contents}");
    for line in &lines {
        let record: serde_json::Value = serde_json::from_str(line).expect("ndjson record");
        assert_eq!(record["multiplicity"], 488);
        assert_eq!(record["A"], serde_json::json!([4, 3, 3]));
    }

    // Startup verification passes on a consistent cache...
    let verified = maxmult(&headline_args(&[
        "--method", "rsk", "--cache", cache_str, "--verify-cache",
    ]));
    assert_eq!(exit_code(&verified), 0, "stderr: {}", stderr(&verified));

    // ...and fails once a conflicting record is appended.
    let conflicting = concat!(
        r#"{"n":12,"k":7,"ell":10,"A":[4,3,3],"B":[3,2,2,1,1,1],"#,
        r#""multiplicity":487,"method":"triples","elapsed_ms":0.1}"#,
        "\n"
    );
    std::fs::OpenOptions::new()
        .append(true)
        .open(&cache)
        .and_then(|mut f| std::io::Write::write_all(&mut f, conflicting.as_bytes()))
        .expect("append conflict");
    let broken = maxmult(&headline_args(&[
        "--method", "rsk", "--cache", cache_str, "--verify-cache",
    ]));
    assert_eq!(exit_code(&broken), 3, "stderr: {}", stderr(&broken));
    assert!(stderr(&broken).contains("cache inconsistency"));
}

#[test]
fn cache_path_comes_from_the_environment() {
    let dir = tempfile::tempdir().expect("tempdir");
    let cache = dir.path().join("env-cache.ndjson");
    let run = maxmult_with_env(&headline_args(&["--method", "syt"]), &cache);
    assert_eq!(exit_code(&run), 0, "stderr: {}", stderr(&run));
    let contents = std::fs::read_to_string(&cache).expect("cache written via env var");
    assert_eq!(contents.lines().count(), 1);
}

/// ℓ = 11 cousin of the headline weight: 42 boxes, just over the crystal
/// gate, still fast once opted in.
const BIG: &[&str] = &[
    "--n", "12", "--k", "7", "--ell", "11", "--a", "4,4,3", "--b", "3,2,2,2,1,1",
];

#[test]
fn crystal_method_is_gated_above_the_box_budget() {
    let mut args = vec!["multiplicity"];
    args.extend_from_slice(BIG);
    args.extend_from_slice(&["--method", "crystal"]);
    let refused = maxmult(&args);
    assert_eq!(exit_code(&refused), 2);
    assert!(
        stderr(&refused).contains("--allow-crystal"),
        "should point at the opt-in: {}",
        stderr(&refused)
    );

    let mut allowed_args = args.clone();
    allowed_args.push("--allow-crystal");
    let allowed = maxmult(&allowed_args);
    assert_eq!(exit_code(&allowed), 0, "stderr: {}", stderr(&allowed));

    // The opted-in crystal count agrees with the fast methods.
    let mut triples_args = vec!["multiplicity"];
    triples_args.extend_from_slice(BIG);
    triples_args.extend_from_slice(&["--method", "triples"]);
    let triples = maxmult(&triples_args);
    assert_eq!(
        stdout(&allowed).lines().next(),
        stdout(&triples).lines().next(),
        "crystal and triples disagree on the gated instance"
    );

    // `--method all` degrades gracefully: skips crystal, still exits 0.
    let mut all_args = vec!["multiplicity"];
    all_args.extend_from_slice(BIG);
    all_args.extend_from_slice(&["--method", "all", "--format", "json"]);
    let all = maxmult(&all_args);
    assert_eq!(exit_code(&all), 0);
    assert!(stderr(&all).contains("skipping crystal"));
    let records: serde_json::Value = serde_json::from_str(&stdout(&all)).expect("json");
    assert_eq!(records.as_array().unwrap().len(), 3);
}

#[test]
fn crosscheck_reports_agreement() {
    let output = maxmult(&[
        "crosscheck", "--n", "6", "--k", "2", "--max-ell", "4", "--methods",
        "triples,syt,rsk,crystal", "--jobs", "2",
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("json report");
    assert_eq!(report["agreed"], true);
    assert_eq!(report["weights"], report["rows"].as_array().unwrap().len());
    assert_eq!(report["methods"].as_array().unwrap().len(), 4);
    for row in report["rows"].as_array().unwrap() {
        assert!(row["multiplicity"].as_u64().unwrap() >= 1);
    }
}

#[test]
fn trace_walks_every_element_and_bounds_the_index() {
    // A = B = (1,1), ℓ = 2, k = 2 at n = 4: multiplicity 2.
    let base = &[
        "trace", "--n", "4", "--k", "2", "--ell", "2", "--a", "1,1", "--b", "1,1",
    ];
    for index in ["0", "1"] {
        let mut args = base.to_vec();
        args.extend_from_slice(&["--index", index]);
        let output = maxmult(&args);
        assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
        let text = stdout(&output);
        assert!(text.contains("crystal element"), "got: {text}");
        assert!(text.contains("triple:"), "got: {text}");
        assert!(text.contains("M:"), "got: {text}");
        assert!(text.contains("permutation:"), "got: {text}");
        assert!(text.ends_with("backward verification: ok\n"), "got: {text}");
    }

    let mut args = base.to_vec();
    args.extend_from_slice(&["--index", "2"]);
    let output = maxmult(&args);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("out of range"));
}

#[test]
fn trace_zero_display_convention() {
    let mut args = vec!["trace"];
    args.extend_from_slice(HEADLINE);
    args.extend_from_slice(&["--index", "0", "--zero-for-largest"]);
    let output = maxmult(&args);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr(&output));
    let text = stdout(&output);
    let word_line = text
        .lines()
        .skip_while(|line| *line != "permutation:")
        .nth(1)
        .expect("a line after the permutation header");
    assert!(
        word_line.split(' ').any(|token| token == "0"),
        "the largest letter should print as 0: {word_line}"
    );
    assert!(
        !word_line.split(' ').any(|token| token == "10"),
        "10 should have been replaced: {word_line}"
    );
}
