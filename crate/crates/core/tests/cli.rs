mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use common::*;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wordlist-sentiment"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn golden_covid_run() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("covid.csv");
    let corpus = corpus_path();
    let out = run(&[
        "classify",
        "--query",
        "covid",
        "--corpus",
        path_str(&corpus),
        "--limit",
        "100",
        "--out-csv",
        path_str(&csv),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        fs::read_to_string(golden("covid_summary.txt")).unwrap()
    );
    assert_eq!(
        fs::read(&csv).unwrap(),
        fs::read(golden("covid_details.csv")).unwrap()
    );
    assert!(stderr(&out).contains("wrote 28 rows"));
}

#[test]
fn explicit_lexicon_dir_matches_bundled() {
    let corpus = corpus_path();
    let lex = lexicon_dir();
    let out = run(&[
        "classify",
        "--query",
        "covid",
        "--source",
        "corpus",
        "--corpus",
        path_str(&corpus),
        "--lexicon-dir",
        path_str(&lex),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        fs::read_to_string(golden("covid_summary.txt")).unwrap()
    );
}

#[test]
fn missing_corpus_names_the_path() {
    let out = run(&[
        "classify",
        "--query",
        "covid",
        "--corpus",
        "/nope/tweets.jsonl",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("/nope/tweets.jsonl"));
    assert_eq!(stderr(&out).lines().count(), 1);
}

#[test]
fn zero_matches_is_success() {
    let corpus = corpus_path();
    let out = run(&[
        "classify",
        "--query",
        "zebra",
        "--corpus",
        path_str(&corpus),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Tweets scored: 0"));
    assert!(text.contains("No sentiment words found"));
}

#[test]
fn unwritable_csv_fails_before_running() {
    let corpus = corpus_path();
    let out = run(&[
        "classify",
        "--query",
        "covid",
        "--corpus",
        path_str(&corpus),
        "--out-csv",
        "/nope/dir/out.csv",
    ]);
    assert_eq!(out.status.code(), Some(5));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("/nope/dir/out.csv"));
}

#[test]
fn missing_lexicon_file_is_lexicon_error() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = corpus_path();
    let out = run(&[
        "classify",
        "--query",
        "covid",
        "--corpus",
        path_str(&corpus),
        "--lexicon-dir",
        path_str(dir.path()),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["classify", "--corpus", "x"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn spell_correction_changes_counts() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("c.jsonl");
    fs::write(
        &corpus,
        r#"{"id":"1","created_at":"2022-01-01T00:00:00Z","username":"u","text":"the flu jab was terible"}"#,
    )
    .unwrap();
    let base = ["classify", "--query", "flu", "--corpus", path_str(&corpus)];
    let plain = run(&base);
    assert!(stdout(&plain).contains("Negative words found: 0"));
    let mut args = base.to_vec();
    args.push("--spell-correct");
    let corrected = run(&args);
    assert!(stdout(&corrected).contains("Negative words found: 1"));
    args.extend(["--spell-threshold", "0.95"]);
    assert!(stdout(&run(&args)).contains("Negative words found: 0"));
}

#[test]
fn bundled_lexicon_check() {
    let out = run(&["lexicon-check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Positive words: 2003"));
    assert!(text.contains("Negative words: 4780"));
    assert!(text.contains("Positive + negative: 6783"));
    assert!(text.contains("Conflicts (dropped from both lists): 3"));
}

#[test]
fn empty_lexicon_dir_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["lexicon-check", "--lexicon-dir", path_str(dir.path())]);
    assert_ne!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("positive.txt"));
}

#[test]
fn lexicon_with_empty_lists_is_unusable() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["positive.txt", "negative.txt", "negators.txt"] {
        fs::write(dir.path().join(name), "; nothing\n").unwrap();
    }
    let out = run(&["lexicon-check", "--lexicon-dir", path_str(dir.path())]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("unusable"));
}

#[test]
fn lexicon_conflict_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("positive.txt"), "good\nodd\n").unwrap();
    fs::write(dir.path().join("negative.txt"), "bad\nodd\n").unwrap();
    fs::write(dir.path().join("negators.txt"), "not\n").unwrap();
    let out = run(&["lexicon-check", "--lexicon-dir", path_str(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Conflicts (dropped from both lists): 1"));
}

#[test]
fn per_file_override() {
    let dir = tempfile::tempdir().unwrap();
    let pos = dir.path().join("mine.txt");
    fs::write(&pos, "covid\n").unwrap();
    let out = run(&["lexicon-check", "--positive", path_str(&pos)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Positive words: 1\n"));
    // No overlap with the custom list, so all 4783 published entries stay.
    assert!(stdout(&out).contains("Negative words: 4783"));
}

#[test]
fn runs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = corpus_path();
    let mut outputs = Vec::new();
    for i in 0..3 {
        let csv = dir.path().join(format!("{i}.csv"));
        let out = run(&[
            "classify",
            "--query",
            "e",
            "--corpus",
            path_str(&corpus),
            "--out-csv",
            path_str(&csv),
        ]);
        outputs.push((out.stdout, fs::read(&csv).unwrap()));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}
