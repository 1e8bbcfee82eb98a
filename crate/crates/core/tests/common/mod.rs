#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use serde::Deserialize;

pub const LONDON_BBOX: (f64, f64, f64, f64) = (51.28, -0.51, 51.70, 0.33);

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn corpus_path() -> PathBuf {
    fixture_dir().join("fixtures/corpus.jsonl")
}

pub fn golden(name: &str) -> PathBuf {
    fixture_dir().join("golden").join(name)
}

pub fn lexicon_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/lexicon")
}

/// Values produced by tests/oracle/fixture_oracle.py.
#[derive(Debug, Deserialize)]
pub struct Expected {
    pub corpus_size: usize,
    pub covid_ids: Vec<String>,
    pub covid_totals: (u64, u64),
    pub all_totals: (u64, u64),
    pub hospital_london_ids: Vec<String>,
    pub covid_2021_ids: Vec<String>,
    pub covid_since_2021_london_ids: Vec<String>,
    pub flu_before_2021_ids: Vec<String>,
    pub vaccine_ids: Vec<String>,
    pub nhs_tag_ids: Vec<String>,
    pub per_tweet: HashMap<String, (Vec<String>, Vec<String>)>,
    pub normalized: HashMap<String, String>,
}

pub fn expected() -> Expected {
    let text = std::fs::read_to_string(golden("expected.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

pub fn ids(tweets: &[wordlist_sentiment::Tweet]) -> Vec<String> {
    tweets.iter().map(|t| t.id.clone()).collect()
}
