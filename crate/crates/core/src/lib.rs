//! Wordlist-based sentiment classification for short social-media posts.
//!
//! Posts are normalized, split on whitespace and matched against positive
//! and negative wordlists. A sentiment word directly preceded by a negator
//! ("not sad") counts for the opposite polarity. Per-post counts are summed
//! into corpus-level positivity and negativity percentages, which can be
//! rendered as a short text summary and a per-post CSV file.
//!
//! ```
//! use wordlist_sentiment::{aggregate, AggregateResult, Lexicon, Scorer};
//!
//! let lexicon = Lexicon::from_words(["good"], ["sad"], ["not"]).unwrap();
//! let scorer = Scorer::new(&lexicon);
//! let scores = vec![
//!     scorer.score_text("1", "I am not sad"),
//!     scorer.score_text("2", "good news, good day"),
//!     scorer.score_text("3", "so sad"),
//! ];
//! let result: AggregateResult = aggregate(&scores, "news");
//! assert_eq!(result.positivity_pct, 75.0);
//! ```

pub mod classify;
pub mod cli;
pub mod ingest;
pub mod lexicon;
pub mod pipeline;
pub mod report;
pub mod scalar;

use num_rational::Ratio;

pub use classify::{aggregate, Aggregate};
pub use ingest::{
    filter_tweets, read_corpus, source_fetch, BoundingBox, Corpus, CorpusSource, GeoPoint,
    IngestError, MockSource, QueryFilter, Tweet, TweetSource,
};
pub use lexicon::{load_lexicon, load_wordlist, Lexicon, LexiconError, Polarity};
pub use pipeline::{
    normalize, score_tweet, suggest_correction, tokenize, Match, Scorer, TokenSequence, TweetScore,
};
pub use report::{render_summary, write_csv, DetailRow, ReportError};
pub use scalar::Scalar;

/// Percentages in `f64`; what the CLI reports.
pub type AggregateResult = Aggregate<f64>;
/// Percentages in `f32`.
pub type AggregateResultF32 = Aggregate<f32>;
/// Percentages as exact fractions.
pub type ExactAggregateResult = Aggregate<Ratio<i64>>;
