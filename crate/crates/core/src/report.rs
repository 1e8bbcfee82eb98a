//! Text summary and per-tweet CSV detail file.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::classify::Aggregate;
use crate::ingest::Tweet;
use crate::pipeline::{Match, TweetScore};
use crate::scalar::Scalar;

pub const CSV_HEADER: [&str; 6] = [
    "date",
    "time",
    "username",
    "tweet",
    "positive_words",
    "negative_words",
];

pub const NO_SIGNAL_LINE: &str = "No sentiment words found; percentages are reported as 0.0%.";

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("cannot write {path}: {source}")]
    PathUnwritable {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("tweets and scores do not line up: {0}")]
    SequenceMismatch(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// One CSV line of the detail file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetailRow {
    pub date: String,
    pub time: String,
    pub username: String,
    pub tweet_text: String,
    pub positive_words: String,
    pub negative_words: String,
}

impl DetailRow {
    pub fn new(tweet: &Tweet, score: &TweetScore) -> Self {
        DetailRow {
            date: tweet.created_at.format("%Y-%m-%d").to_string(),
            time: tweet.created_at.format("%H:%M:%S").to_string(),
            username: tweet.username.clone(),
            tweet_text: tweet.text.clone(),
            positive_words: encode_matches(&score.matched_positive),
            negative_words: encode_matches(&score.matched_negative),
        }
    }

    pub fn fields(&self) -> [&str; 6] {
        [
            &self.date,
            &self.time,
            &self.username,
            &self.tweet_text,
            &self.positive_words,
            &self.negative_words,
        ]
    }
}

/// `|`-joined tokens; a trailing `!` marks a negation-flipped match.
pub fn encode_matches(matches: &[Match]) -> String {
    matches
        .iter()
        .map(|m| {
            if m.negated {
                format!("{}!", m.token)
            } else {
                m.token.clone()
            }
        })
        .collect::<Vec<_>>()
        .join("|")
}

pub fn decode_matches(cell: &str) -> Vec<Match> {
    if cell.is_empty() {
        return Vec::new();
    }
    cell.split('|')
        .map(|part| match part.strip_suffix('!') {
            Some(token) => Match::new(token, true),
            None => Match::new(part, false),
        })
        .collect()
}

/// Quotes a field when it holds a comma, quote or line break.
pub fn csv_field(field: &str) -> std::borrow::Cow<'_, str> {
    if field.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\"")).into()
    } else {
        field.into()
    }
}

fn write_record<W: Write>(out: &mut W, fields: &[&str]) -> io::Result<()> {
    let line = fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",");
    out.write_all(line.as_bytes())?;
    out.write_all(b"\n")
}

/// Writes the header and one row per tweet. Returns the number of data rows.
pub fn write_csv_to<W: Write>(
    out: &mut W,
    tweets: &[Tweet],
    scores: &[TweetScore],
) -> Result<usize, ReportError> {
    if tweets.len() != scores.len() {
        return Err(ReportError::SequenceMismatch(format!(
            "{} tweets but {} scores",
            tweets.len(),
            scores.len()
        )));
    }
    if let Some((i, (t, s))) = tweets
        .iter()
        .zip(scores)
        .enumerate()
        .find(|(_, (t, s))| t.id != s.tweet_id)
    {
        return Err(ReportError::SequenceMismatch(format!(
            "row {i}: tweet {} paired with score for {}",
            t.id, s.tweet_id
        )));
    }

    write_record(out, &CSV_HEADER)?;
    for (tweet, score) in tweets.iter().zip(scores) {
        write_record(out, &DetailRow::new(tweet, score).fields())?;
    }
    out.flush()?;
    Ok(tweets.len())
}

pub fn write_csv(
    tweets: &[Tweet],
    scores: &[TweetScore],
    path: impl AsRef<Path>,
) -> Result<usize, ReportError> {
    let path = path.as_ref();
    let unwritable = |source| ReportError::PathUnwritable {
        path: path.to_path_buf(),
        source,
    };
    // Validate before touching the filesystem.
    write_csv_to(&mut io::sink(), tweets, scores)?;
    let file = File::create(path).map_err(unwritable)?;
    let mut out = BufWriter::new(file);
    match write_csv_to(&mut out, tweets, scores) {
        Err(ReportError::Io(e)) => Err(unwritable(e)),
        other => other,
    }
}

/// Multi-line human-readable summary; percentages rounded to one decimal.
pub fn render_summary<T: Scalar>(result: &Aggregate<T>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Topic: {}", result.topic);
    let _ = writeln!(out, "Tweets scored: {}", result.tweets_scored);
    let _ = writeln!(out, "Positive words found: {}", result.total_positive);
    let _ = writeln!(out, "Negative words found: {}", result.total_negative);
    let _ = writeln!(
        out,
        "Positivity: {:.1}%",
        result.positivity_pct.to_f64_lossy()
    );
    let _ = writeln!(
        out,
        "Negativity: {:.1}%",
        result.negativity_pct.to_f64_lossy()
    );
    if result.no_signal {
        let _ = writeln!(out, "{NO_SIGNAL_LINE}");
    }
    out
}
