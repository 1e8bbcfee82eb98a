//! Tweet records, the line-delimited JSON corpus reader and query filtering.
//!
//! A corpus holds one JSON object per line:
//!
//! ```text
//! {"id":"1","created_at":"2022-03-01T10:00:00Z","username":"a","text":"I am not sad","lat":51.5,"lon":-0.12}
//! ```
//!
//! `lat` and `lon` are optional but must appear together.

use std::fs;
use std::path::{Path, PathBuf};

use chrono::{DateTime, NaiveDate, NaiveDateTime, SubsecRound, Utc};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on tweets returned by one fetch.
pub const DEFAULT_LIMIT: usize = 500;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("cannot read corpus {path}: {source}")]
    FileUnreadable {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("corpus {path} has no valid records ({skipped} malformed lines skipped)")]
    CorpusEmpty { path: PathBuf, skipped: usize },
    #[error("tweet source {name} is unavailable: {reason}")]
    SourceUnavailable { name: String, reason: String },
    #[error("invalid query filter: {0}")]
    InvalidFilter(String),
}

/// Latitude/longitude in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeoPoint {
    pub lat: f64,
    pub lon: f64,
}

impl GeoPoint {
    pub fn new(lat: f64, lon: f64) -> Option<Self> {
        let valid = (-90.0..=90.0).contains(&lat) && (-180.0..=180.0).contains(&lon);
        valid.then_some(GeoPoint { lat, lon })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tweet {
    pub id: String,
    pub created_at: DateTime<Utc>,
    pub username: String,
    pub text: String,
    pub location: Option<GeoPoint>,
}

#[derive(Deserialize)]
struct Record {
    id: String,
    created_at: String,
    username: String,
    text: String,
    lat: Option<f64>,
    lon: Option<f64>,
}

impl Tweet {
    /// Parses one corpus line. Returns `None` for anything malformed.
    pub fn from_json_line(line: &str) -> Option<Tweet> {
        let record: Record = serde_json::from_str(line).ok()?;
        if record.id.is_empty() {
            return None;
        }
        let created_at = parse_timestamp(&record.created_at)?;
        let location = match (record.lat, record.lon) {
            (Some(lat), Some(lon)) => Some(GeoPoint::new(lat, lon)?),
            (None, None) => None,
            _ => return None,
        };
        Some(Tweet {
            id: record.id,
            created_at,
            username: record.username,
            text: record.text,
            location,
        })
    }

    /// Serializes to the corpus line format.
    pub fn to_json_line(&self) -> String {
        let mut value = serde_json::json!({
            "id": self.id,
            "created_at": self.created_at.format("%Y-%m-%dT%H:%M:%SZ").to_string(),
            "username": self.username,
            "text": self.text,
        });
        if let Some(loc) = self.location {
            value["lat"] = loc.lat.into();
            value["lon"] = loc.lon.into();
        }
        value.to_string()
    }
}

/// Parses an ISO-8601 instant, truncated to whole seconds.
///
/// Accepts RFC 3339 (`2021-01-01T00:00:00Z`, any offset), minute precision
/// with `Z` (`2021-01-01T00:00Z`), offset-less date-times taken as UTC, and
/// bare dates (midnight UTC).
pub fn parse_timestamp(text: &str) -> Option<DateTime<Utc>> {
    let text = text.trim();
    if let Ok(dt) = DateTime::parse_from_rfc3339(text) {
        return Some(dt.with_timezone(&Utc).trunc_subsecs(0));
    }
    let naive = text.strip_suffix('Z').unwrap_or(text);
    for fmt in [
        "%Y-%m-%dT%H:%M:%S%.f",
        "%Y-%m-%dT%H:%M",
        "%Y-%m-%d %H:%M:%S",
    ] {
        if let Ok(dt) = NaiveDateTime::parse_from_str(naive, fmt) {
            return Some(dt.and_utc().trunc_subsecs(0));
        }
    }
    NaiveDate::parse_from_str(text, "%Y-%m-%d")
        .ok()
        .and_then(|d| d.and_hms_opt(0, 0, 0))
        .map(|dt| dt.and_utc())
}

/// Tweets read from a corpus plus the number of malformed lines skipped.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Corpus {
    pub tweets: Vec<Tweet>,
    pub skipped: usize,
}

/// Parses corpus text. Blank lines are ignored; malformed lines are counted.
pub fn parse_corpus(contents: &str) -> Corpus {
    let mut corpus = Corpus::default();
    for line in contents.lines().filter(|l| !l.trim().is_empty()) {
        match Tweet::from_json_line(line) {
            Some(tweet) => corpus.tweets.push(tweet),
            None => corpus.skipped += 1,
        }
    }
    corpus
}

pub fn read_corpus(path: impl AsRef<Path>) -> Result<Corpus, IngestError> {
    let path = path.as_ref();
    let contents = fs::read_to_string(path).map_err(|source| IngestError::FileUnreadable {
        path: path.to_path_buf(),
        source,
    })?;
    let corpus = parse_corpus(&contents);
    if corpus.tweets.is_empty() {
        return Err(IngestError::CorpusEmpty {
            path: path.to_path_buf(),
            skipped: corpus.skipped,
        });
    }
    Ok(corpus)
}

/// Inclusive latitude/longitude rectangle. Does not wrap the antimeridian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub min_lat: f64,
    pub min_lon: f64,
    pub max_lat: f64,
    pub max_lon: f64,
}

impl BoundingBox {
    pub fn new(
        min_lat: f64,
        min_lon: f64,
        max_lat: f64,
        max_lon: f64,
    ) -> Result<Self, IngestError> {
        let lat_ok = (-90.0..=90.0).contains(&min_lat) && (-90.0..=90.0).contains(&max_lat);
        let lon_ok = (-180.0..=180.0).contains(&min_lon) && (-180.0..=180.0).contains(&max_lon);
        if !lat_ok || !lon_ok {
            return Err(IngestError::InvalidFilter(
                "bbox coordinates out of range".into(),
            ));
        }
        if min_lat > max_lat || min_lon > max_lon {
            return Err(IngestError::InvalidFilter(
                "bbox minimum exceeds maximum".into(),
            ));
        }
        Ok(BoundingBox {
            min_lat,
            min_lon,
            max_lat,
            max_lon,
        })
    }

    pub fn contains(&self, point: GeoPoint) -> bool {
        (self.min_lat..=self.max_lat).contains(&point.lat)
            && (self.min_lon..=self.max_lon).contains(&point.lon)
    }
}

impl std::str::FromStr for BoundingBox {
    type Err = IngestError;

    /// `minlat,minlon,maxlat,maxlon`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| IngestError::InvalidFilter(format!("bbox {s:?}: {e}")))?;
        match parts[..] {
            [a, b, c, d] => BoundingBox::new(a, b, c, d),
            _ => Err(IngestError::InvalidFilter(format!(
                "bbox {s:?}: expected minlat,minlon,maxlat,maxlon"
            ))),
        }
    }
}

/// Keyword plus optional time window `[since, until)` and bounding box.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryFilter {
    keyword: String,
    keyword_lower: String,
    since: Option<DateTime<Utc>>,
    until: Option<DateTime<Utc>>,
    bbox: Option<BoundingBox>,
}

impl QueryFilter {
    pub fn new(keyword: impl Into<String>) -> Result<Self, IngestError> {
        let keyword = keyword.into();
        if keyword.trim().is_empty() {
            return Err(IngestError::InvalidFilter(
                "keyword must not be empty".into(),
            ));
        }
        Ok(QueryFilter {
            keyword_lower: keyword.to_lowercase(),
            keyword,
            since: None,
            until: None,
            bbox: None,
        })
    }

    pub fn with_window(
        mut self,
        since: Option<DateTime<Utc>>,
        until: Option<DateTime<Utc>>,
    ) -> Result<Self, IngestError> {
        if let (Some(s), Some(u)) = (since, until) {
            if s >= u {
                return Err(IngestError::InvalidFilter(format!(
                    "since ({s}) must be earlier than until ({u})"
                )));
            }
        }
        self.since = since;
        self.until = until;
        Ok(self)
    }

    pub fn with_bbox(mut self, bbox: BoundingBox) -> Self {
        self.bbox = Some(bbox);
        self
    }

    pub fn keyword(&self) -> &str {
        &self.keyword
    }

    pub fn since(&self) -> Option<DateTime<Utc>> {
        self.since
    }

    pub fn until(&self) -> Option<DateTime<Utc>> {
        self.until
    }

    pub fn bbox(&self) -> Option<BoundingBox> {
        self.bbox
    }

    pub fn matches(&self, tweet: &Tweet) -> bool {
        if !tweet.text.to_lowercase().contains(&self.keyword_lower) {
            return false;
        }
        if self.since.is_some_and(|s| tweet.created_at < s) {
            return false;
        }
        if self.until.is_some_and(|u| tweet.created_at >= u) {
            return false;
        }
        match (self.bbox, tweet.location) {
            (None, _) => true,
            (Some(bbox), Some(point)) => bbox.contains(point),
            (Some(_), None) => false,
        }
    }
}

/// Keeps the tweets matching `filter`, in their original order.
pub fn filter_tweets(tweets: &[Tweet], filter: &QueryFilter) -> Vec<Tweet> {
    tweets
        .iter()
        .filter(|t| filter.matches(t))
        .cloned()
        .collect()
}

/// Anything that can answer a keyword query with tweets.
///
/// The corpus and mock sources live here; a live platform client would be
/// another implementation.
pub trait TweetSource {
    fn name(&self) -> String;

    /// At most `limit` tweets matching `filter`, in source order.
    fn fetch(&self, filter: &QueryFilter, limit: usize) -> Result<Fetched, IngestError>;
}

/// Tweets returned by a source, with the count of unparseable records.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Fetched {
    pub tweets: Vec<Tweet>,
    pub skipped: usize,
}

/// Reads a line-delimited JSON corpus file on every fetch.
#[derive(Debug, Clone)]
pub struct CorpusSource {
    path: PathBuf,
}

impl CorpusSource {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        CorpusSource { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }
}

impl TweetSource for CorpusSource {
    fn name(&self) -> String {
        format!("corpus:{}", self.path.display())
    }

    fn fetch(&self, filter: &QueryFilter, limit: usize) -> Result<Fetched, IngestError> {
        let corpus = read_corpus(&self.path)?;
        Ok(Fetched {
            tweets: take_matching(&corpus.tweets, filter, limit),
            skipped: corpus.skipped,
        })
    }
}

/// Fixed in-memory tweets, for tests and demos.
#[derive(Debug, Clone, Default)]
pub struct MockSource {
    tweets: Vec<Tweet>,
    unavailable: Option<String>,
}

impl MockSource {
    pub fn new(tweets: Vec<Tweet>) -> Self {
        MockSource {
            tweets,
            unavailable: None,
        }
    }

    /// A source whose every fetch fails with `SourceUnavailable`.
    pub fn unavailable(reason: impl Into<String>) -> Self {
        MockSource {
            tweets: Vec::new(),
            unavailable: Some(reason.into()),
        }
    }
}

impl TweetSource for MockSource {
    fn name(&self) -> String {
        "mock".to_string()
    }

    fn fetch(&self, filter: &QueryFilter, limit: usize) -> Result<Fetched, IngestError> {
        if let Some(reason) = &self.unavailable {
            return Err(IngestError::SourceUnavailable {
                name: self.name(),
                reason: reason.clone(),
            });
        }
        Ok(Fetched {
            tweets: take_matching(&self.tweets, filter, limit),
            skipped: 0,
        })
    }
}

fn take_matching(tweets: &[Tweet], filter: &QueryFilter, limit: usize) -> Vec<Tweet> {
    tweets
        .iter()
        .filter(|t| filter.matches(t))
        .take(limit)
        .cloned()
        .collect()
}

/// Fetches from `source`, preserving its order.
pub fn source_fetch(
    source: &dyn TweetSource,
    filter: &QueryFilter,
    limit: usize,
) -> Result<Fetched, IngestError> {
    source.fetch(filter, limit)
}
