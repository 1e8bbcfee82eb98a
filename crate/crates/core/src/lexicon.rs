//! Positive, negative and negator wordlists.
//!
//! Wordlists are UTF-8 text with one token per line. Lines starting with `;`
//! are comments and blank lines are ignored, which matches the layout of the
//! published opinion lexicon shipped under `data/lexicon/`.

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

const BUNDLED_POSITIVE: &str = include_str!("../data/lexicon/positive.txt");
const BUNDLED_NEGATIVE: &str = include_str!("../data/lexicon/negative.txt");
const BUNDLED_NEGATORS: &str = include_str!("../data/lexicon/negators.txt");

/// File names expected inside a lexicon directory.
pub const POSITIVE_FILE: &str = "positive.txt";
pub const NEGATIVE_FILE: &str = "negative.txt";
pub const NEGATORS_FILE: &str = "negators.txt";

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read wordlist {path}: {source}")]
    FileUnreadable {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("lexicon is unusable: no positive or negative words remain after loading")]
    UnusableLexicon,
}

/// Non-fatal conditions noticed while loading a wordlist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadWarning {
    /// The list produced zero tokens after filtering comments and blanks.
    EmptyWordlist { list: String },
    /// An entry contained internal whitespace and was rejected.
    MultiWordEntry { list: String, entry: String },
}

impl fmt::Display for LoadWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadWarning::EmptyWordlist { list } => write!(f, "wordlist {list} is empty"),
            LoadWarning::MultiWordEntry { list, entry } => {
                write!(f, "wordlist {list}: rejected multi-word entry {entry:?}")
            }
        }
    }
}

/// Sentiment class of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
    Neutral,
}

impl Polarity {
    pub fn opposite(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
            Polarity::Neutral => Polarity::Neutral,
        }
    }
}

/// Where a wordlist comes from.
#[derive(Debug, Clone)]
pub enum WordlistSource {
    File(PathBuf),
    /// In-memory contents, labelled for diagnostics.
    Text {
        label: String,
        contents: String,
    },
}

impl WordlistSource {
    pub fn label(&self) -> String {
        match self {
            WordlistSource::File(path) => path.display().to_string(),
            WordlistSource::Text { label, .. } => label.clone(),
        }
    }

    fn read(&self) -> Result<String, LexiconError> {
        match self {
            WordlistSource::File(path) => {
                fs::read_to_string(path).map_err(|source| LexiconError::FileUnreadable {
                    path: path.clone(),
                    source,
                })
            }
            WordlistSource::Text { contents, .. } => Ok(contents.clone()),
        }
    }
}

/// The three list sources that make up a lexicon.
#[derive(Debug, Clone)]
pub struct LexiconSources {
    pub positive: WordlistSource,
    pub negative: WordlistSource,
    pub negators: WordlistSource,
}

impl LexiconSources {
    /// The lexicon compiled into the binary.
    pub fn bundled() -> Self {
        let text = |label: &str, contents: &str| WordlistSource::Text {
            label: format!("<bundled {label}>"),
            contents: contents.to_string(),
        };
        LexiconSources {
            positive: text(POSITIVE_FILE, BUNDLED_POSITIVE),
            negative: text(NEGATIVE_FILE, BUNDLED_NEGATIVE),
            negators: text(NEGATORS_FILE, BUNDLED_NEGATORS),
        }
    }

    /// `positive.txt`, `negative.txt` and `negators.txt` inside `dir`.
    pub fn from_dir(dir: impl AsRef<Path>) -> Self {
        let dir = dir.as_ref();
        LexiconSources {
            positive: WordlistSource::File(dir.join(POSITIVE_FILE)),
            negative: WordlistSource::File(dir.join(NEGATIVE_FILE)),
            negators: WordlistSource::File(dir.join(NEGATORS_FILE)),
        }
    }
}

/// Result of loading one wordlist.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Wordlist {
    pub tokens: HashSet<String>,
    /// Entries seen more than once (after case folding).
    pub duplicates: usize,
    /// Entries rejected because they contained whitespace.
    pub rejected: usize,
    pub warnings: Vec<LoadWarning>,
}

/// Counts describing how a lexicon was assembled.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SourceSummary {
    pub positive: usize,
    pub negative: usize,
    pub negators: usize,
    pub duplicates: usize,
    pub rejected: usize,
    /// Tokens listed as both positive and negative; dropped from both.
    pub conflicts: usize,
    /// Tokens listed as negators and also in a polarity list; kept only as negators.
    pub negator_overlaps: usize,
    pub warnings: Vec<LoadWarning>,
}

impl SourceSummary {
    pub fn polarized(&self) -> usize {
        self.positive + self.negative
    }
}

/// Immutable set of positive words, negative words and negators.
#[derive(Debug, Clone)]
pub struct Lexicon {
    positive: HashSet<String>,
    negative: HashSet<String>,
    negators: HashSet<String>,
    summary: SourceSummary,
}

/// Case-folds and trims a wordlist entry.
pub fn normalize_entry(entry: &str) -> String {
    entry.trim().to_lowercase()
}

/// Parses wordlist text. `label` only appears in warnings.
pub fn parse_wordlist(contents: &str, label: &str) -> Wordlist {
    let entries = contents
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with(';'));
    collect_entries(entries, label)
}

fn collect_entries<'a>(entries: impl Iterator<Item = &'a str>, label: &str) -> Wordlist {
    let mut list = Wordlist::default();
    for entry in entries {
        let token = normalize_entry(entry);
        if token.is_empty() {
            continue;
        }
        if token.chars().any(char::is_whitespace) {
            list.rejected += 1;
            list.warnings.push(LoadWarning::MultiWordEntry {
                list: label.to_string(),
                entry: entry.to_string(),
            });
            continue;
        }
        if !list.tokens.insert(token) {
            list.duplicates += 1;
        }
    }
    if list.tokens.is_empty() {
        list.warnings.push(LoadWarning::EmptyWordlist {
            list: label.to_string(),
        });
    }
    list
}

/// Reads and parses one wordlist file.
pub fn load_wordlist(path: impl AsRef<Path>) -> Result<Wordlist, LexiconError> {
    let source = WordlistSource::File(path.as_ref().to_path_buf());
    read_wordlist(&source)
}

fn read_wordlist(source: &WordlistSource) -> Result<Wordlist, LexiconError> {
    let contents = source.read()?;
    Ok(parse_wordlist(&contents, &source.label()))
}

/// Loads the three lists found at the given paths.
pub fn load_lexicon(
    positive_path: impl AsRef<Path>,
    negative_path: impl AsRef<Path>,
    negators_path: impl AsRef<Path>,
) -> Result<Lexicon, LexiconError> {
    Lexicon::load(&LexiconSources {
        positive: WordlistSource::File(positive_path.as_ref().to_path_buf()),
        negative: WordlistSource::File(negative_path.as_ref().to_path_buf()),
        negators: WordlistSource::File(negators_path.as_ref().to_path_buf()),
    })
}

impl Lexicon {
    pub fn load(sources: &LexiconSources) -> Result<Lexicon, LexiconError> {
        let positive = read_wordlist(&sources.positive)?;
        let negative = read_wordlist(&sources.negative)?;
        let negators = read_wordlist(&sources.negators)?;
        Lexicon::from_wordlists(positive, negative, negators)
    }

    /// The lexicon compiled into the binary.
    pub fn bundled() -> Result<Lexicon, LexiconError> {
        Lexicon::load(&LexiconSources::bundled())
    }

    /// Builds a lexicon from in-memory word slices. Entries are normalized the
    /// same way as file entries.
    pub fn from_words<P, N, G>(
        positive: P,
        negative: N,
        negators: G,
    ) -> Result<Lexicon, LexiconError>
    where
        P: IntoIterator,
        P::Item: AsRef<str>,
        N: IntoIterator,
        N::Item: AsRef<str>,
        G: IntoIterator,
        G::Item: AsRef<str>,
    {
        let positive: Vec<String> = positive
            .into_iter()
            .map(|w| w.as_ref().to_string())
            .collect();
        let negative: Vec<String> = negative
            .into_iter()
            .map(|w| w.as_ref().to_string())
            .collect();
        let negators: Vec<String> = negators
            .into_iter()
            .map(|w| w.as_ref().to_string())
            .collect();
        Lexicon::from_wordlists(
            collect_entries(positive.iter().map(String::as_str), "positive"),
            collect_entries(negative.iter().map(String::as_str), "negative"),
            collect_entries(negators.iter().map(String::as_str), "negators"),
        )
    }

    fn from_wordlists(
        positive: Wordlist,
        negative: Wordlist,
        negators: Wordlist,
    ) -> Result<Lexicon, LexiconError> {
        let conflicts: HashSet<String> = positive
            .tokens
            .intersection(&negative.tokens)
            .cloned()
            .collect();

        let mut negator_overlaps = 0;
        let mut keep = |token: &String| {
            if conflicts.contains(token) {
                false
            } else if negators.tokens.contains(token) {
                negator_overlaps += 1;
                false
            } else {
                true
            }
        };
        let pos: HashSet<String> = positive
            .tokens
            .iter()
            .filter(|t| keep(t))
            .cloned()
            .collect();
        let neg: HashSet<String> = negative
            .tokens
            .iter()
            .filter(|t| keep(t))
            .cloned()
            .collect();

        if pos.is_empty() && neg.is_empty() {
            return Err(LexiconError::UnusableLexicon);
        }

        let mut warnings = positive.warnings;
        warnings.extend(negative.warnings);
        warnings.extend(negators.warnings);

        let summary = SourceSummary {
            positive: pos.len(),
            negative: neg.len(),
            negators: negators.tokens.len(),
            duplicates: positive.duplicates + negative.duplicates + negators.duplicates,
            rejected: positive.rejected + negative.rejected + negators.rejected,
            conflicts: conflicts.len(),
            negator_overlaps,
            warnings,
        };
        Ok(Lexicon {
            positive: pos,
            negative: neg,
            negators: negators.tokens,
            summary,
        })
    }

    pub fn polarity_of(&self, token: &str) -> Polarity {
        if self.positive.contains(token) {
            Polarity::Positive
        } else if self.negative.contains(token) {
            Polarity::Negative
        } else {
            Polarity::Neutral
        }
    }

    pub fn is_negator(&self, token: &str) -> bool {
        self.negators.contains(token)
    }

    /// True if the token is in any of the three lists.
    pub fn contains(&self, token: &str) -> bool {
        self.is_negator(token) || self.polarity_of(token) != Polarity::Neutral
    }

    pub fn positive_words(&self) -> &HashSet<String> {
        &self.positive
    }

    pub fn negative_words(&self) -> &HashSet<String> {
        &self.negative
    }

    pub fn negators(&self) -> &HashSet<String> {
        &self.negators
    }

    /// Every token in the lexicon, all three lists included.
    pub fn all_tokens(&self) -> impl Iterator<Item = &str> {
        self.positive
            .iter()
            .chain(&self.negative)
            .chain(&self.negators)
            .map(String::as_str)
    }

    pub fn source_summary(&self) -> &SourceSummary {
        &self.summary
    }
}

pub fn polarity_of(token: &str, lexicon: &Lexicon) -> Polarity {
    lexicon.polarity_of(token)
}

pub fn is_negator(token: &str, lexicon: &Lexicon) -> bool {
    lexicon.is_negator(token)
}
