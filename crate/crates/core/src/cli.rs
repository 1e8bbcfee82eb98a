//! Command-line front end: `classify` and `lexicon-check`.

use std::io::Write;
use std::path::PathBuf;

use chrono::{DateTime, Utc};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::classify::aggregate;
use crate::ingest::{
    parse_timestamp, source_fetch, BoundingBox, CorpusSource, Fetched, IngestError, QueryFilter,
    DEFAULT_LIMIT,
};
use crate::lexicon::{Lexicon, LexiconError, LexiconSources, WordlistSource};
use crate::pipeline::{Scorer, TweetScore, DEFAULT_SPELL_THRESHOLD};
use crate::report::{render_summary, write_csv, ReportError};
use crate::AggregateResult;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// Bad command-line arguments (clap's own code).
    pub const USAGE: i32 = 2;
    pub const LEXICON: i32 = 3;
    pub const INPUT: i32 = 4;
    pub const OUTPUT: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(
    name = "wordlist-sentiment",
    version,
    about = "Score posts against positive/negative wordlists and report the balance"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fetch matching tweets, score them and print a summary.
    Classify(ClassifyArgs),
    /// Load the lexicon and print per-list counts.
    LexiconCheck(LexiconArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceKind {
    /// Line-delimited JSON corpus file.
    Corpus,
}

#[derive(Debug, Clone, Default, Args)]
pub struct LexiconArgs {
    /// Directory holding positive.txt, negative.txt and negators.txt
    /// (defaults to the bundled lexicon).
    #[arg(long, value_name = "DIR")]
    pub lexicon_dir: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub positive: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub negative: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub negators: Option<PathBuf>,
}

impl LexiconArgs {
    pub fn sources(&self) -> LexiconSources {
        let mut sources = match &self.lexicon_dir {
            Some(dir) => LexiconSources::from_dir(dir),
            None => LexiconSources::bundled(),
        };
        if let Some(p) = &self.positive {
            sources.positive = WordlistSource::File(p.clone());
        }
        if let Some(p) = &self.negative {
            sources.negative = WordlistSource::File(p.clone());
        }
        if let Some(p) = &self.negators {
            sources.negators = WordlistSource::File(p.clone());
        }
        sources
    }
}

#[derive(Debug, Clone, Args)]
pub struct ClassifyArgs {
    /// Keyword, phrase or hashtag to search for.
    #[arg(long)]
    pub query: String,
    #[arg(long, value_enum, default_value_t = SourceKind::Corpus)]
    pub source: SourceKind,
    /// Corpus file, one JSON record per line.
    #[arg(long, value_name = "PATH")]
    pub corpus: PathBuf,
    /// Keep tweets posted at or after this instant (ISO-8601, UTC).
    #[arg(long, value_parser = parse_instant)]
    pub since: Option<DateTime<Utc>>,
    /// Keep tweets posted before this instant.
    #[arg(long, value_parser = parse_instant)]
    pub until: Option<DateTime<Utc>>,
    /// minlat,minlon,maxlat,maxlon
    #[arg(long, allow_hyphen_values = true, value_parser = parse_bbox)]
    pub bbox: Option<BoundingBox>,
    /// Maximum number of matching tweets to score.
    #[arg(long, default_value_t = DEFAULT_LIMIT, value_parser = parse_limit)]
    pub limit: usize,
    #[command(flatten)]
    pub lexicon: LexiconArgs,
    /// Replace unknown words with their closest lexicon entry before scoring.
    #[arg(long)]
    pub spell_correct: bool,
    /// Minimum similarity ratio for a spelling correction.
    #[arg(long, default_value_t = DEFAULT_SPELL_THRESHOLD, value_parser = parse_ratio)]
    pub spell_threshold: f64,
    /// Write per-tweet details to this CSV file.
    #[arg(long, value_name = "PATH")]
    pub out_csv: Option<PathBuf>,
}

fn parse_instant(s: &str) -> Result<DateTime<Utc>, String> {
    parse_timestamp(s).ok_or_else(|| format!("not an ISO-8601 timestamp: {s:?}"))
}

fn parse_bbox(s: &str) -> Result<BoundingBox, String> {
    s.parse().map_err(|e: IngestError| e.to_string())
}

fn parse_limit(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("limit must be a positive integer, got {s:?}")),
    }
}

fn parse_ratio(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(r) if (0.0..=1.0).contains(&r) => Ok(r),
        _ => Err(format!("threshold must be a number in [0, 1], got {s:?}")),
    }
}

/// Validated settings for one classification run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub filter: QueryFilter,
    pub corpus: PathBuf,
    pub lexicon: LexiconSources,
    pub limit: usize,
    pub spell_threshold: Option<f64>,
    pub out_csv: Option<PathBuf>,
}

/// A failed run: exit code plus a one-line diagnostic.
#[derive(Debug)]
pub struct RunError {
    pub code: i32,
    pub message: String,
}

impl RunError {
    fn new(code: i32, message: impl std::fmt::Display) -> Self {
        RunError {
            code,
            message: message.to_string(),
        }
    }
}

impl From<LexiconError> for RunError {
    fn from(e: LexiconError) -> Self {
        RunError::new(exit::LEXICON, e)
    }
}

impl From<IngestError> for RunError {
    fn from(e: IngestError) -> Self {
        RunError::new(exit::INPUT, e)
    }
}

impl From<ReportError> for RunError {
    fn from(e: ReportError) -> Self {
        RunError::new(exit::OUTPUT, e)
    }
}

impl RunConfig {
    pub fn from_args(args: &ClassifyArgs) -> Result<Self, RunError> {
        let filter = QueryFilter::new(args.query.clone())
            .and_then(|f| f.with_window(args.since, args.until))
            .map_err(|e| RunError::new(exit::USAGE, e))?;
        let filter = match args.bbox {
            Some(bbox) => filter.with_bbox(bbox),
            None => filter,
        };
        let config = RunConfig {
            filter,
            corpus: args.corpus.clone(),
            lexicon: args.lexicon.sources(),
            limit: args.limit,
            spell_threshold: args.spell_correct.then_some(args.spell_threshold),
            out_csv: args.out_csv.clone(),
        };
        config.validate_paths()?;
        Ok(config)
    }

    /// Checks referenced paths before any work starts.
    pub fn validate_paths(&self) -> Result<(), RunError> {
        if !self.corpus.is_file() {
            return Err(RunError::new(
                exit::INPUT,
                format!(
                    "corpus {} does not exist or is not a file",
                    self.corpus.display()
                ),
            ));
        }
        for source in [
            &self.lexicon.positive,
            &self.lexicon.negative,
            &self.lexicon.negators,
        ] {
            if let WordlistSource::File(path) = source {
                if !path.is_file() {
                    return Err(RunError::new(
                        exit::LEXICON,
                        format!(
                            "wordlist {} does not exist or is not a file",
                            path.display()
                        ),
                    ));
                }
            }
        }
        if let Some(out) = &self.out_csv {
            let parent = out.parent().filter(|p| !p.as_os_str().is_empty());
            if parent.is_some_and(|p| !p.is_dir()) || out.is_dir() {
                return Err(RunError::new(
                    exit::OUTPUT,
                    format!("cannot write {}: no such directory", out.display()),
                ));
            }
        }
        Ok(())
    }
}

/// Everything a classification run produced.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub result: AggregateResult,
    pub summary: String,
    pub scores: Vec<TweetScore>,
    pub skipped: usize,
    pub csv_rows: Option<usize>,
}

fn fetch(config: &RunConfig, warn: &mut dyn Write) -> Result<Fetched, RunError> {
    let source = CorpusSource::new(&config.corpus);
    match source_fetch(&source, &config.filter, config.limit) {
        // An empty file is a valid, if dull, corpus; one made only of
        // malformed lines is not.
        Err(IngestError::CorpusEmpty { path, skipped: 0 }) => {
            let _ = writeln!(warn, "warning: corpus {} has no records", path.display());
            Ok(Fetched::default())
        }
        other => Ok(other?),
    }
}

/// Fetches, scores, aggregates and reports. Warnings go to `warn`.
pub fn execute(config: &RunConfig, warn: &mut dyn Write) -> Result<RunOutput, RunError> {
    let lexicon = Lexicon::load(&config.lexicon)?;
    for w in &lexicon.source_summary().warnings {
        let _ = writeln!(warn, "warning: {w}");
    }

    let fetched = fetch(config, warn)?;
    if fetched.skipped > 0 {
        let _ = writeln!(
            warn,
            "warning: skipped {} malformed corpus lines",
            fetched.skipped
        );
    }

    let scorer = match config.spell_threshold {
        Some(threshold) => Scorer::with_spell_correction(&lexicon, threshold),
        None => Scorer::new(&lexicon),
    };
    let scores: Vec<TweetScore> = fetched.tweets.par_iter().map(|t| scorer.score(t)).collect();

    let result: AggregateResult = aggregate(&scores, config.filter.keyword());
    let summary = render_summary(&result);

    let csv_rows = match &config.out_csv {
        Some(path) => Some(write_csv(&fetched.tweets, &scores, path)?),
        None => None,
    };

    Ok(RunOutput {
        result,
        summary,
        scores,
        skipped: fetched.skipped,
        csv_rows,
    })
}

pub fn run_classify(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, err) {
        Ok(run) => {
            let _ = out.write_all(run.summary.as_bytes());
            if let (Some(rows), Some(path)) = (run.csv_rows, &config.out_csv) {
                let _ = writeln!(err, "wrote {rows} rows to {}", path.display());
            }
            exit::SUCCESS
        }
        Err(e) => report_failure(e, err),
    }
}

pub fn run_lexicon_check(
    sources: &LexiconSources,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let lexicon = match Lexicon::load(sources) {
        Ok(lexicon) => lexicon,
        Err(e) => return report_failure(e.into(), err),
    };
    let s = lexicon.source_summary();
    for w in &s.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let _ = write!(
        out,
        "Positive words: {}\n\
         Negative words: {}\n\
         Negators: {}\n\
         Positive + negative: {}\n\
         Conflicts (dropped from both lists): {}\n\
         Negator overlaps (dropped from polarity lists): {}\n\
         Duplicate entries: {}\n\
         Rejected multi-word entries: {}\n\
         Lexicon usable\n",
        s.positive,
        s.negative,
        s.negators,
        s.polarized(),
        s.conflicts,
        s.negator_overlaps,
        s.duplicates,
        s.rejected,
    );
    exit::SUCCESS
}

fn report_failure(e: RunError, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {}", e.message);
    e.code
}

/// Runs a parsed command line.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match &cli.command {
        Command::Classify(args) => match RunConfig::from_args(args) {
            Ok(config) => run_classify(&config, out, err),
            Err(e) => report_failure(e, err),
        },
        Command::LexiconCheck(args) => run_lexicon_check(&args.sources(), out, err),
    }
}

/// Parses `args` (program name first) and runs it. Usage errors are printed
/// to `err` with [`exit::USAGE`].
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let rendered = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    exit::SUCCESS
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    exit::USAGE
                }
            }
        }
    }
}
