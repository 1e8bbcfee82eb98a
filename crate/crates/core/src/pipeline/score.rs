use serde::{Deserialize, Serialize};

use crate::ingest::Tweet;
use crate::lexicon::{Lexicon, Polarity};

use super::normalize::normalize;
use super::similarity::SpellCorrector;

/// Whitespace-delimited tokens of normalized text.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenSequence(Vec<String>);

impl TokenSequence {
    pub fn tokens(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<String> {
        self.0
    }
}

impl AsRef<[String]> for TokenSequence {
    fn as_ref(&self) -> &[String] {
        &self.0
    }
}

/// Splits already-normalized text on whitespace.
pub fn tokenize(normalized: &str) -> TokenSequence {
    TokenSequence(normalized.split_whitespace().map(str::to_string).collect())
}

/// A lexicon word found in a tweet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Match {
    pub token: String,
    /// The word followed a negator and was counted for the opposite polarity.
    pub negated: bool,
}

impl Match {
    pub fn new(token: impl Into<String>, negated: bool) -> Self {
        Match {
            token: token.into(),
            negated,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TweetScore {
    pub tweet_id: String,
    pub matched_positive: Vec<Match>,
    pub matched_negative: Vec<Match>,
}

impl TweetScore {
    pub fn new(tweet_id: impl Into<String>) -> Self {
        TweetScore {
            tweet_id: tweet_id.into(),
            ..Default::default()
        }
    }

    pub fn positive_count(&self) -> u64 {
        self.matched_positive.len() as u64
    }

    pub fn negative_count(&self) -> u64 {
        self.matched_negative.len() as u64
    }
}

/// Scores tokens against a lexicon, optionally correcting unknown words first.
#[derive(Debug, Clone)]
pub struct Scorer<'a> {
    lexicon: &'a Lexicon,
    corrector: Option<SpellCorrector>,
}

impl<'a> Scorer<'a> {
    pub fn new(lexicon: &'a Lexicon) -> Self {
        Scorer {
            lexicon,
            corrector: None,
        }
    }

    pub fn with_spell_correction(lexicon: &'a Lexicon, threshold: f64) -> Self {
        Scorer {
            lexicon,
            corrector: Some(SpellCorrector::new(lexicon, threshold)),
        }
    }

    pub fn lexicon(&self) -> &Lexicon {
        self.lexicon
    }

    /// Replaces tokens absent from every list with their closest lexicon entry,
    /// when spelling correction is on.
    pub fn correct(&self, tokens: TokenSequence) -> TokenSequence {
        let Some(corrector) = &self.corrector else {
            return tokens;
        };
        TokenSequence(
            tokens
                .0
                .into_iter()
                .map(|t| {
                    if self.lexicon.contains(&t) {
                        return t;
                    }
                    corrector.suggest(&t).map_or(t, str::to_string)
                })
                .collect(),
        )
    }

    pub fn score_text(&self, id: &str, text: &str) -> TweetScore {
        let tokens = self.correct(tokenize(&normalize(text)));
        score_tokens(id, tokens.tokens(), self.lexicon)
    }

    pub fn score(&self, tweet: &Tweet) -> TweetScore {
        self.score_text(&tweet.id, &tweet.text)
    }
}

/// Counts polarized tokens. A word directly after a negator counts for the
/// opposite polarity and is flagged `negated`; negators contribute nothing.
pub fn score_tokens(id: &str, tokens: &[String], lexicon: &Lexicon) -> TweetScore {
    let mut score = TweetScore::new(id);
    for (i, token) in tokens.iter().enumerate() {
        let polarity = lexicon.polarity_of(token);
        if polarity == Polarity::Neutral {
            continue;
        }
        let negated = i > 0 && lexicon.is_negator(&tokens[i - 1]);
        let counted = if negated {
            polarity.opposite()
        } else {
            polarity
        };
        let bucket = match counted {
            Polarity::Positive => &mut score.matched_positive,
            _ => &mut score.matched_negative,
        };
        bucket.push(Match::new(token.as_str(), negated));
    }
    score
}

/// Normalizes, tokenizes and scores one tweet. Spelling correction is off.
pub fn score_tweet(tweet: &Tweet, lexicon: &Lexicon) -> TweetScore {
    Scorer::new(lexicon).score(tweet)
}
