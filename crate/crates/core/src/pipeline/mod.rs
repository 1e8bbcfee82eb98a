//! Tweet handling: normalize raw text, split it into tokens and count
//! lexicon hits with negation awareness.

mod normalize;
mod score;
mod similarity;

pub use normalize::normalize;
pub use score::{score_tokens, score_tweet, tokenize, Match, Scorer, TokenSequence, TweetScore};
pub use similarity::{
    similarity_ratio, suggest_correction, SpellCorrector, DEFAULT_SPELL_THRESHOLD,
};
