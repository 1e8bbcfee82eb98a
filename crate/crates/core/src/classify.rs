//! Corpus-level positivity and negativity percentages.
//!
//! With `P` positive and `N` negative words found across all scored tweets:
//!
//! ```text
//! positivity = 100 / (P + N) * P
//! negativity = 100 / (P + N) * N
//! ```
//!
//! When `P + N = 0` both percentages are reported as zero and `no_signal`
//! is set.

use serde::Serialize;

use crate::pipeline::TweetScore;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Aggregate<T> {
    pub topic: String,
    pub tweets_scored: usize,
    pub total_positive: u64,
    pub total_negative: u64,
    pub positivity_pct: T,
    pub negativity_pct: T,
    pub no_signal: bool,
}

impl<T: Scalar> Aggregate<T> {
    pub fn from_totals(
        topic: impl Into<String>,
        tweets_scored: usize,
        total_positive: u64,
        total_negative: u64,
    ) -> Self {
        let total = total_positive + total_negative;
        let (positivity_pct, negativity_pct) = if total == 0 {
            (T::zero(), T::zero())
        } else {
            let share = T::from_count(100) / T::from_count(total);
            (
                share * T::from_count(total_positive),
                share * T::from_count(total_negative),
            )
        };
        Aggregate {
            topic: topic.into(),
            tweets_scored,
            total_positive,
            total_negative,
            positivity_pct,
            negativity_pct,
            no_signal: total == 0,
        }
    }

    /// Combines raw totals with `other` and recomputes the percentages.
    /// The topic of `self` is kept.
    pub fn merge(&self, other: &Aggregate<T>) -> Aggregate<T> {
        Aggregate::from_totals(
            self.topic.clone(),
            self.tweets_scored + other.tweets_scored,
            self.total_positive + other.total_positive,
            self.total_negative + other.total_negative,
        )
    }

    pub fn total_found(&self) -> u64 {
        self.total_positive + self.total_negative
    }
}

/// Sums per-tweet counts and applies the percentage formulas.
pub fn aggregate<T: Scalar>(scores: &[TweetScore], topic: &str) -> Aggregate<T> {
    let (positive, negative) = scores.iter().fold((0, 0), |(p, n), s| {
        (p + s.positive_count(), n + s.negative_count())
    });
    Aggregate::from_totals(topic, scores.len(), positive, negative)
}
