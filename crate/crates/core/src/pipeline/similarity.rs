//! Gestalt pattern matching similarity (Ratcliff/Obershelp), the same ratio
//! Python's `difflib.SequenceMatcher.ratio()` reports, used for opt-in
//! spelling correction.

use crate::lexicon::Lexicon;

/// Default minimum ratio for accepting a correction.
pub const DEFAULT_SPELL_THRESHOLD: f64 = 0.85;

/// `2 * M / (|a| + |b|)` where `M` counts characters in matching blocks.
/// Two empty strings have ratio 1.
pub fn similarity_ratio(a: &str, b: &str) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    ratio_chars(&a, &b)
}

fn ratio_chars(a: &[char], b: &[char]) -> f64 {
    let total = a.len() + b.len();
    if total == 0 {
        return 1.0;
    }
    2.0 * matching_chars(a, b) as f64 / total as f64
}

fn matching_chars(a: &[char], b: &[char]) -> usize {
    let mut matched = 0;
    let mut queue = vec![(0, a.len(), 0, b.len())];
    while let Some((alo, ahi, blo, bhi)) = queue.pop() {
        let (i, j, k) = longest_match(a, alo, ahi, b, blo, bhi);
        if k == 0 {
            continue;
        }
        matched += k;
        if alo < i && blo < j {
            queue.push((alo, i, blo, j));
        }
        if i + k < ahi && j + k < bhi {
            queue.push((i + k, ahi, j + k, bhi));
        }
    }
    matched
}

/// Longest common block in `a[alo..ahi]` x `b[blo..bhi]`. Ties go to the
/// block that starts earliest in `a`, then earliest in `b`.
#[allow(clippy::needless_range_loop)]
fn longest_match(
    a: &[char],
    alo: usize,
    ahi: usize,
    b: &[char],
    blo: usize,
    bhi: usize,
) -> (usize, usize, usize) {
    let (mut best_i, mut best_j, mut best_k) = (alo, blo, 0);
    let width = bhi - blo;
    let mut prev = vec![0usize; width + 1];
    let mut cur = vec![0usize; width + 1];
    for i in alo..ahi {
        for j in blo..bhi {
            let col = j - blo + 1;
            if a[i] == b[j] {
                let k = prev[col - 1] + 1;
                cur[col] = k;
                if k > best_k {
                    best_i = i + 1 - k;
                    best_j = j + 1 - k;
                    best_k = k;
                }
            } else {
                cur[col] = 0;
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    (best_i, best_j, best_k)
}

/// Maps unknown tokens to their closest lexicon entry.
#[derive(Debug, Clone)]
pub struct SpellCorrector {
    threshold: f64,
    // Sorted by token so ties resolve to the lexicographically smallest.
    candidates: Vec<(String, Vec<char>)>,
}

impl SpellCorrector {
    pub fn new(lexicon: &Lexicon, threshold: f64) -> Self {
        let mut candidates: Vec<(String, Vec<char>)> = lexicon
            .all_tokens()
            .map(|t| (t.to_string(), t.chars().collect()))
            .collect();
        candidates.sort();
        SpellCorrector {
            threshold,
            candidates,
        }
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    /// The most similar lexicon token if its ratio reaches the threshold.
    pub fn suggest(&self, token: &str) -> Option<&str> {
        let chars: Vec<char> = token.chars().collect();
        let mut best: Option<(&str, f64)> = None;
        for (candidate, cand_chars) in &self.candidates {
            let total = chars.len() + cand_chars.len();
            if total == 0 {
                continue;
            }
            let bound = 2.0 * chars.len().min(cand_chars.len()) as f64 / total as f64;
            let floor = best.map_or(self.threshold, |(_, r)| r);
            if bound < floor || (best.is_some() && bound == floor) {
                continue;
            }
            let ratio = ratio_chars(&chars, cand_chars);
            let improves = match best {
                Some((_, r)) => ratio > r,
                None => ratio >= self.threshold,
            };
            if improves {
                best = Some((candidate, ratio));
            }
        }
        best.map(|(t, _)| t)
    }
}

/// One-shot form of [`SpellCorrector::suggest`].
pub fn suggest_correction(token: &str, lexicon: &Lexicon, threshold: f64) -> Option<String> {
    SpellCorrector::new(lexicon, threshold)
        .suggest(token)
        .map(str::to_string)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Expected ratios computed with CPython's difflib.SequenceMatcher.
    #[test]
    fn ratios_match_difflib() {
        let cases = [
            ("gud", "good", 4.0 / 7.0),
            ("good", "good", 1.0),
            ("abcd", "bcde", 0.75),
            ("hapy", "happy", 8.0 / 9.0),
            ("vacine", "vaccine", 12.0 / 13.0),
            ("terible", "terrible", 14.0 / 15.0),
            ("abxcd", "abcd", 8.0 / 9.0),
            ("", "abc", 0.0),
            ("", "", 1.0),
        ];
        for (a, b, expected) in cases {
            let got = similarity_ratio(a, b);
            assert!(
                (got - expected).abs() < 1e-12,
                "{a} {b}: {got} vs {expected}"
            );
        }
    }

    #[test]
    fn ratio_is_symmetric_on_samples() {
        for (a, b) in [("vaccine", "vacine"), ("sadd", "sad"), ("xyz", "zyx")] {
            assert_eq!(similarity_ratio(a, b), similarity_ratio(b, a));
        }
    }

    #[test]
    fn gud_below_threshold() {
        let lex = Lexicon::from_words(["good"], ["bad"], ["not"]).unwrap();
        assert_eq!(suggest_correction("gud", &lex, 0.6), None);
        assert_eq!(
            suggest_correction("gud", &lex, 0.5).as_deref(),
            Some("good")
        );
    }

    #[test]
    fn identical_token_always_suggested() {
        let lex = Lexicon::from_words(["good"], ["bad"], ["not"]).unwrap();
        for threshold in [0.0, 0.5, 0.85, 1.0] {
            assert_eq!(
                suggest_correction("good", &lex, threshold).as_deref(),
                Some("good")
            );
        }
    }

    #[test]
    fn bundled_lexicon_suggestions() {
        let lex = Lexicon::bundled().unwrap();
        let corrector = SpellCorrector::new(&lex, 0.9);
        // Best bundled match for "zzz" scores 0.5 ("dizzy", "fuzzy").
        assert_eq!(corrector.suggest("zzz"), None);
        assert_eq!(corrector.suggest("terible"), Some("terrible"));
        // "happy" and "harpy" tie at 8/9; the smaller token wins.
        let loose = SpellCorrector::new(&lex, 0.85);
        assert_eq!(loose.suggest("hapy"), Some("happy"));
        assert_eq!(loose.suggest("sadd"), Some("sad"));
    }
}
