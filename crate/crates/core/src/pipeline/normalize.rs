//! Text cleanup applied to raw posts before tokenizing.

const URL_PREFIXES: [&str; 3] = ["http://", "https://", "www."];

/// Lowercases `text` and strips what the scorer cannot use.
///
/// URLs (`http://`, `https://`, `www.`) and `@` mentions are dropped, then
/// every character other than a letter, a digit or an apostrophe between two
/// alphanumerics becomes a space. Whitespace runs collapse to one space and
/// the result is trimmed. Hashtags keep their word because `#` is simply
/// turned into a space.
pub fn normalize(text: &str) -> String {
    let lowered: Vec<char> = text
        .to_lowercase()
        .chars()
        .map(|c| if c == '\u{2019}' { '\'' } else { c })
        .collect();
    let stripped = strip_urls_and_mentions(&lowered);

    let mut out = String::with_capacity(stripped.len());
    let mut pending_space = false;
    for (i, &c) in stripped.iter().enumerate() {
        let keep = if c.is_alphanumeric() {
            true
        } else if c == '\'' {
            let before = i > 0 && stripped[i - 1].is_alphanumeric();
            let after = stripped.get(i + 1).is_some_and(|n| n.is_alphanumeric());
            before && after
        } else {
            false
        };
        if keep {
            if pending_space && !out.is_empty() {
                out.push(' ');
            }
            pending_space = false;
            out.push(c);
        } else {
            pending_space = true;
        }
    }
    out
}

/// Replaces URL and mention spans with a single space each.
fn strip_urls_and_mentions(chars: &[char]) -> Vec<char> {
    let mut out = Vec::with_capacity(chars.len());
    let mut i = 0;
    while i < chars.len() {
        let at_boundary = i == 0 || !chars[i - 1].is_alphanumeric();
        if at_boundary {
            if URL_PREFIXES.iter().any(|p| starts_with(&chars[i..], p)) {
                while i < chars.len() && !chars[i].is_whitespace() {
                    i += 1;
                }
                out.push(' ');
                continue;
            }
            if chars[i] == '@' && chars.get(i + 1).is_some_and(|c| is_handle_char(*c)) {
                i += 1;
                while i < chars.len() && is_handle_char(chars[i]) {
                    i += 1;
                }
                out.push(' ');
                continue;
            }
        }
        out.push(chars[i]);
        i += 1;
    }
    out
}

fn is_handle_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn starts_with(chars: &[char], prefix: &str) -> bool {
    let mut it = chars.iter();
    prefix.chars().all(|p| it.next() == Some(&p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_negation_sentence() {
        assert_eq!(normalize("I am NOT sad!!"), "i am not sad");
    }

    #[test]
    fn empty_stays_empty() {
        assert_eq!(normalize(""), "");
        assert_eq!(normalize("  !! :) "), "");
    }

    #[test]
    fn urls_mentions_and_hashtags() {
        assert_eq!(
            normalize("Check https://x.co @bob #GoodNews :)"),
            "check goodnews"
        );
        assert_eq!(normalize("see www.nhs.uk/covid now"), "see now");
        assert_eq!(normalize("(http://a.b/c) ok"), "ok");
        assert_eq!(normalize("@nhs_uk thanks"), "thanks");
    }

    #[test]
    fn email_is_not_a_mention() {
        assert_eq!(normalize("mail me@home.org"), "mail me home org");
    }

    #[test]
    fn apostrophes_only_inside_words() {
        assert_eq!(normalize("Don't 'quote' it's"), "don't quote it's");
        assert_eq!(normalize("isn\u{2019}t"), "isn't");
        assert_eq!(normalize("a''b"), "a b");
    }

    #[test]
    fn whitespace_collapses() {
        assert_eq!(normalize("  a \t\n b  "), "a b");
    }

    #[test]
    fn unicode_letters_survive() {
        assert_eq!(normalize("Café ÜBER 🙂 naïve"), "café über naïve");
    }
}
