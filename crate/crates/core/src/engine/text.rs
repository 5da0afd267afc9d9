//! Word matching helpers shared by both game engines.
//!
//! Matching is whole-word and case-insensitive; punctuation adjacent to a
//! token is ignored. Multi-word targets match as a contiguous token run.

/// Lowercased alphanumeric tokens of `text`, in order.
fn tokens(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(|t| t.to_lowercase())
        .collect()
}

/// True when `word` occurs in `text` as a whole word (case-insensitive,
/// punctuation-trimmed). A multi-token `word` must appear as a contiguous
/// token sequence.
pub fn contains_word(text: &str, word: &str) -> bool {
    let needle = tokens(word);
    if needle.is_empty() {
        return false;
    }
    let hay = tokens(text);
    if hay.len() < needle.len() {
        return false;
    }
    hay.windows(needle.len()).any(|w| w == needle.as_slice())
}

pub fn eq_word(a: &str, b: &str) -> bool {
    tokens(a) == tokens(b) && !a.trim().is_empty()
}

/// Extracts the guessed token from an utterance containing the `Guess:`
/// pattern: the keyword (case-insensitive, preceded by a word boundary),
/// a colon, optional whitespace, then one token. Returns the first match
/// anywhere in the utterance; a keyword with no following token is not a
/// guess.
pub fn parse_guess(text: &str) -> Option<String> {
    let lower = text.to_lowercase();
    let bytes = lower.as_bytes();
    let mut from = 0;
    while let Some(pos) = lower[from..].find("guess") {
        let start = from + pos;
        from = start + 1;
        // keyword must start at a word boundary
        if start > 0 {
            let prev = lower[..start].chars().next_back().unwrap();
            if prev.is_alphanumeric() {
                continue;
            }
        }
        let mut i = start + "guess".len();
        if i >= bytes.len() || bytes[i] != b':' {
            continue;
        }
        i += 1;
        let rest = text[i..].trim_start();
        let token: String = rest
            .chars()
            .take_while(|c| !c.is_whitespace())
            .collect::<String>()
            .trim_matches(|c: char| !c.is_alphanumeric())
            .to_string();
        if token.is_empty() {
            continue;
        }
        return Some(token);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_word_matching() {
        assert!(contains_word("it is a bee", "bee"));
        assert!(contains_word("A Bee!", "bee"));
        assert!(contains_word("bee, yes", "Bee"));
        assert!(!contains_word("beekeeper story", "bee"));
        assert!(!contains_word("frisbee", "bee"));
        assert!(contains_word("I saw a polar bear today", "polar bear"));
        assert!(!contains_word("polar climates scare bears", "polar bear"));
    }

    #[test]
    fn punctuation_adjacency() {
        assert!(contains_word("ripe apple.", "apple"));
        assert!(contains_word("(apple)", "apple"));
        assert!(contains_word("'apple'?", "apple"));
    }

    #[test]
    fn guess_pattern_positions() {
        assert_eq!(parse_guess("Guess: apple"), Some("apple".into()));
        assert_eq!(parse_guess("guess:apple"), Some("apple".into()));
        assert_eq!(parse_guess("I think... Guess: apple!"), Some("apple".into()));
        assert_eq!(parse_guess("GUESS:  banana split"), Some("banana".into()));
        assert_eq!(parse_guess("no guessing here"), None);
        assert_eq!(parse_guess("wild guesses: apple"), None);
        assert_eq!(parse_guess("Guess:"), None);
        assert_eq!(parse_guess("Guess:   "), None);
    }

    #[test]
    fn guess_parsing_is_idempotent() {
        let u = "hmm Guess: kite maybe";
        assert_eq!(parse_guess(u), parse_guess(u));
    }
}
