//! Rule-based tokenizer and sentence splitter for Latin-script news text.
//!
//! A token is a maximal alphanumeric run; single hyphens, apostrophes, and
//! dotted-abbreviation periods join runs into one token ("100-meter",
//! "don't", "U.S"). Sentences break at terminal punctuation followed by
//! whitespace and a capital letter or digit, with an abbreviation exception
//! list, and always at blank lines.

use super::lexicon::Lexicon;
use super::{stem_word, Document, Token};
use crate::error::{Error, Result};

pub struct Tokenizer<'a> {
    lexicon: &'a Lexicon,
}

#[derive(Debug)]
struct WordSpan {
    start: usize,
    end: usize,
}

impl<'a> Tokenizer<'a> {
    pub fn new(lexicon: &'a Lexicon) -> Self {
        Tokenizer { lexicon }
    }

    pub fn tokenize(&self, id: impl Into<String>, raw_text: &str) -> Result<Document> {
        let chars: Vec<(usize, char)> = raw_text.char_indices().collect();
        let words = scan_words(raw_text, &chars);
        if words.is_empty() {
            return Err(Error::EmptyDocument);
        }

        let mut sentences: Vec<Vec<Token>> = vec![Vec::new()];
        for (i, word) in words.iter().enumerate() {
            if i > 0 {
                let prev = &words[i - 1];
                let gap = &raw_text[prev.end..word.start];
                let prev_surface = &raw_text[prev.start..prev.end];
                let next_first = raw_text[word.start..].chars().next().unwrap();
                if self.is_sentence_break(gap, prev_surface, next_first) {
                    sentences.push(Vec::new());
                }
            }
            let surface = raw_text[word.start..word.end].to_string();
            let token = Token {
                stem: stem_word(&surface),
                is_stopword: self.lexicon.is_stopword(&surface),
                position: i,
                sentence_index: sentences.len() - 1,
                char_span: (word.start, word.end),
                surface,
            };
            sentences.last_mut().unwrap().push(token);
        }

        Ok(Document {
            id: id.into(),
            raw_text: raw_text.to_string(),
            sentences,
        })
    }

    fn is_sentence_break(&self, gap: &str, prev_surface: &str, next_first: char) -> bool {
        if has_blank_line(gap) {
            return true;
        }
        let Some((punct_offset, punct)) = gap
            .char_indices()
            .find(|(_, c)| matches!(c, '.' | '!' | '?' | '…'))
        else {
            return false;
        };
        // The next word must open a sentence: whitespace after the
        // punctuation, then (quotes aside) a capital or digit.
        let after = &gap[punct_offset + punct.len_utf8()..];
        if !after.chars().any(char::is_whitespace) {
            return false;
        }
        if !(next_first.is_uppercase() || next_first.is_ascii_digit()) {
            return false;
        }
        if punct == '.' && punct_offset == 0 {
            // Attached period: suppress the break after known abbreviations
            // and single-letter initials.
            if self.lexicon.is_abbreviation(prev_surface) {
                return false;
            }
            let mut prev_chars = prev_surface.chars();
            if let (Some(c), None) = (prev_chars.next(), prev_chars.next()) {
                if c.is_alphabetic() {
                    return false;
                }
            }
        }
        true
    }
}

/// True when the gap contains a blank line (paragraph break).
fn has_blank_line(gap: &str) -> bool {
    let mut newlines = 0;
    for c in gap.chars() {
        match c {
            '\n' => {
                newlines += 1;
                if newlines >= 2 {
                    return true;
                }
            }
            c if c.is_whitespace() => {}
            _ => newlines = 0,
        }
    }
    false
}

/// Collect word spans: alphanumeric runs joined by internal hyphens,
/// apostrophes, or abbreviation/decimal periods.
fn scan_words(raw: &str, chars: &[(usize, char)]) -> Vec<WordSpan> {
    let mut words = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if !chars[i].1.is_alphanumeric() {
            i += 1;
            continue;
        }
        let start = chars[i].0;
        let mut segment_len = 1; // chars since the last joiner
        let mut j = i + 1;
        while j < chars.len() {
            let c = chars[j].1;
            if c.is_alphanumeric() {
                segment_len += 1;
                j += 1;
            } else if joins(c, segment_len, chars, j) {
                segment_len = 0;
                j += 1;
            } else {
                break;
            }
        }
        let end = chars.get(j).map_or(raw.len(), |&(b, _)| b);
        words.push(WordSpan { start, end });
        i = j;
    }
    words
}

fn joins(c: char, segment_len: usize, chars: &[(usize, char)], j: usize) -> bool {
    let next_alnum = chars.get(j + 1).is_some_and(|&(_, c)| c.is_alphanumeric());
    if !next_alnum {
        return false;
    }
    match c {
        '-' | '\'' | '\u{2019}' => true,
        // "U.S", "Ph.D", and decimals like "3.5"; never glues a missing
        // space after a long word's sentence-final period.
        '.' => {
            segment_len <= 2
                || (chars[j - 1].1.is_ascii_digit() && chars[j + 1].1.is_ascii_digit())
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::tokenize;

    #[test]
    fn simple_sentence() {
        let doc = tokenize("The cat sat.").unwrap();
        assert_eq!(doc.sentences.len(), 1);
        let surfaces: Vec<&str> = doc.tokens().map(|t| t.surface.as_str()).collect();
        assert_eq!(surfaces, ["The", "cat", "sat"]);
        let stems: Vec<&str> = doc.tokens().map(|t| t.stem.as_str()).collect();
        assert_eq!(stems, ["the", "cat", "sat"]);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(tokenize(""), Err(Error::EmptyDocument)));
        assert!(matches!(tokenize("   \n\t "), Err(Error::EmptyDocument)));
        assert!(matches!(tokenize("?!, --"), Err(Error::EmptyDocument)));
    }

    #[test]
    fn abbreviations_do_not_split() {
        let doc = tokenize("Dr. Smith ran. He won.").unwrap();
        assert_eq!(doc.sentences.len(), 2);
        assert_eq!(doc.sentences[0].len(), 3); // Dr Smith ran
        assert_eq!(doc.sentences[1].len(), 2); // He won
    }

    #[test]
    fn token_spans_cover_alphanumeric_text() {
        let raw = "Prices rose 3.5 percent in 1990; the U.S. economy slowed.";
        let doc = tokenize(raw).unwrap();
        for t in doc.tokens() {
            assert_eq!(&raw[t.char_span.0..t.char_span.1], t.surface);
        }
        let covered: Vec<(usize, usize)> = doc.tokens().map(|t| t.char_span).collect();
        for (i, c) in raw.char_indices() {
            if c.is_alphanumeric() {
                assert!(
                    covered.iter().any(|&(s, e)| i >= s && i < e),
                    "char {c:?} at {i} not covered"
                );
            }
        }
    }

    #[test]
    fn hyphens_and_dotted_abbreviations_stay_single_tokens() {
        let doc = tokenize("The 100-meter dash drew U.S. crowds.").unwrap();
        let surfaces: Vec<&str> = doc.tokens().map(|t| t.surface.as_str()).collect();
        assert!(surfaces.contains(&"100-meter"));
        assert!(surfaces.contains(&"U.S"));
        assert_eq!(doc.sentences.len(), 1);
    }

    #[test]
    fn blank_line_forces_break_without_punctuation() {
        let doc = tokenize("first fragment\n\nsecond fragment").unwrap();
        assert_eq!(doc.sentences.len(), 2);
    }

    #[test]
    fn positions_are_contiguous() {
        let doc = tokenize("One two. Three four! Five?  Six.").unwrap();
        let positions: Vec<usize> = doc.tokens().map(|t| t.position).collect();
        assert_eq!(positions, (0..positions.len()).collect::<Vec<_>>());
    }

    #[test]
    fn lowercase_continuation_does_not_split() {
        // "vs. the" — next word is lowercase, so no boundary.
        let doc = tokenize("Rangers vs. the Knights was close. They lost.").unwrap();
        assert_eq!(doc.sentences.len(), 2);
    }

    #[test]
    fn determinism() {
        let raw = "Dr. Smith ran 3.5 miles. A 1990 record! \"Quote.\" End.";
        let a = tokenize(raw).unwrap();
        let b = tokenize(raw).unwrap();
        assert_eq!(a, b);
    }
}
