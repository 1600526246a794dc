//! Tokenization, sentence segmentation, stemming, stopword handling, and
//! document-frequency statistics — the substrate every other module
//! consumes.
//!
//! All types here are immutable after construction and all operations are
//! pure functions, so everything is safe to share across threads.

mod lexicon;
mod porter;
mod tokenizer;

use std::fmt;

use crate::error::{Error, Result};

pub use lexicon::{
    Lexicon, ABBREVIATIONS_ENV, BUNDLED_ABBREVIATIONS, BUNDLED_STOPWORDS, STOPWORDS_ENV,
};
pub use tokenizer::Tokenizer;

/// Porter-stemmed, lowercased form of a word.
///
/// Contains no whitespace. Non-alphabetic words (numbers, hyphenations,
/// contractions) keep their lowercased surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Stem(String);

impl Stem {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Stem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Stem {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Stem a single word: lowercase it and, when purely alphabetic ASCII,
/// apply the Porter rules. Anything else is returned as its lowercased
/// self.
pub fn stem_word(word: &str) -> Stem {
    let lower = word.to_lowercase();
    if !lower.is_empty() && lower.bytes().all(|b| b.is_ascii_lowercase()) {
        Stem(porter::stem_ascii_lower(&lower))
    } else {
        Stem(lower)
    }
}

/// One token of a document.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    /// Original surface form, case preserved.
    pub surface: String,
    pub stem: Stem,
    /// Zero-based token index within the document, contiguous across
    /// sentences.
    pub position: usize,
    pub sentence_index: usize,
    pub is_stopword: bool,
    /// Byte offsets into the raw text.
    pub char_span: (usize, usize),
}

/// A tokenized, sentence-segmented source text.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub id: String,
    pub raw_text: String,
    pub sentences: Vec<Vec<Token>>,
}

impl Document {
    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flatten()
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(Vec::len).sum()
    }

    /// Concatenate documents into one pseudo-document. Inputs are separated
    /// by blank lines and their sentence structure is preserved, so no
    /// sentence ever spans a source boundary.
    pub fn concat(id: impl Into<String>, docs: &[Document]) -> Result<Document> {
        if docs.is_empty() {
            return Err(Error::EmptyDocument);
        }
        let mut raw_text = String::new();
        let mut sentences = Vec::new();
        let mut position = 0;
        let mut sentence_index = 0;
        for (i, doc) in docs.iter().enumerate() {
            if i > 0 {
                raw_text.push_str("\n\n");
            }
            let byte_offset = raw_text.len();
            raw_text.push_str(&doc.raw_text);
            for sentence in &doc.sentences {
                let shifted: Vec<Token> = sentence
                    .iter()
                    .map(|t| Token {
                        surface: t.surface.clone(),
                        stem: t.stem.clone(),
                        position: position + t.position,
                        sentence_index,
                        is_stopword: t.is_stopword,
                        char_span: (t.char_span.0 + byte_offset, t.char_span.1 + byte_offset),
                    })
                    .collect();
                sentences.push(shifted);
                sentence_index += 1;
            }
            position += doc.token_count();
        }
        Ok(Document {
            id: id.into(),
            raw_text,
            sentences,
        })
    }
}

/// Documents of one topic, optionally with its reference summaries.
#[derive(Debug, Clone, PartialEq)]
pub struct DocumentSet {
    pub topic_id: String,
    pub documents: Vec<Document>,
    pub reference_summaries: Vec<Document>,
}

impl DocumentSet {
    pub fn new(topic_id: impl Into<String>, documents: Vec<Document>) -> Result<DocumentSet> {
        let topic_id = topic_id.into();
        if topic_id.is_empty() {
            return Err(Error::validation("document set", "empty topic id"));
        }
        if documents.is_empty() {
            return Err(Error::validation(
                format!("topic {topic_id}"),
                "no documents",
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for doc in &documents {
            if !seen.insert(doc.id.as_str()) {
                return Err(Error::validation(
                    format!("topic {topic_id}"),
                    format!("duplicate document id '{}'", doc.id),
                ));
            }
        }
        Ok(DocumentSet {
            topic_id,
            documents,
            reference_summaries: Vec::new(),
        })
    }

    pub fn with_summaries(mut self, summaries: Vec<Document>) -> DocumentSet {
        self.reference_summaries = summaries;
        self
    }
}

/// Number of documents containing at least one token with stem `s`.
pub fn document_frequency(s: &Stem, docs: &[Document]) -> usize {
    docs.iter()
        .filter(|d| d.tokens().any(|t| &t.stem == s))
        .count()
}

/// Tokenize with the bundled lexicon.
pub fn tokenize(raw_text: &str) -> Result<Document> {
    Tokenizer::new(Lexicon::bundled()).tokenize("doc", raw_text)
}

/// Stopword membership against the bundled list, case-insensitive.
pub fn is_stopword(word: &str) -> bool {
    Lexicon::bundled().is_stopword(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stem_word_examples() {
        assert_eq!(stem_word("training").as_str(), "train");
        assert_eq!(stem_word("cat").as_str(), "cat");
        assert_eq!(stem_word("Testing").as_str(), "test");
        // Non-letter content passes through lowercased.
        assert_eq!(stem_word("100-meter").as_str(), "100-meter");
        assert_eq!(stem_word("1990").as_str(), "1990");
    }

    #[test]
    fn document_frequency_is_presence_not_count() {
        let docs: Vec<Document> = [
            "The drill ran. The drill ran again. The drill kept running.",
            "No mention here at all.",
            "One drill only.",
        ]
        .iter()
        .map(|t| tokenize(t).unwrap())
        .collect();
        let s = stem_word("drill");
        assert_eq!(document_frequency(&s, &docs), 2);
        assert_eq!(document_frequency(&stem_word("absent"), &docs), 0);
    }

    #[test]
    fn document_frequency_on_single_doc_is_binary() {
        let doc = tokenize("alpha beta alpha beta alpha").unwrap();
        let docs = [doc];
        for stem in ["alpha", "beta", "gamma"] {
            let df = document_frequency(&stem_word(stem), &docs);
            assert!(df <= 1);
        }
    }

    #[test]
    fn concat_preserves_span_consistency() {
        let a = tokenize("First piece here.").unwrap();
        let b = tokenize("Second piece follows.").unwrap();
        let joined = Document::concat("both", &[a.clone(), b]).unwrap();
        for token in joined.tokens() {
            assert_eq!(
                &joined.raw_text[token.char_span.0..token.char_span.1],
                token.surface
            );
        }
        // Positions contiguous across the seam.
        let positions: Vec<usize> = joined.tokens().map(|t| t.position).collect();
        assert_eq!(positions, (0..positions.len()).collect::<Vec<_>>());
        // Single-input concat is the identity apart from the id.
        let same = Document::concat("copy", &[a.clone()]).unwrap();
        assert_eq!(same.sentences, a.sentences);
        assert_eq!(same.raw_text, a.raw_text);
    }

    #[test]
    fn duplicate_document_ids_rejected() {
        let a = tokenize("One.").unwrap();
        let b = tokenize("Two.").unwrap();
        let err = DocumentSet::new("t", vec![a, b]).unwrap_err();
        assert!(err.to_string().contains("duplicate document id"));
    }
}
