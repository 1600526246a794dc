//! Stopword and abbreviation lists.
//!
//! Both lists ship as plain UTF-8 data files, one entry per line, bundled
//! into the binary. Alternate files can be supplied at startup (CLI flag or
//! the `MDKE_STOPWORDS` / `MDKE_ABBREVIATIONS` environment variables).

use std::collections::HashSet;
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const BUNDLED_STOPWORDS: &str = include_str!("../../data/stopwords.txt");
pub const BUNDLED_ABBREVIATIONS: &str = include_str!("../../data/abbreviations.txt");

/// Environment variable naming an alternate stopword file.
pub const STOPWORDS_ENV: &str = "MDKE_STOPWORDS";
/// Environment variable naming an alternate abbreviation file.
pub const ABBREVIATIONS_ENV: &str = "MDKE_ABBREVIATIONS";

/// Case-insensitive stopword and abbreviation membership.
#[derive(Debug, Clone)]
pub struct Lexicon {
    stopwords: HashSet<String>,
    abbreviations: HashSet<String>,
}

fn parse_list(text: &str) -> HashSet<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_lowercase)
        .collect()
}

impl Lexicon {
    /// Lexicon built from the bundled data files.
    pub fn bundled() -> &'static Lexicon {
        static BUNDLED: OnceLock<Lexicon> = OnceLock::new();
        BUNDLED.get_or_init(|| Lexicon {
            stopwords: parse_list(BUNDLED_STOPWORDS),
            abbreviations: parse_list(BUNDLED_ABBREVIATIONS),
        })
    }

    /// Build from explicit list files; `None` falls back to the bundled list.
    pub fn from_files(stopwords: Option<&Path>, abbreviations: Option<&Path>) -> Result<Lexicon> {
        let read = |path: &Path| -> Result<String> {
            std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))
        };
        let stopwords = match stopwords {
            Some(p) => parse_list(&read(p)?),
            None => parse_list(BUNDLED_STOPWORDS),
        };
        let abbreviations = match abbreviations {
            Some(p) => parse_list(&read(p)?),
            None => parse_list(BUNDLED_ABBREVIATIONS),
        };
        if stopwords.is_empty() {
            return Err(Error::validation("lexicon", "stopword list is empty"));
        }
        Ok(Lexicon {
            stopwords,
            abbreviations,
        })
    }

    /// Build from the environment-variable overrides, falling back to the
    /// bundled lists.
    pub fn from_env() -> Result<Lexicon> {
        let var = |name: &str| std::env::var_os(name).map(std::path::PathBuf::from);
        Lexicon::from_files(
            var(STOPWORDS_ENV).as_deref(),
            var(ABBREVIATIONS_ENV).as_deref(),
        )
    }

    pub fn is_stopword(&self, word: &str) -> bool {
        self.stopwords.contains(&word.to_lowercase())
    }

    /// True when `word` (sans trailing period) is a known abbreviation,
    /// e.g. "Dr" or "u.s".
    pub fn is_abbreviation(&self, word: &str) -> bool {
        self.abbreviations
            .contains(&word.trim_end_matches('.').to_lowercase())
    }

    pub fn stopword_count(&self) -> usize {
        self.stopwords.len()
    }

    pub fn stopwords(&self) -> impl Iterator<Item = &str> {
        self.stopwords.iter().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stopword_membership() {
        let lex = Lexicon::bundled();
        assert!(lex.is_stopword("the"));
        assert!(!lex.is_stopword("steroid"));
    }

    #[test]
    fn every_entry_matches_its_uppercase_form() {
        let lex = Lexicon::bundled();
        let entries: Vec<String> = lex.stopwords().map(str::to_uppercase).collect();
        for entry in entries {
            assert!(lex.is_stopword(&entry), "entry {entry:?}");
        }
    }

    #[test]
    fn abbreviation_membership() {
        let lex = Lexicon::bundled();
        assert!(lex.is_abbreviation("Dr"));
        assert!(lex.is_abbreviation("Dr."));
        assert!(lex.is_abbreviation("U.S."));
        assert!(!lex.is_abbreviation("Smith"));
    }

    #[test]
    fn custom_file_overrides() {
        let dir = tempfile::tempdir().unwrap();
        let stop = dir.path().join("stop.txt");
        std::fs::write(&stop, "foo\nbar\n").unwrap();
        let lex = Lexicon::from_files(Some(&stop), None).unwrap();
        assert!(lex.is_stopword("FOO"));
        assert!(!lex.is_stopword("the"));
        assert!(lex.is_abbreviation("dr"));
    }
}
