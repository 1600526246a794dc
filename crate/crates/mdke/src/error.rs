//! Error types shared across the toolkit.

use thiserror::Error;

/// Toolkit-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input text is empty, whitespace-only, or yields no tokens.
    #[error("document is empty or contains no tokens")]
    EmptyDocument,

    /// A phrase string with no words was given where one is required.
    #[error("phrase is empty")]
    EmptyPhrase,

    /// No candidate phrases could be built from the document.
    #[error("no candidate phrases in document '{0}'")]
    EmptyCandidateSpace(String),

    /// Gold list has no entries.
    #[error("empty gold list for topic '{0}'")]
    EmptyGold(String),

    /// CollabRank was invoked without collaborating documents.
    #[error("extractor '{0}' requires collaborating documents")]
    MissingContext(String),

    /// An operation needing reference summaries got a set without them.
    #[error("document set '{0}' has no reference summaries")]
    MissingSummaries(String),

    /// Per-document keyphrase lists do not biject with document ids.
    #[error("keyphrase lists misaligned with documents: {0}")]
    MisalignedLists(String),

    /// Evaluation input lacks a prediction for a dataset topic.
    #[error("no prediction supplied for topic '{0}'")]
    MissingTopicPrediction(String),

    /// Extractor name not in the supported set.
    #[error("unknown extractor '{0}'")]
    UnknownExtractor(String),

    /// Malformed input file.
    #[error("parse error in {path}: {detail}")]
    Parse { path: String, detail: String },

    /// A dataset or config invariant does not hold.
    #[error("validation error ({scope}): {detail}")]
    Validation { scope: String, detail: String },

    /// Parameter outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn validation(scope: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Validation {
            scope: scope.into(),
            detail: detail.into(),
        }
    }
}
