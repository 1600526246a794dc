//! Multi-document keyphrase extraction toolkit and benchmark harness.
//!
//! The crate provides a from-scratch text substrate (tokenizer, Porter
//! stemmer, stopword chunking), a suite of classical single-document
//! keyphrase extractors, the Concat and Merge multi-document modes, an
//! automatic gold-list builder, dataset tooling with substitute-cluster
//! support, and stemmed-match evaluation metrics.

pub mod error;
pub mod text;

pub use error::{Error, Result};

/// Scalar type used for all scores and metric values.
pub type Score = f64;
