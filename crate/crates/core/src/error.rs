use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("empty corpus after filtering")]
    EmptyAfterFiltering,
    #[error("duplicate document id {0}")]
    DuplicateDocId(u64),
    #[error("vocabulary size must be at least 1")]
    ZeroVocabSize,
    #[error("word not indexed: {0}")]
    WordNotIndexed(u32),
    #[error("need at least two bags")]
    TooFewBags,
    #[error("cannot hash empty bag")]
    EmptyBag,
    #[error("cannot compute overlap of an empty set")]
    EmptySet,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input not found: {}", .0.display())]
    InputNotFound(PathBuf),
    #[error("{path}:{line}: {msg}")]
    Parse { path: String, line: usize, msg: String },
    #[error("empty reference corpus")]
    EmptyReference,
    #[error("no topics to evaluate")]
    NoTopics,
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(path: impl Into<String>, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            msg: msg.into(),
        }
    }
}
