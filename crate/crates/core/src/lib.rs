//! Topic discovery by sampled min-hashing.
//!
//! Words whose inverted file bags keep landing in the same MinHash bucket
//! co-occur beyond pairs; those co-occurring word sets are merged by overlap
//! into topics, and topics are scored for coherence with NPMI.
//!
//! * [`corpus`]: vocabulary, bags-of-words, inverted file
//! * [`minhash`]: consistent sampling for integer bags, the co-occurrence
//!   filter and pairwise candidate search
//! * [`discovery`]: CWS extraction, overlap clustering, topics
//! * [`coherence`]: sliding-window NPMI
//! * [`synth`]: planted-topic corpora
//! * [`pipeline`] and [`cli`]: orchestration, manifests and commands

pub mod bag;
pub mod cli;
pub mod coherence;
pub mod corpus;
pub mod discovery;
pub mod error;
pub mod format;
pub mod minhash;
pub mod pipeline;
pub mod synth;
pub mod union_find;

pub use bag::Bag;
pub use error::{Error, Result};
