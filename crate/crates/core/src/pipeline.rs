//! End-to-end discovery over document bags, with per-stage timings.

use std::fmt;
use std::time::{Duration, Instant};

use crate::corpus::{build_inverted_file, BagOfWords};
use crate::discovery::{
    cluster_cws, extract_cws, form_topics, rank_topics, CandidateSearch, ClusterParams, CoOccurringWordSet, Topic,
};
use crate::error::{Error, Result};
use crate::minhash::SmhParams;

#[derive(Debug, Clone, PartialEq)]
pub struct DiscoveryConfig {
    pub smh: SmhParams,
    pub cluster: ClusterParams,
    pub search: CandidateSearch,
    /// 0 or 1 runs everything on the calling thread.
    pub threads: usize,
}

impl DiscoveryConfig {
    /// Default clustering and candidate search for the given filter.
    pub fn new(smh: SmhParams) -> Result<Self> {
        let cluster = ClusterParams::default();
        let search = CandidateSearch::for_epsilon(cluster.overlap_epsilon, smh.global_seed)?;
        Ok(DiscoveryConfig {
            smh,
            cluster,
            search,
            threads: 0,
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct StageTimings {
    pub inverted_file: Duration,
    pub extract_cws: Duration,
    pub cluster: Duration,
    pub form_topics: Duration,
    pub rank_topics: Duration,
    pub total: Duration,
}

impl StageTimings {
    pub fn stage_sum(&self) -> Duration {
        self.inverted_file + self.extract_cws + self.cluster + self.form_topics + self.rank_topics
    }
}

impl fmt::Display for StageTimings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "inverted_file_seconds={:.6}", self.inverted_file.as_secs_f64())?;
        writeln!(f, "extract_cws_seconds={:.6}", self.extract_cws.as_secs_f64())?;
        writeln!(f, "cluster_seconds={:.6}", self.cluster.as_secs_f64())?;
        writeln!(f, "form_topics_seconds={:.6}", self.form_topics.as_secs_f64())?;
        writeln!(f, "rank_topics_seconds={:.6}", self.rank_topics.as_secs_f64())?;
        write!(f, "total_seconds={:.6}", self.total.as_secs_f64())
    }
}

#[derive(Debug, Clone)]
pub struct Discovery {
    /// Ranked, best first.
    pub topics: Vec<Topic>,
    pub cws: Vec<CoOccurringWordSet>,
    pub n_clusters: usize,
    pub timings: StageTimings,
}

/// Runs inverted file construction, CWS extraction, clustering, topic
/// formation and ranking.
pub fn discover(bags: &[BagOfWords], vocab_size: usize, config: &DiscoveryConfig) -> Result<Discovery> {
    config.smh.validate()?;
    config.cluster.validate()?;
    let start = Instant::now();
    let mut timings = StageTimings::default();

    let mut t = Instant::now();
    let inverted = build_inverted_file(bags, vocab_size);
    if inverted.is_empty() {
        return Err(Error::EmptyAfterFiltering);
    }
    timings.inverted_file = t.elapsed();

    t = Instant::now();
    let cws = extract_cws(&inverted, &config.smh, config.threads)?;
    timings.extract_cws = t.elapsed();

    t = Instant::now();
    let clusters = cluster_cws(&cws, &config.cluster, &config.search)?;
    timings.cluster = t.elapsed();

    t = Instant::now();
    let topics = form_topics(&clusters, &cws, &config.cluster);
    timings.form_topics = t.elapsed();

    t = Instant::now();
    let topics = rank_topics(topics, &inverted, config.cluster.top_k_words)?;
    timings.rank_topics = t.elapsed();

    timings.total = start.elapsed();
    Ok(Discovery {
        topics,
        n_clusters: clusters.len(),
        cws,
        timings,
    })
}
