//! Topic discovery from inverted file bags.
//!
//! 1. Every table of the co-occurrence filter groups words whose inverted
//!    file bags share an `r`-tuple; a bucket with at least `k_min` words is a
//!    co-occurring word set (CWS).
//! 2. CWS are linked when their overlap coefficient exceeds `epsilon` and the
//!    connected components of that graph are clusters. Candidate pairs come
//!    from a second MinHash search (Jaccard never exceeds overlap), or from
//!    all pairs when exact clustering is requested.
//! 3. A cluster with enough CWS becomes a topic: the union of its words,
//!    ranked by how many member CWS contain each word.

use rayon::prelude::*;

use crate::bag::Bag;
use crate::corpus::{document_frequency, InvertedFileBag, WordId};
use crate::error::{Error, Result};
use crate::minhash::{build_tables, for_each_candidate_bucket, BucketTable, PairSearch, SmhParams};
use crate::union_find::UnionFind;

pub type CwsId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoOccurringWordSet {
    pub id: CwsId,
    /// Sorted, distinct word ids.
    pub words: Vec<WordId>,
    pub table_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopicCluster {
    pub id: u32,
    /// Indices into the CWS list, ascending.
    pub members: Vec<CwsId>,
}

impl TopicCluster {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Topic {
    pub id: u32,
    /// `(word, support)` by descending support, then ascending word id.
    pub words: Vec<(WordId, u32)>,
    pub score: f64,
    pub n_cws: usize,
}

impl Topic {
    pub fn top_words(&self, k: usize) -> impl Iterator<Item = WordId> + '_ {
        self.words.iter().take(k).map(|&(w, _)| w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusterParams {
    pub overlap_epsilon: f64,
    pub min_cluster_size: usize,
    pub min_topic_words: usize,
    pub top_k_words: usize,
}

impl Default for ClusterParams {
    fn default() -> Self {
        ClusterParams {
            overlap_epsilon: 0.9,
            min_cluster_size: 5,
            min_topic_words: 10,
            top_k_words: 10,
        }
    }
}

impl ClusterParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.overlap_epsilon > 0.0 && self.overlap_epsilon < 1.0) {
            return Err(Error::invalid(format!(
                "overlap threshold must lie in (0, 1), got {}",
                self.overlap_epsilon
            )));
        }
        if self.top_k_words == 0 {
            return Err(Error::invalid("top-k words must be at least 1"));
        }
        Ok(())
    }
}

/// How candidate CWS pairs are generated before overlap verification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CandidateSearch {
    /// Every pair is verified.
    Exact,
    MinHash(PairSearch),
}

impl CandidateSearch {
    /// Pairs whose larger CWS is at most this many times the smaller one are
    /// targeted by the default search.
    pub const MAX_SIZE_RATIO: f64 = 4.0;
    pub const TARGET_RECALL: f64 = 0.99;

    /// Default second-stage search for overlap threshold `epsilon`.
    ///
    /// Overlap above `epsilon` with a size ratio of at most `c` implies a
    /// Jaccard similarity above `j0 = epsilon / (1 + c - epsilon)`. Tuples of
    /// one sample are used and the table count is the smallest that finds
    /// pairs at `j0` with probability [`Self::TARGET_RECALL`].
    pub fn for_epsilon(epsilon: f64, global_seed: u64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::invalid(format!(
                "overlap threshold must lie in (0, 1), got {epsilon}"
            )));
        }
        let j0 = epsilon / (1.0 + Self::MAX_SIZE_RATIO - epsilon);
        let tables = ((1.0 - Self::TARGET_RECALL).ln() / (-j0).ln_1p()).ceil() as usize;
        Ok(CandidateSearch::MinHash(PairSearch {
            tuple_size: 1,
            tables: tables.max(1),
            global_seed: PairSearch::derive_seed(global_seed),
        }))
    }

    /// Overrides tuple size and/or table count of a MinHash search.
    pub fn with_overrides(self, tuple_size: Option<usize>, tables: Option<usize>) -> Result<Self> {
        match self {
            CandidateSearch::Exact => Ok(self),
            CandidateSearch::MinHash(mut p) => {
                if let Some(r) = tuple_size {
                    p.tuple_size = r;
                }
                if let Some(l) = tables {
                    p.tables = l;
                }
                if p.tuple_size == 0 || p.tables == 0 {
                    return Err(Error::invalid("pair search tuple size and tables must be at least 1"));
                }
                Ok(CandidateSearch::MinHash(p))
            }
        }
    }
}

fn cws_from_table(table: BucketTable, min_set_size: usize) -> Vec<CoOccurringWordSet> {
    let table_index = table.table_index;
    table
        .into_buckets()
        .into_iter()
        .filter(|b| b.members.len() >= min_set_size)
        .map(|b| {
            let mut words = b.members;
            words.sort_unstable();
            CoOccurringWordSet {
                id: 0,
                words,
                table_index,
            }
        })
        .collect()
}

/// Extracts co-occurring word sets, table by table.
///
/// With `threads <= 1` tables are built strictly one after another. With
/// more threads, up to `threads` tables are alive at once. The result is the
/// same either way, ordered by table and then by bucket.
pub fn extract_cws(
    inverted: &[InvertedFileBag],
    params: &SmhParams,
    threads: usize,
) -> Result<Vec<CoOccurringWordSet>> {
    if inverted.is_empty() {
        return Err(Error::invalid("inverted file is empty"));
    }
    let tables = build_tables(inverted.iter().map(|b| (b.word_id, &b.postings)), params)?;
    let k = params.min_set_size;

    let per_table: Vec<Vec<CoOccurringWordSet>> = if threads <= 1 {
        tables.iter().map(|t| cws_from_table(t, k)).collect()
    } else {
        let pool = thread_pool(threads)?;
        pool.install(|| {
            (0..tables.len())
                .into_par_iter()
                .map(|x| cws_from_table(tables.table(x), k))
                .collect()
        })
    };

    let mut out: Vec<CoOccurringWordSet> = per_table.into_iter().flatten().collect();
    for (i, c) in out.iter_mut().enumerate() {
        c.id = i as CwsId;
    }
    Ok(out)
}

pub(crate) fn thread_pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::invalid(format!("cannot start thread pool: {e}")))
}

fn intersection_size(a: &[WordId], b: &[WordId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// `|a ∩ b| / min(|a|, |b|)` for sorted, distinct inputs.
pub fn overlap_coefficient(a: &[WordId], b: &[WordId]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(intersection_size(a, b) as f64 / a.len().min(b.len()) as f64)
}

fn linked(a: &[WordId], b: &[WordId], epsilon: f64) -> bool {
    // Both sides are non-empty CWS.
    intersection_size(a, b) as f64 / a.len().min(b.len()) as f64 > epsilon
}

/// Connected components of the graph linking CWS with overlap above
/// `params.overlap_epsilon`.
///
/// Clusters are ordered by their smallest member and members are ascending.
/// Pairs already in one component are not re-verified, which leaves the
/// components unchanged.
pub fn cluster_cws(
    cws: &[CoOccurringWordSet],
    params: &ClusterParams,
    search: &CandidateSearch,
) -> Result<Vec<TopicCluster>> {
    params.validate()?;
    let eps = params.overlap_epsilon;
    let mut uf = UnionFind::new(cws.len());

    match search {
        CandidateSearch::Exact => {
            for i in 0..cws.len() {
                for j in i + 1..cws.len() {
                    if uf.find(i) != uf.find(j) && linked(&cws[i].words, &cws[j].words, eps) {
                        uf.union(i, j);
                    }
                }
            }
        }
        CandidateSearch::MinHash(pair_search) => {
            let sets: Vec<(u32, Bag)> = cws
                .iter()
                .enumerate()
                .map(|(i, c)| (i as u32, Bag::from_set(c.words.iter().copied())))
                .collect();
            for_each_candidate_bucket(&sets, pair_search, |members| {
                for (x, &a) in members.iter().enumerate() {
                    for &b in &members[x + 1..] {
                        let (a, b) = (a as usize, b as usize);
                        if uf.find(a) != uf.find(b) && linked(&cws[a].words, &cws[b].words, eps) {
                            uf.union(a, b);
                        }
                    }
                }
            })?;
        }
    }

    Ok(uf
        .components()
        .into_iter()
        .enumerate()
        .map(|(id, members)| TopicCluster {
            id: id as u32,
            members: members.into_iter().map(|m| m as CwsId).collect(),
        })
        .collect())
}

/// Turns clusters into topics, dropping small clusters and small topics.
/// Scores are left at zero until [`rank_topics`].
pub fn form_topics(clusters: &[TopicCluster], cws: &[CoOccurringWordSet], params: &ClusterParams) -> Vec<Topic> {
    let mut topics = Vec::new();
    for cluster in clusters {
        if cluster.size() < params.min_cluster_size {
            continue;
        }
        let mut support: std::collections::HashMap<WordId, u32> = std::collections::HashMap::new();
        for &m in &cluster.members {
            for &w in &cws[m as usize].words {
                *support.entry(w).or_insert(0) += 1;
            }
        }
        if support.len() < params.min_topic_words {
            continue;
        }
        let mut words: Vec<(WordId, u32)> = support.into_iter().collect();
        words.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        topics.push(Topic {
            id: topics.len() as u32,
            words,
            score: 0.0,
            n_cws: cluster.size(),
        });
    }
    topics
}

/// Scores each topic by the mean document frequency of its top `top_k`
/// words and sorts by descending score, ties by ascending topic id.
pub fn rank_topics(mut topics: Vec<Topic>, inverted: &[InvertedFileBag], top_k: usize) -> Result<Vec<Topic>> {
    for t in &mut topics {
        let top: Vec<WordId> = t.top_words(top_k).collect();
        if top.is_empty() {
            t.score = 0.0;
            continue;
        }
        let mut total = 0usize;
        for &w in &top {
            total += document_frequency(w, inverted)?;
        }
        t.score = total as f64 / top.len() as f64;
    }
    topics.sort_by(|a, b| b.score.total_cmp(&a.score).then(a.id.cmp(&b.id)));
    Ok(topics)
}
