//! NPMI topic coherence over boolean sliding windows.
//!
//! Each window of `window_size` consecutive tokens counts once for every
//! distinct word it contains and once for every distinct unordered word pair.
//! Probabilities are counts over the number of windows. A topic's coherence
//! is the mean NPMI over all pairs of its top words.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

pub const DEFAULT_WINDOW_SIZE: usize = 10;

#[derive(Debug, Clone, Default)]
pub struct WindowCounts {
    pub window_size: usize,
    pub total_windows: u64,
    index: HashMap<String, u32>,
    unigrams: Vec<u64>,
    pairs: HashMap<(u32, u32), u64>,
}

impl WindowCounts {
    fn id(&self, word: &str) -> Option<u32> {
        self.index.get(word).copied()
    }

    pub fn unigram(&self, word: &str) -> u64 {
        self.id(word).map_or(0, |i| self.unigrams[i as usize])
    }

    /// Number of windows containing both words. Symmetric.
    pub fn pair(&self, a: &str, b: &str) -> u64 {
        match (self.id(a), self.id(b)) {
            (Some(x), Some(y)) if x != y => self.pairs.get(&(x.min(y), x.max(y))).copied().unwrap_or(0),
            (Some(x), Some(_)) => self.unigrams[x as usize],
            _ => 0,
        }
    }

    pub fn probability(&self, word: &str) -> f64 {
        self.unigram(word) as f64 / self.total_windows as f64
    }

    pub fn joint_probability(&self, a: &str, b: &str) -> f64 {
        self.pair(a, b) as f64 / self.total_windows as f64
    }

    /// Builds counts from raw numbers, for tests and synthetic checks.
    pub fn from_raw(
        window_size: usize,
        total_windows: u64,
        unigrams: &[(&str, u64)],
        pairs: &[((&str, &str), u64)],
    ) -> Self {
        let mut c = WindowCounts {
            window_size,
            total_windows,
            ..Default::default()
        };
        for &(w, n) in unigrams {
            let id = c.intern(w);
            c.unigrams[id as usize] = n;
        }
        for &((a, b), n) in pairs {
            let (x, y) = (c.intern(a), c.intern(b));
            c.pairs.insert((x.min(y), x.max(y)), n);
        }
        c
    }

    fn intern(&mut self, word: &str) -> u32 {
        if let Some(&id) = self.index.get(word) {
            return id;
        }
        let id = self.unigrams.len() as u32;
        self.index.insert(word.to_owned(), id);
        self.unigrams.push(0);
        id
    }
}

/// Counts word and pair presence over every window of the reference corpus.
///
/// A document shorter than the window contributes one window holding the
/// whole document; an empty document contributes none. When `filter` is
/// given only its words are counted, but all tokens still occupy window
/// positions.
pub fn count_windows<I, D, S>(docs: I, window_size: usize, filter: Option<&HashSet<String>>) -> Result<WindowCounts>
where
    I: IntoIterator<Item = D>,
    D: AsRef<[S]>,
    S: AsRef<str>,
{
    if window_size < 2 {
        return Err(Error::invalid("window size must be at least 2"));
    }
    let mut counts = WindowCounts {
        window_size,
        ..Default::default()
    };
    let mut n_docs = 0usize;
    let mut ids: Vec<Option<u32>> = Vec::new();
    let mut present: Vec<u32> = Vec::new();

    for doc in docs {
        n_docs += 1;
        let tokens = doc.as_ref();
        ids.clear();
        for t in tokens {
            let t = t.as_ref();
            let keep = filter.is_none_or(|f| f.contains(t));
            ids.push(keep.then(|| counts.intern(t)));
        }
        if ids.is_empty() {
            continue;
        }
        let n_windows = if ids.len() <= window_size {
            1
        } else {
            ids.len() - window_size + 1
        };
        for start in 0..n_windows {
            let end = (start + window_size).min(ids.len());
            present.clear();
            present.extend(ids[start..end].iter().flatten().copied());
            present.sort_unstable();
            present.dedup();
            counts.total_windows += 1;
            for (i, &a) in present.iter().enumerate() {
                counts.unigrams[a as usize] += 1;
                for &b in &present[i + 1..] {
                    *counts.pairs.entry((a, b)).or_insert(0) += 1;
                }
            }
        }
    }

    if n_docs == 0 || counts.total_windows == 0 {
        return Err(Error::EmptyReference);
    }
    Ok(counts)
}

/// NPMI of one word pair. Zero joint count gives -1 and a joint
/// probability of one gives +1.
pub fn npmi_pair(counts: &WindowCounts, a: &str, b: &str) -> f64 {
    let n = counts.total_windows;
    let joint = counts.pair(a, b);
    if joint == 0 {
        return -1.0;
    }
    if joint == n {
        return 1.0;
    }
    let (ca, cb) = (counts.unigram(a), counts.unigram(b));
    // p(a,b) / (p(a) p(b)) = joint * n / (ca * cb)
    let ratio = (joint as f64 * n as f64) / (ca as f64 * cb as f64);
    let npmi = ratio.ln() / (n as f64 / joint as f64).ln();
    npmi.clamp(-1.0, 1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopicCoherence {
    pub topic_id: u32,
    pub npmi: f64,
    pub k: usize,
    /// Top words that never appear in the reference corpus.
    pub missing: Vec<String>,
}

/// Mean NPMI over the `K (K - 1) / 2` pairs of `top_words`.
pub fn npmi_topic<S: AsRef<str>>(topic_id: u32, top_words: &[S], counts: &WindowCounts) -> Result<TopicCoherence> {
    let k = top_words.len();
    if k < 2 {
        return Err(Error::invalid("need at least two words to score a topic"));
    }
    let mut sum = 0.0;
    for j in 1..k {
        for i in 0..j {
            sum += npmi_pair(counts, top_words[i].as_ref(), top_words[j].as_ref());
        }
    }
    let missing = top_words
        .iter()
        .map(|w| w.as_ref())
        .filter(|w| counts.unigram(w) == 0)
        .map(str::to_owned)
        .collect();
    Ok(TopicCoherence {
        topic_id,
        npmi: sum / (k * (k - 1) / 2) as f64,
        k,
        missing,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub mean: f64,
    pub median: f64,
    /// Population standard deviation.
    pub std: f64,
    pub count: usize,
}

pub fn summarize(values: &[f64]) -> Option<Summary> {
    if values.is_empty() {
        return None;
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    let median = if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    };
    Some(Summary {
        mean,
        median,
        std: var.sqrt(),
        count: values.len(),
    })
}
