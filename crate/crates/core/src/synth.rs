//! Synthetic corpora with planted topics.
//!
//! Every topic owns a disjoint set of words. A document is assigned one
//! topic and draws most of its tokens from that topic's words, the rest
//! from a shared pool of noise words and, optionally, from other topics
//! ("leak" tokens). Ground truth is the list of planted word sets.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Zipf};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PlantedSpec {
    pub n_topics: usize,
    pub words_per_topic: usize,
    pub n_docs: usize,
    pub doc_length: usize,
    pub noise_words: usize,
    pub noise_fraction: f64,
    /// Fraction of each document drawn from a different planted topic.
    pub leak_fraction: f64,
    /// Zipf exponent for word draws within a set; `None` draws uniformly.
    pub zipf_exponent: Option<f64>,
    pub seed: u64,
}

impl Default for PlantedSpec {
    fn default() -> Self {
        PlantedSpec {
            n_topics: 10,
            words_per_topic: 20,
            n_docs: 1000,
            doc_length: 50,
            noise_words: 200,
            noise_fraction: 0.1,
            leak_fraction: 0.0,
            zipf_exponent: None,
            seed: 1,
        }
    }
}

impl PlantedSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_topics == 0 || self.words_per_topic == 0 || self.n_docs == 0 {
            return Err(Error::invalid("topics, words per topic and documents must be positive"));
        }
        if self.doc_length < 5 {
            return Err(Error::invalid("document length must be at least 5"));
        }
        if !(0.0..1.0).contains(&self.noise_fraction) || !(0.0..1.0).contains(&self.leak_fraction) {
            return Err(Error::invalid("noise and leak fractions must lie in [0, 1)"));
        }
        if self.noise_fraction + self.leak_fraction >= 1.0 {
            return Err(Error::invalid("noise and leak fractions leave no topic tokens"));
        }
        if self.noise_fraction > 0.0 && self.noise_words == 0 {
            return Err(Error::invalid("noise fraction needs at least one noise word"));
        }
        if self.leak_fraction > 0.0 && self.n_topics < 2 {
            return Err(Error::invalid("leak tokens need at least two topics"));
        }
        if let Some(s) = self.zipf_exponent {
            if s.is_nan() || s <= 0.0 {
                return Err(Error::invalid("zipf exponent must be positive"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlantedCorpus {
    pub docs: Vec<(u64, Vec<String>)>,
    /// Planted topic of each document.
    pub doc_topics: Vec<usize>,
    pub topics: Vec<Vec<String>>,
    pub noise: Vec<String>,
}

pub fn topic_word(topic: usize, index: usize) -> String {
    format!("t{topic}w{index}")
}

pub fn noise_word(index: usize) -> String {
    format!("noise{index}")
}

enum WordDraw {
    Uniform(usize),
    Zipf(Zipf<f64>),
}

impl WordDraw {
    fn new(n: usize, exponent: Option<f64>) -> Result<Self> {
        Ok(match exponent {
            None => WordDraw::Uniform(n),
            Some(s) => WordDraw::Zipf(Zipf::new(n as f64, s).map_err(|e| Error::invalid(format!("zipf: {e}")))?),
        })
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> usize {
        match self {
            WordDraw::Uniform(n) => rng.random_range(0..*n),
            WordDraw::Zipf(z) => z.sample(rng) as usize - 1,
        }
    }
}

/// Generates a planted corpus.
///
/// Topics are assigned by shuffling a balanced schedule, so each document's
/// topic is uniform and every topic gets `n_docs / n_topics` documents up to
/// one.
pub fn generate(spec: &PlantedSpec) -> Result<PlantedCorpus> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let topics: Vec<Vec<String>> = (0..spec.n_topics)
        .map(|t| (0..spec.words_per_topic).map(|i| topic_word(t, i)).collect())
        .collect();
    let noise: Vec<String> = (0..spec.noise_words).map(noise_word).collect();

    let mut doc_topics: Vec<usize> = (0..spec.n_docs).map(|i| i % spec.n_topics).collect();
    doc_topics.shuffle(&mut rng);

    let n_noise = (spec.noise_fraction * spec.doc_length as f64).round() as usize;
    let n_leak = (spec.leak_fraction * spec.doc_length as f64).round() as usize;
    let n_topic = spec.doc_length - n_noise - n_leak;

    let topic_draw = WordDraw::new(spec.words_per_topic, spec.zipf_exponent)?;
    let noise_draw = WordDraw::new(spec.noise_words.max(1), spec.zipf_exponent)?;

    let mut docs = Vec::with_capacity(spec.n_docs);
    for (doc_id, &topic) in doc_topics.iter().enumerate() {
        let mut tokens = Vec::with_capacity(spec.doc_length);
        for _ in 0..n_topic {
            tokens.push(topics[topic][topic_draw.sample(&mut rng)].clone());
        }
        for _ in 0..n_leak {
            let mut other = rng.random_range(0..spec.n_topics - 1);
            if other >= topic {
                other += 1;
            }
            tokens.push(topics[other][topic_draw.sample(&mut rng)].clone());
        }
        for _ in 0..n_noise {
            tokens.push(noise[noise_draw.sample(&mut rng)].clone());
        }
        tokens.shuffle(&mut rng);
        docs.push((doc_id as u64, tokens));
    }

    Ok(PlantedCorpus {
        docs,
        doc_topics,
        topics,
        noise,
    })
}
