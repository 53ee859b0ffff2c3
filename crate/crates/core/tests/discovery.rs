mod common;

use std::collections::HashSet;

use common::brute_force_components;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smh::corpus::{build_inverted_file, ingest};
use smh::discovery::{
    cluster_cws, extract_cws, form_topics, rank_topics, CandidateSearch, ClusterParams, CoOccurringWordSet,
};
use smh::minhash::SmhParams;
use smh::synth::{generate, PlantedSpec};

fn random_cws(seed: u64, n: usize) -> Vec<CoOccurringWordSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let group = rng.random_range(0..10u32);
            let size = rng.random_range(3..=8);
            let mut words: Vec<u32> = sample(&mut rng, 20, size)
                .into_iter()
                .map(|w| group * 20 + w as u32)
                .collect();
            words.sort_unstable();
            CoOccurringWordSet {
                id: i as u32,
                words,
                table_index: 0,
            }
        })
        .collect()
}

fn components(clusters: &[smh::discovery::TopicCluster]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = clusters.iter().map(|c| c.members.clone()).collect();
    out.sort();
    out
}

#[test]
fn exact_clustering_matches_brute_force() {
    for seed in 0..10 {
        let cws = random_cws(seed, 200);
        let sets: Vec<Vec<u32>> = cws.iter().map(|c| c.words.clone()).collect();
        for eps in [0.5, 0.7, 0.9] {
            let params = ClusterParams {
                overlap_epsilon: eps,
                ..ClusterParams::default()
            };
            let got = cluster_cws(&cws, &params, &CandidateSearch::Exact).unwrap();
            assert_eq!(components(&got), brute_force_components(&sets, eps));
        }
    }
}

#[test]
fn raising_epsilon_never_merges_more() {
    let cws = random_cws(42, 150);
    let mut last = 0;
    for eps in [0.3, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95] {
        let params = ClusterParams {
            overlap_epsilon: eps,
            ..ClusterParams::default()
        };
        let n = cluster_cws(&cws, &params, &CandidateSearch::Exact).unwrap().len();
        assert!(n >= last, "eps={eps}: {n} < {last}");
        last = n;
    }
}

#[test]
fn clusters_have_linked_members() {
    let cws = random_cws(3, 200);
    let params = ClusterParams::default();
    for search in [CandidateSearch::Exact, CandidateSearch::for_epsilon(0.9, 3).unwrap()] {
        for cluster in cluster_cws(&cws, &params, &search).unwrap() {
            if cluster.size() == 1 {
                continue;
            }
            for &a in &cluster.members {
                let ok = cluster.members.iter().any(|&b| {
                    b != a
                        && smh::discovery::overlap_coefficient(&cws[a as usize].words, &cws[b as usize].words).unwrap()
                            > params.overlap_epsilon
                });
                assert!(ok, "member {a} has no linked neighbour");
            }
        }
    }
}

fn planted() -> (
    smh::synth::PlantedCorpus,
    smh::corpus::Vocabulary,
    Vec<smh::corpus::BagOfWords>,
) {
    let corpus = generate(&PlantedSpec::default()).unwrap();
    let (vocab, bags) = ingest(corpus.docs.clone(), &HashSet::new(), 100_000).unwrap();
    (corpus, vocab, bags)
}

fn planted_cws(noise_fraction: f64) -> Vec<Vec<Option<usize>>> {
    let spec = PlantedSpec {
        noise_fraction,
        ..PlantedSpec::default()
    };
    let corpus = generate(&spec).unwrap();
    let (vocab, bags) = ingest(corpus.docs.clone(), &HashSet::new(), 100_000).unwrap();
    let inv = build_inverted_file(&bags, vocab.len());
    let params = SmhParams::new(0.04, 2, 11).unwrap();
    let cws = extract_cws(&inv, &params, 1).unwrap();
    assert!(!cws.is_empty());
    let owner = |w: u32| {
        let word = vocab.word(w).unwrap();
        corpus.topics.iter().position(|t| t.iter().any(|x| x == word))
    };
    cws.iter()
        .inspect(|c| assert!(c.words.len() >= 3))
        .map(|c| c.words.iter().map(|&w| owner(w)).collect())
        .collect()
}

#[test]
fn planted_cws_stay_inside_one_topic() {
    for owners in planted_cws(0.0) {
        assert!(owners[0].is_some());
        assert!(owners.iter().all(|o| *o == owners[0]), "mixed CWS {owners:?}");
    }
}

#[test]
fn noisy_planted_cws_never_span_two_topics() {
    // Noise words can join a bucket of topic words, but words of two
    // different topics never share a document and so never collide.
    let all = planted_cws(0.1);
    let mut noisy = 0;
    for owners in &all {
        let topics: HashSet<usize> = owners.iter().flatten().copied().collect();
        assert!(topics.len() <= 1, "CWS spans topics {topics:?}");
        if owners.iter().any(Option::is_none) {
            noisy += 1;
        }
    }
    assert!(
        (noisy as f64) < 0.1 * all.len() as f64,
        "{noisy} of {} CWS hold noise",
        all.len()
    );
}

#[test]
fn parallel_extraction_matches_serial() {
    let (_, vocab, bags) = planted();
    let inv = build_inverted_file(&bags, vocab.len());
    let params = SmhParams::new(0.08, 2, 5).unwrap();
    assert_eq!(
        extract_cws(&inv, &params, 0).unwrap(),
        extract_cws(&inv, &params, 4).unwrap()
    );
}

#[test]
fn topic_invariants_and_scores() {
    let (_, vocab, bags) = planted();
    let inv = build_inverted_file(&bags, vocab.len());
    let params = SmhParams::new(0.06, 2, 2).unwrap();
    let cws = extract_cws(&inv, &params, 1).unwrap();
    let cp = ClusterParams::default();
    let clusters = cluster_cws(&cws, &cp, &CandidateSearch::for_epsilon(cp.overlap_epsilon, 2).unwrap()).unwrap();
    let topics = form_topics(&clusters, &cws, &cp);
    assert!(!topics.is_empty());

    let kept: Vec<_> = clusters.iter().filter(|c| c.size() >= cp.min_cluster_size).collect();
    for t in &topics {
        assert!(t.words.len() >= cp.min_topic_words);
        assert!(t.words.iter().all(|&(_, s)| s as usize <= t.n_cws));
        assert!(t
            .words
            .windows(2)
            .all(|w| w[0].1 > w[1].1 || (w[0].1 == w[1].1 && w[0].0 < w[1].0)));
        // Every member CWS lies within the topic's words.
        let words: HashSet<u32> = t.words.iter().map(|w| w.0).collect();
        let cluster = kept.iter().find(|c| {
            c.size() == t.n_cws
                && c.members
                    .iter()
                    .all(|&m| cws[m as usize].words.iter().all(|w| words.contains(w)))
        });
        assert!(cluster.is_some());
    }

    let ranked = rank_topics(topics, &inv, 10).unwrap();
    for t in &ranked {
        // Brute force: count documents containing each top word.
        let mean = t
            .top_words(10)
            .map(|w| bags.iter().filter(|b| b.terms.contains(w)).count() as f64)
            .sum::<f64>()
            / 10.0;
        assert!((t.score - mean).abs() < 1e-12);
    }
    assert!(ranked.windows(2).all(|w| w[0].score >= w[1].score));
}

#[test]
fn stage_timings_account_for_total() {
    let (_, vocab, bags) = planted();
    let config = smh::pipeline::DiscoveryConfig::new(SmhParams::new(0.04, 2, 3).unwrap()).unwrap();
    let t = smh::pipeline::discover(&bags, vocab.len(), &config).unwrap().timings;
    let (sum, total) = (t.stage_sum().as_secs_f64(), t.total.as_secs_f64());
    assert!(sum <= total && sum >= 0.95 * total, "stages {sum} vs total {total}");
}
