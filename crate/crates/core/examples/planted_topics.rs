//! Plant ten topics in a synthetic corpus, discover them, and report how
//! many come back.
//!
//! ```bash
//! cargo run --release -p smh --example planted_topics
//! ```

use std::collections::HashSet;

use smh::corpus::ingest;
use smh::minhash::SmhParams;
use smh::pipeline::{discover, DiscoveryConfig};
use smh::synth::{generate, PlantedSpec};

fn main() -> smh::Result<()> {
    let planted = generate(&PlantedSpec::default())?;
    let (vocab, bags) = ingest(planted.docs.clone(), &HashSet::new(), 100_000)?;

    let config = DiscoveryConfig::new(SmhParams::new(0.04, 2, 1)?)?;
    let found = discover(&bags, vocab.len(), &config)?;
    println!(
        "tables={} cws={} clusters={} topics={}",
        config.smh.tables,
        found.cws.len(),
        found.n_clusters,
        found.topics.len()
    );

    let mut recovered = 0;
    for (i, truth) in planted.topics.iter().enumerate() {
        let truth: HashSet<&str> = truth.iter().map(String::as_str).collect();
        let hit = found
            .topics
            .iter()
            .position(|t| t.top_words(10).all(|w| truth.contains(vocab.word(w).unwrap_or(""))));
        match hit {
            Some(rank) => {
                recovered += 1;
                println!("planted topic {i}: recovered at rank {rank}");
            }
            None => println!("planted topic {i}: missed"),
        }
    }
    println!("recovered {recovered} of {}", planted.topics.len());

    for (rank, t) in found.topics.iter().take(3).enumerate() {
        let words: Vec<String> = t
            .words
            .iter()
            .take(10)
            .map(|&(w, s)| format!("{}:{s}", vocab.word(w).unwrap_or("?")))
            .collect();
        println!("#{rank} score={:.1} n_cws={} {}", t.score, t.n_cws, words.join(" "));
    }
    println!("{}", found.timings);
    Ok(())
}
