//! Run the discovery stages one at a time: inverted file, co-occurring
//! word sets, overlap clustering, topic formation and ranking.
//!
//! ```bash
//! cargo run --release -p smh --example stage_by_stage
//! ```

use std::collections::HashSet;

use smh::corpus::{build_inverted_file, ingest};
use smh::discovery::{cluster_cws, extract_cws, form_topics, rank_topics, CandidateSearch, ClusterParams};
use smh::minhash::SmhParams;
use smh::synth::{generate, PlantedSpec};

fn main() -> smh::Result<()> {
    let planted = generate(&PlantedSpec {
        n_topics: 4,
        n_docs: 400,
        seed: 3,
        ..PlantedSpec::default()
    })?;
    let (vocab, bags) = ingest(planted.docs, &HashSet::new(), 100_000)?;
    let inverted = build_inverted_file(&bags, vocab.len());
    println!("{} documents, {} words", bags.len(), inverted.len());

    let smh = SmhParams::new(0.06, 2, 11)?;
    let cws = extract_cws(&inverted, &smh, 1)?;
    println!("{} tables -> {} co-occurring word sets", smh.tables, cws.len());

    let params = ClusterParams::default();
    let exact = cluster_cws(&cws, &params, &CandidateSearch::Exact)?;
    let approx = cluster_cws(
        &cws,
        &params,
        &CandidateSearch::for_epsilon(params.overlap_epsilon, 11)?,
    )?;
    println!(
        "clusters: {} exact, {} with MinHash candidates",
        exact.len(),
        approx.len()
    );

    let topics = rank_topics(form_topics(&approx, &cws, &params), &inverted, params.top_k_words)?;
    for t in &topics {
        let words: Vec<&str> = t.top_words(8).map(|w| vocab.word(w).unwrap_or("?")).collect();
        println!(
            "topic {} score={:.1} from {} sets: {}",
            t.id,
            t.score,
            t.n_cws,
            words.join(" ")
        );
    }
    Ok(())
}
