//! The command-line workflow driven from code: synthesize a corpus, ingest
//! it, discover topics, then score them against the same corpus. Every
//! step writes the same files the `smh` binary would.
//!
//! ```bash
//! cargo run --release -p smh --example file_workflow
//! ```

use smh::cli::{execute, DiscoverRun, EvaluateRun, IngestRun, RunConfig, SynthRun};
use smh::synth::PlantedSpec;

fn main() -> smh::Result<()> {
    let dir = std::env::temp_dir().join(format!("smh-workflow-{}", std::process::id()));
    let steps = [
        RunConfig::Synth(SynthRun {
            output_dir: dir.join("synth"),
            spec: PlantedSpec::default(),
        }),
        RunConfig::Ingest(IngestRun {
            input: dir.join("synth/corpus.txt"),
            output_dir: dir.join("ingest"),
            vocab_size: 100_000,
            stopwords: None,
        }),
        RunConfig::Discover(DiscoverRun {
            bags: dir.join("ingest/bags.txt"),
            vocab: dir.join("ingest/vocab.txt"),
            output: dir.join("topics.txt"),
            cws_dump: None,
            eta: 0.04,
            tuple_size: 2,
            tables: None,
            overlap: 0.9,
            min_set_size: 3,
            min_cluster_size: 5,
            min_topic_words: 10,
            top_k: 10,
            seed: 1,
            threads: 0,
            exact_clustering: false,
            pair_tuple_size: None,
            pair_tables: None,
        }),
        RunConfig::Evaluate(EvaluateRun {
            topics: dir.join("topics.txt"),
            reference: dir.join("synth/corpus.txt"),
            output: dir.join("coherence.txt"),
            top_n: 10,
            top_k: 10,
            window_size: 10,
        }),
    ];
    for step in &steps {
        execute(step)?;
    }
    println!("{}", std::fs::read_to_string(dir.join("topics.txt.manifest"))?);
    print!("{}", std::fs::read_to_string(dir.join("coherence.txt"))?);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
