//! Score topics by NPMI over sliding windows of a reference corpus.
//!
//! ```bash
//! cargo run -p smh --example npmi_coherence
//! ```

use smh::coherence::{count_windows, npmi_pair, npmi_topic, summarize};

fn main() -> smh::Result<()> {
    let reference = [
        "the river bank flooded after the storm",
        "the bank raised interest rates on loans",
        "loans and interest rates at the central bank",
        "fish swim up the river past the bank",
        "the storm flooded the river valley",
    ];
    let docs: Vec<Vec<&str>> = reference.iter().map(|d| d.split_whitespace().collect()).collect();
    let counts = count_windows(&docs, 5, None)?;

    for (a, b) in [("interest", "rates"), ("river", "storm"), ("river", "loans")] {
        println!("npmi({a}, {b}) = {:+.3}", npmi_pair(&counts, a, b));
    }

    let topics = [
        vec!["bank", "interest", "rates", "loans"],
        vec!["river", "storm", "flooded", "valley"],
        vec!["fish", "rates", "valley", "central"],
    ];
    let mut scores = Vec::new();
    for (id, words) in topics.iter().enumerate() {
        let c = npmi_topic(id as u32, words, &counts)?;
        println!("topic {id}: {:+.3}  {}", c.npmi, words.join(" "));
        scores.push(c.npmi);
    }
    if let Some(s) = summarize(&scores) {
        println!("mean {:+.3} median {:+.3} std {:.3}", s.mean, s.median, s.std);
    }
    Ok(())
}
