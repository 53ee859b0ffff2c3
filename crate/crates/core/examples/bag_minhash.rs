//! Estimate bag Jaccard similarity from MinHash signatures and show how
//! tuple size and table count shape the collision curve.
//!
//! ```bash
//! cargo run --release -p smh --example bag_minhash
//! ```

use smh::minhash::{collision_probability, jaccard_bag, jcc_bags, minhash_signature, num_tables};
use smh::Bag;

fn main() -> smh::Result<()> {
    // Postings of three words: document index -> count.
    let a = Bag::from_counts([(0, 3), (1, 1), (2, 2), (5, 1), (8, 4)]);
    let b = Bag::from_counts([(0, 2), (1, 1), (2, 2), (6, 1), (8, 1)]);
    let c = Bag::from_counts([(0, 1), (2, 3), (8, 2), (9, 1)]);

    for m in [50, 500, 5000] {
        let est = minhash_signature(&a, m, 3)?.match_fraction(&minhash_signature(&b, m, 3)?);
        println!("M={m:>4}: estimate {est:.3}, exact {:.3}", jaccard_bag(&a, &b));
    }

    let m = 5000;
    let (sa, sb, sc) = (
        minhash_signature(&a, m, 3)?,
        minhash_signature(&b, m, 3)?,
        minhash_signature(&c, m, 3)?,
    );
    let triple = (0..m)
        .filter(|&i| sa.values[i] == sb.values[i] && sb.values[i] == sc.values[i])
        .count() as f64
        / m as f64;
    println!("triple collisions {triple:.3}, JCC {:.3}", jcc_bags(&[&a, &b, &c])?);

    for (eta, r) in [(0.04, 2), (0.08, 2), (0.08, 3)] {
        let l = num_tables(eta, r)?;
        let curve: Vec<String> = [0.5, 1.0, 2.0]
            .iter()
            .map(|f| format!("{:.2}", collision_probability(eta * f, r, l)))
            .collect();
        println!(
            "eta={eta} r={r}: l={l}, P(collide) at eta/2, eta, 2eta = {}",
            curve.join(", ")
        );
    }
    Ok(())
}
