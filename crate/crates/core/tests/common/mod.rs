//! Test-only oracles. Nothing here calls into the code paths it checks.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use rand::Rng;
use smh::Bag;

/// Random non-empty bag over `universe` elements, each present with
/// probability `density`, multiplicities in `1..=max_mult`.
pub fn random_bag<R: Rng>(rng: &mut R, universe: u32, max_mult: u32, density: f64) -> Bag {
    loop {
        let mut counts = Vec::new();
        for e in 0..universe {
            if rng.random_bool(density) {
                counts.push((e, rng.random_range(1..=max_mult)));
            }
        }
        if !counts.is_empty() {
            return Bag::from_counts(counts);
        }
    }
}

/// Exact bag Jaccard straight from the definition, over a dense map.
pub fn jaccard_bag_oracle(bags: &[&Bag]) -> f64 {
    let mut all: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (i, b) in bags.iter().enumerate() {
        for (e, c) in b.iter() {
            all.entry(e).or_insert_with(|| vec![0; bags.len()])[i] = c;
        }
    }
    let num: u64 = all.values().map(|v| *v.iter().min().unwrap() as u64).sum();
    let den: u64 = all.values().map(|v| *v.iter().max().unwrap() as u64).sum();
    num as f64 / den as f64
}

/// Connected components by breadth-first search over all pairs.
pub fn brute_force_components(sets: &[Vec<u32>], epsilon: f64) -> Vec<Vec<u32>> {
    let n = sets.len();
    let linked = |a: &Vec<u32>, b: &Vec<u32>| {
        let sa: HashSet<_> = a.iter().collect();
        let inter = b.iter().filter(|w| sa.contains(w)).count();
        inter as f64 / a.len().min(b.len()) as f64 > epsilon
    };
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start as u32];
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for y in 0..n {
                if !seen[y] && linked(&sets[x], &sets[y]) {
                    seen[y] = true;
                    comp.push(y as u32);
                    queue.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

/// NPMI of a topic by listing every window explicitly.
pub fn npmi_oracle(docs: &[Vec<String>], window: usize, topic: &[String]) -> f64 {
    let mut windows: Vec<HashSet<&str>> = Vec::new();
    for d in docs {
        if d.is_empty() {
            continue;
        }
        if d.len() <= window {
            windows.push(d.iter().map(String::as_str).collect());
        } else {
            for s in 0..=d.len() - window {
                windows.push(d[s..s + window].iter().map(String::as_str).collect());
            }
        }
    }
    let n = windows.len() as f64;
    let p = |w: &str| windows.iter().filter(|s| s.contains(w)).count() as f64 / n;
    let pj = |a: &str, b: &str| windows.iter().filter(|s| s.contains(a) && s.contains(b)).count() as f64 / n;
    let mut total = 0.0;
    let mut pairs = 0.0;
    for j in 1..topic.len() {
        for i in 0..j {
            let (a, b) = (topic[i].as_str(), topic[j].as_str());
            let joint = pj(a, b);
            total += if joint == 0.0 {
                -1.0
            } else if joint == 1.0 {
                1.0
            } else {
                (joint / (p(a) * p(b))).ln() / -joint.ln()
            };
            pairs += 1.0;
        }
    }
    total / pairs
}

/// Least-squares fit `y = a x + b` and its R².
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let a = sxy / sxx;
    let b = my - a * mx;
    let ss_res: f64 = xs.iter().zip(ys).map(|(x, y)| (y - (a * x + b)).powi(2)).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    (a, b, 1.0 - ss_res / ss_tot)
}
