//! Consistent-sampling MinHash over integer bags.
//!
//! A bag with multiplicity `f` for element `w` is treated as the set of unit
//! elements `(w, 1) .. (w, f)`. Hash function `m` assigns every unit a keyed
//! 64-bit draw and the sample is the unit with the smallest draw. Because the
//! draw of `(w, z)` does not depend on which bag it belongs to, two bags
//! collide on function `m` with probability equal to their bag Jaccard
//! similarity, and `k` bags all collide with probability equal to their
//! Jaccard co-occurrence coefficient.
//!
//! # Draw scheme
//!
//! All arithmetic is wrapping on `u64`, and `mix` is the SplitMix64
//! finalizer.
//!
//! ```text
//! key(seed, m)   = mix(seed + (m + 1) * 0x9E3779B97F4A7C15)
//! unit(w, z)     = mix((w << 32) | z)
//! draw(m, w, z)  = mix(key(seed, m) ^ unit(w, z))
//! ```
//!
//! Ties are broken by the smallest `(draw, w, z)` triple. Table `x` of a run
//! with tuple size `r` uses functions `x*r .. x*r + r - 1`; its bucket key is
//! [`tuple_fingerprint`] of the `r` samples in function order.

use std::collections::HashMap;

use crate::bag::Bag;
use crate::error::{Error, Result};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output finalizer.
#[inline]
pub fn mix64(mut x: u64) -> u64 {
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

#[inline]
fn unit_hash(element: u32, unit: u32) -> u64 {
    mix64((u64::from(element) << 32) | u64::from(unit))
}

/// One member of the MinHash family: `(global_seed, function_index)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HashFunctionSpec {
    pub global_seed: u64,
    pub index: u64,
}

impl HashFunctionSpec {
    pub fn new(global_seed: u64, index: u64) -> Self {
        Self { global_seed, index }
    }

    #[inline]
    pub fn key(&self) -> u64 {
        mix64(
            self.global_seed
                .wrapping_add(self.index.wrapping_add(1).wrapping_mul(GOLDEN)),
        )
    }

    /// Pseudo-random draw for the unit element `(element, unit)`.
    #[inline]
    pub fn draw(&self, element: u32, unit: u32) -> u64 {
        mix64(self.key() ^ unit_hash(element, unit))
    }

    /// The consistent sample of `bag` under this function.
    pub fn sample(&self, bag: &Bag) -> Result<Sample> {
        let key = self.key();
        let mut best: Option<(u64, u32, u32)> = None;
        for (element, mult) in bag.iter() {
            for unit in 1..=mult {
                let cand = (mix64(key ^ unit_hash(element, unit)), element, unit);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        best.map(|(_, element, unit)| Sample { element, unit })
            .ok_or(Error::EmptyBag)
    }
}

/// A sampled unit element `(w, z)` with `1 <= z <= B^w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sample {
    pub element: u32,
    pub unit: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinHashSignature {
    pub values: Vec<Sample>,
}

impl MinHashSignature {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Fraction of positions where both signatures hold the same sample.
    pub fn match_fraction(&self, other: &MinHashSignature) -> f64 {
        assert_eq!(self.len(), other.len(), "signature lengths differ");
        if self.is_empty() {
            return 0.0;
        }
        let hits = self.values.iter().zip(&other.values).filter(|(a, b)| a == b).count();
        hits as f64 / self.len() as f64
    }
}

/// `num_functions` samples of `bag` under functions `0..num_functions`.
pub fn minhash_signature(bag: &Bag, num_functions: usize, global_seed: u64) -> Result<MinHashSignature> {
    if bag.is_empty() {
        return Err(Error::EmptyBag);
    }
    let prepared = PreparedBag::new(bag);
    let values = (0..num_functions as u64)
        .map(|m| prepared.sample(HashFunctionSpec::new(global_seed, m).key()))
        .collect();
    Ok(MinHashSignature { values })
}

/// A bag with every unit's element-level hash precomputed, so each extra
/// hash function costs one mix per unit.
#[derive(Debug, Clone)]
pub(crate) struct PreparedBag {
    units: Vec<(u64, u32, u32)>,
}

impl PreparedBag {
    pub(crate) fn new(bag: &Bag) -> Self {
        let mut units = Vec::with_capacity(bag.mass() as usize);
        for (element, mult) in bag.iter() {
            for unit in 1..=mult {
                units.push((unit_hash(element, unit), element, unit));
            }
        }
        PreparedBag { units }
    }

    #[inline]
    pub(crate) fn sample(&self, key: u64) -> Sample {
        let mut best = (u64::MAX, u32::MAX, u32::MAX);
        for &(h, element, unit) in &self.units {
            let cand = (mix64(key ^ h), element, unit);
            if cand < best {
                best = cand;
            }
        }
        debug_assert!(best.1 != u32::MAX || !self.units.is_empty());
        Sample {
            element: best.1,
            unit: best.2,
        }
    }
}

/// Bag Jaccard similarity: sum of minimum multiplicities over sum of maximum
/// multiplicities. Two empty bags are identical (1.0).
pub fn jaccard_bag(a: &Bag, b: &Bag) -> f64 {
    let (mut num, mut den) = (0u64, 0u64);
    let (x, y) = (a.as_slice(), b.as_slice());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ea = x.get(i).map(|p| p.0).unwrap_or(u32::MAX);
        let eb = y.get(j).map(|p| p.0).unwrap_or(u32::MAX);
        if i < x.len() && (j >= y.len() || ea < eb) {
            den += u64::from(x[i].1);
            i += 1;
        } else if j < y.len() && (i >= x.len() || eb < ea) {
            den += u64::from(y[j].1);
            j += 1;
        } else {
            num += u64::from(x[i].1.min(y[j].1));
            den += u64::from(x[i].1.max(y[j].1));
            i += 1;
            j += 1;
        }
    }
    if den == 0 {
        1.0
    } else {
        num as f64 / den as f64
    }
}

/// Set Jaccard similarity (multiplicities ignored).
pub fn jaccard_set(a: &Bag, b: &Bag) -> f64 {
    let sa = Bag::from_set(a.elements());
    let sb = Bag::from_set(b.elements());
    jaccard_bag(&sa, &sb)
}

/// Jaccard co-occurrence coefficient of `k >= 2` bags.
pub fn jcc_bags(bags: &[&Bag]) -> Result<f64> {
    if bags.len() < 2 {
        return Err(Error::TooFewBags);
    }
    let mut per_element: HashMap<u32, (u32, u32, usize)> = HashMap::new();
    for bag in bags {
        for (e, c) in bag.iter() {
            let slot = per_element.entry(e).or_insert((u32::MAX, 0, 0));
            slot.0 = slot.0.min(c);
            slot.1 = slot.1.max(c);
            slot.2 += 1;
        }
    }
    let k = bags.len();
    let (mut num, mut den) = (0u64, 0u64);
    for (min, max, seen) in per_element.into_values() {
        if seen == k {
            num += u64::from(min);
        }
        den += u64::from(max);
    }
    Ok(if den == 0 { 1.0 } else { num as f64 / den as f64 })
}

/// Jaccard co-occurrence coefficient of `k >= 2` sets.
pub fn jcc_sets(bags: &[&Bag]) -> Result<f64> {
    let sets: Vec<Bag> = bags.iter().map(|b| Bag::from_set(b.elements())).collect();
    let refs: Vec<&Bag> = sets.iter().collect();
    jcc_bags(&refs)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityScores {
    /// Set Jaccard of the first two inputs.
    pub jaccard: f64,
    /// Bag Jaccard of the first two inputs.
    pub jaccard_bag: f64,
    pub jcc: f64,
    pub jcc_bag: f64,
}

impl SimilarityScores {
    pub fn of(bags: &[&Bag]) -> Result<Self> {
        if bags.len() < 2 {
            return Err(Error::TooFewBags);
        }
        Ok(SimilarityScores {
            jaccard: jaccard_set(bags[0], bags[1]),
            jaccard_bag: jaccard_bag(bags[0], bags[1]),
            jcc: jcc_sets(bags)?,
            jcc_bag: jcc_bags(bags)?,
        })
    }
}

/// Number of tables that puts the collision probability of bags with
/// co-occurrence `eta` at one half: `floor(ln 0.5 / ln(1 - eta^r))`, at
/// least 1.
pub fn num_tables(eta: f64, tuple_size: usize) -> Result<usize> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(Error::invalid(format!("eta must lie in (0, 1), got {eta}")));
    }
    if tuple_size == 0 {
        return Err(Error::invalid("tuple size must be at least 1"));
    }
    let p = eta.powi(tuple_size as i32);
    let l = (0.5f64.ln() / (-p).ln_1p()).floor();
    if !l.is_finite() || l > usize::MAX as f64 {
        return Err(Error::invalid(format!(
            "eta={eta}, r={tuple_size} needs an unrepresentable number of tables"
        )));
    }
    Ok((l as usize).max(1))
}

/// Probability that bags with co-occurrence `jcc` share a bucket in at least
/// one of `tables` tables of `tuple_size`-tuples.
pub fn collision_probability(jcc: f64, tuple_size: usize, tables: usize) -> f64 {
    1.0 - (1.0 - jcc.powi(tuple_size as i32)).powi(tables as i32)
}

/// Parameters of the co-occurrence filter.
#[derive(Debug, Clone, PartialEq)]
pub struct SmhParams {
    pub eta: f64,
    pub tuple_size: usize,
    pub tables: usize,
    pub min_set_size: usize,
    pub global_seed: u64,
}

impl SmhParams {
    pub const DEFAULT_MIN_SET_SIZE: usize = 3;

    /// Parameters with the table count derived from `eta` and `tuple_size`.
    pub fn new(eta: f64, tuple_size: usize, global_seed: u64) -> Result<Self> {
        Ok(SmhParams {
            eta,
            tuple_size,
            tables: num_tables(eta, tuple_size)?,
            min_set_size: Self::DEFAULT_MIN_SET_SIZE,
            global_seed,
        })
    }

    pub fn with_tables(mut self, tables: usize) -> Result<Self> {
        if tables == 0 {
            return Err(Error::invalid("number of tables must be at least 1"));
        }
        self.tables = tables;
        Ok(self)
    }

    pub fn with_min_set_size(mut self, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::invalid("minimum set size must be at least 2"));
        }
        self.min_set_size = k;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        num_tables(self.eta, self.tuple_size)?;
        if self.tables == 0 {
            return Err(Error::invalid("number of tables must be at least 1"));
        }
        if self.min_set_size < 2 {
            return Err(Error::invalid("minimum set size must be at least 2"));
        }
        Ok(())
    }
}

/// 128-bit key of an ordered tuple of samples.
pub fn tuple_fingerprint(samples: &[Sample]) -> u128 {
    let mut hi = 0x243F_6A88_85A3_08D3u64;
    let mut lo = 0x1319_8A2E_0370_7344u64;
    for s in samples {
        let packed = (u64::from(s.element) << 32) | u64::from(s.unit);
        hi = mix64(hi ^ packed).wrapping_add(GOLDEN);
        lo = mix64(lo.wrapping_add(packed).rotate_left(17) ^ 0xA409_3822_299F_31D0);
    }
    (u128::from(hi) << 64) | u128::from(lo)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bucket {
    pub fingerprint: u128,
    pub members: Vec<u32>,
}

/// One hash table. Buckets are listed in order of their first member's
/// position in the input, which keeps downstream output deterministic.
#[derive(Debug, Clone)]
pub struct BucketTable {
    pub table_index: usize,
    buckets: Vec<Bucket>,
}

impl BucketTable {
    pub fn buckets(&self) -> &[Bucket] {
        &self.buckets
    }

    pub fn into_buckets(self) -> Vec<Bucket> {
        self.buckets
    }

    pub fn get(&self, fingerprint: u128) -> Option<&Bucket> {
        self.buckets.iter().find(|b| b.fingerprint == fingerprint)
    }

    /// Index of the bucket holding `member`, if any.
    pub fn bucket_of(&self, member: u32) -> Option<usize> {
        self.buckets.iter().position(|b| b.members.contains(&member))
    }
}

/// Hashes a fixed list of items into tables on demand.
///
/// Nothing is stored per table: [`HashTables::table`] materializes one table
/// and [`HashTables::iter`] yields them in order, so a caller that drops each
/// table before asking for the next holds a single table in memory.
pub struct HashTables {
    ids: Vec<u32>,
    bags: Vec<PreparedBag>,
    tuple_size: usize,
    tables: usize,
    global_seed: u64,
}

impl HashTables {
    pub fn new<'a, I>(items: I, tuple_size: usize, tables: usize, global_seed: u64) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, &'a Bag)>,
    {
        if tuple_size == 0 || tables == 0 {
            return Err(Error::invalid("tuple size and table count must be at least 1"));
        }
        let mut ids = Vec::new();
        let mut bags = Vec::new();
        for (id, bag) in items {
            if bag.is_empty() {
                return Err(Error::EmptyBag);
            }
            ids.push(id);
            bags.push(PreparedBag::new(bag));
        }
        Ok(HashTables {
            ids,
            bags,
            tuple_size,
            tables,
            global_seed,
        })
    }

    pub fn len(&self) -> usize {
        self.tables
    }

    pub fn is_empty(&self) -> bool {
        self.tables == 0
    }

    pub fn table(&self, table_index: usize) -> BucketTable {
        assert!(table_index < self.tables, "table index out of range");
        let first = (table_index * self.tuple_size) as u64;
        let keys: Vec<u64> = (0..self.tuple_size as u64)
            .map(|i| HashFunctionSpec::new(self.global_seed, first + i).key())
            .collect();
        let mut slot: HashMap<u128, usize> = HashMap::new();
        let mut buckets: Vec<Bucket> = Vec::new();
        let mut tuple = Vec::with_capacity(self.tuple_size);
        for (&id, bag) in self.ids.iter().zip(&self.bags) {
            tuple.clear();
            tuple.extend(keys.iter().map(|&k| bag.sample(k)));
            let fp = tuple_fingerprint(&tuple);
            match slot.get(&fp) {
                Some(&i) => buckets[i].members.push(id),
                None => {
                    slot.insert(fp, buckets.len());
                    buckets.push(Bucket {
                        fingerprint: fp,
                        members: vec![id],
                    });
                }
            }
        }
        BucketTable { table_index, buckets }
    }

    pub fn iter(&self) -> impl Iterator<Item = BucketTable> + '_ {
        (0..self.tables).map(move |x| self.table(x))
    }
}

/// Lazily builds the `params.tables` tables over `items`.
pub fn build_tables<'a, I>(items: I, params: &SmhParams) -> Result<HashTables>
where
    I: IntoIterator<Item = (u32, &'a Bag)>,
{
    params.validate()?;
    HashTables::new(items, params.tuple_size, params.tables, params.global_seed)
}

/// Parameters of the second-stage pairwise search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairSearch {
    pub tuple_size: usize,
    pub tables: usize,
    pub global_seed: u64,
}

impl PairSearch {
    /// Seed for the pairwise stage derived from a run's global seed, so it
    /// uses functions unrelated to the first stage.
    pub fn derive_seed(global_seed: u64) -> u64 {
        mix64(global_seed ^ 0x5EC0_4D57_A6E5_EED5)
    }
}

/// Calls `visit` with the members of every bucket holding two or more sets,
/// table by table.
pub fn for_each_candidate_bucket<F>(sets: &[(u32, Bag)], search: &PairSearch, mut visit: F) -> Result<()>
where
    F: FnMut(&[u32]),
{
    if sets.is_empty() {
        return Ok(());
    }
    let tables = HashTables::new(
        sets.iter().map(|(id, b)| (*id, b)),
        search.tuple_size,
        search.tables,
        search.global_seed,
    )?;
    for table in tables.iter() {
        for bucket in table.buckets() {
            if bucket.members.len() >= 2 {
                visit(&bucket.members);
            }
        }
    }
    Ok(())
}

/// Deduplicated pairs `(a, b)`, `a < b`, sharing a bucket in at least one
/// table. Sets are hashed with unit multiplicities.
pub fn pairwise_candidates(sets: &[(u32, Vec<u32>)], search: &PairSearch) -> Result<Vec<(u32, u32)>> {
    let bags: Vec<(u32, Bag)> = sets
        .iter()
        .map(|(id, s)| (*id, Bag::from_set(s.iter().copied())))
        .collect();
    let mut pairs = Vec::new();
    for_each_candidate_bucket(&bags, search, |members| {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                pairs.push((a.min(b), a.max(b)));
            }
        }
    })?;
    pairs.sort_unstable();
    pairs.dedup();
    Ok(pairs)
}
