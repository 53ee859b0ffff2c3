//! Integer-multiplicity bags.
//!
//! A [`Bag`] is a sparse multiset over `u32` elements, stored as a vector of
//! `(element, multiplicity)` pairs sorted by element with every multiplicity
//! at least one. Document bags-of-words and inverted file bags share this
//! representation so the hashing code only needs one input type.

use std::collections::BTreeMap;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Bag {
    entries: Vec<(u32, u32)>,
}

impl Bag {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a bag from arbitrary `(element, count)` pairs. Counts for the
    /// same element are summed and zero counts are dropped.
    pub fn from_counts<I>(counts: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        for (element, count) in counts {
            if count > 0 {
                *map.entry(element).or_insert(0) += count;
            }
        }
        Bag {
            entries: map.into_iter().collect(),
        }
    }

    /// Bag with multiplicity one for every distinct element.
    pub fn from_set<I>(elements: I) -> Self
    where
        I: IntoIterator<Item = u32>,
    {
        let mut entries: Vec<(u32, u32)> = elements.into_iter().map(|e| (e, 1)).collect();
        entries.sort_unstable();
        entries.dedup();
        Bag { entries }
    }

    /// Builds a bag from pairs already sorted by element, with no duplicates
    /// and no zero counts. Returns `None` if the input violates that.
    pub fn from_sorted(entries: Vec<(u32, u32)>) -> Option<Self> {
        let sorted = entries.windows(2).all(|w| w[0].0 < w[1].0);
        let positive = entries.iter().all(|&(_, c)| c > 0);
        (sorted && positive).then_some(Bag { entries })
    }

    pub fn from_tokens<I>(tokens: I) -> Self
    where
        I: IntoIterator<Item = u32>,
    {
        Self::from_counts(tokens.into_iter().map(|t| (t, 1)))
    }

    pub fn get(&self, element: u32) -> u32 {
        match self.entries.binary_search_by_key(&element, |&(e, _)| e) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }

    pub fn contains(&self, element: u32) -> bool {
        self.get(element) > 0
    }

    /// Number of distinct elements.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn mass(&self) -> u64 {
        self.entries.iter().map(|&(_, c)| u64::from(c)).sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.entries.iter().map(|&(_, c)| c).max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (u32, u32)> + '_ {
        self.entries.iter().copied()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = u32> + '_ {
        self.entries.iter().map(|&(e, _)| e)
    }

    pub fn as_slice(&self) -> &[(u32, u32)] {
        &self.entries
    }
}

impl FromIterator<(u32, u32)> for Bag {
    fn from_iter<T: IntoIterator<Item = (u32, u32)>>(iter: T) -> Self {
        Self::from_counts(iter)
    }
}
