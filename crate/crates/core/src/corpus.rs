//! Corpus ingestion: vocabulary restriction, bags-of-words and the inverted
//! file whose per-word bags are what gets min-hashed.
//!
//! Tokenization, lowercasing and lemmatization happen upstream. The input
//! here is already a list of tokens per document.

use std::collections::{HashMap, HashSet};

use crate::bag::Bag;
use crate::error::{Error, Result};

pub type WordId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VocabEntry {
    pub word: String,
    pub word_id: WordId,
    pub corpus_frequency: u64,
    pub document_frequency: u64,
}

/// The `D` most frequent non-stopword tokens of a corpus.
///
/// Entries are ordered by descending corpus frequency with ties broken by
/// the word itself, and `word_id` equals the entry's position.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    entries: Vec<VocabEntry>,
    index: HashMap<String, WordId>,
}

impl Vocabulary {
    /// Wraps entries that already satisfy the ordering and dense-id rules.
    pub fn from_entries(entries: Vec<VocabEntry>) -> Result<Self> {
        let mut index = HashMap::with_capacity(entries.len());
        for (i, e) in entries.iter().enumerate() {
            if e.word_id as usize != i {
                return Err(Error::invalid(format!(
                    "vocabulary ids must be dense: entry {i} has id {}",
                    e.word_id
                )));
            }
            if e.document_frequency > e.corpus_frequency || e.document_frequency == 0 {
                return Err(Error::invalid(format!(
                    "bad frequencies for {:?}: cf={} df={}",
                    e.word, e.corpus_frequency, e.document_frequency
                )));
            }
            if index.insert(e.word.clone(), e.word_id).is_some() {
                return Err(Error::invalid(format!("duplicate word {:?}", e.word)));
            }
        }
        Ok(Vocabulary { entries, index })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[VocabEntry] {
        &self.entries
    }

    pub fn id(&self, word: &str) -> Option<WordId> {
        self.index.get(word).copied()
    }

    pub fn word(&self, id: WordId) -> Option<&str> {
        self.entries.get(id as usize).map(|e| e.word.as_str())
    }

    pub fn entry(&self, id: WordId) -> Option<&VocabEntry> {
        self.entries.get(id as usize)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BagOfWords {
    pub doc_id: u64,
    pub terms: Bag,
}

/// Occurrence pattern of one word: document index to frequency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertedFileBag {
    pub word_id: WordId,
    pub postings: Bag,
    pub max_multiplicity: u32,
}

impl InvertedFileBag {
    pub fn document_frequency(&self) -> usize {
        self.postings.len()
    }
}

/// Builds the vocabulary and per-document bags.
///
/// Documents that end up with no vocabulary words are kept as empty bags so
/// that bag position always matches input position.
pub fn ingest<I, S>(docs: I, stopwords: &HashSet<String>, vocab_size: usize) -> Result<(Vocabulary, Vec<BagOfWords>)>
where
    I: IntoIterator<Item = (u64, Vec<S>)>,
    S: AsRef<str>,
{
    if vocab_size == 0 {
        return Err(Error::ZeroVocabSize);
    }

    // First pass: intern every non-stopword token and keep documents as id lists.
    let mut interned: HashMap<String, u32> = HashMap::new();
    let mut words: Vec<String> = Vec::new();
    let mut corpus_freq: Vec<u64> = Vec::new();
    let mut doc_freq: Vec<u64> = Vec::new();
    let mut docs_raw: Vec<(u64, Vec<u32>)> = Vec::new();
    let mut seen_ids = HashSet::new();

    for (doc_id, tokens) in docs {
        if !seen_ids.insert(doc_id) {
            return Err(Error::DuplicateDocId(doc_id));
        }
        let mut ids = Vec::with_capacity(tokens.len());
        for tok in &tokens {
            let tok = tok.as_ref();
            if tok.is_empty() || stopwords.contains(tok) {
                continue;
            }
            let id = match interned.get(tok) {
                Some(&id) => id,
                None => {
                    let id = words.len() as u32;
                    interned.insert(tok.to_owned(), id);
                    words.push(tok.to_owned());
                    corpus_freq.push(0);
                    doc_freq.push(0);
                    id
                }
            };
            corpus_freq[id as usize] += 1;
            ids.push(id);
        }
        let mut distinct = ids.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for &id in &distinct {
            doc_freq[id as usize] += 1;
        }
        docs_raw.push((doc_id, ids));
    }

    if docs_raw.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if words.is_empty() {
        return Err(Error::EmptyAfterFiltering);
    }

    let mut order: Vec<u32> = (0..words.len() as u32).collect();
    order.sort_by(|&a, &b| {
        corpus_freq[b as usize]
            .cmp(&corpus_freq[a as usize])
            .then_with(|| words[a as usize].cmp(&words[b as usize]))
    });
    order.truncate(vocab_size);

    let mut remap: Vec<Option<WordId>> = vec![None; words.len()];
    let mut entries = Vec::with_capacity(order.len());
    for (rank, &old) in order.iter().enumerate() {
        remap[old as usize] = Some(rank as WordId);
        entries.push(VocabEntry {
            word: words[old as usize].clone(),
            word_id: rank as WordId,
            corpus_frequency: corpus_freq[old as usize],
            document_frequency: doc_freq[old as usize],
        });
    }
    let vocab = Vocabulary::from_entries(entries)?;

    let bags = docs_raw
        .into_iter()
        .map(|(doc_id, ids)| BagOfWords {
            doc_id,
            terms: Bag::from_tokens(ids.into_iter().filter_map(|id| remap[id as usize])),
        })
        .collect();

    Ok((vocab, bags))
}

/// Transposes document bags into per-word inverted file bags, keyed by
/// document position. Output is ordered by word id; words that never occur
/// are absent.
pub fn build_inverted_file(bags: &[BagOfWords], vocab_size: usize) -> Vec<InvertedFileBag> {
    let mut postings: Vec<Vec<(u32, u32)>> = vec![Vec::new(); vocab_size];
    for (doc_index, bag) in bags.iter().enumerate() {
        for (word, count) in bag.terms.iter() {
            assert!(
                (word as usize) < vocab_size,
                "word id {word} out of range for vocabulary of {vocab_size}"
            );
            postings[word as usize].push((doc_index as u32, count));
        }
    }
    postings
        .into_iter()
        .enumerate()
        .filter(|(_, p)| !p.is_empty())
        .map(|(word_id, p)| {
            // Documents are visited in ascending order, so each list is sorted.
            let postings = Bag::from_sorted(p).expect("postings sorted by construction");
            InvertedFileBag {
                word_id: word_id as WordId,
                max_multiplicity: postings.max_multiplicity(),
                postings,
            }
        })
        .collect()
}

/// Inverse of [`build_inverted_file`]. `doc_ids` supplies the id for each
/// document position; its length fixes the number of documents.
pub fn transpose_back(inverted: &[InvertedFileBag], doc_ids: &[u64]) -> Vec<BagOfWords> {
    let mut terms: Vec<Vec<(u32, u32)>> = vec![Vec::new(); doc_ids.len()];
    let mut sorted: Vec<&InvertedFileBag> = inverted.iter().collect();
    sorted.sort_by_key(|b| b.word_id);
    for list in sorted {
        for (doc, count) in list.postings.iter() {
            terms[doc as usize].push((list.word_id, count));
        }
    }
    doc_ids
        .iter()
        .zip(terms)
        .map(|(&doc_id, t)| BagOfWords {
            doc_id,
            terms: Bag::from_sorted(t).expect("word ids visited in ascending order"),
        })
        .collect()
}

/// Number of documents containing `word_id`.
pub fn document_frequency(word_id: WordId, inverted: &[InvertedFileBag]) -> Result<usize> {
    inverted
        .binary_search_by_key(&word_id, |b| b.word_id)
        .map(|i| inverted[i].document_frequency())
        .map_err(|_| Error::WordNotIndexed(word_id))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &[&str]) -> Vec<String> {
        s.iter().map(|t| t.to_string()).collect()
    }

    fn tiny() -> Vec<(u64, Vec<String>)> {
        vec![(0, toks(&["a", "b", "a"])), (1, toks(&["b", "c"]))]
    }

    #[test]
    fn ingest_counts_frequencies() {
        let (vocab, bags) = ingest(tiny(), &HashSet::new(), 3).unwrap();
        let words: Vec<_> = vocab
            .entries()
            .iter()
            .map(|e| (e.word.as_str(), e.corpus_frequency, e.document_frequency))
            .collect();
        // a and b tie on frequency 2 and are ordered lexicographically.
        assert_eq!(words, vec![("a", 2, 1), ("b", 2, 2), ("c", 1, 1)]);
        let (a, b, c) = (0, 1, 2);
        assert_eq!(bags[0].terms, Bag::from_counts([(a, 2), (b, 1)]));
        assert_eq!(bags[1].terms, Bag::from_counts([(b, 1), (c, 1)]));
    }

    #[test]
    fn all_stopwords_is_an_error() {
        let stop: HashSet<String> = ["the".to_string()].into();
        let err = ingest(vec![(0, toks(&["the", "the"]))], &stop, 10).unwrap_err();
        assert_eq!(err.to_string(), "empty corpus after filtering");
    }

    #[test]
    fn empty_stream_is_an_error() {
        let docs: Vec<(u64, Vec<String>)> = vec![];
        let err = ingest(docs, &HashSet::new(), 10).unwrap_err();
        assert_eq!(err.to_string(), "empty corpus");
    }

    #[test]
    fn singleton_corpus() {
        let (vocab, bags) = ingest(vec![(0, toks(&["x"]))], &HashSet::new(), 1).unwrap();
        assert_eq!(vocab.len(), 1);
        assert_eq!(vocab.word(0), Some("x"));
        assert_eq!(bags[0].terms.as_slice(), &[(0, 1)]);
    }

    #[test]
    fn vocab_size_larger_than_distinct_tokens() {
        let (vocab, _) = ingest(tiny(), &HashSet::new(), 1000).unwrap();
        assert_eq!(vocab.len(), 3);
    }

    #[test]
    fn truncated_vocabulary_keeps_empty_docs() {
        let docs = vec![(7, toks(&["a", "a"])), (9, toks(&["z"]))];
        let (vocab, bags) = ingest(docs, &HashSet::new(), 1).unwrap();
        assert_eq!(vocab.len(), 1);
        assert_eq!(bags.len(), 2);
        assert_eq!(bags[1].doc_id, 9);
        assert!(bags[1].terms.is_empty());
    }

    #[test]
    fn duplicate_doc_ids_rejected() {
        let docs = vec![(1, toks(&["a"])), (1, toks(&["b"]))];
        assert!(matches!(
            ingest(docs, &HashSet::new(), 5),
            Err(Error::DuplicateDocId(1))
        ));
    }

    #[test]
    fn inverted_file_of_tiny_corpus() {
        let (_, bags) = ingest(tiny(), &HashSet::new(), 3).unwrap();
        let inv = build_inverted_file(&bags, 3);
        assert_eq!(inv.len(), 3);
        assert_eq!(inv[0].postings.as_slice(), &[(0, 2)]);
        assert_eq!(inv[1].postings.as_slice(), &[(0, 1), (1, 1)]);
        assert_eq!(inv[2].postings.as_slice(), &[(1, 1)]);
        assert_eq!(inv[0].max_multiplicity, 2);
        assert_eq!(document_frequency(1, &inv).unwrap(), 2);
        assert_eq!(document_frequency(2, &inv).unwrap(), 1);
        assert!(matches!(document_frequency(9, &inv), Err(Error::WordNotIndexed(9))));
    }

    #[test]
    fn inverted_file_of_nothing() {
        assert!(build_inverted_file(&[], 4).is_empty());
    }

    #[test]
    fn unused_words_have_no_list() {
        let bags = vec![BagOfWords {
            doc_id: 0,
            terms: Bag::from_counts([(2, 1)]),
        }];
        let inv = build_inverted_file(&bags, 5);
        assert_eq!(inv.len(), 1);
        assert_eq!(inv[0].word_id, 2);
    }
}
