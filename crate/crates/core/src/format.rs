//! Line-oriented text formats read and written by the pipeline.
//!
//! | file        | line                                                    |
//! |-------------|---------------------------------------------------------|
//! | corpus      | `doc_id<TAB>token token ...`                            |
//! | bags        | `n id:f id:f ...` (ids ascending, `n` distinct terms)   |
//! | vocabulary  | `word<TAB>word_id<TAB>corpus_freq<TAB>document_freq`    |
//! | topics      | `score<TAB>n_cws<TAB>word:support ...`                  |
//! | CWS dump    | `table_index<TAB>id id id ...`                          |
//! | truth       | `topic_id<TAB>word word ...`                            |
//! | coherence   | `topic_id<TAB>npmi<TAB>word word ...` + summary line    |

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::bag::Bag;
use crate::coherence::{Summary, TopicCoherence};
use crate::corpus::{BagOfWords, VocabEntry, Vocabulary};
use crate::discovery::{CoOccurringWordSet, Topic};
use crate::error::{Error, Result};

pub fn open(path: &Path) -> Result<BufReader<File>> {
    match File::open(path) {
        Ok(f) => Ok(BufReader::new(f)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Err(Error::InputNotFound(path.to_owned())),
        Err(e) => Err(e.into()),
    }
}

pub fn create(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    Ok(BufWriter::new(File::create(path)?))
}

fn name(path: &Path) -> String {
    path.display().to_string()
}

pub fn parse_corpus<R: BufRead>(reader: R, source: &str) -> Result<Vec<(u64, Vec<String>)>> {
    let mut docs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let (id, text) = line
            .split_once('\t')
            .ok_or_else(|| Error::parse(source, i + 1, "expected doc_id<TAB>tokens"))?;
        let id: u64 = id
            .trim()
            .parse()
            .map_err(|_| Error::parse(source, i + 1, format!("bad document id {id:?}")))?;
        docs.push((id, text.split_whitespace().map(str::to_owned).collect()));
    }
    Ok(docs)
}

pub fn read_corpus(path: &Path) -> Result<Vec<(u64, Vec<String>)>> {
    parse_corpus(open(path)?, &name(path))
}

pub fn write_corpus<W: Write>(mut w: W, docs: &[(u64, Vec<String>)]) -> Result<()> {
    for (id, tokens) in docs {
        writeln!(w, "{id}\t{}", tokens.join(" "))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_stopwords(path: &Path) -> Result<std::collections::HashSet<String>> {
    let mut out = std::collections::HashSet::new();
    for line in open(path)?.lines() {
        out.extend(line?.split_whitespace().map(str::to_owned));
    }
    Ok(out)
}

pub fn write_bags<W: Write>(mut w: W, bags: &[BagOfWords]) -> Result<()> {
    for bag in bags {
        write!(w, "{}", bag.terms.len())?;
        for (id, f) in bag.terms.iter() {
            write!(w, " {id}:{f}")?;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a bags file. Document ids are line positions.
pub fn parse_bags<R: BufRead>(reader: R, source: &str) -> Result<Vec<BagOfWords>> {
    let mut bags = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let mut fields = line.split_whitespace();
        let n: usize = fields
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(source, i + 1, "missing term count"))?;
        let mut entries = Vec::with_capacity(n);
        for f in fields {
            let pair = f
                .split_once(':')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
            let Some(pair) = pair else {
                return Err(Error::parse(source, i + 1, format!("bad term {f:?}")));
            };
            entries.push(pair);
        }
        if entries.len() != n {
            return Err(Error::parse(
                source,
                i + 1,
                format!("declared {n} terms, found {}", entries.len()),
            ));
        }
        let terms = Bag::from_sorted(entries)
            .ok_or_else(|| Error::parse(source, i + 1, "ids must ascend and counts be positive"))?;
        bags.push(BagOfWords {
            doc_id: i as u64,
            terms,
        });
    }
    Ok(bags)
}

pub fn read_bags(path: &Path) -> Result<Vec<BagOfWords>> {
    parse_bags(open(path)?, &name(path))
}

pub fn write_vocab<W: Write>(mut w: W, vocab: &Vocabulary) -> Result<()> {
    for e in vocab.entries() {
        writeln!(
            w,
            "{}\t{}\t{}\t{}",
            e.word, e.word_id, e.corpus_frequency, e.document_frequency
        )?;
    }
    w.flush()?;
    Ok(())
}

pub fn parse_vocab<R: BufRead>(reader: R, source: &str) -> Result<Vocabulary> {
    let mut entries = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let cols: Vec<&str> = line.split('\t').collect();
        let bad = || Error::parse(source, i + 1, "expected word<TAB>id<TAB>cf<TAB>df");
        if cols.len() != 4 {
            return Err(bad());
        }
        entries.push(VocabEntry {
            word: cols[0].to_owned(),
            word_id: cols[1].parse().map_err(|_| bad())?,
            corpus_frequency: cols[2].parse().map_err(|_| bad())?,
            document_frequency: cols[3].parse().map_err(|_| bad())?,
        });
    }
    Vocabulary::from_entries(entries)
}

pub fn read_vocab(path: &Path) -> Result<Vocabulary> {
    parse_vocab(open(path)?, &name(path))
}

/// Writes topics in the given order. Word ids missing from `vocab` are
/// written as numbers.
pub fn write_topics<W: Write>(mut w: W, topics: &[Topic], vocab: &Vocabulary) -> Result<()> {
    for t in topics {
        write!(w, "{}\t{}\t", t.score, t.n_cws)?;
        for (i, &(word, support)) in t.words.iter().enumerate() {
            if i > 0 {
                write!(w, " ")?;
            }
            match vocab.word(word) {
                Some(s) => write!(w, "{s}:{support}")?,
                None => write!(w, "{word}:{support}")?,
            }
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopicLine {
    pub score: f64,
    pub n_cws: usize,
    pub words: Vec<(String, u32)>,
}

pub fn parse_topics<R: BufRead>(reader: R, source: &str) -> Result<Vec<TopicLine>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |m: &str| Error::parse(source, i + 1, m.to_owned());
        let mut cols = line.splitn(3, '\t');
        let score = cols
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("bad score"))?;
        let n_cws = cols
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("bad CWS count"))?;
        let mut words = Vec::new();
        for item in cols.next().unwrap_or("").split_whitespace() {
            let (word, support) = item.rsplit_once(':').ok_or_else(|| bad("expected word:support"))?;
            words.push((word.to_owned(), support.parse().map_err(|_| bad("bad support"))?));
        }
        out.push(TopicLine { score, n_cws, words });
    }
    Ok(out)
}

pub fn read_topics(path: &Path) -> Result<Vec<TopicLine>> {
    parse_topics(open(path)?, &name(path))
}

pub fn write_cws_dump<W: Write>(mut w: W, cws: &[CoOccurringWordSet]) -> Result<()> {
    for c in cws {
        let ids: Vec<String> = c.words.iter().map(u32::to_string).collect();
        writeln!(w, "{}\t{}", c.table_index, ids.join(" "))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_ground_truth<W: Write>(mut w: W, topics: &[Vec<String>]) -> Result<()> {
    for (i, words) in topics.iter().enumerate() {
        writeln!(w, "{i}\t{}", words.join(" "))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_ground_truth(path: &Path) -> Result<Vec<Vec<String>>> {
    let source = name(path);
    let mut out = Vec::new();
    for (i, line) in open(path)?.lines().enumerate() {
        let line = line?;
        let (_, words) = line
            .split_once('\t')
            .ok_or_else(|| Error::parse(&source, i + 1, "expected topic_id<TAB>words"))?;
        out.push(words.split_whitespace().map(str::to_owned).collect());
    }
    Ok(out)
}

pub fn write_coherence_report<W: Write>(
    mut w: W,
    rows: &[(TopicCoherence, Vec<String>)],
    summary: Option<&Summary>,
) -> Result<()> {
    for (c, words) in rows {
        writeln!(w, "{}\t{}\t{}", c.topic_id, c.npmi, words.join(" "))?;
    }
    if let Some(s) = summary {
        writeln!(
            w,
            "summary\tmean={}\tmedian={}\tstd={}\ttopics={}",
            s.mean, s.median, s.std, s.count
        )?;
    }
    w.flush()?;
    Ok(())
}
