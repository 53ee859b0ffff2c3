//! Command-line front end: `ingest`, `discover`, `evaluate` and `synth`.
//!
//! Every command writes a `key=value` manifest next to its outputs. Feeding
//! that manifest back with `--manifest` reruns the command with the exact
//! same settings, and since every random choice derives from `seed` the
//! outputs come out byte-identical.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::coherence::{count_windows, npmi_topic, summarize, Summary, DEFAULT_WINDOW_SIZE};
use crate::corpus::ingest;
use crate::discovery::{CandidateSearch, ClusterParams};
use crate::error::{Error, Result};
use crate::format;
use crate::minhash::SmhParams;
use crate::pipeline::{discover, DiscoveryConfig, StageTimings};
use crate::synth::{generate, PlantedSpec};

pub const DEFAULT_VOCAB_SIZE: usize = 100_000;
pub const DEFAULT_TOP_N: usize = 400;

/// Ordered `key=value` lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Manifest {
    entries: Vec<(String, String)>,
}

impl Manifest {
    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_owned(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Result<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| Error::invalid(format!("manifest is missing {key:?}")))
    }

    pub fn parse_value<T: FromStr>(&self, key: &str) -> Result<T> {
        let raw = self.get(key)?;
        raw.parse()
            .map_err(|_| Error::invalid(format!("manifest value {key}={raw:?} is invalid")))
    }

    fn optional<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.get(key)? {
            "" | "auto" | "none" => Ok(None),
            _ => self.parse_value(key).map(Some),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut m = Manifest::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::parse("manifest", i + 1, "expected key=value"))?;
            m.set(k.trim(), v.trim());
        }
        Ok(m)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => Error::InputNotFound(path.to_owned()),
            _ => e.into(),
        })?;
        Self::parse(&text)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut w = format::create(path)?;
        w.write_all(self.to_string().as_bytes())?;
        w.flush()?;
        Ok(())
    }
}

impl std::fmt::Display for Manifest {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn opt_str<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "none".to_owned(), T::to_string)
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

#[derive(Debug, Clone, PartialEq)]
pub struct IngestRun {
    pub input: PathBuf,
    pub output_dir: PathBuf,
    pub vocab_size: usize,
    pub stopwords: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscoverRun {
    pub bags: PathBuf,
    pub vocab: PathBuf,
    pub output: PathBuf,
    pub cws_dump: Option<PathBuf>,
    pub eta: f64,
    pub tuple_size: usize,
    /// Overrides the table count derived from `eta` and `tuple_size`.
    pub tables: Option<usize>,
    pub overlap: f64,
    pub min_set_size: usize,
    pub min_cluster_size: usize,
    pub min_topic_words: usize,
    pub top_k: usize,
    pub seed: u64,
    pub threads: usize,
    pub exact_clustering: bool,
    /// Overrides for the second-stage pairwise search.
    pub pair_tuple_size: Option<usize>,
    pub pair_tables: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvaluateRun {
    pub topics: PathBuf,
    pub reference: PathBuf,
    pub output: PathBuf,
    pub top_n: usize,
    pub top_k: usize,
    pub window_size: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthRun {
    pub output_dir: PathBuf,
    pub spec: PlantedSpec,
}

/// A fully resolved command.
#[derive(Debug, Clone, PartialEq)]
pub enum RunConfig {
    Ingest(IngestRun),
    Discover(DiscoverRun),
    Evaluate(EvaluateRun),
    Synth(SynthRun),
}

impl RunConfig {
    pub fn to_manifest(&self) -> Manifest {
        let mut m = Manifest::default();
        match self {
            RunConfig::Ingest(r) => {
                m.set("command", "ingest");
                m.set("input", path_str(&r.input));
                m.set("output_dir", path_str(&r.output_dir));
                m.set("vocab_size", r.vocab_size);
                m.set("stopwords", opt_str(&r.stopwords.as_deref().map(path_str)));
            }
            RunConfig::Discover(r) => {
                m.set("command", "discover");
                m.set("bags", path_str(&r.bags));
                m.set("vocab", path_str(&r.vocab));
                m.set("output", path_str(&r.output));
                m.set("cws_dump", opt_str(&r.cws_dump.as_deref().map(path_str)));
                m.set("eta", r.eta);
                m.set("tuple_size", r.tuple_size);
                m.set("tables", r.tables.map_or_else(|| "auto".to_owned(), |t| t.to_string()));
                m.set("overlap", r.overlap);
                m.set("min_set_size", r.min_set_size);
                m.set("min_cluster_size", r.min_cluster_size);
                m.set("min_topic_words", r.min_topic_words);
                m.set("top_k", r.top_k);
                m.set("seed", r.seed);
                m.set("threads", r.threads);
                m.set("exact_clustering", r.exact_clustering);
                m.set(
                    "pair_tuple_size",
                    r.pair_tuple_size.map_or_else(|| "auto".to_owned(), |t| t.to_string()),
                );
                m.set(
                    "pair_tables",
                    r.pair_tables.map_or_else(|| "auto".to_owned(), |t| t.to_string()),
                );
            }
            RunConfig::Evaluate(r) => {
                m.set("command", "evaluate");
                m.set("topics", path_str(&r.topics));
                m.set("reference", path_str(&r.reference));
                m.set("output", path_str(&r.output));
                m.set("top_n", r.top_n);
                m.set("top_k", r.top_k);
                m.set("window_size", r.window_size);
            }
            RunConfig::Synth(r) => {
                let s = &r.spec;
                m.set("command", "synth");
                m.set("output_dir", path_str(&r.output_dir));
                m.set("topics", s.n_topics);
                m.set("words_per_topic", s.words_per_topic);
                m.set("docs", s.n_docs);
                m.set("doc_length", s.doc_length);
                m.set("noise_words", s.noise_words);
                m.set("noise_fraction", s.noise_fraction);
                m.set("leak_fraction", s.leak_fraction);
                m.set("zipf", opt_str(&s.zipf_exponent));
                m.set("seed", s.seed);
            }
        }
        m
    }

    pub fn from_manifest(m: &Manifest) -> Result<Self> {
        let path = |k: &str| m.get(k).map(PathBuf::from);
        let opt_path = |k: &str| -> Result<Option<PathBuf>> { Ok(m.optional::<String>(k)?.map(PathBuf::from)) };
        Ok(match m.get("command")? {
            "ingest" => RunConfig::Ingest(IngestRun {
                input: path("input")?,
                output_dir: path("output_dir")?,
                vocab_size: m.parse_value("vocab_size")?,
                stopwords: opt_path("stopwords")?,
            }),
            "discover" => RunConfig::Discover(DiscoverRun {
                bags: path("bags")?,
                vocab: path("vocab")?,
                output: path("output")?,
                cws_dump: opt_path("cws_dump")?,
                eta: m.parse_value("eta")?,
                tuple_size: m.parse_value("tuple_size")?,
                tables: m.optional("tables")?,
                overlap: m.parse_value("overlap")?,
                min_set_size: m.parse_value("min_set_size")?,
                min_cluster_size: m.parse_value("min_cluster_size")?,
                min_topic_words: m.parse_value("min_topic_words")?,
                top_k: m.parse_value("top_k")?,
                seed: m.parse_value("seed")?,
                threads: m.parse_value("threads")?,
                exact_clustering: m.parse_value("exact_clustering")?,
                pair_tuple_size: m.optional("pair_tuple_size")?,
                pair_tables: m.optional("pair_tables")?,
            }),
            "evaluate" => RunConfig::Evaluate(EvaluateRun {
                topics: path("topics")?,
                reference: path("reference")?,
                output: path("output")?,
                top_n: m.parse_value("top_n")?,
                top_k: m.parse_value("top_k")?,
                window_size: m.parse_value("window_size")?,
            }),
            "synth" => RunConfig::Synth(SynthRun {
                output_dir: path("output_dir")?,
                spec: PlantedSpec {
                    n_topics: m.parse_value("topics")?,
                    words_per_topic: m.parse_value("words_per_topic")?,
                    n_docs: m.parse_value("docs")?,
                    doc_length: m.parse_value("doc_length")?,
                    noise_words: m.parse_value("noise_words")?,
                    noise_fraction: m.parse_value("noise_fraction")?,
                    leak_fraction: m.parse_value("leak_fraction")?,
                    zipf_exponent: m.optional("zipf")?,
                    seed: m.parse_value("seed")?,
                },
            }),
            other => return Err(Error::invalid(format!("unknown command {other:?}"))),
        })
    }

    /// Where the manifest for this run is written.
    pub fn manifest_path(&self) -> PathBuf {
        match self {
            RunConfig::Ingest(r) => r.output_dir.join("manifest.txt"),
            RunConfig::Synth(r) => r.output_dir.join("manifest.txt"),
            RunConfig::Discover(r) => sibling(&r.output, ".manifest"),
            RunConfig::Evaluate(r) => sibling(&r.output, ".manifest"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct IngestOutcome {
    pub bags: PathBuf,
    pub vocab: PathBuf,
    pub n_docs: usize,
    pub vocab_size: usize,
}

pub fn cmd_ingest(run: &IngestRun) -> Result<IngestOutcome> {
    let docs = format::read_corpus(&run.input)?;
    let stopwords = match &run.stopwords {
        Some(p) => format::read_stopwords(p)?,
        None => HashSet::new(),
    };
    let (vocab, bags) = ingest(docs, &stopwords, run.vocab_size)?;
    let bags_path = run.output_dir.join("bags.txt");
    let vocab_path = run.output_dir.join("vocab.txt");
    format::write_bags(format::create(&bags_path)?, &bags)?;
    format::write_vocab(format::create(&vocab_path)?, &vocab)?;
    let config = RunConfig::Ingest(run.clone());
    config.to_manifest().write(&config.manifest_path())?;
    Ok(IngestOutcome {
        bags: bags_path,
        vocab: vocab_path,
        n_docs: bags.len(),
        vocab_size: vocab.len(),
    })
}

impl DiscoverRun {
    pub fn discovery_config(&self) -> Result<DiscoveryConfig> {
        let mut smh = SmhParams::new(self.eta, self.tuple_size, self.seed)?.with_min_set_size(self.min_set_size)?;
        if let Some(t) = self.tables {
            smh = smh.with_tables(t)?;
        }
        let cluster = ClusterParams {
            overlap_epsilon: self.overlap,
            min_cluster_size: self.min_cluster_size,
            min_topic_words: self.min_topic_words,
            top_k_words: self.top_k,
        };
        cluster.validate()?;
        let search = if self.exact_clustering {
            CandidateSearch::Exact
        } else {
            CandidateSearch::for_epsilon(self.overlap, self.seed)?
                .with_overrides(self.pair_tuple_size, self.pair_tables)?
        };
        Ok(DiscoveryConfig {
            smh,
            cluster,
            search,
            threads: self.threads,
        })
    }
}

#[derive(Debug, Clone)]
pub struct DiscoverOutcome {
    pub topics: PathBuf,
    pub report: PathBuf,
    pub n_topics: usize,
    pub n_cws: usize,
    pub n_clusters: usize,
    pub tables: usize,
    pub timings: StageTimings,
}

pub fn cmd_discover(run: &DiscoverRun) -> Result<DiscoverOutcome> {
    let config = run.discovery_config()?;
    let vocab = format::read_vocab(&run.vocab)?;
    let bags = format::read_bags(&run.bags)?;
    let found = discover(&bags, vocab.len(), &config)?;

    format::write_topics(format::create(&run.output)?, &found.topics, &vocab)?;
    if let Some(dump) = &run.cws_dump {
        format::write_cws_dump(format::create(dump)?, &found.cws)?;
    }
    let rc = RunConfig::Discover(run.clone());
    rc.to_manifest().write(&rc.manifest_path())?;

    let report = sibling(&run.output, ".report");
    let mut text = String::new();
    let _ = writeln!(text, "tables={}", config.smh.tables);
    let _ = writeln!(text, "cws={}", found.cws.len());
    let _ = writeln!(text, "clusters={}", found.n_clusters);
    let _ = writeln!(text, "topics={}", found.topics.len());
    let _ = writeln!(text, "{}", found.timings);
    let mut w = format::create(&report)?;
    w.write_all(text.as_bytes())?;
    w.flush()?;

    Ok(DiscoverOutcome {
        topics: run.output.clone(),
        report,
        n_topics: found.topics.len(),
        n_cws: found.cws.len(),
        n_clusters: found.n_clusters,
        tables: config.smh.tables,
        timings: found.timings,
    })
}

#[derive(Debug, Clone)]
pub struct EvaluateOutcome {
    pub report: PathBuf,
    pub summary: Option<Summary>,
    pub warnings: Vec<String>,
}

pub fn cmd_evaluate(run: &EvaluateRun) -> Result<EvaluateOutcome> {
    let topics = format::read_topics(&run.topics)?;
    if topics.is_empty() {
        return Err(Error::NoTopics);
    }
    let reference = format::read_corpus(&run.reference)?;
    let mut warnings = Vec::new();
    if topics.len() < run.top_n {
        warnings.push(format!(
            "only {} topics available, fewer than the requested {}",
            topics.len(),
            run.top_n
        ));
    }

    let selected: Vec<Vec<String>> = topics
        .iter()
        .take(run.top_n)
        .map(|t| t.words.iter().take(run.top_k).map(|(w, _)| w.clone()).collect())
        .collect();
    let filter: HashSet<String> = selected.iter().flatten().cloned().collect();
    let counts = count_windows(reference.iter().map(|(_, t)| t), run.window_size, Some(&filter))?;

    let mut rows = Vec::new();
    for (rank, words) in selected.into_iter().enumerate() {
        if words.len() < 2 {
            warnings.push(format!("topic {rank} has fewer than two words, skipped"));
            continue;
        }
        let c = npmi_topic(rank as u32, &words, &counts)?;
        if !c.missing.is_empty() {
            warnings.push(format!(
                "topic {rank}: not in reference corpus: {}",
                c.missing.join(" ")
            ));
        }
        rows.push((c, words));
    }
    let scores: Vec<f64> = rows.iter().map(|(c, _)| c.npmi).collect();
    let summary = summarize(&scores);
    format::write_coherence_report(format::create(&run.output)?, &rows, summary.as_ref())?;
    let rc = RunConfig::Evaluate(run.clone());
    rc.to_manifest().write(&rc.manifest_path())?;
    Ok(EvaluateOutcome {
        report: run.output.clone(),
        summary,
        warnings,
    })
}

pub fn cmd_synth(run: &SynthRun) -> Result<(PathBuf, PathBuf)> {
    let corpus = generate(&run.spec)?;
    let docs = run.output_dir.join("corpus.txt");
    let truth = run.output_dir.join("ground_truth.txt");
    format::write_corpus(format::create(&docs)?, &corpus.docs)?;
    format::write_ground_truth(format::create(&truth)?, &corpus.topics)?;
    let rc = RunConfig::Synth(run.clone());
    rc.to_manifest().write(&rc.manifest_path())?;
    Ok((docs, truth))
}

/// Runs a resolved command and returns a short human-readable summary.
pub fn execute(config: &RunConfig) -> Result<String> {
    Ok(match config {
        RunConfig::Ingest(r) => {
            let o = cmd_ingest(r)?;
            format!(
                "ingested {} documents, vocabulary {} -> {}, {}",
                o.n_docs,
                o.vocab_size,
                o.bags.display(),
                o.vocab.display()
            )
        }
        RunConfig::Discover(r) => {
            let o = cmd_discover(r)?;
            format!(
                "tables={} cws={} clusters={} topics={} -> {}\n{}",
                o.tables,
                o.n_cws,
                o.n_clusters,
                o.n_topics,
                o.topics.display(),
                o.timings
            )
        }
        RunConfig::Evaluate(r) => {
            let o = cmd_evaluate(r)?;
            for w in &o.warnings {
                eprintln!("warning: {w}");
            }
            match o.summary {
                Some(s) => format!(
                    "evaluated {} topics: mean={:.4} median={:.4} std={:.4} -> {}",
                    s.count,
                    s.mean,
                    s.median,
                    s.std,
                    o.report.display()
                ),
                None => format!("no topics evaluated -> {}", o.report.display()),
            }
        }
        RunConfig::Synth(r) => {
            let (docs, truth) = cmd_synth(r)?;
            format!("wrote {} and {}", docs.display(), truth.display())
        }
    })
}

#[derive(Debug, Parser)]
#[command(name = "smh", version, about = "Topic discovery by sampled min-hashing")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build vocabulary and bags-of-words from a tokenized corpus
    Ingest(IngestArgs),
    /// Discover topics from a bags file
    Discover(DiscoverArgs),
    /// Score topics with sliding-window NPMI
    Evaluate(EvaluateArgs),
    /// Generate a corpus with planted topics
    Synth(SynthArgs),
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output_dir: PathBuf,
    #[arg(long, default_value_t = DEFAULT_VOCAB_SIZE)]
    pub vocab_size: usize,
    #[arg(long, value_name = "FILE")]
    pub stopwords: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiscoverArgs {
    /// Rerun exactly as recorded in a manifest; other flags are ignored
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    #[arg(long, required_unless_present = "manifest")]
    pub bags: Option<PathBuf>,
    #[arg(long, required_unless_present = "manifest")]
    pub vocab: Option<PathBuf>,
    #[arg(long, required_unless_present = "manifest")]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub cws_dump: Option<PathBuf>,
    #[arg(long, default_value_t = 0.04)]
    pub eta: f64,
    #[arg(long, default_value_t = 2)]
    pub tuple_size: usize,
    #[arg(long)]
    pub tables: Option<usize>,
    #[arg(long, default_value_t = 0.9)]
    pub overlap: f64,
    #[arg(long, default_value_t = 3)]
    pub min_set_size: usize,
    #[arg(long, default_value_t = 5)]
    pub min_cluster_size: usize,
    #[arg(long, default_value_t = 10)]
    pub min_topic_words: usize,
    #[arg(long, default_value_t = 10)]
    pub top_k: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// 0 runs single-threaded
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Verify every CWS pair instead of MinHash candidates
    #[arg(long)]
    pub exact_clustering: bool,
    /// Tuple size of the pairwise CWS search (default 1)
    #[arg(long)]
    pub pair_tuple_size: Option<usize>,
    /// Table count of the pairwise CWS search (default derived from --overlap)
    #[arg(long)]
    pub pair_tables: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    #[arg(long, required_unless_present = "manifest")]
    pub topics: Option<PathBuf>,
    #[arg(long, required_unless_present = "manifest")]
    pub reference: Option<PathBuf>,
    #[arg(long, required_unless_present = "manifest")]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TOP_N)]
    pub top_n: usize,
    #[arg(long, default_value_t = 10)]
    pub top_k: usize,
    #[arg(long, default_value_t = DEFAULT_WINDOW_SIZE)]
    pub window_size: usize,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long)]
    pub output_dir: PathBuf,
    #[arg(long, default_value_t = 10)]
    pub topics: usize,
    #[arg(long, default_value_t = 20)]
    pub words_per_topic: usize,
    #[arg(long, default_value_t = 1000)]
    pub docs: usize,
    #[arg(long, default_value_t = 50)]
    pub doc_length: usize,
    #[arg(long, default_value_t = 200)]
    pub noise_words: usize,
    #[arg(long, default_value_t = 0.1)]
    pub noise_fraction: f64,
    #[arg(long, default_value_t = 0.0)]
    pub leak_fraction: f64,
    #[arg(long)]
    pub zipf: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

fn required(v: Option<PathBuf>) -> PathBuf {
    v.expect("enforced by clap")
}

impl Command {
    pub fn into_config(self) -> Result<RunConfig> {
        Ok(match self {
            Command::Ingest(a) => RunConfig::Ingest(IngestRun {
                input: a.input,
                output_dir: a.output_dir,
                vocab_size: a.vocab_size,
                stopwords: a.stopwords,
            }),
            Command::Discover(a) => match a.manifest {
                Some(m) => RunConfig::from_manifest(&Manifest::read(&m)?)?,
                None => RunConfig::Discover(DiscoverRun {
                    bags: required(a.bags),
                    vocab: required(a.vocab),
                    output: required(a.output),
                    cws_dump: a.cws_dump,
                    eta: a.eta,
                    tuple_size: a.tuple_size,
                    tables: a.tables,
                    overlap: a.overlap,
                    min_set_size: a.min_set_size,
                    min_cluster_size: a.min_cluster_size,
                    min_topic_words: a.min_topic_words,
                    top_k: a.top_k,
                    seed: a.seed,
                    threads: a.threads,
                    exact_clustering: a.exact_clustering,
                    pair_tuple_size: a.pair_tuple_size,
                    pair_tables: a.pair_tables,
                }),
            },
            Command::Evaluate(a) => match a.manifest {
                Some(m) => RunConfig::from_manifest(&Manifest::read(&m)?)?,
                None => RunConfig::Evaluate(EvaluateRun {
                    topics: required(a.topics),
                    reference: required(a.reference),
                    output: required(a.output),
                    top_n: a.top_n,
                    top_k: a.top_k,
                    window_size: a.window_size,
                }),
            },
            Command::Synth(a) => RunConfig::Synth(SynthRun {
                output_dir: a.output_dir,
                spec: PlantedSpec {
                    n_topics: a.topics,
                    words_per_topic: a.words_per_topic,
                    n_docs: a.docs,
                    doc_length: a.doc_length,
                    noise_words: a.noise_words,
                    noise_fraction: a.noise_fraction,
                    leak_fraction: a.leak_fraction,
                    zipf_exponent: a.zipf,
                    seed: a.seed,
                },
            }),
        })
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code: 0 on success, 2 on any error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match cli.command.into_config().and_then(|c| execute(&c)) {
        Ok(msg) => {
            println!("{msg}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
