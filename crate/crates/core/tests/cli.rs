mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn smh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smh"))
        .args(args)
        .output()
        .expect("run smh")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

const FIXTURE: &str = "0\tapple banana apple\n1\tbanana cherry\n2\tcherry cherry date\n";

fn ingest_fixture(dir: &TempDir, extra: &[&str]) -> Output {
    let input = dir.path().join("corpus.txt");
    fs::write(&input, FIXTURE).unwrap();
    let out = dir.path().join("ingested");
    let mut args = vec!["ingest", "--input", p(&input), "--output-dir", p(&out)];
    args.extend_from_slice(extra);
    smh(&args)
}

#[test]
fn ingest_writes_bags_and_vocabulary() {
    let dir = TempDir::new().unwrap();
    let out = ingest_fixture(&dir, &[]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let bags = fs::read_to_string(dir.path().join("ingested/bags.txt")).unwrap();
    // cherry=0 (3), apple=1 (2), banana=2 (2), date=3 (1)
    assert_eq!(bags, "2 1:2 2:1\n2 0:1 2:1\n2 0:2 3:1\n");
    let vocab = fs::read_to_string(dir.path().join("ingested/vocab.txt")).unwrap();
    assert_eq!(
        vocab,
        "cherry\t0\t3\t2\napple\t1\t2\t1\nbanana\t2\t2\t2\ndate\t3\t1\t1\n"
    );
    assert!(dir.path().join("ingested/manifest.txt").exists());
}

#[test]
fn ingest_with_single_word_vocabulary() {
    let dir = TempDir::new().unwrap();
    assert!(ingest_fixture(&dir, &["--vocab-size", "1"]).status.success());
    let vocab = fs::read_to_string(dir.path().join("ingested/vocab.txt")).unwrap();
    assert_eq!(vocab, "cherry\t0\t3\t2\n");
    let bags = fs::read_to_string(dir.path().join("ingested/bags.txt")).unwrap();
    assert_eq!(bags, "0\n1 0:1\n1 0:2\n");
}

#[test]
fn ingest_with_stopwords() {
    let dir = TempDir::new().unwrap();
    let stop = dir.path().join("stop.txt");
    fs::write(&stop, "cherry\ndate\n").unwrap();
    assert!(ingest_fixture(&dir, &["--stopwords", p(&stop)]).status.success());
    let vocab = fs::read_to_string(dir.path().join("ingested/vocab.txt")).unwrap();
    assert_eq!(vocab, "apple\t0\t2\t1\nbanana\t1\t2\t2\n");
}

#[test]
fn missing_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let out = smh(&[
        "ingest",
        "--input",
        "/no/such/corpus.txt",
        "--output-dir",
        p(dir.path()),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("input not found"));
}

fn synth_and_ingest(dir: &Path, docs: &str) -> (String, String) {
    let synth_dir = dir.join("synth");
    let out = smh(&["synth", "--output-dir", p(&synth_dir), "--docs", docs, "--seed", "4"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let ing = dir.join("ing");
    let out = smh(&[
        "ingest",
        "--input",
        p(&synth_dir.join("corpus.txt")),
        "--output-dir",
        p(&ing),
    ]);
    assert!(out.status.success());
    (
        p(&ing.join("bags.txt")).to_owned(),
        p(&ing.join("vocab.txt")).to_owned(),
    )
}

#[test]
fn discover_is_deterministic_and_reproducible_from_manifest() {
    let dir = TempDir::new().unwrap();
    let (bags, vocab) = synth_and_ingest(dir.path(), "400");
    let first = dir.path().join("a/topics.txt");
    let second = dir.path().join("b/topics.txt");
    for out in [&first, &second] {
        let o = smh(&[
            "discover",
            "--bags",
            &bags,
            "--vocab",
            &vocab,
            "--output",
            p(out),
            "--eta",
            "0.06",
            "--seed",
            "9",
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let a = fs::read(&first).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, fs::read(&second).unwrap());

    let manifest = dir.path().join("a/topics.txt.manifest");
    let text = fs::read_to_string(&manifest).unwrap();
    assert!(text.contains("eta=0.06\n") && text.contains("seed=9\n"));
    fs::remove_file(&first).unwrap();
    assert!(smh(&["discover", "--manifest", p(&manifest)]).status.success());
    assert_eq!(fs::read(&first).unwrap(), a);

    let report = fs::read_to_string(dir.path().join("a/topics.txt.report")).unwrap();
    assert!(report.contains("tables=192"));
    assert!(report.contains("total_seconds="));
}

#[test]
fn discover_rejects_bad_eta() {
    let dir = TempDir::new().unwrap();
    let (bags, vocab) = synth_and_ingest(dir.path(), "50");
    for eta in ["0", "1.2"] {
        let out = smh(&[
            "discover",
            "--bags",
            &bags,
            "--vocab",
            &vocab,
            "--output",
            p(&dir.path().join("t")),
            "--eta",
            eta,
        ]);
        assert_eq!(out.status.code(), Some(2));
    }
    let out = smh(&[
        "discover",
        "--bags",
        &bags,
        "--vocab",
        &vocab,
        "--output",
        p(&dir.path().join("t")),
        "--tuple-size",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn discover_writes_cws_dump() {
    let dir = TempDir::new().unwrap();
    let (bags, vocab) = synth_and_ingest(dir.path(), "200");
    let dump = dir.path().join("cws.txt");
    let out = smh(&[
        "discover",
        "--bags",
        &bags,
        "--vocab",
        &vocab,
        "--output",
        p(&dir.path().join("t.txt")),
        "--eta",
        "0.1",
        "--cws-dump",
        p(&dump),
        "--threads",
        "2",
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(dump).unwrap();
    let first = text.lines().next().unwrap();
    let (table, ids) = first.split_once('\t').unwrap();
    assert!(table.parse::<usize>().unwrap() < 68);
    assert!(ids.split(' ').count() >= 3);
}

#[test]
fn evaluate_perfect_topic() {
    let dir = TempDir::new().unwrap();
    let topics = dir.path().join("topics.txt");
    fs::write(&topics, "5\t6\ta:6 b:6\n").unwrap();
    let reference = dir.path().join("ref.txt");
    fs::write(&reference, "0\ta b\n1\tx y z\n").unwrap();
    let report = dir.path().join("report.txt");
    let out = smh(&[
        "evaluate",
        "--topics",
        p(&topics),
        "--reference",
        p(&reference),
        "--output",
        p(&report),
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("fewer than the requested 400"), "{stderr}");
    let text = fs::read_to_string(report).unwrap();
    assert_eq!(text, "0\t1\ta b\nsummary\tmean=1\tmedian=1\tstd=0\ttopics=1\n");
}

#[test]
fn evaluate_matches_window_oracle() {
    let dir = TempDir::new().unwrap();
    let docs: Vec<Vec<String>> = ["a b c d a e", "b c c f g a", "e f g h", "a h b", "d d e f a b c"]
        .iter()
        .map(|d| d.split(' ').map(str::to_owned).collect())
        .collect();
    let reference = dir.path().join("ref.txt");
    let body: String = docs
        .iter()
        .enumerate()
        .map(|(i, d)| format!("{i}\t{}\n", d.join(" ")))
        .collect();
    fs::write(&reference, body).unwrap();
    let topics = dir.path().join("topics.txt");
    fs::write(&topics, "1\t5\ta:3 b:2 c:1\n1\t5\te:2 f:2 h:1 zz:1\n").unwrap();
    let report = dir.path().join("r.txt");
    let out = smh(&[
        "evaluate",
        "--topics",
        p(&topics),
        "--reference",
        p(&reference),
        "--output",
        p(&report),
        "--window-size",
        "3",
        "--top-n",
        "2",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("zz"));
    let text = fs::read_to_string(report).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let expect = [
        common::npmi_oracle(&docs, 3, &["a", "b", "c"].map(String::from)),
        common::npmi_oracle(&docs, 3, &["e", "f", "h", "zz"].map(String::from)),
    ];
    for (line, want) in lines.iter().zip(expect) {
        let got: f64 = line.split('\t').nth(1).unwrap().parse().unwrap();
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }
    assert!(lines[2].starts_with("summary\t"));
}

#[test]
fn evaluate_empty_topics_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let topics = dir.path().join("topics.txt");
    fs::write(&topics, "").unwrap();
    let reference = dir.path().join("ref.txt");
    fs::write(&reference, "0\ta b\n").unwrap();
    let out = smh(&[
        "evaluate",
        "--topics",
        p(&topics),
        "--reference",
        p(&reference),
        "--output",
        p(&dir.path().join("r")),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn synth_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for d in [&a, &b] {
        assert!(smh(&["synth", "--output-dir", p(d), "--docs", "30", "--seed", "12"])
            .status
            .success());
    }
    assert_eq!(
        fs::read(a.join("corpus.txt")).unwrap(),
        fs::read(b.join("corpus.txt")).unwrap()
    );
    let truth = fs::read_to_string(a.join("ground_truth.txt")).unwrap();
    assert_eq!(truth.lines().count(), 10);
    assert!(truth.starts_with("0\tt0w0 t0w1 "));
}
