use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/tiny.jsonl")
}

fn sva(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sva"))
        .args(args)
        .arg("--corpus")
        .arg(fixture())
        .arg("--out")
        .arg(out)
        .env_remove("SVA_OUT_DIR")
        .output()
        .expect("run sva")
}

fn read(path: impl AsRef<Path>) -> String {
    std::fs::read_to_string(path.as_ref())
        .unwrap_or_else(|e| panic!("{}: {e}", path.as_ref().display()))
}

#[test]
fn score_writes_table_with_one_row_per_cohort_paper() {
    let dir = TempDir::new().unwrap();
    let out = sva(&["score", "--target-year", "2015"], dir.path());
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let table = read(dir.path().join("scores.tsv"));
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0]
        .starts_with("paper_id\tcitation_count\tdelta_m\tcl\tc_kl\th\talpha\tbeta\tentropy\t"));
    let ids: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.split('\t').next().unwrap())
        .collect();
    assert_eq!(ids, ["t1", "t3", "t2"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("rank_h\tpaper_id"));
}

#[test]
fn graphml_exports_are_well_formed() {
    let dir = TempDir::new().unwrap();
    let out = sva(
        &["score", "--target-year", "2015", "--format", "graphml"],
        dir.path(),
    );
    assert!(out.status.success());
    let mut files = vec![dir.path().join("baseline.graphml")];
    for entry in std::fs::read_dir(dir.path().join("novel")).unwrap() {
        files.push(entry.unwrap().path());
    }
    assert!(files.len() > 1);
    for f in files {
        let text = read(&f);
        let doc =
            roxmltree::Document::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", f.display()));
        let edges: Vec<_> = doc
            .descendants()
            .filter(|n| n.has_tag_name("edge"))
            .collect();
        assert!(!edges.is_empty());
        for e in edges {
            let weight = e
                .children()
                .find(|c| c.attribute("key") == Some("weight"))
                .and_then(|c| c.text())
                .unwrap();
            assert!(weight.parse::<u32>().unwrap() >= 1);
        }
    }
}

#[test]
fn dot_and_none_formats() {
    let dir = TempDir::new().unwrap();
    assert!(sva(
        &["score", "--target-year", "2015", "--format", "dot"],
        dir.path()
    )
    .status
    .success());
    assert!(read(dir.path().join("baseline.dot")).starts_with("graph \"2010-2014\" {"));
    let dir = TempDir::new().unwrap();
    assert!(sva(
        &["score", "--target-year", "2015", "--format", "none"],
        dir.path()
    )
    .status
    .success());
    assert!(!dir.path().join("baseline.graphml").exists());
    assert!(dir.path().join("scores.tsv").exists());
}

#[test]
fn target_year_outside_range_is_a_config_error() {
    let dir = TempDir::new().unwrap();
    let out = sva(&["score", "--target-year", "1990"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("target_year"));
    assert!(!dir.path().join("scores.tsv").exists());
}

#[test]
fn invalid_parameters_name_their_field() {
    let dir = TempDir::new().unwrap();
    for (flag, value, field) in [
        ("--lrf", "0", "lrf"),
        ("--epsilon", "0", "epsilon"),
        ("--k", "0", "k"),
    ] {
        let out = sva(&["score", "--target-year", "2015", flag, value], dir.path());
        assert_eq!(out.status.code(), Some(2), "{flag}");
        assert!(
            String::from_utf8_lossy(&out.stderr).contains(field),
            "{flag}"
        );
    }
}

#[test]
fn missing_corpus_is_a_data_error() {
    let dir = TempDir::new().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_sva"))
        .args(["score", "--target-year", "2015", "--corpus"])
        .arg(dir.path().join("absent.jsonl"))
        .arg("--out")
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    for dir in [&a, &b] {
        assert!(sva(
            &["score", "--target-year", "2015", "--k", "5,10"],
            dir.path()
        )
        .status
        .success());
    }
    for name in [
        "scores_k5.tsv",
        "scores_k10.tsv",
        "baseline_k5.graphml",
        "novel_k10/0001_t1.graphml",
    ] {
        assert_eq!(
            read(a.path().join(name)),
            read(b.path().join(name)),
            "{name}"
        );
    }
}

#[test]
fn pseudo_lists_seeds_and_pseudopaper() {
    let dir = TempDir::new().unwrap();
    let out = sva(&["pseudo", "--seeds", "t1,t3"], dir.path());
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let table = read(dir.path().join("pseudo.tsv"));
    let roles: Vec<(&str, &str)> = table
        .lines()
        .skip(1)
        .map(|l| {
            let mut cells = l.split('\t');
            (cells.next().unwrap(), cells.next().unwrap())
        })
        .collect();
    assert_eq!(roles, [("s1", "t1"), ("s2", "t3"), ("ps", "ps(t1+t3)")]);
    let corpus = read(dir.path().join("pseudo_corpus.jsonl"));
    assert!(corpus.contains("ps(t1+t3)"));
    assert!(!corpus.contains("\"t1\""));
}

#[test]
fn pseudo_sweep_has_one_row_per_k() {
    let dir = TempDir::new().unwrap();
    let out = sva(
        &["pseudo", "--seeds", "t1,t3", "--k", "5,10,15,20,25"],
        dir.path(),
    );
    assert!(out.status.success());
    let sweep = read(dir.path().join("sweep.tsv"));
    let ks: Vec<&str> = sweep
        .lines()
        .skip(1)
        .map(|l| l.split('\t').next().unwrap())
        .collect();
    assert_eq!(ks, ["5", "10", "15", "20", "25"]);
    assert!(dir.path().join("pseudo_k25.tsv").exists());
}

#[test]
fn identical_seeds_are_degenerate() {
    let dir = TempDir::new().unwrap();
    let out = sva(&["pseudo", "--seeds", "t1,t1"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate pseudopaper"));
}

#[test]
fn unknown_seed_is_named() {
    let dir = TempDir::new().unwrap();
    let out = sva(&["pseudo", "--seeds", "t1,zz9"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zz9"));
}

#[test]
fn expand_follows_hops() {
    let dir = TempDir::new().unwrap();
    let out = sva(
        &[
            "expand",
            "--seeds",
            "t1",
            "--backward",
            "0",
            "--forward",
            "0",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(read(dir.path().join("expanded.jsonl")).lines().count(), 1);

    let out = sva(
        &[
            "expand",
            "--seeds",
            "t3",
            "--backward",
            "1",
            "--forward",
            "1",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let ids: Vec<String> = read(dir.path().join("expanded.jsonl"))
        .lines()
        .map(|l| l.split('"').nth(3).unwrap().to_string())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(sorted, ["b2", "l1", "t3"]);
    let profile = read(dir.path().join("profile.tsv"));
    let row: Vec<&str> = profile.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(&row[..3], ["3", "2012", "2016"]);
}

#[test]
fn export_writes_clusters() {
    let dir = TempDir::new().unwrap();
    let out = sva(&["export", "--target-year", "2015"], dir.path());
    assert!(out.status.success());
    let clusters = read(dir.path().join("clusters.tsv"));
    assert_eq!(clusters.lines().count(), 8);
    assert!(dir.path().join("baseline.graphml").exists());
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = TempDir::new().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "target_year = 2015\nformat = \"dot\"\nk = [5, 10]\n").unwrap();
    let out = sva(
        &["score", "--config", cfg.to_str().unwrap(), "--k", "7"],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(dir.path().join("scores.tsv").exists());
    assert!(dir.path().join("baseline.dot").exists());

    std::fs::write(&cfg, "bogus = 1\n").unwrap();
    let out = sva(&["score", "--config", cfg.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_dir_defaults_to_environment() {
    let dir = TempDir::new().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_sva"))
        .args([
            "score",
            "--target-year",
            "2015",
            "--format",
            "none",
            "--corpus",
        ])
        .arg(fixture())
        .env("SVA_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("scores.tsv").exists());
}
