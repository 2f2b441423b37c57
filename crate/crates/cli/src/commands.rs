use std::fmt::Write as _;
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use log::{info, warn};
use sva_core::export::{
    format_value, pseudo_table, score_table, sweep_table, write_dot, write_graphml,
    GraphAnnotations, SweepRow,
};
use sva_core::netbuild::augment;
use sva_core::pseudopaper::{score_pseudopaper, synthesize, RewriteMode};
use sva_core::sva::{Baseline, CohortAnalysis};
use sva_core::{
    score_cohort_with, CoCitationNetwork, Corpus, Metric, PseudopaperSpec, SvaError, SvaScores,
    WindowConfig,
};

use crate::settings::{config_error, ExportFormat, Resolved, DEFAULT_TOP};

/// Files produced by a command, written together once it has succeeded.
#[derive(Debug, Default)]
pub struct Artifacts {
    files: Vec<(PathBuf, Vec<u8>)>,
    pub stdout: String,
}

impl Artifacts {
    fn add(&mut self, path: impl Into<PathBuf>, contents: impl Into<Vec<u8>>) {
        self.files.push((path.into(), contents.into()));
    }

    pub fn write_to(&self, dir: &Path) -> Result<()> {
        for (rel, bytes) in &self.files {
            let path = dir.join(rel);
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent)
                    .with_context(|| format!("creating {}", parent.display()))?;
            }
            std::fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.files.iter().map(|(p, _)| p.as_path())
    }
}

pub fn load_corpus(path: &Path) -> Result<Corpus> {
    let file = File::open(path).map_err(|e| SvaError::Io(format!("{}: {e}", path.display())))?;
    let (corpus, report) = Corpus::parse(BufReader::new(file))?;
    for d in &report.rejected {
        warn!(
            "{}: line {}: skipped record: {}",
            path.display(),
            d.line,
            d.reason
        );
    }
    if report.duplicate_records > 0 {
        warn!("{} duplicate records ignored", report.duplicate_records);
    }
    info!(
        "loaded {} records spanning {}..={}",
        corpus.len(),
        corpus.year_range().0,
        corpus.year_range().1
    );
    Ok(corpus)
}

fn render(net: &CoCitationNetwork, notes: GraphAnnotations<'_>, format: ExportFormat) -> Vec<u8> {
    let mut buf = Vec::new();
    let written = match format {
        ExportFormat::Graphml => write_graphml(net, notes, &mut buf),
        ExportFormat::Dot => write_dot(net, notes, &mut buf),
        ExportFormat::None => Ok(()),
    };
    written.expect("writing to memory cannot fail");
    buf
}

fn file_stem(id: &str) -> String {
    id.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || "._-".contains(c) {
                c
            } else {
                '_'
            }
        })
        .collect()
}

fn suffix(res: &Resolved, window: &WindowConfig) -> String {
    if res.is_sweep() {
        format!("_k{}", window.k)
    } else {
        String::new()
    }
}

fn describe_baseline(b: &Baseline) -> String {
    format!(
        "target year {}, k = {}, baseline {}: {} nodes, {} edges, {} clusters, Q = {}",
        b.config.target_year,
        b.config.k,
        b.network.label(),
        b.network.node_count(),
        b.network.edge_count(),
        b.partition.cluster_count(),
        format_value(b.modularity),
    )
}

fn top_summary(analysis: &CohortAnalysis, top: usize) -> String {
    let mut ranked: Vec<&SvaScores> = analysis.scores.iter().collect();
    ranked.sort_by(|a, b| {
        a.rank(Metric::Harmonic)
            .cmp(&b.rank(Metric::Harmonic))
            .then_with(|| a.paper_id.cmp(&b.paper_id))
    });
    let mut out = String::new();
    let _ = writeln!(out, "rank_h\tpaper_id\th\tdelta_m\tcl\tc_kl\tentropy");
    for s in ranked.into_iter().take(top) {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            s.rank(Metric::Harmonic),
            s.paper_id,
            format_value(s.h),
            format_value(s.delta_m),
            format_value(s.cl),
            format_value(Some(s.c_kl)),
            format_value(Some(s.entropy)),
        );
    }
    out
}

fn export_baseline(arts: &mut Artifacts, b: &Baseline, name: &str, format: ExportFormat) {
    if let Some(ext) = format.extension() {
        let notes = GraphAnnotations {
            partition: Some(&b.partition),
            novelty: None,
        };
        arts.add(format!("{name}.{ext}"), render(&b.network, notes, format));
    }
}

/// Scores the target-year cohort for every k value.
pub fn score(
    res: &Resolved,
    targets: Option<Vec<String>>,
    top: Option<usize>,
) -> Result<Artifacts> {
    let year = res.require_target_year()?;
    let corpus = load_corpus(&res.corpus)?;
    let targets = targets.or_else(|| res.file.targets.clone());
    let top = top.or(res.file.top).unwrap_or(DEFAULT_TOP);
    let mut arts = Artifacts::default();
    for window in res.windows_for(year) {
        let analysis = score_cohort_with(&corpus, &window, &res.options, targets.as_deref())?;
        let sfx = suffix(res, &window);
        arts.add(format!("scores{sfx}.tsv"), score_table(&analysis.scores));
        export_baseline(
            &mut arts,
            &analysis.baseline,
            &format!("baseline{sfx}"),
            res.format,
        );
        if let Some(ext) = res.format.extension() {
            let b = &analysis.baseline;
            for (n, s) in analysis.scores.iter().enumerate() {
                if s.novelty.novel_count() == 0 {
                    continue;
                }
                let paper = corpus
                    .get(&s.paper_id)
                    .expect("scored paper is in the corpus");
                let (augmented, report) = augment(&b.network, paper, &b.partition)?;
                let notes = GraphAnnotations {
                    partition: Some(&b.partition),
                    novelty: Some(&report),
                };
                arts.add(
                    format!("novel{sfx}/{:04}_{}.{ext}", n + 1, file_stem(&s.paper_id)),
                    render(&augmented, notes, res.format),
                );
            }
        }
        let _ = writeln!(arts.stdout, "{}", describe_baseline(&analysis.baseline));
        let _ = writeln!(arts.stdout, "{} papers scored", analysis.scores.len());
        arts.stdout.push_str(&top_summary(&analysis, top));
    }
    Ok(arts)
}

fn seed_list(flag: Option<Vec<String>>, res: &Resolved) -> Vec<String> {
    flag.or_else(|| res.file.seeds.clone()).unwrap_or_default()
}

/// Merges the seeds into a pseudopaper and tabulates it beside the seeds.
pub fn pseudo(res: &Resolved, seeds: Option<Vec<String>>, strict: bool) -> Result<Artifacts> {
    let corpus = load_corpus(&res.corpus)?;
    let seeds = seed_list(seeds, res);
    let spec = PseudopaperSpec::new(&corpus, &seeds)?;
    let mode = if strict || res.file.strict.unwrap_or(false) {
        RewriteMode::Strict
    } else {
        RewriteMode::Bridging
    };
    let year = res.target_year.unwrap_or(spec.placement_year());
    let mut arts = Artifacts::default();
    let synthesis = synthesize(&corpus, &spec, mode)?;
    arts.add("pseudo_corpus.jsonl", synthesis.corpus.to_jsonl_string());

    let mut runs = Vec::new();
    for window in res.windows_for(year) {
        let run = score_pseudopaper(&corpus, &spec, &window, mode, &res.options)?;
        let mut seed_scores = Vec::new();
        for id in spec.seed_ids() {
            let seed_year = spec.seed_year(id).expect("seed of this spec");
            let own = WindowConfig {
                target_year: seed_year,
                ..window.clone()
            };
            let analysis = score_cohort_with(&corpus, &own, &res.options, None)?;
            seed_scores.push(
                analysis
                    .get(id)
                    .expect("seed belongs to its year's cohort")
                    .clone(),
            );
        }
        runs.push((window, run, seed_scores));
    }

    for (window, run, seed_scores) in &runs {
        let roles: Vec<String> = (1..=seed_scores.len()).map(|i| format!("s{i}")).collect();
        let mut rows: Vec<(&str, &SvaScores)> = roles
            .iter()
            .map(String::as_str)
            .zip(seed_scores.iter())
            .collect();
        rows.push(("ps", run.scores(&spec)));
        let table = pseudo_table(rows);
        arts.add(format!("pseudo{}.tsv", suffix(res, window)), table.clone());
        let _ = writeln!(arts.stdout, "{}", describe_baseline(&run.analysis.baseline));
        arts.stdout.push_str(&table);
    }
    let sweep = sweep_table(runs.iter().map(|(window, run, _)| {
        let b = &run.analysis.baseline;
        SweepRow {
            k: window.k,
            nodes: b.network.node_count(),
            edges: b.network.edge_count(),
            clusters: b.partition.cluster_count(),
            scores: run.scores(&spec),
        }
    }));
    arts.add("sweep.tsv", sweep);
    Ok(arts)
}

/// Grows a sub-corpus around the seeds by citation hops.
pub fn expand(
    res: &Resolved,
    seeds: Option<Vec<String>>,
    backward: Option<usize>,
    forward: Option<usize>,
) -> Result<Artifacts> {
    let corpus = load_corpus(&res.corpus)?;
    let seeds = seed_list(seeds, res);
    if seeds.is_empty() {
        return Err(config_error("seeds", "at least one seed id is required").into());
    }
    let backward = backward.or(res.file.backward).unwrap_or(1);
    let forward = forward.or(res.file.forward).unwrap_or(1);
    let expansion = corpus.expand_from_seeds(&seeds, backward, forward)?;
    let p = expansion.corpus.profile();
    let mut profile = String::from(
        "records\tyear_min\tyear_max\tdoi_share\treference_share\tbackward_found\tforward_found\toverlap\n",
    );
    let _ = writeln!(
        profile,
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        p.records,
        p.year_min,
        p.year_max,
        format_value(Some(p.doi_share)),
        format_value(Some(p.reference_share)),
        expansion.backward_found,
        expansion.forward_found,
        expansion.overlap,
    );
    let mut arts = Artifacts::default();
    arts.add("expanded.jsonl", expansion.corpus.to_jsonl_string());
    arts.add("profile.tsv", profile.clone());
    arts.stdout = profile;
    Ok(arts)
}

/// Exports the clustered baseline network of the target year.
pub fn export(res: &Resolved) -> Result<Artifacts> {
    if res.format == ExportFormat::None {
        return Err(config_error("format", "export needs graphml or dot").into());
    }
    let year = res.require_target_year()?;
    let corpus = load_corpus(&res.corpus)?;
    let mut arts = Artifacts::default();
    for window in res.windows_for(year) {
        let b = Baseline::build(&corpus, &window, &res.options)?;
        let sfx = suffix(res, &window);
        export_baseline(&mut arts, &b, &format!("baseline{sfx}"), res.format);
        let mut clusters = String::from("node_id\tcluster\twindow_citations\n");
        for (id, count) in &b.selected.ranked {
            if let Some(i) = b.network.index_of(id) {
                let _ = writeln!(clusters, "{id}\t{}\t{count}", b.partition.cluster_of(i));
            }
        }
        arts.add(format!("clusters{sfx}.tsv"), clusters);
        let _ = writeln!(arts.stdout, "{}", describe_baseline(&b));
    }
    Ok(arts)
}
