use std::fmt::Write;

use crate::sva::{Metric, SvaScores};

/// Columns of [`score_table`], before the per-metric `rank_*` columns.
pub const SCORE_COLUMNS: [&str; 9] = [
    "paper_id",
    "citation_count",
    "delta_m",
    "cl",
    "c_kl",
    "h",
    "alpha",
    "beta",
    "entropy",
];

/// Six decimals, or an empty field for an undefined value.
pub fn format_value(v: Option<f64>) -> String {
    match v {
        // Avoids printing "-0.000000".
        Some(0.0) => format!("{:.6}", 0.0),
        Some(x) => format!("{x:.6}"),
        None => String::new(),
    }
}

fn header() -> Vec<String> {
    let mut cols: Vec<String> = SCORE_COLUMNS.iter().map(|c| c.to_string()).collect();
    cols.extend(Metric::ALL.iter().map(|m| format!("rank_{}", m.column())));
    cols
}

fn cells(s: &SvaScores) -> Vec<String> {
    let mut row = vec![s.paper_id.clone(), s.citation_count.to_string()];
    row.extend(Metric::ALL.iter().map(|&m| format_value(s.value(m))));
    row.extend(
        Metric::ALL
            .iter()
            .map(|&m| s.ranks.get(&m).map_or_else(String::new, |r| r.to_string())),
    );
    row
}

fn push_line(out: &mut String, fields: &[String]) {
    let _ = writeln!(out, "{}", fields.join("\t"));
}

/// Tab-separated table with one row per scored paper, in the given order.
pub fn score_table<'a, I>(scores: I) -> String
where
    I: IntoIterator<Item = &'a SvaScores>,
{
    let mut out = String::new();
    push_line(&mut out, &header());
    for s in scores {
        push_line(&mut out, &cells(s));
    }
    out
}

/// Score table with a leading `role` column, used to set a pseudopaper
/// beside the seeds it merges.
pub fn pseudo_table<'a, I>(rows: I) -> String
where
    I: IntoIterator<Item = (&'a str, &'a SvaScores)>,
{
    let mut out = String::new();
    let mut head = vec!["role".to_string()];
    head.extend(header());
    push_line(&mut out, &head);
    for (role, s) in rows {
        let mut row = vec![role.to_string()];
        row.extend(cells(s));
        push_line(&mut out, &row);
    }
    out
}

/// One scoring run of a parameter sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepRow<'a> {
    pub k: u32,
    pub nodes: usize,
    pub edges: usize,
    pub clusters: usize,
    pub scores: &'a SvaScores,
}

/// Score table with leading `k`, `nodes`, `edges` and `clusters` columns.
pub fn sweep_table<'a, I>(rows: I) -> String
where
    I: IntoIterator<Item = SweepRow<'a>>,
{
    let mut out = String::new();
    let mut head: Vec<String> = ["k", "nodes", "edges", "clusters"]
        .map(String::from)
        .to_vec();
    head.extend(header());
    push_line(&mut out, &head);
    for r in rows {
        let mut row = vec![
            r.k.to_string(),
            r.nodes.to_string(),
            r.edges.to_string(),
            r.clusters.to_string(),
        ];
        row.extend(cells(r.scores));
        push_line(&mut out, &row);
    }
    out
}
