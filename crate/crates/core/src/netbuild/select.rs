//! g-index node selection.
//!
//! References are ranked by citations received from papers inside the
//! window. The selection keeps the top `g`, where `g` is the largest rank
//! whose cumulative citation count reaches `g² / k`. With `k = 1` this is the
//! classic g-index; larger `k` admits more nodes.

use std::collections::HashMap;

use super::config::YearWindow;
use crate::corpus::Corpus;
use crate::error::{Result, SvaError};

/// Selected references in rank order with their in-window citation counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedNodes {
    pub ranked: Vec<(String, usize)>,
    /// Scaled g-index before the citation floor was applied.
    pub g: usize,
}

impl RankedNodes {
    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.ranked.iter().map(|(id, _)| id.as_str())
    }

    pub fn len(&self) -> usize {
        self.ranked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranked.is_empty()
    }
}

/// Largest `g` with `sum(counts[..g]) * k >= g²`; `counts` must be sorted
/// in descending order.
pub fn scaled_g_index(counts: &[usize], k: u32) -> usize {
    let mut sum: u128 = 0;
    let mut g = 0;
    for (i, &c) in counts.iter().enumerate() {
        sum += c as u128;
        let rank = (i + 1) as u128;
        if sum * u128::from(k) >= rank * rank {
            g = i + 1;
        }
    }
    g
}

/// In-window citation counts for every reference cited by a window paper.
pub fn window_citation_counts(corpus: &Corpus, window: YearWindow) -> HashMap<&str, usize> {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for rec in corpus.records_in_years(window.start, window.end) {
        for r in &rec.references {
            *counts.entry(r.as_str()).or_insert(0) += 1;
        }
    }
    counts
}

pub fn select_nodes(corpus: &Corpus, window: YearWindow, k: u32, e: f64) -> Result<RankedNodes> {
    if k < 1 {
        return Err(SvaError::config("k", "must be at least 1"));
    }
    if corpus
        .records_in_years(window.start, window.end)
        .next()
        .is_none()
    {
        return Err(SvaError::EmptySlice {
            start: window.start,
            end: window.end,
        });
    }
    let mut ranked: Vec<(String, usize)> = window_citation_counts(corpus, window)
        .into_iter()
        .map(|(id, c)| (id.to_string(), c))
        .collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let counts: Vec<usize> = ranked.iter().map(|(_, c)| *c).collect();
    let g = scaled_g_index(&counts, k);
    ranked.truncate(g);
    ranked.retain(|(_, c)| *c as f64 >= e);
    Ok(RankedNodes { ranked, g })
}
