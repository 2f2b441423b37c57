use std::collections::BTreeSet;

use super::network::CoCitationNetwork;
use crate::analytics::Partition;
use crate::corpus::PaperRecord;
use crate::error::{Result, SvaError};

/// Unordered pair of reference ids, lexicographically smaller id first.
pub type NodePair = (String, String);

fn node_pair(a: &str, b: &str) -> NodePair {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// How a citing paper's reference pairs relate to the baseline network.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NovelLinkReport {
    pub paper_id: String,
    pub novel_within: BTreeSet<NodePair>,
    pub novel_between: BTreeSet<NodePair>,
    pub existing_links: BTreeSet<NodePair>,
    /// References taking part in at least one novel between-cluster link.
    pub cr: usize,
    /// All distinct references of the paper.
    pub nr: usize,
    /// References that are baseline nodes.
    pub in_network_refs: usize,
    /// Reference pairs skipped because an endpoint is not a baseline node.
    pub dropped_pairs: usize,
}

impl NovelLinkReport {
    pub fn novel_count(&self) -> usize {
        self.novel_within.len() + self.novel_between.len()
    }

    /// All novel pairs regardless of cluster placement.
    pub fn novel_links(&self) -> BTreeSet<NodePair> {
        self.novel_within
            .union(&self.novel_between)
            .cloned()
            .collect()
    }
}

/// Adds the novel co-citation links of `paper` to a copy of `baseline`.
///
/// A pair of the paper's references is novel when both are baseline nodes
/// and the baseline has no edge between them; each novel pair enters the
/// augmented network with weight 1. Nodes are never added. The baseline
/// partition decides whether a novel pair lies within one cluster or spans
/// two.
pub fn augment(
    baseline: &CoCitationNetwork,
    paper: &PaperRecord,
    partition: &Partition,
) -> Result<(CoCitationNetwork, NovelLinkReport)> {
    if partition.len() != baseline.node_count() {
        return Err(SvaError::PartitionMismatch {
            expected: baseline.node_count(),
            got: partition.len(),
        });
    }
    let refs: BTreeSet<&str> = paper.references.iter().map(String::as_str).collect();
    let members: Vec<usize> = refs.iter().filter_map(|r| baseline.index_of(r)).collect();
    let nr = refs.len();
    let total_pairs = nr * nr.saturating_sub(1) / 2;
    let inside_pairs = members.len() * members.len().saturating_sub(1) / 2;

    let mut report = NovelLinkReport {
        paper_id: paper.id.clone(),
        nr,
        in_network_refs: members.len(),
        dropped_pairs: total_pairs - inside_pairs,
        ..Default::default()
    };
    let mut augmented = baseline.clone();
    let mut spanning: BTreeSet<usize> = BTreeSet::new();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            let pair = node_pair(baseline.node(a), baseline.node(b));
            if baseline.has_edge(a, b) {
                report.existing_links.insert(pair);
                continue;
            }
            augmented.add_weight(a, b, 1);
            if partition.cluster_of(a) == partition.cluster_of(b) {
                report.novel_within.insert(pair);
            } else {
                report.novel_between.insert(pair);
                spanning.insert(a);
                spanning.insert(b);
            }
        }
    }
    report.cr = spanning.len();
    augmented.set_label(format!("{}+{}", baseline.label(), paper.id));
    Ok((augmented, report))
}
