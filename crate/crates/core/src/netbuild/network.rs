use std::collections::{BTreeMap, HashMap};

use crate::error::{Result, SvaError};

/// Undirected pair of node indices, smaller index first.
pub type EdgeKey = (usize, usize);

pub(crate) fn edge_key(a: usize, b: usize) -> EdgeKey {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Weighted undirected co-citation graph over cited references.
///
/// Nodes are kept sorted by id, so node indices follow ascending id order and
/// index-based tie-breaks coincide with lexicographic ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoCitationNetwork {
    label: String,
    nodes: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeMap<EdgeKey, u32>,
}

impl CoCitationNetwork {
    /// An edgeless network over `nodes` (duplicates collapse).
    pub fn with_nodes<I, S>(label: impl Into<String>, nodes: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut nodes: Vec<String> = nodes.into_iter().map(Into::into).collect();
        nodes.sort();
        nodes.dedup();
        let index = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        CoCitationNetwork {
            label: label.into(),
            nodes,
            index,
            edges: BTreeMap::new(),
        }
    }

    /// Builds a network from explicit weighted edges. Endpoints must be listed
    /// in `nodes`; repeated pairs accumulate weight.
    pub fn from_edges<I, S>(
        label: impl Into<String>,
        nodes: I,
        edges: &[(&str, &str, u32)],
    ) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut net = CoCitationNetwork::with_nodes(label, nodes);
        for &(a, b, w) in edges {
            let (Some(i), Some(j)) = (net.index_of(a), net.index_of(b)) else {
                return Err(SvaError::InvalidNetwork(format!(
                    "edge {a}-{b} has an endpoint outside the node set"
                )));
            };
            if i == j {
                return Err(SvaError::InvalidNetwork(format!("self-loop on {a}")));
            }
            if w == 0 {
                return Err(SvaError::InvalidNetwork(format!(
                    "edge {a}-{b} has zero weight"
                )));
            }
            net.add_weight(i, j, w);
        }
        Ok(net)
    }

    pub(crate) fn add_weight(&mut self, a: usize, b: usize, w: u32) {
        debug_assert!(a != b && a < self.nodes.len() && b < self.nodes.len());
        *self.edges.entry(edge_key(a, b)).or_insert(0) += w;
    }

    pub(crate) fn retain_edges<F: FnMut(&EdgeKey, &u32) -> bool>(&mut self, mut keep: F) {
        self.edges.retain(|k, w| keep(k, w));
    }

    pub(crate) fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn node(&self, idx: usize) -> &str {
        &self.nodes[idx]
    }

    /// Co-citation weight between two node indices, if linked.
    pub fn weight(&self, a: usize, b: usize) -> Option<u32> {
        self.edges.get(&edge_key(a, b)).copied()
    }

    pub fn weight_by_id(&self, a: &str, b: &str) -> Option<u32> {
        self.weight(self.index_of(a)?, self.index_of(b)?)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains_key(&edge_key(a, b))
    }

    /// Edges in ascending `(i, j)` order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeKey, u32)> + '_ {
        self.edges.iter().map(|(&k, &w)| (k, w))
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.values().map(|&w| u64::from(w)).sum()
    }

    /// Neighbour lists with weights, each sorted by neighbour index.
    pub fn adjacency(&self) -> Vec<Vec<(usize, u32)>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for (&(a, b), &w) in &self.edges {
            adj[a].push((b, w));
            adj[b].push((a, w));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Weighted degree of each node.
    pub fn strengths(&self) -> Vec<f64> {
        let mut s = vec![0.0; self.nodes.len()];
        for (&(a, b), &w) in &self.edges {
            s[a] += f64::from(w);
            s[b] += f64::from(w);
        }
        s
    }

    pub fn same_nodes(&self, other: &CoCitationNetwork) -> bool {
        self.nodes == other.nodes
    }
}
