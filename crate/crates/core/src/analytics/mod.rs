//! Graph algorithms behind the structural variation metrics.

mod betweenness;
mod louvain;
mod modularity;

pub use betweenness::{betweenness, brandes, CentralityMap};
pub use louvain::{louvain, louvain_with, LouvainConfig};
pub use modularity::modularity;

use crate::error::Result;
use crate::netbuild::CoCitationNetwork;

/// Assignment of network nodes (by index) to clusters `0..K`.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    assignment: Vec<usize>,
    k: usize,
    q: Option<f64>,
}

impl Partition {
    /// Relabels `labels` so clusters are numbered `0..K` in order of first
    /// appearance. The modularity is left unevaluated.
    pub fn from_assignment(labels: Vec<usize>) -> Self {
        let mut map = std::collections::HashMap::new();
        let assignment: Vec<usize> = labels
            .into_iter()
            .map(|l| {
                let next = map.len();
                *map.entry(l).or_insert(next)
            })
            .collect();
        Partition {
            k: map.len(),
            assignment,
            q: None,
        }
    }

    /// Relabels `labels` and records their modularity on `network`.
    pub fn evaluate(network: &CoCitationNetwork, labels: Vec<usize>) -> Result<Self> {
        let mut p = Partition::from_assignment(labels);
        p.q = Some(modularity(network, &p.assignment)?);
        Ok(p)
    }

    pub(crate) fn with_q(mut self, q: f64) -> Self {
        self.q = Some(q);
        self
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn cluster_of(&self, node: usize) -> usize {
        self.assignment[node]
    }

    /// Number of non-empty clusters.
    pub fn cluster_count(&self) -> usize {
        self.k
    }

    /// Modularity on the source network, when it was evaluated.
    pub fn q(&self) -> Option<f64> {
        self.q
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.assignment {
            sizes[c] += 1;
        }
        sizes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_compacted_in_first_seen_order() {
        let p = Partition::from_assignment(vec![7, 7, 3, 9, 3]);
        assert_eq!(p.assignment(), [0, 0, 1, 2, 1]);
        assert_eq!(p.cluster_count(), 3);
        assert_eq!(p.cluster_sizes(), vec![2, 2, 1]);
        assert_eq!(p.q(), None);
    }
}
