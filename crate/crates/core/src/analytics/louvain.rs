//! Louvain modularity optimisation.
//!
//! Alternates local moving (each node joins the neighbouring cluster with the
//! largest modularity gain) with aggregation of clusters into super-nodes,
//! until a level produces no move. Nodes are visited in ascending index
//! order, which is ascending id order; a seed switches to a shuffled order
//! that is fixed per seed.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{modularity, Partition};
use crate::netbuild::CoCitationNetwork;

/// Gains below this are treated as no improvement.
const MIN_GAIN: f64 = 1e-12;
const MAX_SWEEPS: usize = 1_000;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LouvainConfig {
    /// `None` sweeps in ascending node order; `Some(seed)` shuffles it.
    pub seed: Option<u64>,
}

/// Aggregated graph of one Louvain level. Self-loop weight is stored apart
/// from the neighbour lists and counts twice towards a node's strength.
struct Level {
    adj: Vec<Vec<(usize, f64)>>,
    self_loops: Vec<f64>,
}

impl Level {
    fn from_network(net: &CoCitationNetwork) -> Self {
        let adj = net
            .adjacency()
            .into_iter()
            .map(|l| l.into_iter().map(|(j, w)| (j, f64::from(w))).collect())
            .collect();
        Level {
            adj,
            self_loops: vec![0.0; net.node_count()],
        }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn strengths(&self) -> Vec<f64> {
        self.adj
            .iter()
            .zip(&self.self_loops)
            .map(|(l, s)| l.iter().map(|(_, w)| w).sum::<f64>() + 2.0 * s)
            .collect()
    }

    /// Runs local moving; returns the community of every node and whether
    /// any node changed community.
    fn local_moves(&self, rng: &mut Option<ChaCha8Rng>) -> (Vec<usize>, bool) {
        let n = self.len();
        let strength = self.strengths();
        let m2: f64 = strength.iter().sum();
        let mut community: Vec<usize> = (0..n).collect();
        let mut totals = strength.clone();
        let mut order: Vec<usize> = (0..n).collect();
        let mut moved_any = false;
        let mut links: BTreeMap<usize, f64> = BTreeMap::new();

        for _ in 0..MAX_SWEEPS {
            if let Some(rng) = rng.as_mut() {
                order.shuffle(rng);
            }
            let mut moved = false;
            for &i in &order {
                let own = community[i];
                links.clear();
                for &(j, w) in &self.adj[i] {
                    *links.entry(community[j]).or_insert(0.0) += w;
                }
                totals[own] -= strength[i];
                let gain = |c: usize, k_in: f64| k_in - totals[c] * strength[i] / m2;
                let mut best = own;
                let mut best_gain = gain(own, links.get(&own).copied().unwrap_or(0.0));
                for (&c, &k_in) in &links {
                    let g = gain(c, k_in);
                    if g > best_gain + MIN_GAIN {
                        best = c;
                        best_gain = g;
                    }
                }
                totals[best] += strength[i];
                if best != own {
                    community[i] = best;
                    moved = true;
                    moved_any = true;
                }
            }
            if !moved {
                break;
            }
        }
        (community, moved_any)
    }

    fn aggregate(&self, community: &[usize]) -> (Level, Vec<usize>) {
        let mut relabel = BTreeMap::new();
        let compact: Vec<usize> = community
            .iter()
            .map(|&c| {
                let next = relabel.len();
                *relabel.entry(c).or_insert(next)
            })
            .collect();
        let k = relabel.len();
        let mut self_loops = vec![0.0; k];
        let mut between: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for (i, list) in self.adj.iter().enumerate() {
            self_loops[compact[i]] += self.self_loops[i];
            for &(j, w) in list {
                if j <= i {
                    continue;
                }
                let (ci, cj) = (compact[i], compact[j]);
                if ci == cj {
                    self_loops[ci] += w;
                } else {
                    *between.entry((ci.min(cj), ci.max(cj))).or_insert(0.0) += w;
                }
            }
        }
        let mut adj = vec![Vec::new(); k];
        for (&(a, b), &w) in &between {
            adj[a].push((b, w));
            adj[b].push((a, w));
        }
        (Level { adj, self_loops }, compact)
    }
}

/// Louvain with the default ascending sweep order.
pub fn louvain(network: &CoCitationNetwork) -> Partition {
    louvain_with(network, &LouvainConfig::default())
}

/// Louvain community detection on the weighted network.
///
/// Isolated nodes end up as singleton clusters. An edgeless network yields
/// all singletons with `Q` reported as 0.
pub fn louvain_with(network: &CoCitationNetwork, config: &LouvainConfig) -> Partition {
    let n = network.node_count();
    if network.edge_count() == 0 {
        log::warn!(
            "network `{}` has no edges; modularity reported as 0",
            network.label()
        );
        return Partition::from_assignment((0..n).collect()).with_q(0.0);
    }
    let mut rng = config.seed.map(ChaCha8Rng::seed_from_u64);
    let mut membership: Vec<usize> = (0..n).collect();
    let mut level = Level::from_network(network);
    loop {
        let (community, moved) = level.local_moves(&mut rng);
        if !moved {
            break;
        }
        let (next, compact) = level.aggregate(&community);
        for m in &mut membership {
            *m = compact[*m];
        }
        level = next;
    }
    let partition = Partition::from_assignment(membership);
    let q = modularity(network, partition.assignment()).expect("network has edges");
    partition.with_q(q)
}
