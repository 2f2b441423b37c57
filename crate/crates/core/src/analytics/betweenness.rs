//! Shortest-path betweenness by Brandes' accumulation.
//!
//! Edges count as unit length whatever their co-citation weight. Scores are
//! unnormalised and count each unordered endpoint pair once.

use std::collections::VecDeque;
use std::ops::{Add, Div, Mul};

use num_traits::{One, Zero};

use crate::netbuild::CoCitationNetwork;

/// Betweenness score per node index.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityMap {
    scores: Vec<f64>,
}

impl CentralityMap {
    pub fn new(scores: Vec<f64>) -> Self {
        CentralityMap { scores }
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn get(&self, node: usize) -> f64 {
        self.scores[node]
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

pub fn betweenness(network: &CoCitationNetwork) -> CentralityMap {
    let adj: Vec<Vec<usize>> = network
        .adjacency()
        .into_iter()
        .map(|l| l.into_iter().map(|(j, _)| j).collect())
        .collect();
    CentralityMap::new(brandes::<f64>(&adj))
}

/// Brandes' algorithm over an undirected adjacency list, generic in the
/// number type so exact rationals can be used for verification.
pub fn brandes<T>(adjacency: &[Vec<usize>]) -> Vec<T>
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    let n = adjacency.len();
    let mut centrality = vec![T::zero(); n];
    let mut stack = Vec::with_capacity(n);
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sigma = vec![T::zero(); n];
    let mut dist: Vec<Option<usize>> = vec![None; n];
    let mut delta = vec![T::zero(); n];
    let mut queue = VecDeque::new();

    for s in 0..n {
        stack.clear();
        for v in 0..n {
            preds[v].clear();
            sigma[v] = T::zero();
            dist[v] = None;
            delta[v] = T::zero();
        }
        sigma[s] = T::one();
        dist[s] = Some(0);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            let dv = dist[v].expect("queued nodes have a distance");
            for &w in &adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
                if dist[w] == Some(dv + 1) {
                    sigma[w] = sigma[w].clone() + sigma[v].clone();
                    preds[w].push(v);
                }
            }
        }
        while let Some(w) = stack.pop() {
            let share = T::one() + delta[w].clone();
            for &v in &preds[w] {
                let c = sigma[v].clone() / sigma[w].clone() * share.clone();
                delta[v] = delta[v].clone() + c;
            }
            if w != s {
                centrality[w] = centrality[w].clone() + delta[w].clone();
            }
        }
    }
    let two = T::one() + T::one();
    centrality.into_iter().map(|c| c / two.clone()).collect()
}
