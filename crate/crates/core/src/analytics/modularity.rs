use crate::error::{Result, SvaError};
use crate::netbuild::CoCitationNetwork;

/// Weighted Newman modularity of `assignment` (cluster label per node index).
///
/// `Q = Σ_c [ w_in(c) / W − (d(c) / 2W)² ]`, where `W` is the total edge
/// weight, `w_in(c)` the weight inside cluster `c` and `d(c)` its summed
/// weighted degree.
pub fn modularity(network: &CoCitationNetwork, assignment: &[usize]) -> Result<f64> {
    if assignment.len() != network.node_count() {
        return Err(SvaError::PartitionMismatch {
            expected: network.node_count(),
            got: assignment.len(),
        });
    }
    let total = network.total_weight() as f64;
    if total == 0.0 {
        return Err(SvaError::ModularityUndefined);
    }
    let clusters = assignment.iter().max().map_or(0, |m| m + 1);
    let mut inside = vec![0.0; clusters];
    let mut degree = vec![0.0; clusters];
    for ((a, b), w) in network.edges() {
        let w = f64::from(w);
        let (ca, cb) = (assignment[a], assignment[b]);
        degree[ca] += w;
        degree[cb] += w;
        if ca == cb {
            inside[ca] += w;
        }
    }
    Ok(inside
        .iter()
        .zip(&degree)
        .map(|(&win, &d)| win / total - (d / (2.0 * total)).powi(2))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> CoCitationNetwork {
        CoCitationNetwork::from_edges(
            "t",
            ["a", "b", "c", "d", "e", "f"],
            &[
                ("a", "b", 1),
                ("b", "c", 1),
                ("a", "c", 1),
                ("d", "e", 1),
                ("e", "f", 1),
                ("d", "f", 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_cluster_is_zero() {
        let q = modularity(&two_triangles(), &[0; 6]).unwrap();
        assert_eq!(q, 0.0);
    }

    #[test]
    fn natural_split_of_two_triangles() {
        let q = modularity(&two_triangles(), &[0, 0, 0, 1, 1, 1]).unwrap();
        assert!((q - 0.5).abs() < 1e-15);
    }

    #[test]
    fn singletons_of_two_triangles() {
        let q = modularity(&two_triangles(), &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!((q + 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn edgeless_network_is_undefined() {
        let net = CoCitationNetwork::with_nodes("t", ["a", "b"]);
        assert_eq!(
            modularity(&net, &[0, 1]).unwrap_err(),
            SvaError::ModularityUndefined
        );
    }

    #[test]
    fn assignment_length_checked() {
        assert!(modularity(&two_triangles(), &[0, 0]).is_err());
    }
}
