//! The structural variation metrics of a single citing paper.

use crate::analytics::{betweenness, modularity, CentralityMap, Partition};
use crate::error::{Result, SvaError};
use crate::netbuild::{CoCitationNetwork, NovelLinkReport};

/// Additive smoothing applied to betweenness scores before the divergence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothingConfig {
    pub epsilon: f64,
}

impl SmoothingConfig {
    pub const DEFAULT_EPSILON: f64 = 1e-9;

    pub fn new(epsilon: f64) -> Result<Self> {
        let s = SmoothingConfig { epsilon };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(SvaError::config("epsilon", "must be a positive number"));
        }
        Ok(())
    }
}

impl Default for SmoothingConfig {
    fn default() -> Self {
        SmoothingConfig {
            epsilon: Self::DEFAULT_EPSILON,
        }
    }
}

/// Weight given to each between-cluster link by [`linkage`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LinkWeighting {
    /// Same weight for every between-cluster link.
    Constant(f64),
    /// Weight equal to the link's co-citation count.
    CoCitation,
}

impl Default for LinkWeighting {
    fn default() -> Self {
        LinkWeighting::Constant(1.0)
    }
}

fn check_cover(network: &CoCitationNetwork, partition: &Partition) -> Result<()> {
    if partition.len() != network.node_count() {
        return Err(SvaError::PartitionMismatch {
            expected: network.node_count(),
            got: partition.len(),
        });
    }
    Ok(())
}

/// Modularity change rate in percent, both networks scored against the
/// baseline partition. Negative when the paper strengthens clusters.
pub fn delta_m(
    baseline: &CoCitationNetwork,
    augmented: &CoCitationNetwork,
    partition: &Partition,
) -> Result<f64> {
    let q_s = modularity(baseline, partition.assignment())?;
    let q_a = modularity(augmented, partition.assignment())?;
    delta_m_from(q_s, q_a)
}

pub(crate) fn delta_m_from(q_s: f64, q_a: f64) -> Result<f64> {
    if q_s == 0.0 {
        return Err(SvaError::BaselineModularityZero);
    }
    Ok(100.0 * (q_s - q_a) / q_s)
}

/// Between-cluster link mass divided by the number of clusters. Each
/// undirected between-cluster link is counted for both ordered pairs.
pub fn linkage(
    network: &CoCitationNetwork,
    partition: &Partition,
    weighting: LinkWeighting,
) -> Result<f64> {
    check_cover(network, partition)?;
    let k = partition.cluster_count();
    if k == 0 {
        return Ok(0.0);
    }
    let mass: f64 = network
        .edges()
        .filter(|((a, b), _)| partition.cluster_of(*a) != partition.cluster_of(*b))
        .map(|(_, w)| match weighting {
            LinkWeighting::Constant(eps) => 2.0 * eps,
            LinkWeighting::CoCitation => 2.0 * f64::from(w),
        })
        .sum();
    Ok(mass / k as f64)
}

/// Percent change in linkage, scaled by the share `cr / nr` of the paper's
/// references that take part in novel between-cluster links.
pub fn cluster_linkage(
    baseline: &CoCitationNetwork,
    augmented: &CoCitationNetwork,
    partition: &Partition,
    cr: usize,
    nr: usize,
    weighting: LinkWeighting,
) -> Result<f64> {
    let l_s = linkage(baseline, partition, weighting)?;
    let l_a = linkage(augmented, partition, weighting)?;
    cluster_linkage_from(l_s, l_a, cr, nr)
}

pub(crate) fn cluster_linkage_from(l_s: f64, l_a: f64, cr: usize, nr: usize) -> Result<f64> {
    if l_s == 0.0 {
        return Err(SvaError::BaselineLinkageZero);
    }
    if cr > nr {
        return Err(SvaError::config("cr", "cannot exceed nr"));
    }
    // nr == 0 forces cr == 0 and a zero weight.
    let share = if nr == 0 { 0.0 } else { cr as f64 / nr as f64 };
    Ok((l_a - l_s) / l_s * 100.0 * share)
}

/// KL divergence of the smoothed baseline betweenness distribution from the
/// augmented one.
pub fn centrality_divergence(
    baseline: &CoCitationNetwork,
    augmented: &CoCitationNetwork,
    smoothing: SmoothingConfig,
) -> Result<f64> {
    if !baseline.same_nodes(augmented) {
        return Err(SvaError::InvalidNetwork(
            "centrality divergence needs a common node set".into(),
        ));
    }
    divergence_of(&betweenness(baseline), &betweenness(augmented), smoothing)
}

/// Divergence between two precomputed centrality maps over the same nodes.
pub fn divergence_of(
    baseline: &CentralityMap,
    augmented: &CentralityMap,
    smoothing: SmoothingConfig,
) -> Result<f64> {
    smoothing.validate()?;
    if baseline.len() != augmented.len() {
        return Err(SvaError::InvalidNetwork(
            "centrality maps differ in length".into(),
        ));
    }
    let eps = smoothing.epsilon;
    let sum_p: f64 = baseline.scores().iter().map(|s| s + eps).sum();
    let sum_q: f64 = augmented.scores().iter().map(|s| s + eps).sum();
    let kl: f64 = baseline
        .scores()
        .iter()
        .zip(augmented.scores())
        .map(|(&b, &a)| {
            let p = (b + eps) / sum_p;
            let q = (a + eps) / sum_q;
            p * (p / q).ln()
        })
        .sum();
    // Rounding can leave a tiny negative residue on near-identical inputs.
    Ok(kl.max(0.0))
}

/// Share of within-cluster (alpha) and between-cluster (beta) links of the
/// augmented network that are novel links of this paper. Zero denominators
/// give 0.
pub fn alpha_beta(
    report: &NovelLinkReport,
    augmented: &CoCitationNetwork,
    partition: &Partition,
) -> Result<(f64, f64)> {
    check_cover(augmented, partition)?;
    let (mut within, mut between) = (0usize, 0usize);
    for ((a, b), _) in augmented.edges() {
        if partition.cluster_of(a) == partition.cluster_of(b) {
            within += 1;
        } else {
            between += 1;
        }
    }
    let ratio = |num: usize, den: usize| {
        if den == 0 {
            0.0
        } else {
            num as f64 / den as f64
        }
    };
    Ok((
        ratio(report.novel_within.len(), within),
        ratio(report.novel_between.len(), between),
    ))
}

/// Entropy of a paper's references over clusters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyScore {
    /// Natural-log entropy.
    pub value: f64,
    /// References that are network nodes (the denominator).
    pub counted: usize,
    /// References outside the network.
    pub excluded: usize,
}

impl EntropyScore {
    /// No reference of the paper is a network node.
    pub fn is_degenerate(&self) -> bool {
        self.counted == 0
    }
}

/// Entropy (natural log) of the cluster distribution of the paper's
/// references that are nodes of `network`.
pub fn entropy<S: AsRef<str>>(
    references: &[S],
    network: &CoCitationNetwork,
    partition: &Partition,
) -> Result<EntropyScore> {
    check_cover(network, partition)?;
    let mut per_cluster = vec![0usize; partition.cluster_count()];
    let mut seen = std::collections::HashSet::new();
    let mut excluded = 0;
    for r in references {
        let r = r.as_ref();
        if !seen.insert(r) {
            continue;
        }
        match network.index_of(r) {
            Some(i) => per_cluster[partition.cluster_of(i)] += 1,
            None => excluded += 1,
        }
    }
    let counted: usize = per_cluster.iter().sum();
    Ok(EntropyScore {
        value: shannon_entropy(&per_cluster),
        counted,
        excluded,
    })
}

/// `-Σ p ln p` over count proportions, with `0 ln 0 = 0`.
pub fn shannon_entropy(counts: &[usize]) -> f64 {
    let total: usize = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let total = total as f64;
    let h: f64 = counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total;
            -p * p.ln()
        })
        .sum();
    h.max(0.0)
}

/// Harmonic mean of the magnitudes of the three core metrics:
/// `3abc / (ab + ac + bc)` on `|ΔM|`, `|CL|`, `|C_KL|`.
///
/// Returns `Some(0.0)` whenever any input is zero. See [`harmonic_signed`]
/// for the same formula on signed inputs.
pub fn harmonic(delta_m: f64, cl: f64, c_kl: f64) -> Option<f64> {
    harmonic_signed(delta_m.abs(), cl.abs(), c_kl.abs())
}

/// `3abc / (ab + ac + bc)` on the signed inputs. `None` when the
/// denominator vanishes and the numerator does not.
pub fn harmonic_signed(delta_m: f64, cl: f64, c_kl: f64) -> Option<f64> {
    let num = 3.0 * delta_m * cl * c_kl;
    if num == 0.0 {
        return Some(0.0);
    }
    let den = delta_m * cl + delta_m * c_kl + cl * c_kl;
    if den == 0.0 {
        return None;
    }
    Some(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::PaperRecord;
    use crate::netbuild::augment;
    use approx::assert_abs_diff_eq;

    fn two_triangles(extra: &[(&'static str, &'static str, u32)]) -> CoCitationNetwork {
        let mut edges = vec![
            ("a", "b", 1),
            ("b", "c", 1),
            ("a", "c", 1),
            ("d", "e", 1),
            ("e", "f", 1),
            ("d", "f", 1),
        ];
        edges.extend_from_slice(extra);
        CoCitationNetwork::from_edges("t", ["a", "b", "c", "d", "e", "f"], &edges).unwrap()
    }

    fn halves() -> Partition {
        Partition::from_assignment(vec![0, 0, 0, 1, 1, 1])
    }

    #[test]
    fn delta_m_identity() {
        let g = two_triangles(&[]);
        assert_eq!(delta_m(&g, &g, &halves()).unwrap(), 0.0);
    }

    #[test]
    fn delta_m_bridge() {
        let gs = two_triangles(&[]);
        let ga = two_triangles(&[("c", "d", 1)]);
        let q_a = 2.0 * (3.0 / 7.0 - 0.25);
        assert_abs_diff_eq!(
            modularity(&ga, halves().assignment()).unwrap(),
            q_a,
            epsilon = 1e-12
        );
        let dm = delta_m(&gs, &ga, &halves()).unwrap();
        assert_abs_diff_eq!(dm, 100.0 * (0.5 - q_a) / 0.5, epsilon = 1e-9);
        assert_abs_diff_eq!(dm, 28.571428, epsilon = 1e-5);
    }

    #[test]
    fn delta_m_negative_for_within_reinforcement() {
        let gs = two_triangles(&[("c", "d", 1)]);
        let ga = two_triangles(&[("c", "d", 1), ("a", "b", 1), ("e", "f", 1)]);
        // Q_s = 2 (3/7 - 1/4), Q_a = 2 (4/9 - 1/4)
        let (q_s, q_a) = (2.0 * (3.0 / 7.0 - 0.25), 2.0 * (4.0 / 9.0 - 0.25));
        let dm = delta_m(&gs, &ga, &halves()).unwrap();
        assert_abs_diff_eq!(dm, 100.0 * (q_s - q_a) / q_s, epsilon = 1e-9);
        assert!(dm < 0.0);
    }

    #[test]
    fn delta_m_zero_baseline_is_error() {
        let g = two_triangles(&[]);
        let one = Partition::from_assignment(vec![0; 6]);
        assert_eq!(
            delta_m(&g, &g, &one).unwrap_err(),
            SvaError::BaselineModularityZero
        );
    }

    #[test]
    fn linkage_counts_ordered_bridge_pairs() {
        assert_eq!(
            linkage(&two_triangles(&[]), &halves(), LinkWeighting::default()).unwrap(),
            0.0
        );
        let bridged = two_triangles(&[("c", "d", 1)]);
        assert_eq!(
            linkage(&bridged, &halves(), LinkWeighting::default()).unwrap(),
            1.0
        );
        let three =
            CoCitationNetwork::from_edges("t", ["a", "b", "c"], &[("a", "b", 1), ("b", "c", 1)])
                .unwrap();
        let p = Partition::from_assignment(vec![0, 1, 2]);
        assert_abs_diff_eq!(
            linkage(&three, &p, LinkWeighting::default()).unwrap(),
            4.0 / 3.0,
            epsilon = 1e-15
        );
        let heavy = two_triangles(&[("c", "d", 3)]);
        assert_eq!(
            linkage(&heavy, &halves(), LinkWeighting::CoCitation).unwrap(),
            3.0
        );
    }

    #[test]
    fn cluster_linkage_examples() {
        let gs = two_triangles(&[("c", "d", 1)]);
        let ga = two_triangles(&[("c", "d", 1), ("a", "f", 1)]);
        let w = LinkWeighting::default();
        assert_eq!(cluster_linkage(&gs, &gs, &halves(), 0, 3, w).unwrap(), 0.0);
        assert_eq!(cluster_linkage(&gs, &ga, &halves(), 2, 4, w).unwrap(), 50.0);
        assert_eq!(cluster_linkage(&gs, &ga, &halves(), 0, 4, w).unwrap(), 0.0);
        let plain = two_triangles(&[]);
        assert_eq!(
            cluster_linkage(&plain, &ga, &halves(), 2, 4, w).unwrap_err(),
            SvaError::BaselineLinkageZero
        );
    }

    #[test]
    fn divergence_identity_and_path_fixture() {
        let s = SmoothingConfig::default();
        let path =
            CoCitationNetwork::from_edges("p", ["a", "b", "c"], &[("a", "b", 1), ("b", "c", 1)])
                .unwrap();
        assert_eq!(centrality_divergence(&path, &path, s).unwrap(), 0.0);
        let tri = CoCitationNetwork::from_edges(
            "p",
            ["a", "b", "c"],
            &[("a", "b", 1), ("b", "c", 1), ("a", "c", 1)],
        )
        .unwrap();
        let kl = centrality_divergence(&path, &tri, s).unwrap();
        assert_abs_diff_eq!(kl, 3f64.ln(), epsilon = 1e-3);
    }

    #[test]
    fn divergence_rejects_mismatched_nodes() {
        let a = CoCitationNetwork::with_nodes("a", ["a", "b"]);
        let b = CoCitationNetwork::with_nodes("b", ["a", "c"]);
        assert!(centrality_divergence(&a, &b, SmoothingConfig::default()).is_err());
        assert!(SmoothingConfig::new(0.0).is_err());
    }

    #[test]
    fn alpha_beta_counts() {
        let gs = two_triangles(&[]);
        let p = halves();
        let (ga, rep) = augment(&gs, &PaperRecord::new("x", 2000, ["a", "b"]), &p).unwrap();
        assert_eq!(alpha_beta(&rep, &ga, &p).unwrap(), (0.0, 0.0));

        // Between links a-d, b-e only, both novel.
        let (ga, rep) = augment(&gs, &PaperRecord::new("x", 2000, ["a", "d"]), &p).unwrap();
        let (ga2, rep2) = augment(&ga, &PaperRecord::new("y", 2000, ["b", "e"]), &p).unwrap();
        let mut merged = rep.clone();
        merged
            .novel_between
            .extend(rep2.novel_between.iter().cloned());
        assert_eq!(alpha_beta(&merged, &ga2, &p).unwrap().1, 1.0);

        // Four within links, one of them novel.
        let base = CoCitationNetwork::from_edges(
            "f",
            ["a", "b", "c", "d"],
            &[("a", "b", 1), ("b", "c", 1), ("a", "c", 1)],
        )
        .unwrap();
        let one = Partition::from_assignment(vec![0; 4]);
        let (ga, rep) = augment(&base, &PaperRecord::new("z", 2000, ["c", "d"]), &one).unwrap();
        assert_eq!(ga.edge_count(), 4);
        assert_eq!(alpha_beta(&rep, &ga, &one).unwrap(), (0.25, 0.0));
    }

    #[test]
    fn entropy_examples() {
        let g = two_triangles(&[]);
        let p = halves();
        let e = entropy(&["a", "b", "c"], &g, &p).unwrap();
        assert_eq!(e.value, 0.0);
        let e = entropy(&["a", "d", "zzz"], &g, &p).unwrap();
        assert_abs_diff_eq!(e.value, 2f64.ln(), epsilon = 1e-12);
        assert_eq!((e.counted, e.excluded), (2, 1));
        let thirds = Partition::from_assignment(vec![0, 0, 1, 1, 2, 2]);
        let e = entropy(&["a", "c", "e"], &g, &thirds).unwrap();
        assert_abs_diff_eq!(e.value, 3f64.ln(), epsilon = 1e-12);
        let e = entropy(&["q"], &g, &p).unwrap();
        assert!(e.is_degenerate());
        assert_eq!(e.value, 0.0);
    }

    #[test]
    fn harmonic_examples() {
        assert_abs_diff_eq!(harmonic(64.69, 145.71, 0.58).unwrap(), 1.72, epsilon = 0.01);
        assert_abs_diff_eq!(harmonic(4.18, -51.89, 0.01).unwrap(), 0.03, epsilon = 0.01);
        assert_eq!(harmonic(0.0, 36.42, 0.25), Some(0.0));
        assert_eq!(harmonic(0.0, 0.0, 0.0), Some(0.0));
    }

    #[test]
    fn harmonic_signed_differs_on_negative_cl() {
        let signed = harmonic_signed(8.25, -7.01, 0.35).unwrap();
        let magnitude = harmonic(8.25, -7.01, 0.35).unwrap();
        assert!((signed - 1.0579).abs() < 1e-3);
        assert!((magnitude - 0.9612).abs() < 1e-3);
        // ab + ac + bc = -0.5 + 1 - 0.5 = 0
        assert_eq!(harmonic_signed(1.0, -0.5, 1.0), None);
    }
}
