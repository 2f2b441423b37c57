use std::fmt;

/// The seven per-paper metrics, in table column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    DeltaM,
    ClusterLinkage,
    CentralityDivergence,
    Harmonic,
    Alpha,
    Beta,
    Entropy,
}

impl Metric {
    pub const ALL: [Metric; 7] = [
        Metric::DeltaM,
        Metric::ClusterLinkage,
        Metric::CentralityDivergence,
        Metric::Harmonic,
        Metric::Alpha,
        Metric::Beta,
        Metric::Entropy,
    ];

    /// Column name used in output tables.
    pub fn column(self) -> &'static str {
        match self {
            Metric::DeltaM => "delta_m",
            Metric::ClusterLinkage => "cl",
            Metric::CentralityDivergence => "c_kl",
            Metric::Harmonic => "h",
            Metric::Alpha => "alpha",
            Metric::Beta => "beta",
            Metric::Entropy => "entropy",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.column())
    }
}

/// Descending competition ranks: tied values share the smallest rank and
/// the next distinct value skips ahead (1, 2, 2, 4). Missing values all
/// share the rank after the last defined one.
pub fn competition_ranks(values: &[Option<f64>]) -> Vec<usize> {
    let mut defined: Vec<f64> = values.iter().flatten().copied().collect();
    defined.sort_by(|a, b| b.total_cmp(a));
    let missing_rank = defined.len() + 1;
    values
        .iter()
        .map(|v| match v {
            Some(x) => 1 + defined.partition_point(|d| d.total_cmp(x).is_gt()),
            None => missing_rank,
        })
        .collect()
}
