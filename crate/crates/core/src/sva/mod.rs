//! Per-paper structural variation scores and cohort ranking.

mod cohort;
mod metrics;
mod rank;

pub use cohort::{
    score_cohort, score_cohort_with, Baseline, CohortAnalysis, ScoringOptions, SvaScores,
};
pub use metrics::{
    alpha_beta, centrality_divergence, cluster_linkage, delta_m, divergence_of, entropy, harmonic,
    harmonic_signed, linkage, shannon_entropy, EntropyScore, LinkWeighting, SmoothingConfig,
};
pub use rank::{competition_ranks, Metric};
