//! Time-sliced document co-citation networks and structural variation
//! scoring of citing papers.
//!
//! A typical run loads a [`Corpus`], picks a [`WindowConfig`] for the target
//! year, and calls [`score_cohort`] to measure how each paper of that year
//! perturbs the baseline network built from the preceding years.

pub mod analytics;
pub mod corpus;
pub mod error;
pub mod export;
pub mod netbuild;
pub mod pseudopaper;
pub mod sva;

pub use analytics::{betweenness, louvain, modularity, CentralityMap, Partition};
pub use corpus::{Corpus, PaperRecord, ParseReport};
pub use error::{Result, SvaError};
pub use netbuild::{CoCitationNetwork, NovelLinkReport, WindowConfig, YearWindow};
pub use pseudopaper::{score_pseudopaper, synthesize, PseudopaperSpec, RewriteMode};
pub use sva::{score_cohort, score_cohort_with, CohortAnalysis, Metric, ScoringOptions, SvaScores};
