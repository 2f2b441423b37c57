//! Time-sliced co-citation network construction.

mod augment;
mod build;
mod config;
mod network;
mod select;

pub use augment::{augment, NodePair, NovelLinkReport};
pub use build::{build_baseline, build_cocitation};
pub use config::{WindowConfig, YearWindow};
pub use network::{CoCitationNetwork, EdgeKey};
pub use select::{scaled_g_index, select_nodes, window_citation_counts, RankedNodes};
