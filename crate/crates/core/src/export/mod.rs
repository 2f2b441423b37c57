//! Serialized views of networks and score tables.

mod graph;
mod table;

pub use graph::{write_dot, write_graphml, EdgeClass, GraphAnnotations};
pub use table::{format_value, pseudo_table, score_table, sweep_table, SweepRow, SCORE_COLUMNS};
