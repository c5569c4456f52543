//! Orientations, the sandpile model, and spanning trees on Ferrers graphs.

pub mod asm;
pub mod orientation;
pub mod spanning;

pub use asm::{
    add_per_column, add_sink_neighbors, config_of, enumerate_minimal_recurrent, is_recurrent,
    stabilize, stabilize_with, topple_in_order, toppling_order_check, SandpileConfig, Schedule,
    Stabilization,
};
pub use orientation::{
    arcs_descend_blocks, find_directed_cycle, longest_directed_path, orientation_of, tableau_of,
    EdgeDirection, Orientation,
};
pub use spanning::{
    external_activity, is_compatible_order, paths_zigzag, row_major_order, spanning_tree_of,
    SpanningSubgraph,
};
