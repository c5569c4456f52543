//! EW-, NEW-, Le- and tree-like tableaux on Ferrers shapes, their
//! bijections to permutations, and the Abelian sandpile model on Ferrers
//! graphs, with an exhaustive verification harness for the counting results.

pub mod bijections;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod pattern;
pub mod perm;
pub mod sandpile;
pub mod shape;
pub mod stats;
pub mod structure;
pub mod tableau;
pub mod transform;
pub mod verify;

pub use bijections::{convert, phi_le, phi_le_inverse, psi, psi_inverse, Route, Via};
pub use enumerate::{enumerate, enumerate_size, Tableaux};
pub use error::{Error, Result};
pub use format::{from_json, parse, parse_any, render, serialize, serialize_line, to_json};
pub use graph::{ferrers_graph, FerrersGraph};
pub use pattern::{contains, contains_pattern, Pattern};
pub use perm::{all_permutations, factorial, Permutation};
pub use sandpile::{Orientation, SandpileConfig};
pub use shape::{
    border_labels, shapes_of_size, shapes_with_cells, BorderLabeling, Family, FerrersShape, Line,
    LineKind,
};
pub use stats::{stats, StatRecord};
pub use structure::{structure_stats, StructureStats};
pub use tableau::{reflect_complement, reflect_complement_inverse, validate, Filling, Tableau};
pub use transform::{
    cyclic_down_shift, cyclic_shift, cyclic_up_shift, desexc, desexc_inverse, ShiftDirection,
};
pub use verify::{run_suite, VerificationReport};
