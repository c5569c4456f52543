//! Maps between tableaux and permutations.

pub mod convert;
pub mod le_ew;
pub mod new_le;
pub mod paths;
pub mod phi;
pub mod psi;
pub mod tree;

pub use convert::{convert, Route};
pub use le_ew::{
    ew_to_le, ew_to_le_composed, ew_to_le_via, le_to_ew, le_to_ew_composed, le_to_ew_via, MHelper,
    Via,
};
pub use new_le::{le_to_new_direct, new_le, new_le_inverse, new_le_inverse_via};
pub use paths::{trace, Heading, PathTrace, Step};
pub use phi::{phi_le, phi_le_inverse};
pub use psi::{psi, psi_inverse, psi_with_passes, Pass};
pub use tree::{
    compare_tree_maps, le_to_tree, tree_from_perm, tree_to_ew_m, tree_to_ew_via_le,
    tree_to_ew_via_le_composed, tree_to_le, tree_to_le_by_rewriting, tree_to_perm, TreeComparison,
};
