//! Structural counts and predicates on EW and NEW tableaux.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shape::Family;
use crate::tableau::{row_mask, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureStats {
    pub all_one_columns: usize,
    /// Nonempty rows holding only 0s.
    pub all_zero_rows: usize,
    pub zero_containing_columns: usize,
    pub rows_containing_one: usize,
    pub is_top_justified: bool,
    pub is_domination_free: bool,
    /// Exactly one 0 in every row below the top row.
    pub is_zero_minimal: bool,
}

pub fn structure_stats(t: &Tableau) -> Result<StructureStats> {
    if !matches!(t.family(), Family::Ew | Family::New) {
        return Err(Error::WrongFamily {
            expected: "EW or NEW",
            got: t.family().tag(),
        });
    }
    let f = t.filling();
    let shape = t.shape();
    let (k, m) = (shape.num_rows(), shape.num_cols());
    Ok(StructureStats {
        all_one_columns: (0..m).filter(|&c| f.zeros_in_col(c) == 0).count(),
        all_zero_rows: (0..k)
            .filter(|&r| shape.row_len(r) > 0 && f.row_bits(r) == 0)
            .count(),
        zero_containing_columns: (0..m).filter(|&c| f.zeros_in_col(c) > 0).count(),
        rows_containing_one: (0..k).filter(|&r| f.row_bits(r) != 0).count(),
        is_top_justified: is_top_justified(t),
        is_domination_free: is_domination_free(t),
        is_zero_minimal: (1..k).all(|r| f.zeros_in_row(r) == 1),
    })
}

/// Row `lower` dominates row `upper` (which lies above it) when no column
/// has a 0 in `lower` and a 1 in `upper`.
pub fn dominates(t: &Tableau, lower: usize, upper: usize) -> bool {
    assert!(upper < lower, "the dominated row must lie above");
    let len = t.shape().row_len(lower);
    t.rows()[upper] & !t.rows()[lower] & row_mask(len) == 0
}

pub fn is_domination_free(t: &Tableau) -> bool {
    let k = t.shape().num_rows();
    (1..k).all(|lower| (0..lower).all(|upper| !dominates(t, lower, upper)))
}

/// No 1 has a 0 above it in its column.
pub fn is_top_justified(t: &Tableau) -> bool {
    t.rows().windows(2).all(|w| w[1] & !w[0] == 0)
}
