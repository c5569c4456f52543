//! Exhaustive generation of the legal fillings of a shape.
//!
//! Rows are chosen top to bottom by depth-first search, each row pruned
//! against the rows above it. Within a row, candidates run in
//! lexicographic order of the row read left to right, so the stream is in
//! row-major lexicographic order of the cell bits.

use crate::shape::{shapes_of_size, Family, FerrersShape};
use crate::tableau::{
    le_condition_failures, row_mask, rows_comparable, tree_dot_failures, Filling, Tableau,
};

/// Lazy stream of all tableaux of one family and shape.
#[derive(Debug, Clone)]
pub struct Tableaux {
    family: Family,
    shape: FerrersShape,
    rows: Vec<u64>,
    cursor: Vec<u128>,
    done: bool,
}

/// All tableaux of `family` on `shape`. Shapes the family does not allow
/// give an empty stream.
pub fn enumerate(shape: &FerrersShape, family: Family) -> Tableaux {
    Tableaux {
        family,
        shape: shape.clone(),
        rows: Vec::with_capacity(shape.num_rows()),
        cursor: vec![0; shape.num_rows() + 1],
        done: shape.check_family(family).is_err(),
    }
}

/// All tableaux of `family` and size `n`, shape by shape.
pub fn enumerate_size(n: usize, family: Family) -> impl Iterator<Item = Tableau> {
    shapes_of_size(n, family)
        .into_iter()
        .flat_map(move |shape| enumerate(&shape, family))
}

/// The column bits of every column whose bottom cell lies in row `r`.
fn columns_ending_at(shape: &FerrersShape, r: usize) -> u64 {
    let below = if r + 1 < shape.num_rows() {
        shape.row_len(r + 1)
    } else {
        0
    };
    row_mask(shape.row_len(r)) & !row_mask(below)
}

fn reverse_bits(k: u128, len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        (k as u64).reverse_bits() >> (64 - len)
    }
}

impl Tableaux {
    fn accepts(&self, r: usize, x: u64) -> bool {
        let len = self.shape.row_len(r);
        let full = row_mask(len);
        let above = self.rows.iter().fold(0, |acc, &y| acc | y);
        let comparable = || {
            self.rows
                .iter()
                .all(|&u| rows_comparable(u, x, len).is_none())
        };
        let columns_closed = || {
            let ending = columns_ending_at(&self.shape, r);
            (above | x) & ending == ending
        };
        match self.family {
            Family::Ew => {
                if r == 0 {
                    x == full
                } else {
                    x != full && comparable()
                }
            }
            Family::New => comparable() && columns_closed(),
            Family::Le => le_condition_failures(above, x, len) == 0 && columns_closed(),
            Family::Tree => x != 0 && tree_dot_failures(r, above, x) == 0 && columns_closed(),
        }
    }
}

impl Iterator for Tableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        let depth_total = self.shape.num_rows();
        'search: loop {
            if self.done {
                return None;
            }
            let d = self.rows.len();
            if d == depth_total {
                let filling = Filling::new(self.shape.clone(), self.rows.clone())
                    .expect("rows fit the shape");
                self.rows.pop();
                if depth_total == 0 {
                    self.done = true;
                }
                return Some(Tableau::new_unchecked(self.family, filling));
            }
            let len = self.shape.row_len(d);
            let limit = 1u128 << len;
            while self.cursor[d] < limit {
                let x = reverse_bits(self.cursor[d], len);
                self.cursor[d] += 1;
                if self.accepts(d, x) {
                    self.rows.push(x);
                    self.cursor[d + 1] = 0;
                    continue 'search;
                }
            }
            if d == 0 {
                self.done = true;
                return None;
            }
            self.rows.pop();
        }
    }
}
