//! Tree-like tableaux: the maps to and from Le tableaux, the spanning-tree
//! reading order, and the two constructions of an EW tableau.

use crate::bijections::le_ew::{chain_fill, le_to_ew};
use crate::bijections::paths::trace;
use crate::bijections::psi::psi_inverse;
use crate::enumerate::enumerate;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::shape::{Family, Line};
use crate::tableau::{require_family, row_mask, Filling, Tableau};

/// Tree cell (r,c) with a dot strictly to its left and a dot in its column
/// at or above row `r`.
fn left_and_weakly_above(t: &Tableau, r: usize, c: usize) -> bool {
    let row = t.rows()[r];
    let left = row & row_mask(c) != 0;
    let weakly_above = (0..=r).any(|r2| t.get(r2, c));
    left && weakly_above
}

/// A cell becomes 1 iff it has a dot to its left and a dot weakly above;
/// the leftmost column is then dropped.
pub fn tree_to_le(t: &Tableau) -> Result<Tableau> {
    require_family(t, Family::Tree)?;
    let shape = t.shape().without_left_column()?;
    let mut f = Filling::zeros(shape.clone());
    for (r, c) in shape.cells() {
        f.set(r, c, left_and_weakly_above(t, r, c + 1));
    }
    Tableau::new(Family::Le, f).map_err(|e| Error::Internal(e.to_string()))
}

/// The dot-rewriting description of [`tree_to_le`]: left-free dots become
/// 0 with 0s to their left, up-free dots become 1 with 0s above, and every
/// other cell becomes 1.
pub fn tree_to_le_by_rewriting(t: &Tableau) -> Result<Tableau> {
    require_family(t, Family::Tree)?;
    let shape = t.shape();
    let mut cells: Vec<Vec<Option<bool>>> =
        shape.rows().iter().map(|&len| vec![None; len]).collect();
    for (r, c) in shape.cells() {
        if !t.get(r, c) {
            continue;
        }
        if t.rows()[r] & row_mask(c) == 0 {
            cells[r][c] = Some(false);
            for cell in cells[r].iter_mut().take(c) {
                *cell = Some(false);
            }
        }
    }
    for (r, c) in shape.cells() {
        if t.get(r, c) && (0..r).all(|r2| !t.get(r2, c)) {
            cells[r][c] = Some(true);
            for row in cells.iter_mut().take(r) {
                row[c] = Some(false);
            }
        }
    }
    let le_shape = shape.without_left_column()?;
    let mut f = Filling::zeros(le_shape.clone());
    for (r, c) in le_shape.cells() {
        f.set(r, c, cells[r][c + 1].unwrap_or(true));
    }
    Tableau::new(Family::Le, f).map_err(|e| Error::Internal(e.to_string()))
}

/// Le to tree: add a left column (1 on top, 0 below), dot the topmost 1 of
/// every column and the rightmost restricted 0 (a 0 with a 1 above) of
/// every row.
pub fn le_to_tree(l: &Tableau) -> Result<Tableau> {
    require_family(l, Family::Le)?;
    let shape = l.shape().with_left_column();
    let value = |r: usize, c: usize| if c == 0 { r == 0 } else { l.get(r, c - 1) };
    let mut f = Filling::zeros(shape.clone());
    for c in 0..shape.num_cols() {
        if let Some(r) = (0..shape.col_height(c)).find(|&r| value(r, c)) {
            f.set(r, c, true);
        }
    }
    for r in 0..shape.num_rows() {
        let restricted = (0..shape.row_len(r))
            .rev()
            .find(|&c| !value(r, c) && (0..r).any(|r2| value(r2, c)));
        if let Some(c) = restricted {
            f.set(r, c, true);
        }
    }
    Tableau::new(Family::Tree, f).map_err(|e| Error::Internal(e.to_string()))
}

/// Reads a tree-like tableau as a permutation by walking its spanning tree
/// from the top row: from a column take its bottommost unused dot, from a
/// row its rightmost; when the current line has none left, back up through
/// earlier lines.
pub fn tree_to_perm(t: &Tableau) -> Result<Permutation> {
    require_family(t, Family::Tree)?;
    let labels = t.labeling();
    let n = labels.max_label();
    let shape = t.shape();
    let mut used = vec![0u64; shape.num_rows()];
    let mut seen = vec![false; n + 1];
    seen[0] = true;
    let mut v = vec![Line::Row(0)];
    for i in 1..=n {
        let mut j = i - 1;
        let cell = loop {
            let found = match v[j] {
                Line::Col(c) => (0..shape.col_height(c))
                    .rev()
                    .find(|&r| t.get(r, c) && used[r] >> c & 1 == 0)
                    .map(|r| (r, c)),
                Line::Row(r) => (0..shape.row_len(r))
                    .rev()
                    .find(|&c| t.get(r, c) && used[r] >> c & 1 == 0)
                    .map(|c| (r, c)),
            };
            match (found, j) {
                (Some(cell), _) => break cell,
                (None, 0) => {
                    return Err(Error::Internal("no unused dot reachable".into()));
                }
                (None, _) => j -= 1,
            }
        };
        used[cell.0] |= 1 << cell.1;
        let (row, col) = (Line::Row(cell.0), Line::Col(cell.1));
        let next = if seen[labels.label(row)] { col } else { row };
        if seen[labels.label(next)] {
            return Err(Error::Internal("dot joins two visited lines".into()));
        }
        seen[labels.label(next)] = true;
        v.push(next);
    }
    let word = v[1..].iter().map(|&line| labels.label(line)).collect();
    Permutation::new(word).map_err(|e| Error::Internal(e.to_string()))
}

/// The tree-like tableau that [`tree_to_perm`] reads as `p`, found by
/// searching the tableaux of the shape whose row labels are the descent
/// bottoms of `p`.
pub fn tree_from_perm(p: &Permutation) -> Result<Tableau> {
    let shape = psi_inverse(p, Family::Ew)?.shape().clone();
    enumerate(&shape, Family::Tree)
        .find(|t| tree_to_perm(t).as_ref() == Ok(p))
        .ok_or_else(|| Error::Internal(format!("no tree-like tableau reads as {p}")))
}

/// The EW tableau read as [`tree_to_perm`]'s permutation; same shape.
pub fn tree_to_ew_m(t: &Tableau) -> Result<Tableau> {
    let tau = tree_to_perm(t)?;
    let e = psi_inverse(&tau, Family::Ew)?;
    debug_assert_eq!(e.shape(), t.shape());
    Ok(e)
}

/// EW tableau of the same shape through the Le tableau, computed with
/// paths on the tree itself: heading backwards, a path swaps north and west
/// at cells with a dot to the left and a dot weakly above.
pub fn tree_to_ew_via_le(t: &Tableau) -> Result<(Tableau, Permutation)> {
    require_family(t, Family::Tree)?;
    let labels = t.labeling();
    let n = labels.max_label();
    chain_fill(t.shape(), Family::Ew, n, |i| {
        let line = labels.line(i - 1).expect("labels 0..n are on the border");
        let path = trace(t.shape(), line, false, |r, c, _| {
            left_and_weakly_above(t, r, c)
        });
        Ok(match path.exit {
            Line::Row(0) => n,
            exit => labels.label(exit),
        })
    })
}

/// [`tree_to_ew_via_le`] as the composition of [`tree_to_le`] and
/// [`le_to_ew`].
pub fn tree_to_ew_via_le_composed(t: &Tableau) -> Result<Tableau> {
    le_to_ew(&tree_to_le(t)?).map(|(e, _)| e)
}

/// The permutations of both constructions and the length of their longest
/// common prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeComparison {
    pub m: Permutation,
    pub via_le: Permutation,
    pub common_prefix: usize,
}

pub fn compare_tree_maps(t: &Tableau) -> Result<TreeComparison> {
    let m = tree_to_perm(t)?;
    let (_, via_le) = tree_to_ew_via_le(t)?;
    let common_prefix = m
        .letters()
        .iter()
        .zip(via_le.letters())
        .take_while(|(a, b)| a == b)
        .count();
    Ok(TreeComparison {
        m,
        via_le,
        common_prefix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::psi::psi;
    use crate::enumerate::enumerate_size;
    use crate::perm::all_permutations;
    use crate::perm::p;
    use crate::shape::shapes_with_cells;
    use crate::stats::descent_bottoms;
    use std::collections::HashSet;

    fn tree(rows: &[&str]) -> Tableau {
        Tableau::from_strs(Family::Tree, rows).unwrap()
    }

    #[test]
    fn spanning_tree_reading_examples() {
        let t = tree(&["**.", ".**", "*"]);
        assert_eq!(tree_to_perm(&t).unwrap(), p("31254"));
        assert_eq!(
            tree_to_ew_m(&t).unwrap(),
            Tableau::from_strs(Family::Ew, &["111", "101", "0"]).unwrap()
        );
        let t = tree(&["*.", "*.", "**"]);
        assert_eq!(tree_to_perm(&t).unwrap(), p("4231"));
        assert_eq!(tree_to_perm(&tree(&["*"])).unwrap(), p("1"));
    }

    #[test]
    fn reading_inverts() {
        for n in 1..=6 {
            for q in all_permutations(n) {
                let t = tree_from_perm(&q).unwrap();
                assert_eq!(tree_to_perm(&t).unwrap(), q);
            }
        }
    }

    #[test]
    fn two_constructions_differ() {
        let t = tree(&["*.", "*.", "**"]);
        let m = tree_to_ew_m(&t).unwrap();
        let (via, pi) = tree_to_ew_via_le(&t).unwrap();
        assert_eq!(
            m,
            Tableau::from_strs(Family::Ew, &["11", "00", "01"]).unwrap()
        );
        assert_eq!(
            via,
            Tableau::from_strs(Family::Ew, &["11", "01", "01"]).unwrap()
        );
        assert_eq!(pi, p("4213"));
        let cmp = compare_tree_maps(&t).unwrap();
        assert_eq!(cmp.common_prefix, 2);
        let same = compare_tree_maps(&tree(&["**.", ".**", "*"])).unwrap();
        assert_eq!(same.m, same.via_le);
    }

    #[test]
    fn sample_tree_to_le_to_ew() {
        let t = tree(&["*..**", "***..", "...*", ".*", "*."]);
        let l = Tableau::from_strs(Family::Le, &["0011", "1111", "000", "0", "1"]).unwrap();
        assert_eq!(tree_to_le(&t).unwrap(), l);
        assert_eq!(le_to_tree(&l).unwrap(), t);
        let e = Tableau::from_strs(Family::Ew, &["11111", "00100", "1110", "01", "01"]).unwrap();
        assert_eq!(tree_to_ew_via_le(&t).unwrap().0, e);
    }

    #[test]
    fn single_dot() {
        let t = tree(&["*"]);
        let l = tree_to_le(&t).unwrap();
        assert_eq!(l.shape().rows(), &[0]);
        assert_eq!(le_to_tree(&l).unwrap(), t);
    }

    #[test]
    fn maps_agree_and_invert() {
        for n in 1..=7 {
            for t in enumerate_size(n, Family::Tree) {
                let l = tree_to_le(&t).unwrap();
                assert_eq!(tree_to_le_by_rewriting(&t).unwrap(), l, "{t}");
                assert_eq!(le_to_tree(&l).unwrap(), t);
                let (e, pi) = tree_to_ew_via_le(&t).unwrap();
                assert_eq!(tree_to_ew_via_le_composed(&t).unwrap(), e);
                assert_eq!(psi(&e).unwrap(), pi);
                let tau = tree_to_perm(&t).unwrap();
                let mut rows = t.labeling().row_labels().to_vec();
                rows.retain(|&x| x != 0);
                rows.sort_unstable();
                assert_eq!(descent_bottoms(&tau), rows);
                let cmp = compare_tree_maps(&t).unwrap();
                assert!(cmp.common_prefix >= 1);
            }
            for l in enumerate_size(n, Family::Le) {
                assert_eq!(tree_to_le(&le_to_tree(&l).unwrap()).unwrap(), l);
            }
        }
    }

    #[test]
    fn both_ew_maps_injective_per_shape() {
        for cells in 1..=10 {
            for shape in shapes_with_cells(cells) {
                let mut a = HashSet::new();
                let mut b = HashSet::new();
                let mut count = 0;
                for t in enumerate(&shape, Family::Tree) {
                    let m = tree_to_ew_m(&t).unwrap();
                    let (v, _) = tree_to_ew_via_le(&t).unwrap();
                    assert_eq!(m.shape(), &shape);
                    assert_eq!(v.shape(), &shape);
                    assert!(a.insert(m));
                    assert!(b.insert(v));
                    count += 1;
                }
                assert_eq!(count, enumerate(&shape, Family::Ew).count(), "{shape}");
            }
        }
    }
}
