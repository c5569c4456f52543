//! Le tableaux as permutations through pipes that turn at every 1.

use crate::bijections::paths::trace;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::shape::{BorderLabeling, Family, FerrersShape, LineKind};
use crate::stats::weak_excedance_bottoms;
use crate::tableau::{require_family, Filling, Tableau};

/// Each label sits at both ends of its row or column. The path from label
/// `l` enters down a column top or rightward along a row, turns at every
/// 1, and its exit label is the letter at position `l`.
pub fn phi_le(t: &Tableau) -> Result<Permutation> {
    require_family(t, Family::Le)?;
    let labels = t.labeling();
    let n = labels.max_label();
    let mut out = vec![0; n];
    for (l, line) in labels.entries() {
        let path = trace(t.shape(), line, true, |r, c, _| t.get(r, c));
        out[l - 1] = labels.label(path.exit);
    }
    Permutation::new(out)
        .map_err(|e| Error::Internal(format!("pipes did not give a permutation: {e}")))
}

/// Rebuilds the Le tableau of `p`.
///
/// Rows are the weak excedance bottoms. Cells are decided in row-major
/// order: at each cell the pipe arriving from above and the pipe arriving
/// from the left are known, and the cell is a 1 (the pipes swap outlets)
/// exactly when that sends the pipe with the smaller target out to the right.
pub fn phi_le_inverse(p: &Permutation) -> Result<Tableau> {
    let n = p.len();
    if n == 0 {
        return Err(Error::InvalidPermutation("empty permutation".into()));
    }
    let mut is_row = vec![false; n + 1];
    for i in weak_excedance_bottoms(p) {
        is_row[i] = true;
    }
    let kinds: Vec<LineKind> = (1..=n)
        .map(|l| {
            if is_row[l] {
                LineKind::Row
            } else {
                LineKind::Column
            }
        })
        .collect();
    let shape = FerrersShape::from_border(&kinds)?;
    let labels = BorderLabeling::new(&shape, 1);
    let mut filling = Filling::zeros(shape.clone());
    // from_top[c]: the pipe currently heading down into column c.
    let mut from_top: Vec<usize> = (0..shape.num_cols()).map(|c| labels.col_label(c)).collect();
    for r in 0..shape.num_rows() {
        let mut from_left = labels.row_label(r);
        for (c, top) in from_top.iter_mut().enumerate().take(shape.row_len(r)) {
            let down = *top;
            let elbow = p.at(down) < p.at(from_left);
            if elbow {
                filling.set(r, c, true);
                *top = from_left;
                from_left = down;
            }
        }
    }
    let t = Tableau::new(Family::Le, filling)
        .map_err(|e| Error::Internal(format!("reconstructed filling is not Le: {e}")))?;
    debug_assert_eq!(phi_le(&t).as_ref(), Ok(p));
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_size;
    use crate::perm::{all_permutations, p};

    fn le(shape: &[usize], rows: &[&str]) -> Tableau {
        Tableau::new(Family::Le, Filling::with_shape(shape, rows).unwrap()).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(
            phi_le(&le(&[4, 3, 3, 0], &["0101", "001", "111"])).unwrap(),
            p("51473268")
        );
        assert_eq!(
            phi_le(&le(&[4, 3, 3, 2], &["0111", "111", "000", "01"])).unwrap(),
            p("51842736")
        );
        assert_eq!(phi_le(&le(&[1], &["1"])).unwrap(), p("21"));
        assert_eq!(phi_le(&le(&[0, 0, 0], &[])).unwrap(), p("123"));
        assert_eq!(phi_le(&le(&[1, 1], &["1", "0"])).unwrap(), p("321"));
        assert_eq!(phi_le(&le(&[1, 1], &["0", "1"])).unwrap(), p("132"));
        assert_eq!(phi_le(&le(&[1, 1], &["1", "1"])).unwrap(), p("231"));
    }

    #[test]
    fn inverse_of_examples() {
        assert_eq!(
            phi_le_inverse(&p("51842736")).unwrap(),
            le(&[4, 3, 3, 2], &["0111", "111", "000", "01"])
        );
        assert_eq!(
            phi_le_inverse(&p("51473268")).unwrap(),
            le(&[4, 3, 3, 0], &["0101", "001", "111"])
        );
    }

    #[test]
    fn rows_are_weak_excedance_bottoms() {
        for n in 1..=6 {
            for t in enumerate_size(n, Family::Le) {
                let perm = phi_le(&t).unwrap();
                let mut rows = t.labeling().row_labels().to_vec();
                rows.sort_unstable();
                assert_eq!(weak_excedance_bottoms(&perm), rows);
                assert_eq!(phi_le_inverse(&perm).unwrap(), t);
            }
        }
    }

    #[test]
    fn inverse_round_trip_on_all_permutations() {
        for n in 1..=7 {
            for perm in all_permutations(n) {
                let t = phi_le_inverse(&perm).unwrap();
                assert_eq!(phi_le(&t).unwrap(), perm);
            }
        }
    }
}
