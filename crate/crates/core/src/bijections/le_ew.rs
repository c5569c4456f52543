//! EW tableaux and Le tableaux of the same size, both through permutations
//! and by the direct path algorithms.

use crate::bijections::paths::{trace, Heading};
use crate::bijections::phi::{phi_le, phi_le_inverse};
use crate::bijections::psi::{psi, psi_inverse};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::shape::{BorderLabeling, Family, FerrersShape, Line};
use crate::tableau::{require_family, Filling, Tableau};
use crate::transform::{cyclic_shift, desexc, desexc_inverse, ShiftDirection};

/// Which construction a conversion uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Via {
    /// Through permutations.
    Composed,
    /// The path algorithm working on the tableau itself.
    Direct,
}

/// Builds a tableau by filling whole lines in the order of a permutation
/// produced on the fly. `next(i)` gives the label reached from label `i`;
/// labels are chained until one repeats, then the smallest unused label
/// starts a new chain. Columns get 0s and rows get 1s in their still-empty
/// cells. Returns the tableau and the permutation of reached labels.
pub(crate) fn chain_fill(
    shape: &FerrersShape,
    family: Family,
    n: usize,
    mut next: impl FnMut(usize) -> Result<usize>,
) -> Result<(Tableau, Permutation)> {
    let labels = BorderLabeling::new(shape, family.start_label());
    let mut filled: Vec<u64> = vec![0; shape.num_rows()];
    let mut filling = Filling::zeros(shape.clone());
    if family == Family::Ew {
        filled[0] = filling.row_full(0);
        for c in 0..shape.row_len(0) {
            filling.set(0, c, true);
        }
    }
    let mut visited = vec![false; n + 1];
    let mut word = Vec::with_capacity(n);
    while let Some(start) = (1..=n).find(|&i| !visited[i]) {
        let mut i = start;
        loop {
            visited[i] = true;
            let j = next(i)?;
            match labels.line(j) {
                Some(Line::Col(c)) => {
                    for f in &mut filled[..shape.col_height(c)] {
                        *f |= 1 << c;
                    }
                }
                Some(Line::Row(r)) => {
                    for c in 0..shape.row_len(r) {
                        if filled[r] >> c & 1 == 0 {
                            filling.set(r, c, true);
                        }
                    }
                    filled[r] = filling.row_full(r);
                }
                None => return Err(Error::Internal(format!("label {j} is not on the border"))),
            }
            word.push(j);
            if visited[j] {
                break;
            }
            i = j;
        }
    }
    let perm = Permutation::new(word).map_err(|e| Error::Internal(e.to_string()))?;
    let t = Tableau::new(family, filling).map_err(|e| Error::Internal(e.to_string()))?;
    Ok((t, perm))
}

/// Le to EW by reverse paths (the EW reading permutation is returned too).
///
/// The EW shape is the Le shape with a full-height column added on the
/// left. From Le label `i` a path runs backwards (west along a row from its
/// right end, north up a column from its bottom), swapping north and west
/// at every 1; if it leaves through the line labelled `l`, the EW line
/// labelled `l - 1` (or `n` when that is 0) is filled next.
pub fn le_to_ew(l: &Tableau) -> Result<(Tableau, Permutation)> {
    require_family(l, Family::Le)?;
    let le_labels = l.labeling();
    let n = le_labels.max_label();
    let shape = l.shape().with_left_column();
    chain_fill(&shape, Family::Ew, n, |i| {
        let line = le_labels.line(i).expect("labels 1..=n are on the border");
        let path = trace(l.shape(), line, false, |r, c, _| l.get(r, c));
        let ell = le_labels.label(path.exit) - 1;
        Ok(if ell == 0 { n } else { ell })
    })
}

pub fn le_to_ew_composed(l: &Tableau) -> Result<Tableau> {
    let p = phi_le(l)?;
    psi_inverse(
        &desexc_inverse(&cyclic_shift(&p, ShiftDirection::Left)),
        Family::Ew,
    )
}

pub fn ew_to_le_composed(e: &Tableau) -> Result<Tableau> {
    require_family(e, Family::Ew)?;
    phi_le_inverse(&cyclic_shift(&desexc(&psi(e)?), ShiftDirection::Right))
}

pub fn le_to_ew_via(l: &Tableau, via: Via) -> Result<Tableau> {
    match via {
        Via::Composed => le_to_ew_composed(l),
        Via::Direct => le_to_ew(l).map(|(t, _)| t),
    }
}

pub fn ew_to_le_via(e: &Tableau, via: Via) -> Result<Tableau> {
    match via {
        Via::Composed => ew_to_le_composed(e),
        Via::Direct => ew_to_le(e),
    }
}

/// `m(i)`: the position of `i` in `desexc(π)`, for `π` read from an EW
/// tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MHelper {
    m: Vec<usize>,
}

impl MHelper {
    pub fn from_desexc(pi: &Permutation) -> Self {
        MHelper {
            m: desexc(pi).positions(),
        }
    }

    /// Read straight from `0 π`: for a right-to-left minimum `i`, the letter
    /// after the nearest smaller letter to its left; otherwise the letter
    /// right after `i`.
    pub fn from_rtl_minima(pi: &Permutation) -> Self {
        let mut w = vec![0];
        w.extend_from_slice(pi.letters());
        let n = pi.len();
        let mut m = vec![0; n + 1];
        let mut suffix_min = usize::MAX;
        for x in (1..=n).rev() {
            let i = w[x];
            m[i] = if i < suffix_min {
                let k = (0..x).rev().find(|&k| w[k] < i).expect("0 is smaller");
                w[k + 1]
            } else {
                w[x + 1]
            };
            suffix_min = suffix_min.min(i);
        }
        MHelper { m }
    }

    pub fn get(&self, i: usize) -> usize {
        self.m[i]
    }
}

/// EW to Le directly, deciding each Le cell the first time a path meets it.
///
/// Paths start at Le labels `1..=n` in turn and travel backwards as in
/// [`le_to_ew`]. An empty cell in row `r`, column `c` (Le labels, with
/// `r - 1` read as `n` when `r = 1`) reached while heading `d` on the path
/// from `i` gets: `d = W ? 0 : 1` if `m(i) = r - 1`; `d = N ? 0 : 1` if
/// `m(i) = c - 1`; otherwise, heading west, 1 iff some cell above is 1.
pub fn ew_to_le(e: &Tableau) -> Result<Tableau> {
    require_family(e, Family::Ew)?;
    let pi = psi(e)?;
    let m = MHelper::from_rtl_minima(&pi);
    if m != MHelper::from_desexc(&pi) {
        return Err(Error::Internal("the two readings of m disagree".into()));
    }
    let shape = e.shape().without_left_column()?;
    let labels = BorderLabeling::new(&shape, 1);
    let n = labels.max_label();
    let mut cells: Vec<Vec<Option<bool>>> =
        shape.rows().iter().map(|&len| vec![None; len]).collect();
    for i in 1..=n {
        let line = labels.line(i).expect("labels 1..=n are on the border");
        let target = m.get(i);
        let mut failure = None;
        trace(&shape, line, false, |r, c, heading| {
            if let Some(v) = cells[r][c] {
                return v;
            }
            let rl = labels.row_label(r);
            let row_before = if rl == 1 { n } else { rl - 1 };
            let col_before = labels.col_label(c) - 1;
            let west = heading == Heading::Left;
            let value = if target == row_before {
                !west
            } else if target == col_before {
                west
            } else if west {
                let above: Vec<Option<bool>> = (0..r).map(|r2| cells[r2][c]).collect();
                if above.contains(&Some(true)) {
                    true
                } else if above.iter().all(|v| *v == Some(false)) {
                    false
                } else {
                    failure.get_or_insert_with(|| {
                        format!("cell ({},{}) has undecided cells above", r + 1, c + 1)
                    });
                    false
                }
            } else {
                failure.get_or_insert_with(|| {
                    format!("no rule decides cell ({},{}) heading north", r + 1, c + 1)
                });
                false
            };
            cells[r][c] = Some(value);
            value
        });
        if let Some(msg) = failure {
            return Err(Error::Internal(msg));
        }
    }
    let mut filling = Filling::zeros(shape.clone());
    for (r, c) in shape.cells() {
        match cells[r][c] {
            Some(v) => filling.set(r, c, v),
            None => {
                return Err(Error::Internal(format!(
                    "cell ({},{}) was never reached",
                    r + 1,
                    c + 1
                )))
            }
        }
    }
    Tableau::new(Family::Le, filling).map_err(|e| Error::Internal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_size;
    use crate::perm::p;

    fn sample_le() -> Tableau {
        Tableau::from_strs(Family::Le, &["0111", "111", "000", "01"]).unwrap()
    }

    fn sample_ew() -> Tableau {
        Tableau::from_strs(Family::Ew, &["11111", "0000", "1110", "100"]).unwrap()
    }

    #[test]
    fn sample_both_ways() {
        let (ew, pi) = le_to_ew(&sample_le()).unwrap();
        assert_eq!(pi, p("14367582"));
        assert_eq!(ew, sample_ew());
        assert_eq!(le_to_ew_composed(&sample_le()).unwrap(), sample_ew());
        assert_eq!(ew_to_le(&sample_ew()).unwrap(), sample_le());
        assert_eq!(ew_to_le_composed(&sample_ew()).unwrap(), sample_le());
    }

    #[test]
    fn m_helper_values() {
        let pi = p("14367582");
        let m = MHelper::from_rtl_minima(&pi);
        assert_eq!(m, MHelper::from_desexc(&pi));
        let got: Vec<usize> = (1..=8).map(|i| m.get(i)).collect();
        assert_eq!(got, vec![1, 4, 6, 3, 8, 7, 5, 2]);
    }

    #[test]
    fn single_cell() {
        let l = Tableau::from_strs(Family::Le, &["1"]).unwrap();
        let (ew, pi) = le_to_ew(&l).unwrap();
        assert_eq!(ew, Tableau::from_strs(Family::Ew, &["11"]).unwrap());
        assert_eq!(pi, p("12"));
        assert_eq!(le_to_ew_composed(&l).unwrap(), ew);
    }

    #[test]
    fn direct_and_composed_agree() {
        for n in 1..=6 {
            for l in enumerate_size(n, Family::Le) {
                let (ew, pi) = le_to_ew(&l).unwrap();
                assert_eq!(psi(&ew).unwrap(), pi);
                assert_eq!(le_to_ew_composed(&l).unwrap(), ew, "{l}");
                assert_eq!(ew_to_le(&ew).unwrap(), l, "{ew}");
                assert_eq!(ew_to_le_composed(&ew).unwrap(), l);
            }
        }
    }
}
