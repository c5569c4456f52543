//! Reading EW and NEW tableaux as permutations, and the inverse fill.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::shape::{Family, FerrersShape, Line, LineKind};
use crate::stats::descent_bottoms;
use crate::tableau::{Filling, Tableau};

/// One reading pass: the labels it emitted, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pass {
    pub kind: LineKind,
    pub labels: Vec<usize>,
}

pub fn psi(t: &Tableau) -> Result<Permutation> {
    psi_with_passes(t).map(|(p, _)| p)
}

/// Reads the tableau, also returning the nonempty passes.
///
/// Column passes emit the labels of unread columns with no 1 among the
/// remaining entries, right to left; row passes emit unread rows with no 0,
/// bottom to top. Passes alternate, starting with columns. An EW tableau
/// has its top row (label 0) removed unread first.
pub fn psi_with_passes(t: &Tableau) -> Result<(Permutation, Vec<Pass>)> {
    if !matches!(t.family(), Family::Ew | Family::New) {
        return Err(Error::WrongFamily {
            expected: "EW or NEW",
            got: t.family().tag(),
        });
    }
    let shape = t.shape();
    let labels = t.labeling();
    let (k, m) = (shape.num_rows(), shape.num_cols());
    let mut row_alive = vec![true; k];
    let mut col_alive = vec![true; m];
    if t.family() == Family::Ew {
        row_alive[0] = false;
    }
    let n = labels.max_label();
    let mut out = Vec::with_capacity(n);
    let mut passes = Vec::new();
    let mut kind = LineKind::Column;
    let mut idle = 0;
    while out.len() < n {
        let emitted: Vec<usize> = match kind {
            LineKind::Column => (0..m)
                .rev()
                .filter(|&c| col_alive[c])
                .filter(|&c| (0..shape.col_height(c)).all(|r| !row_alive[r] || !t.get(r, c)))
                .collect(),
            LineKind::Row => (0..k)
                .rev()
                .filter(|&r| row_alive[r])
                .filter(|&r| (0..shape.row_len(r)).all(|c| !col_alive[c] || t.get(r, c)))
                .collect(),
        };
        if emitted.is_empty() {
            idle += 1;
            if idle > 1 {
                return Err(Error::Internal("reading stalled with unread lines".into()));
            }
        } else {
            idle = 0;
            let mut pass = Pass {
                kind,
                labels: Vec::with_capacity(emitted.len()),
            };
            for &i in &emitted {
                let line = match kind {
                    LineKind::Column => {
                        col_alive[i] = false;
                        Line::Col(i)
                    }
                    LineKind::Row => {
                        row_alive[i] = false;
                        Line::Row(i)
                    }
                };
                pass.labels.push(labels.label(line));
            }
            out.extend_from_slice(&pass.labels);
            passes.push(pass);
        }
        kind = match kind {
            LineKind::Column => LineKind::Row,
            LineKind::Row => LineKind::Column,
        };
    }
    Ok((Permutation::new_unchecked(out), passes))
}

/// The EW or NEW tableau read as `p`.
///
/// Row labels are the descent bottoms of `p` together with 0 (EW) or the
/// first letter (NEW); a cell is 1 exactly when its row label comes before
/// its column label in `p` (label 0 comes before everything).
pub fn psi_inverse(p: &Permutation, family: Family) -> Result<Tableau> {
    let n = p.len();
    if n == 0 {
        return Err(Error::InvalidPermutation("empty permutation".into()));
    }
    let start = match family {
        Family::Ew => 0,
        Family::New => 1,
        other => {
            return Err(Error::WrongFamily {
                expected: "EW or NEW",
                got: other.tag(),
            })
        }
    };
    let mut is_row = vec![false; n + 1];
    for b in descent_bottoms(p) {
        is_row[b] = true;
    }
    match family {
        Family::Ew => is_row[0] = true,
        _ => is_row[p.at(1)] = true,
    }
    let kinds: Vec<LineKind> = (start..=n)
        .map(|l| {
            if is_row[l] {
                LineKind::Row
            } else {
                LineKind::Column
            }
        })
        .collect();
    let shape = FerrersShape::from_border(&kinds)?;
    let t = fill_by_precedence(&shape, family, &p.positions())?;
    Ok(t)
}

/// Cell (r,c) is 1 iff the row label precedes the column label, with
/// `pos[label]` giving the order (label 0 at position 0).
fn fill_by_precedence(shape: &FerrersShape, family: Family, pos: &[usize]) -> Result<Tableau> {
    let labels = crate::shape::BorderLabeling::new(shape, family.start_label());
    let mut filling = Filling::zeros(shape.clone());
    for (r, c) in shape.cells() {
        let (rl, cl) = (labels.row_label(r), labels.col_label(c));
        if pos[rl] < pos[cl] {
            filling.set(r, c, true);
        }
    }
    Tableau::new(family, filling)
}
