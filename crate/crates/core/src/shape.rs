//! Ferrers shapes and the southeast border labeling.
//!
//! Rows and columns are addressed by 0-based positions (rows top to bottom,
//! columns left to right). Labels are a derived view: walking the southeast
//! border from the top-right corner to the bottom-left corner, each vertical
//! edge names the row it bounds and each horizontal edge names the column it
//! bounds, with consecutive integers starting at 0 (EW, TREE) or 1 (LE, NEW).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fillings store one `u64` per row, so shapes are limited to 64 columns.
pub const MAX_COLUMNS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "EW")]
    Ew,
    #[serde(rename = "NEW")]
    New,
    #[serde(rename = "LE")]
    Le,
    #[serde(rename = "TREE")]
    Tree,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Ew, Family::New, Family::Le, Family::Tree];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Ew => "EW",
            Family::New => "NEW",
            Family::Le => "LE",
            Family::Tree => "TREE",
        }
    }

    /// First border label: the EW sink and the tree root row carry 0.
    pub fn start_label(self) -> usize {
        match self {
            Family::Ew | Family::Tree => 0,
            Family::Le | Family::New => 1,
        }
    }

    pub fn allows_empty_rows(self) -> bool {
        matches!(self, Family::Le | Family::New)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "EW" => Ok(Family::Ew),
            "NEW" => Ok(Family::New),
            "LE" => Ok(Family::Le),
            "TREE" => Ok(Family::Tree),
            other => Err(Error::Parse {
                line: 1,
                message: format!("unknown family tag {other:?}"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineKind {
    Row,
    Column,
}

/// A row or column of a shape, by position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Line {
    Row(usize),
    Col(usize),
}

impl Line {
    pub fn kind(self) -> LineKind {
        match self {
            Line::Row(_) => LineKind::Row,
            Line::Col(_) => LineKind::Column,
        }
    }
}

/// Weakly decreasing row lengths, top to bottom. Zero-length rows may only
/// appear at the bottom, which the monotonicity already forces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersShape {
    rows: Vec<usize>,
}

impl FerrersShape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidShape("a shape needs at least one row".into()));
        }
        if let Some(i) = rows.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "row lengths must be weakly decreasing (row {} has {} cells, row {} has {})",
                i + 1,
                rows[i],
                i + 2,
                rows[i + 1]
            )));
        }
        if rows[0] > MAX_COLUMNS {
            return Err(Error::InvalidShape(format!(
                "at most {MAX_COLUMNS} columns are supported, got {}",
                rows[0]
            )));
        }
        Ok(FerrersShape { rows })
    }

    /// Builds a shape and checks it against the family's shape rules.
    pub fn for_family(rows: Vec<usize>, family: Family) -> Result<Self> {
        let shape = FerrersShape::new(rows)?;
        shape.check_family(family)?;
        Ok(shape)
    }

    pub fn check_family(&self, family: Family) -> Result<()> {
        if !family.allows_empty_rows() {
            if let Some(r) = self.rows.iter().position(|&len| len == 0) {
                return Err(Error::InvalidShape(format!(
                    "{family} shapes have no empty rows (row {} is empty)",
                    r + 1
                )));
            }
        }
        Ok(())
    }

    /// Rebuilds a shape from the kinds of its border edges in label order.
    pub fn from_border(kinds: &[LineKind]) -> Result<Self> {
        let mut width = kinds.iter().filter(|k| **k == LineKind::Column).count();
        let mut rows = Vec::new();
        for kind in kinds {
            match kind {
                LineKind::Row => rows.push(width),
                LineKind::Column => width -= 1,
            }
        }
        FerrersShape::new(rows)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows[0]
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.rows[r]
    }

    pub fn col_height(&self, c: usize) -> usize {
        self.rows.iter().take_while(|&&len| len > c).count()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r < self.rows.len() && c < self.rows[r]
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Number of border labels minus one for EW/TREE, number of labels for LE/NEW.
    pub fn size(&self, family: Family) -> usize {
        let total = self.num_rows() + self.num_cols();
        match family {
            Family::Ew | Family::Tree => total - 1,
            Family::Le | Family::New => total,
        }
    }

    /// Transpose; drops the empty rows, which have no cells to transpose.
    pub fn conjugate(&self) -> FerrersShape {
        let rows = (0..self.num_cols()).map(|c| self.col_height(c)).collect();
        FerrersShape { rows }
    }

    /// Adds a column on the left spanning every row, empty rows included.
    pub fn with_left_column(&self) -> FerrersShape {
        FerrersShape {
            rows: self.rows.iter().map(|len| len + 1).collect(),
        }
    }

    /// Removes the leftmost column and keeps the rows it empties.
    pub fn without_left_column(&self) -> Result<FerrersShape> {
        if self.rows.contains(&0) {
            return Err(Error::InvalidShape(
                "cannot remove the left column of a shape with empty rows".into(),
            ));
        }
        Ok(FerrersShape {
            rows: self.rows.iter().map(|len| len - 1).collect(),
        })
    }
}

impl fmt::Display for FerrersShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for FerrersShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(|ch: char| ch.is_whitespace() || ch == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidShape(format!("bad row length {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FerrersShape::new(rows)
    }
}

/// Labels of the southeast border edges of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderLabeling {
    start: usize,
    row_labels: Vec<usize>,
    col_labels: Vec<usize>,
    lines: Vec<Line>,
}

impl BorderLabeling {
    /// Walks the border from the top-right corner: the vertical edge of each
    /// row, then the bottom edges of the columns that end on that row, right
    /// to left.
    pub fn new(shape: &FerrersShape, start: usize) -> Self {
        let mut row_labels = vec![0; shape.num_rows()];
        let mut col_labels = vec![0; shape.num_cols()];
        let mut lines = Vec::with_capacity(shape.num_rows() + shape.num_cols());
        let rows = shape.rows();
        for (r, &len) in rows.iter().enumerate() {
            row_labels[r] = start + lines.len();
            lines.push(Line::Row(r));
            let next = rows.get(r + 1).copied().unwrap_or(0);
            for c in (next..len).rev() {
                col_labels[c] = start + lines.len();
                lines.push(Line::Col(c));
            }
        }
        BorderLabeling {
            start,
            row_labels,
            col_labels,
            lines,
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Largest label: `n` for every family.
    pub fn max_label(&self) -> usize {
        self.start + self.lines.len() - 1
    }

    pub fn row_label(&self, r: usize) -> usize {
        self.row_labels[r]
    }

    pub fn col_label(&self, c: usize) -> usize {
        self.col_labels[c]
    }

    pub fn row_labels(&self) -> &[usize] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[usize] {
        &self.col_labels
    }

    pub fn label(&self, line: Line) -> usize {
        match line {
            Line::Row(r) => self.row_labels[r],
            Line::Col(c) => self.col_labels[c],
        }
    }

    pub fn line(&self, label: usize) -> Option<Line> {
        label
            .checked_sub(self.start)
            .and_then(|i| self.lines.get(i))
            .copied()
    }

    /// `(label, line)` pairs in label order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Line)> + '_ {
        self.lines
            .iter()
            .enumerate()
            .map(move |(i, &line)| (self.start + i, line))
    }

    pub fn is_row_label(&self, label: usize) -> bool {
        matches!(self.line(label), Some(Line::Row(_)))
    }
}

/// Border labeling with the family's starting label.
pub fn border_labels(shape: &FerrersShape, family: Family) -> Result<BorderLabeling> {
    shape.check_family(family)?;
    Ok(BorderLabeling::new(shape, family.start_label()))
}

/// All shapes of the given size for a family, in a deterministic order.
///
/// Each shape is fixed by which labels are rows. EW/TREE shapes have row 0
/// and column `n`; LE/NEW shapes always have label 1 on a row.
pub fn shapes_of_size(n: usize, family: Family) -> Vec<FerrersShape> {
    if n == 0 {
        return Vec::new();
    }
    let free = n - 1;
    let mut out = Vec::with_capacity(1 << free);
    for mask in 0u64..(1u64 << free) {
        let mut kinds = Vec::with_capacity(n + 1);
        match family {
            Family::Ew | Family::Tree => {
                kinds.push(LineKind::Row);
                for bit in 0..free {
                    kinds.push(kind_of(mask, bit));
                }
                kinds.push(LineKind::Column);
            }
            Family::Le | Family::New => {
                kinds.push(LineKind::Row);
                for bit in 0..free {
                    kinds.push(kind_of(mask, bit));
                }
            }
        }
        if kinds.iter().filter(|k| **k == LineKind::Column).count() > MAX_COLUMNS {
            continue;
        }
        out.push(FerrersShape::from_border(&kinds).expect("border walk gives a valid shape"));
    }
    out
}

fn kind_of(mask: u64, bit: usize) -> LineKind {
    if mask >> bit & 1 == 1 {
        LineKind::Row
    } else {
        LineKind::Column
    }
}

/// Every Ferrers shape with exactly `cells` cells and no empty rows, as partitions in
/// reverse lexicographic order.
pub fn shapes_with_cells(cells: usize) -> Vec<FerrersShape> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<FerrersShape>) {
        if remaining == 0 {
            out.push(FerrersShape { rows: cur.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if cells > 0 {
        rec(cells, cells.min(MAX_COLUMNS), &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(rows: &[usize]) -> FerrersShape {
        FerrersShape::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn ew_labels_of_5441() {
        let lab = border_labels(&shape(&[5, 4, 4, 1]), Family::Ew).unwrap();
        assert_eq!(lab.row_labels(), &[0, 2, 3, 7]);
        assert_eq!(lab.col_labels(), &[8, 6, 5, 4, 1]);
        assert_eq!(lab.max_label(), 8);
    }

    #[test]
    fn single_row_labels() {
        let lab = border_labels(&shape(&[2]), Family::Ew).unwrap();
        assert_eq!(lab.row_labels(), &[0]);
        assert_eq!(lab.col_labels(), &[2, 1]);
    }

    #[test]
    fn le_labels_with_empty_row() {
        let lab = border_labels(&shape(&[4, 3, 3, 0]), Family::Le).unwrap();
        assert_eq!(lab.row_labels(), &[1, 3, 4, 8]);
        assert_eq!(lab.col_labels(), &[7, 6, 5, 2]);
    }

    #[test]
    fn empty_rows_rejected_for_ew_and_tree() {
        assert!(FerrersShape::for_family(vec![2, 0], Family::Ew).is_err());
        assert!(FerrersShape::for_family(vec![2, 0], Family::Tree).is_err());
        assert!(FerrersShape::for_family(vec![2, 0], Family::Le).is_ok());
        assert!(FerrersShape::for_family(vec![0, 0], Family::New).is_ok());
    }

    #[test]
    fn increasing_rows_rejected() {
        assert!(FerrersShape::new(vec![1, 2]).is_err());
        assert!(FerrersShape::new(vec![]).is_err());
    }

    #[test]
    fn border_round_trip() {
        for family in Family::ALL {
            for n in 1..=7 {
                for s in shapes_of_size(n, family) {
                    let lab = BorderLabeling::new(&s, family.start_label());
                    let kinds: Vec<LineKind> = lab.entries().map(|(_, l)| l.kind()).collect();
                    assert_eq!(FerrersShape::from_border(&kinds).unwrap(), s);
                    assert_eq!(s.size(family), n);
                }
            }
        }
    }

    #[test]
    fn labels_are_a_bijection_and_monotone() {
        for n in 1..=8 {
            for s in shapes_of_size(n, Family::Le) {
                let lab = BorderLabeling::new(&s, 1);
                let mut seen: Vec<usize> = lab
                    .row_labels()
                    .iter()
                    .chain(lab.col_labels())
                    .copied()
                    .collect();
                seen.sort_unstable();
                assert_eq!(seen, (1..=n).collect::<Vec<_>>());
                assert!(lab.row_labels().windows(2).all(|w| w[0] < w[1]));
                // Column labels grow leftward.
                assert!(lab.col_labels().windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn shape_counts() {
        assert_eq!(shapes_of_size(4, Family::Ew).len(), 8);
        assert_eq!(shapes_with_cells(5).len(), 7);
        assert_eq!(shapes_with_cells(12).len(), 77);
    }

    #[test]
    fn conjugate_and_columns() {
        let s = shape(&[5, 4, 4, 1]);
        assert_eq!(s.conjugate().rows(), &[4, 3, 3, 3, 1]);
        assert_eq!(s.col_height(0), 4);
        assert_eq!(s.col_height(4), 1);
        assert_eq!(s.num_cells(), 14);
        assert_eq!("5 4 4 1".parse::<FerrersShape>().unwrap(), s);
    }
}
