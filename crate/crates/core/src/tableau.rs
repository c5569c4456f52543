//! 0/1 and dotted fillings of Ferrers shapes, and the rules of each family.

use std::fmt;

use crate::error::{Error, Result};
use crate::shape::{BorderLabeling, Family, FerrersShape};

/// A 0/1 filling of a shape. Bit `c` of `rows[r]` is the cell in row `r`,
/// column `c`. For dotted fillings a set bit is a dot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: FerrersShape,
    rows: Vec<u64>,
}

pub(crate) fn row_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Filling {
    pub fn new(shape: FerrersShape, rows: Vec<u64>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::ShapeMismatch(format!(
                "shape has {} rows, filling has {}",
                shape.num_rows(),
                rows.len()
            )));
        }
        for (r, &bits) in rows.iter().enumerate() {
            if bits & !row_mask(shape.row_len(r)) != 0 {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has entries beyond its {} cells",
                    r + 1,
                    shape.row_len(r)
                )));
            }
        }
        Ok(Filling { shape, rows })
    }

    pub fn zeros(shape: FerrersShape) -> Self {
        let rows = vec![0; shape.num_rows()];
        Filling { shape, rows }
    }

    /// Rows given as strings of `0`/`1` (or `.`/`*`), left to right.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(|r| r.chars().count()).collect();
        let shape = FerrersShape::new(lens)?;
        let mut bits = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            let mut x = 0u64;
            for (c, ch) in row.chars().enumerate() {
                match ch {
                    '1' | '*' => x |= 1 << c,
                    '0' | '.' => {}
                    other => {
                        return Err(Error::Parse {
                            line: r + 1,
                            message: format!("unexpected cell character {other:?}"),
                        })
                    }
                }
            }
            bits.push(x);
        }
        Filling::new(shape, bits)
    }

    /// Shape given explicitly, so that empty rows can be expressed.
    pub fn with_shape(shape: &[usize], rows: &[&str]) -> Result<Self> {
        let shape = FerrersShape::new(shape.to_vec())?;
        let mut bits = vec![0u64; shape.num_rows()];
        let nonempty = shape.rows().iter().filter(|&&l| l > 0).count();
        if rows.len() != nonempty {
            return Err(Error::ShapeMismatch(format!(
                "expected {nonempty} cell rows, got {}",
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.chars().count() != shape.row_len(r) {
                return Err(Error::ShapeMismatch(format!(
                    "row {} should have {} cells",
                    r + 1,
                    shape.row_len(r)
                )));
            }
            for (c, ch) in row.chars().enumerate() {
                if matches!(ch, '1' | '*') {
                    bits[r] |= 1 << c;
                }
            }
        }
        Filling::new(shape, bits)
    }

    pub fn shape(&self) -> &FerrersShape {
        &self.shape
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row_bits(&self, r: usize) -> u64 {
        self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r] >> c & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(self.shape.contains(r, c));
        if value {
            self.rows[r] |= 1 << c;
        } else {
            self.rows[r] &= !(1 << c);
        }
    }

    pub fn row_full(&self, r: usize) -> u64 {
        row_mask(self.shape.row_len(r))
    }

    pub fn ones_in_row(&self, r: usize) -> usize {
        self.rows[r].count_ones() as usize
    }

    pub fn zeros_in_row(&self, r: usize) -> usize {
        self.shape.row_len(r) - self.ones_in_row(r)
    }

    pub fn ones_in_col(&self, c: usize) -> usize {
        (0..self.shape.col_height(c))
            .filter(|&r| self.get(r, c))
            .count()
    }

    pub fn zeros_in_col(&self, c: usize) -> usize {
        self.shape.col_height(c) - self.ones_in_col(c)
    }

    /// Rows as strings, using `one`/`zero` for the cell values.
    pub fn row_strings(&self, one: char, zero: char) -> Vec<String> {
        (0..self.shape.num_rows())
            .map(|r| {
                (0..self.shape.row_len(r))
                    .map(|c| if self.get(r, c) { one } else { zero })
                    .collect()
            })
            .collect()
    }
}

/// A filling tagged with its family; construction validates the family rules.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    family: Family,
    filling: Filling,
}

impl Tableau {
    pub fn new(family: Family, filling: Filling) -> Result<Self> {
        validate(family, &filling)?;
        Ok(Tableau { family, filling })
    }

    /// Skips validation; for constructions that are correct by design and
    /// checked exhaustively in tests.
    pub(crate) fn new_unchecked(family: Family, filling: Filling) -> Self {
        debug_assert!(
            validate(family, &filling).is_ok(),
            "{family} invariant broken: {:?}",
            validate(family, &filling)
        );
        Tableau { family, filling }
    }

    /// Convenience constructor from row strings (no empty rows).
    pub fn from_strs(family: Family, rows: &[&str]) -> Result<Self> {
        Tableau::new(family, Filling::from_strs(rows)?)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    pub fn into_filling(self) -> Filling {
        self.filling
    }

    pub fn shape(&self) -> &FerrersShape {
        self.filling.shape()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.filling.get(r, c)
    }

    pub fn labeling(&self) -> BorderLabeling {
        BorderLabeling::new(self.shape(), self.family.start_label())
    }

    pub fn size(&self) -> usize {
        self.shape().size(self.family)
    }

    pub fn rows(&self) -> &[u64] {
        self.filling.rows()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::serialize(self))
    }
}

fn violation(family: Family, rule: &'static str, location: String) -> Error {
    Error::Violation {
        family: family.tag(),
        rule,
        location,
    }
}

/// Checks the family rules. Violations name the rule and 1-based positions
/// of the first offending cells in row-major order.
pub fn validate(family: Family, filling: &Filling) -> Result<()> {
    let shape = filling.shape();
    shape.check_family(family)?;
    match family {
        Family::Ew => {
            if filling.row_bits(0) != filling.row_full(0) {
                let c = (!filling.row_bits(0) & filling.row_full(0)).trailing_zeros() as usize;
                return Err(violation(
                    family,
                    "top row not all 1",
                    format!("row 1 column {}", c + 1),
                ));
            }
            for r in 1..shape.num_rows() {
                if filling.row_bits(r) == filling.row_full(r) {
                    return Err(violation(family, "row without 0", format!("row {}", r + 1)));
                }
            }
            check_rectangles(family, filling)
        }
        Family::New => {
            check_columns_have_one(family, filling)?;
            check_rectangles(family, filling)
        }
        Family::Le => {
            check_columns_have_one(family, filling)?;
            let mut above = 0u64;
            for r in 0..shape.num_rows() {
                let x = filling.row_bits(r);
                let bad = le_condition_failures(above, x, shape.row_len(r));
                if bad != 0 {
                    let c = bad.trailing_zeros() as usize;
                    return Err(violation(
                        family,
                        "0 with a 1 above and a 1 to its left",
                        format!("row {} column {}", r + 1, c + 1),
                    ));
                }
                above |= x;
            }
            Ok(())
        }
        Family::Tree => {
            if !filling.get(0, 0) {
                return Err(violation(
                    family,
                    "top-left cell not dotted",
                    "row 1 column 1".into(),
                ));
            }
            let mut above = 0u64;
            for r in 0..shape.num_rows() {
                let x = filling.row_bits(r);
                if x == 0 {
                    return Err(violation(
                        family,
                        "row without dot",
                        format!("row {}", r + 1),
                    ));
                }
                let bad = tree_dot_failures(r, above, x);
                if bad != 0 {
                    let c = bad.trailing_zeros() as usize;
                    return Err(violation(
                        family,
                        "dot needs a dot above or to its left, but not both",
                        format!("row {} column {}", r + 1, c + 1),
                    ));
                }
                above |= x;
            }
            if let Some(c) = (0..shape.num_cols()).find(|&c| filling.ones_in_col(c) == 0) {
                return Err(violation(
                    family,
                    "column without dot",
                    format!("column {}", c + 1),
                ));
            }
            Ok(())
        }
    }
}

fn check_columns_have_one(family: Family, filling: &Filling) -> Result<()> {
    match (0..filling.shape().num_cols()).find(|&c| filling.ones_in_col(c) == 0) {
        Some(c) => Err(violation(
            family,
            "column without 1",
            format!("column {}", c + 1),
        )),
        None => Ok(()),
    }
}

/// Two rows avoid the mixed rectangle iff, on the lower row's columns, one
/// row's set of 1s contains the other's.
pub(crate) fn rows_comparable(upper: u64, lower: u64, lower_len: usize) -> Option<(usize, usize)> {
    let m = row_mask(lower_len);
    let a = upper & !lower & m;
    let b = !upper & lower & m;
    if a != 0 && b != 0 {
        let (x, y) = (a.trailing_zeros() as usize, b.trailing_zeros() as usize);
        Some((x.min(y), x.max(y)))
    } else {
        None
    }
}

fn check_rectangles(family: Family, filling: &Filling) -> Result<()> {
    let shape = filling.shape();
    for s in 1..shape.num_rows() {
        for u in 0..s {
            if let Some((a, b)) =
                rows_comparable(filling.row_bits(u), filling.row_bits(s), shape.row_len(s))
            {
                return Err(violation(
                    family,
                    "forbidden rectangle",
                    format!(
                        "rows {{{},{}}} columns {{{},{}}}",
                        u + 1,
                        s + 1,
                        a + 1,
                        b + 1
                    ),
                ));
            }
        }
    }
    Ok(())
}

/// Cells of row `x` that are 0 but have a 1 above (`above`) and a 1 to the left.
pub(crate) fn le_condition_failures(above: u64, x: u64, len: usize) -> u64 {
    if x == 0 {
        return 0;
    }
    let first = x.trailing_zeros();
    let right_of_first = row_mask(len) & !row_mask(first as usize + 1);
    above & right_of_first & !x
}

/// Dots of row `r` (bits `x`) breaking the "above xor left" rule, given the
/// dots in the rows above.
pub(crate) fn tree_dot_failures(r: usize, above: u64, x: u64) -> u64 {
    let mut bad = 0u64;
    let mut left = false;
    let mut bits = x;
    while bits != 0 {
        let c = bits.trailing_zeros();
        let has_above = above >> c & 1 == 1;
        let is_root = r == 0 && c == 0;
        if !is_root && has_above == left {
            bad |= 1 << c;
        }
        left = true;
        bits &= bits - 1;
    }
    bad
}

/// Reflects an EW tableau in the NW-SE diagonal, complements it and drops
/// the leftmost column (the image of the all-1 top row), keeping empty rows.
pub fn reflect_complement(e: &Tableau) -> Result<Tableau> {
    require_family(e, Family::Ew)?;
    let shape = e.shape();
    let new_rows: Vec<usize> = (0..shape.num_cols())
        .map(|c| shape.col_height(c) - 1)
        .collect();
    let new_shape = FerrersShape::new(new_rows)?;
    let mut out = Filling::zeros(new_shape);
    for (r, c) in shape.cells() {
        if r > 0 && !e.get(r, c) {
            out.set(c, r - 1, true);
        }
    }
    Ok(Tableau::new_unchecked(Family::New, out))
}

/// Inverse of [`reflect_complement`].
pub fn reflect_complement_inverse(n: &Tableau) -> Result<Tableau> {
    require_family(n, Family::New)?;
    let shape = n.shape();
    let mut ew_rows = vec![shape.num_rows()];
    ew_rows.extend((0..shape.num_cols()).map(|c| shape.col_height(c)));
    let ew_shape = FerrersShape::new(ew_rows)?;
    let mut out = Filling::zeros(ew_shape.clone());
    for (r, c) in ew_shape.cells() {
        let value = r == 0 || !n.get(c, r - 1);
        out.set(r, c, value);
    }
    Ok(Tableau::new_unchecked(Family::Ew, out))
}

pub(crate) fn require_family(t: &Tableau, family: Family) -> Result<()> {
    if t.family() == family {
        Ok(())
    } else {
        Err(Error::WrongFamily {
            expected: family.tag(),
            got: t.family().tag(),
        })
    }
}
