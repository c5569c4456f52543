//! One path-tracing kernel shared by every map that follows paths through
//! a filling. A path enters at a border line, moves cell to cell, turns
//! where the caller's rule says so, and stops when it leaves the shape.

use crate::shape::{FerrersShape, Line};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Heading {
    Down,
    Right,
    Up,
    Left,
}

impl Heading {
    /// Down and Right swap, as do Up and Left.
    pub fn turned(self) -> Heading {
        match self {
            Heading::Down => Heading::Right,
            Heading::Right => Heading::Down,
            Heading::Up => Heading::Left,
            Heading::Left => Heading::Up,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub row: usize,
    pub col: usize,
    /// Heading on arrival at the cell.
    pub heading: Heading,
    pub turned: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTrace {
    pub start: Line,
    pub steps: Vec<Step>,
    pub exit: Line,
}

/// The heading a path has when it enters through `line`: forward paths go
/// down from column tops and right from row starts, reverse paths go up
/// from column bottoms and left from row ends.
pub fn entry_heading(line: Line, forward: bool) -> Heading {
    match (line, forward) {
        (Line::Col(_), true) => Heading::Down,
        (Line::Row(_), true) => Heading::Right,
        (Line::Col(_), false) => Heading::Up,
        (Line::Row(_), false) => Heading::Left,
    }
}

/// Traces a path entering through `start` with the given travel sense.
/// `turn(row, col, heading)` is asked once per visited cell and may update
/// caller state (Algorithm-style fills decide cells on the fly).
pub fn trace(
    shape: &FerrersShape,
    start: Line,
    forward: bool,
    mut turn: impl FnMut(usize, usize, Heading) -> bool,
) -> PathTrace {
    let mut heading = entry_heading(start, forward);
    let mut pos = match start {
        Line::Col(c) if forward => (shape.col_height(c) > 0).then_some((0, c)),
        Line::Col(c) => shape.col_height(c).checked_sub(1).map(|r| (r, c)),
        Line::Row(r) if forward => (shape.row_len(r) > 0).then_some((r, 0)),
        Line::Row(r) => shape.row_len(r).checked_sub(1).map(|c| (r, c)),
    };
    let mut steps = Vec::new();
    let mut last = match start {
        Line::Row(r) => (r, 0),
        Line::Col(c) => (0, c),
    };
    while let Some((r, c)) = pos {
        let turned = turn(r, c, heading);
        steps.push(Step {
            row: r,
            col: c,
            heading,
            turned,
        });
        if turned {
            heading = heading.turned();
        }
        last = (r, c);
        pos = match heading {
            Heading::Down => (shape.contains(r + 1, c)).then_some((r + 1, c)),
            Heading::Right => (shape.contains(r, c + 1)).then_some((r, c + 1)),
            Heading::Up => r.checked_sub(1).map(|r| (r, c)),
            Heading::Left => c.checked_sub(1).map(|c| (r, c)),
        };
    }
    let exit = if steps.is_empty() {
        // An empty row is crossed without visiting any cell.
        start
    } else {
        match heading {
            Heading::Down | Heading::Up => Line::Col(last.1),
            Heading::Right | Heading::Left => Line::Row(last.0),
        }
    };
    PathTrace { start, steps, exit }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straight_paths() {
        let shape = FerrersShape::new(vec![3, 2, 0]).unwrap();
        let t = trace(&shape, Line::Col(1), true, |_, _, _| false);
        assert_eq!(t.exit, Line::Col(1));
        assert_eq!(t.steps.len(), 2);
        let t = trace(&shape, Line::Row(2), true, |_, _, _| false);
        assert_eq!(t.exit, Line::Row(2));
        assert!(t.steps.is_empty());
        let t = trace(&shape, Line::Row(0), false, |_, _, _| false);
        assert_eq!(t.exit, Line::Row(0));
        assert_eq!(t.steps.len(), 3);
    }

    #[test]
    fn turning_everywhere_makes_a_staircase() {
        let shape = FerrersShape::new(vec![2, 2]).unwrap();
        // Down into (0,1), turn right, leave through row 0.
        let t = trace(&shape, Line::Col(1), true, |_, _, _| true);
        assert_eq!(t.exit, Line::Row(0));
        // Right into (1,0), turn down, leave through column 0.
        let t = trace(&shape, Line::Row(1), true, |_, _, _| true);
        assert_eq!(t.exit, Line::Col(0));
        // Up from the bottom of column 1: (1,1) turns left to (1,0), turns up to (0,0), turns left out.
        let t = trace(&shape, Line::Col(1), false, |_, _, _| true);
        assert_eq!(t.exit, Line::Row(0));
        assert_eq!(t.steps.len(), 3);
    }
}
