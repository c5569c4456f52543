//! Orientations of Ferrers graphs and their correspondence with EW
//! tableaux: a 0 in cell (r,c) orients the edge from the row vertex to the
//! column vertex, a 1 from the column to the row.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::FerrersGraph;
use crate::shape::Family;
use crate::stats::run_decomposition;
use crate::tableau::{Filling, Tableau};
use crate::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeDirection {
    RowToCol,
    ColToRow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    graph: FerrersGraph,
    /// One entry per edge, in the graph's row-major edge order.
    directions: Vec<EdgeDirection>,
}

impl Orientation {
    pub fn new(graph: FerrersGraph, directions: Vec<EdgeDirection>) -> Result<Self> {
        if directions.len() != graph.edges().len() {
            return Err(Error::ShapeMismatch(format!(
                "{} directions for {} edges",
                directions.len(),
                graph.edges().len()
            )));
        }
        Ok(Orientation { graph, directions })
    }

    /// Reads any 0/1 filling as an orientation, valid EW or not.
    pub fn from_filling(f: &Filling) -> Result<Self> {
        let graph = FerrersGraph::new(f.shape())?;
        let directions = f
            .shape()
            .cells()
            .map(|(r, c)| {
                if f.get(r, c) {
                    EdgeDirection::ColToRow
                } else {
                    EdgeDirection::RowToCol
                }
            })
            .collect();
        Ok(Orientation { graph, directions })
    }

    pub fn graph(&self) -> &FerrersGraph {
        &self.graph
    }

    pub fn directions(&self) -> &[EdgeDirection] {
        &self.directions
    }

    /// The edges as `(tail, head)` vertex pairs.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph
            .edges()
            .iter()
            .zip(&self.directions)
            .map(|(&(t, b), d)| match d {
                EdgeDirection::RowToCol => (t, b),
                EdgeDirection::ColToRow => (b, t),
            })
    }

    pub fn out_neighbors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.graph.n() + 1];
        for (u, v) in self.arcs() {
            out[u].push(v);
        }
        out
    }

    pub fn sinks(&self) -> Vec<usize> {
        let out = self.out_neighbors();
        (0..out.len()).filter(|&v| out[v].is_empty()).collect()
    }

    /// A topological order (tails before heads), or `None` if cyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let out = self.out_neighbors();
        let mut indegree = vec![0usize; out.len()];
        for (_, v) in self.arcs() {
            indegree[v] += 1;
        }
        let mut queue: VecDeque<usize> = (0..out.len()).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(out.len());
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &out[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        (order.len() == out.len()).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// The cell values of the orientation, 1 for column-to-row edges.
    pub fn filling(&self) -> Filling {
        let shape = self.graph.shape();
        let mut f = Filling::zeros(shape.clone());
        for ((r, c), d) in shape.cells().zip(&self.directions) {
            f.set(r, c, *d == EdgeDirection::ColToRow);
        }
        f
    }
}

pub fn orientation_of(t: &Tableau) -> Result<Orientation> {
    crate::tableau::require_family(t, Family::Ew)?;
    Orientation::from_filling(t.filling())
}

/// The EW tableau of an acyclic orientation whose only sink is vertex 0.
pub fn tableau_of(o: &Orientation) -> Result<Tableau> {
    if !o.is_acyclic() {
        return Err(Error::CyclicOrientation);
    }
    Tableau::new(Family::Ew, o.filling())
}

/// A directed cycle as a vertex sequence (first vertex not repeated).
/// When the orientation has any cycle, a 4-cycle is returned if one exists.
pub fn find_directed_cycle(o: &Orientation) -> Option<Vec<usize>> {
    if o.is_acyclic() {
        return None;
    }
    four_cycle(o).or_else(|| any_cycle(o))
}

/// A cycle `t_1 -> b_1 -> t_2 -> b_2 -> t_1` on two rows and two columns.
fn four_cycle(o: &Orientation) -> Option<Vec<usize>> {
    let f = o.filling();
    let shape = f.shape();
    let labels = o.graph.labels();
    for r2 in 0..shape.num_rows() {
        for r1 in 0..r2 {
            let len = shape.row_len(r2);
            // Columns with a 0 in r1 and a 1 in r2, and the reverse.
            let down = !f.row_bits(r1) & f.row_bits(r2) & crate::tableau::row_mask(len);
            let up = f.row_bits(r1) & !f.row_bits(r2) & crate::tableau::row_mask(len);
            if down != 0 && up != 0 {
                let (c1, c2) = (down.trailing_zeros() as usize, up.trailing_zeros() as usize);
                return Some(vec![
                    labels.row_label(r1),
                    labels.col_label(c1),
                    labels.row_label(r2),
                    labels.col_label(c2),
                ]);
            }
        }
    }
    None
}

fn any_cycle(o: &Orientation) -> Option<Vec<usize>> {
    let out = o.out_neighbors();
    let n = out.len();
    // 0 unvisited, 1 on stack, 2 done.
    let mut state = vec![0u8; n];
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(
        u: usize,
        out: &[Vec<usize>],
        state: &mut [u8],
        stack: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        state[u] = 1;
        stack.push(u);
        for &v in &out[u] {
            if state[v] == 1 {
                let start = stack
                    .iter()
                    .position(|&x| x == v)
                    .expect("v is on the stack");
                return Some(stack[start..].to_vec());
            }
            if state[v] == 0 {
                if let Some(c) = dfs(v, out, state, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        state[u] = 2;
        None
    }
    (0..n).find_map(|s| {
        if state[s] == 0 {
            dfs(s, &out, &mut state, &mut stack)
        } else {
            None
        }
    })
}

/// Number of vertices on a longest directed path, the sink included.
pub fn longest_directed_path(o: &Orientation) -> Result<usize> {
    let order = o.topological_order().ok_or(Error::CyclicOrientation)?;
    let out = o.out_neighbors();
    let mut longest = vec![1usize; out.len()];
    for &u in order.iter().rev() {
        for &v in &out[u] {
            longest[u] = longest[u].max(longest[v] + 1);
        }
    }
    Ok(longest.into_iter().max().unwrap_or(0))
}

/// Whether every arc `u -> v` goes from a later run block of `p` to a
/// strictly earlier one, so that no directed path meets a block twice.
pub fn arcs_descend_blocks(o: &Orientation, p: &Permutation) -> bool {
    let mut block = vec![0usize; p.len() + 1];
    for (i, b) in run_decomposition(p).iter().enumerate() {
        for &a in b {
            block[a] = i + 1;
        }
    }
    o.arcs().all(|(u, v)| block[v] < block[u])
}
