//! Subgraphs of a Ferrers graph given by dotted fillings, and the external
//! activity of spanning trees.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::FerrersGraph;
use crate::shape::FerrersShape;
use crate::tableau::Filling;

/// The edges of the dotted cells; a filling bit of 1 is a dot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningSubgraph {
    graph: FerrersGraph,
    dots: Filling,
}

pub fn spanning_tree_of(dots: &Filling) -> Result<SpanningSubgraph> {
    Ok(SpanningSubgraph {
        graph: FerrersGraph::new(dots.shape())?,
        dots: dots.clone(),
    })
}

impl SpanningSubgraph {
    pub fn graph(&self) -> &FerrersGraph {
        &self.graph
    }

    pub fn dots(&self) -> &Filling {
        &self.dots
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        self.dots.get(r, c)
    }

    /// Kept edges as `(row label, column label)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let labels = self.graph.labels();
        self.dots
            .shape()
            .cells()
            .filter(|&(r, c)| self.dots.get(r, c))
            .map(|(r, c)| (labels.row_label(r), labels.col_label(c)))
            .collect()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.graph.n() + 1];
        for (t, b) in self.edges() {
            adj[t].push(b);
            adj[b].push(t);
        }
        adj
    }

    /// BFS parents from vertex 0; `None` for unreached vertices.
    fn parents(&self) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut parent = vec![None; adj.len()];
        parent[0] = Some(0);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if parent[v].is_none() {
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        parent
    }

    pub fn is_spanning_tree(&self) -> bool {
        let vertices = self.graph.n() + 1;
        self.edges().len() == vertices - 1 && self.parents().iter().all(Option::is_some)
    }

    /// The tree path from `v` to the sink, both ends included.
    pub fn path_to_sink(&self, v: usize) -> Result<Vec<usize>> {
        if !self.is_spanning_tree() {
            return Err(Error::NotSpanningTree(format!(
                "{} edges on {} vertices",
                self.edges().len(),
                self.graph.n() + 1
            )));
        }
        let parent = self.parents();
        let mut path = vec![v];
        let mut u = v;
        while u != 0 {
            u = parent[u].expect("spanning");
            path.push(u);
        }
        Ok(path)
    }
}

/// The cells of the shape row by row, left to right.
pub fn row_major_order(shape: &FerrersShape) -> Vec<(usize, usize)> {
    shape.cells().collect()
}

/// Ranks of an order listing every cell once and increasing along rows
/// and down columns.
fn ranks(shape: &FerrersShape, order: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
    let mut rank: Vec<Vec<Option<usize>>> =
        shape.rows().iter().map(|&len| vec![None; len]).collect();
    for (i, &(r, c)) in order.iter().enumerate() {
        if !shape.contains(r, c) {
            return Err(Error::IncompatibleOrder(format!("({r},{c}) is not a cell")));
        }
        if rank[r][c].replace(i).is_some() {
            return Err(Error::IncompatibleOrder(format!("({r},{c}) listed twice")));
        }
    }
    let rank: Vec<Vec<usize>> = rank
        .into_iter()
        .enumerate()
        .map(|(r, row)| {
            row.into_iter()
                .enumerate()
                .map(|(c, x)| {
                    x.ok_or_else(|| Error::IncompatibleOrder(format!("({r},{c}) missing")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    for (r, c) in shape.cells() {
        if c > 0 && rank[r][c - 1] > rank[r][c] {
            return Err(Error::IncompatibleOrder(format!(
                "row {r} decreases at column {c}"
            )));
        }
        if r > 0 && rank[r - 1][c] > rank[r][c] {
            return Err(Error::IncompatibleOrder(format!(
                "column {c} decreases at row {r}"
            )));
        }
    }
    Ok(rank)
}

pub fn is_compatible_order(shape: &FerrersShape, order: &[(usize, usize)]) -> bool {
    ranks(shape, order).is_ok()
}

/// Number of non-tree edges that are the least edge, under `order`, of the
/// cycle they close with the tree.
pub fn external_activity(s: &SpanningSubgraph, order: &[(usize, usize)]) -> Result<usize> {
    let shape = s.dots.shape();
    let rank = ranks(shape, order)?;
    if !s.is_spanning_tree() {
        return Err(Error::NotSpanningTree(format!(
            "{} edges on {} vertices",
            s.edges().len(),
            s.graph.n() + 1
        )));
    }
    let labels = s.graph.labels();
    let rank_of = |u: usize, v: usize| {
        let (t, b) = if labels.is_row_label(u) {
            (u, v)
        } else {
            (v, u)
        };
        let r = labels
            .row_labels()
            .iter()
            .position(|&x| x == t)
            .expect("row label");
        let c = labels
            .col_labels()
            .iter()
            .position(|&x| x == b)
            .expect("column label");
        rank[r][c]
    };
    let mut active = 0;
    for (r, c) in shape.cells() {
        if s.dots.get(r, c) {
            continue;
        }
        let (t, b) = (labels.row_label(r), labels.col_label(c));
        let cycle = tree_path(s, t, b)?;
        let least_on_path = cycle
            .windows(2)
            .map(|w| rank_of(w[0], w[1]))
            .min()
            .expect("distinct endpoints");
        if rank[r][c] < least_on_path {
            active += 1;
        }
    }
    Ok(active)
}

/// The tree path between two vertices.
fn tree_path(s: &SpanningSubgraph, u: usize, v: usize) -> Result<Vec<usize>> {
    let mut a = s.path_to_sink(u)?;
    let mut b = s.path_to_sink(v)?;
    while a.len() >= 2 && b.len() >= 2 && a[a.len() - 2] == b[b.len() - 2] {
        a.pop();
        b.pop();
    }
    b.pop();
    a.extend(b.into_iter().rev());
    Ok(a)
}

/// On the tree path from each vertex to the sink, row labels strictly
/// decrease and column labels strictly increase.
pub fn paths_zigzag(s: &SpanningSubgraph) -> Result<bool> {
    let labels = s.graph.labels();
    for v in 0..=s.graph.n() {
        let path = s.path_to_sink(v)?;
        let rows: Vec<_> = path.iter().filter(|&&x| labels.is_row_label(x)).collect();
        let cols: Vec<_> = path.iter().filter(|&&x| !labels.is_row_label(x)).collect();
        if !rows.windows(2).all(|w| w[0] > w[1]) || !cols.windows(2).all(|w| w[0] < w[1]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate;
    use crate::shape::{shapes_with_cells, Family};
    use crate::tableau::{validate, Tableau};

    fn dots(rows: &[&str]) -> Filling {
        let rows: Vec<String> = rows
            .iter()
            .map(|r| r.replace('*', "1").replace('.', "0"))
            .collect();
        let rows: Vec<&str> = rows.iter().map(String::as_str).collect();
        Filling::from_strs(&rows).unwrap()
    }

    #[test]
    fn tree_example_has_no_active_edges() {
        let d = dots(&["**.", ".**", "*"]);
        assert!(validate(Family::Tree, &d).is_ok());
        let s = spanning_tree_of(&d).unwrap();
        assert!(s.is_spanning_tree());
        assert_eq!(
            external_activity(&s, &row_major_order(d.shape())).unwrap(),
            0
        );
        assert!(paths_zigzag(&s).unwrap());
    }

    #[test]
    fn full_square_is_not_a_tree() {
        let s = spanning_tree_of(&dots(&["**", "**"])).unwrap();
        assert!(!s.is_spanning_tree());
        let order = row_major_order(s.dots().shape());
        assert!(matches!(
            external_activity(&s, &order),
            Err(Error::NotSpanningTree(_))
        ));
    }

    #[test]
    fn orders_validated() {
        let shape = FerrersShape::new(vec![2, 2]).unwrap();
        assert!(is_compatible_order(&shape, &row_major_order(&shape)));
        assert!(is_compatible_order(
            &shape,
            &[(0, 0), (1, 0), (0, 1), (1, 1)]
        ));
        assert!(!is_compatible_order(
            &shape,
            &[(0, 1), (0, 0), (1, 0), (1, 1)]
        ));
        assert!(!is_compatible_order(&shape, &[(0, 0), (0, 1), (1, 0)]));
        let s = spanning_tree_of(&dots(&["**", "*."])).unwrap();
        assert!(matches!(
            external_activity(&s, &[(1, 1), (0, 0), (0, 1), (1, 0)]),
            Err(Error::IncompatibleOrder(_))
        ));
    }

    #[test]
    fn square_subsets() {
        let shape = FerrersShape::new(vec![2, 2]).unwrap();
        let order = row_major_order(&shape);
        let mut zero_activity = 0;
        for mask in 0..16u64 {
            let f = Filling::new(shape.clone(), vec![mask & 3, mask >> 2]).unwrap();
            let s = spanning_tree_of(&f).unwrap();
            if s.is_spanning_tree() && external_activity(&s, &order).unwrap() == 0 {
                zero_activity += 1;
            }
        }
        assert_eq!(zero_activity, enumerate(&shape, Family::Tree).count());
    }

    /// Column-major order is also compatible, and gives the same trees.
    #[test]
    fn tree_like_iff_inactive_spanning_tree() {
        for cells in 1..=8 {
            for shape in shapes_with_cells(cells) {
                let rows = row_major_order(&shape);
                let mut cols = rows.clone();
                cols.sort_by_key(|&(r, c)| (c, r));
                let mut masks = 0u64..(1 << cells);
                let all: Vec<(usize, usize)> = shape.cells().collect();
                for mask in &mut masks {
                    let mut f = Filling::zeros(shape.clone());
                    for (i, &(r, c)) in all.iter().enumerate() {
                        f.set(r, c, mask >> i & 1 == 1);
                    }
                    let tree_like = validate(Family::Tree, &f).is_ok();
                    let s = spanning_tree_of(&f).unwrap();
                    let inactive = |order: &[(usize, usize)]| {
                        s.is_spanning_tree() && external_activity(&s, order).unwrap() == 0
                    };
                    assert_eq!(tree_like, inactive(&rows), "{shape} {mask:b}");
                    assert_eq!(tree_like, inactive(&cols), "{shape} {mask:b}");
                    if tree_like {
                        assert!(paths_zigzag(&s).unwrap());
                        let _ = Tableau::new(Family::Tree, f).unwrap();
                    }
                }
            }
        }
    }
}
