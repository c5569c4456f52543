//! The bipartite Ferrers graph of a shape: one vertex per border label, one
//! edge per cell. Vertex 0 (the top row) is the sink.

use crate::error::{Error, Result};
use crate::shape::{BorderLabeling, FerrersShape, Line};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersGraph {
    shape: FerrersShape,
    labels: BorderLabeling,
    /// `(row label, column label)` per cell, row-major.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl FerrersGraph {
    pub fn new(shape: &FerrersShape) -> Result<Self> {
        if shape.num_cells() == 0 || shape.rows().contains(&0) {
            return Err(Error::InvalidShape(
                "a Ferrers graph needs a shape with no empty rows".into(),
            ));
        }
        let labels = BorderLabeling::new(shape, 0);
        let n = labels.max_label();
        let mut adjacency = vec![Vec::new(); n + 1];
        let mut edges = Vec::with_capacity(shape.num_cells());
        for (r, c) in shape.cells() {
            let (t, b) = (labels.row_label(r), labels.col_label(c));
            edges.push((t, b));
            adjacency[t].push(b);
            adjacency[b].push(t);
        }
        Ok(FerrersGraph {
            shape: shape.clone(),
            labels,
            edges,
            adjacency,
        })
    }

    pub fn shape(&self) -> &FerrersShape {
        &self.shape
    }

    pub fn labels(&self) -> &BorderLabeling {
        &self.labels
    }

    /// Number of non-sink vertices; vertices are `0..=n`.
    pub fn n(&self) -> usize {
        self.labels.max_label()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_row(&self, v: usize) -> bool {
        self.labels.is_row_label(v)
    }

    pub fn has_edge(&self, row_label: usize, col_label: usize) -> bool {
        match (self.labels.line(row_label), self.labels.line(col_label)) {
            (Some(Line::Row(r)), Some(Line::Col(c))) => self.shape.contains(r, c),
            _ => false,
        }
    }

    /// Row-major cell index of the edge `(row label, column label)`.
    pub fn edge_index(&self, row_label: usize, col_label: usize) -> Option<usize> {
        match (self.labels.line(row_label), self.labels.line(col_label)) {
            (Some(Line::Row(r)), Some(Line::Col(c))) if self.shape.contains(r, c) => {
                Some(self.shape.rows()[..r].iter().sum::<usize>() + c)
            }
            _ => None,
        }
    }
}

/// The Ferrers graph of an EW-family shape.
pub fn ferrers_graph(shape: &FerrersShape) -> Result<FerrersGraph> {
    FerrersGraph::new(shape)
}
