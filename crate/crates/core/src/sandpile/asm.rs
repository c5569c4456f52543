//! The Abelian sandpile model on a Ferrers graph with sink 0.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use crate::bijections::psi;
use crate::error::{Error, Result};
use crate::graph::FerrersGraph;
use crate::shape::Family;
use crate::tableau::{require_family, Tableau};

/// Grain counts on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SandpileConfig {
    grains: Vec<u64>,
}

impl SandpileConfig {
    /// `grains[i]` is the count on vertex `i + 1`.
    pub fn new(grains: Vec<u64>) -> Self {
        SandpileConfig { grains }
    }

    pub fn zeros(n: usize) -> Self {
        SandpileConfig { grains: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.grains.len()
    }

    pub fn get(&self, v: usize) -> u64 {
        self.grains[v - 1]
    }

    pub fn set(&mut self, v: usize, value: u64) {
        self.grains[v - 1] = value;
    }

    pub fn grains(&self) -> &[u64] {
        &self.grains
    }

    pub fn total(&self) -> u64 {
        self.grains.iter().sum()
    }

    pub fn is_stable(&self, g: &FerrersGraph) -> bool {
        self.first_unstable(g).is_none()
    }

    fn first_unstable(&self, g: &FerrersGraph) -> Option<usize> {
        (1..=self.n()).find(|&v| self.get(v) >= g.degree(v) as u64)
    }

    fn check_size(&self, g: &FerrersGraph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::InvalidConfig(format!(
                "{} vertices given, graph has {}",
                self.n(),
                g.n()
            )));
        }
        Ok(())
    }

    /// Parses `"v:g v:g ..."`; vertices not listed hold no grains.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut c = SandpileConfig::zeros(n);
        for tok in text.split_whitespace() {
            let bad = || Error::InvalidConfig(format!("bad entry {tok:?}"));
            let (v, g) = tok.split_once(':').ok_or_else(bad)?;
            let v: usize = v.parse().map_err(|_| bad())?;
            let g: u64 = g.parse().map_err(|_| bad())?;
            if v == 0 || v > n {
                return Err(Error::InvalidConfig(format!("vertex {v} outside 1..={n}")));
            }
            c.set(v, g);
        }
        Ok(c)
    }
}

impl fmt::Display for SandpileConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .grains
            .iter()
            .enumerate()
            .map(|(i, g)| format!("{}:{g}", i + 1))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Worklist discipline for picking the next unstable vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schedule {
    Fifo,
    Lifo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub config: SandpileConfig,
    /// `odometer[i]` is the number of topplings of vertex `i + 1`.
    pub odometer: Vec<u64>,
}

pub const DEFAULT_TOPPLE_LIMIT: u64 = 100_000_000;

pub fn stabilize(g: &FerrersGraph, c: &SandpileConfig) -> Result<Stabilization> {
    stabilize_with(g, c, Schedule::Fifo, DEFAULT_TOPPLE_LIMIT)
}

/// Topples unstable vertices one at a time until none is left.
pub fn stabilize_with(
    g: &FerrersGraph,
    c: &SandpileConfig,
    schedule: Schedule,
    limit: u64,
) -> Result<Stabilization> {
    c.check_size(g)?;
    let mut config = c.clone();
    let mut odometer = vec![0u64; c.n()];
    let mut queued = vec![false; c.n() + 1];
    let mut work: VecDeque<usize> = VecDeque::new();
    for (v, q) in queued.iter_mut().enumerate().skip(1) {
        if config.get(v) >= g.degree(v) as u64 {
            work.push_back(v);
            *q = true;
        }
    }
    let mut topples = 0u64;
    loop {
        let next = match schedule {
            Schedule::Fifo => work.pop_front(),
            Schedule::Lifo => work.pop_back(),
        };
        let Some(v) = next else { break };
        queued[v] = false;
        let d = g.degree(v) as u64;
        if config.get(v) < d {
            continue;
        }
        topples += 1;
        if topples > limit {
            return Err(Error::ToppleLimit(limit));
        }
        config.set(v, config.get(v) - d);
        odometer[v - 1] += 1;
        for &w in g.neighbors(v) {
            if w == 0 {
                continue;
            }
            config.set(w, config.get(w) + 1);
            if !queued[w] && config.get(w) >= g.degree(w) as u64 {
                work.push_back(w);
                queued[w] = true;
            }
        }
        if !queued[v] && config.get(v) >= d {
            work.push_back(v);
            queued[v] = true;
        }
    }
    Ok(Stabilization { config, odometer })
}

/// One extra grain on every neighbour of the sink.
pub fn add_sink_neighbors(g: &FerrersGraph, c: &SandpileConfig) -> SandpileConfig {
    let mut out = c.clone();
    for &v in g.neighbors(0) {
        out.set(v, out.get(v) + 1);
    }
    out
}

/// One extra grain on every column vertex.
pub fn add_per_column(g: &FerrersGraph, c: &SandpileConfig) -> SandpileConfig {
    let mut out = c.clone();
    for &v in g.labels().col_labels() {
        out.set(v, out.get(v) + 1);
    }
    out
}

/// Whether a stable configuration is reproduced by stabilizing it with one
/// grain added next to the sink.
pub fn is_recurrent(g: &FerrersGraph, c: &SandpileConfig) -> Result<bool> {
    c.check_size(g)?;
    if let Some(v) = c.first_unstable(g) {
        return Err(Error::Unstable(v));
    }
    Ok(stabilize(g, &add_sink_neighbors(g, c))?.config == *c)
}

pub const MRC_STATE_LIMIT: u64 = 10_000_000;

/// Every recurrent configuration with the least total number of grains,
/// found by testing all stable configurations; sorted.
pub fn enumerate_minimal_recurrent(g: &FerrersGraph) -> Result<Vec<SandpileConfig>> {
    let n = g.n();
    let degrees: Vec<u64> = (1..=n).map(|v| g.degree(v) as u64).collect();
    let states = degrees
        .iter()
        .try_fold(1u64, |acc, &d| acc.checked_mul(d))
        .filter(|&s| s <= MRC_STATE_LIMIT)
        .ok_or_else(|| {
            Error::Guardrail(format!("more than {MRC_STATE_LIMIT} stable configurations"))
        })?;
    let tail_states = states / degrees[0];
    // One chunk per grain count on vertex 1; chunks are merged in order.
    let recurrent: Vec<SandpileConfig> = (0..degrees[0])
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            let mut grains = vec![0u64; n];
            grains[0] = first;
            for mut k in 0..tail_states {
                for v in 1..n {
                    grains[v] = k % degrees[v];
                    k /= degrees[v];
                }
                let c = SandpileConfig::new(grains.clone());
                if is_recurrent(g, &c).expect("stable by construction") {
                    found.push(c);
                }
            }
            found
        })
        .flatten()
        .collect();
    let least = recurrent.iter().map(SandpileConfig::total).min();
    let mut minimal: Vec<_> = recurrent
        .into_iter()
        .filter(|c| Some(c.total()) == least)
        .collect();
    minimal.sort();
    Ok(minimal)
}

/// Column vertices get the number of 0s in their column, row vertices the
/// number of 1s in their row.
pub fn config_of(e: &Tableau) -> Result<SandpileConfig> {
    require_family(e, Family::Ew)?;
    let f = e.filling();
    let labels = e.labeling();
    let mut c = SandpileConfig::zeros(labels.max_label());
    for (c_idx, &label) in labels.col_labels().iter().enumerate() {
        c.set(label, f.zeros_in_col(c_idx) as u64);
    }
    for (r, &label) in labels.row_labels().iter().enumerate().skip(1) {
        c.set(label, f.ones_in_row(r) as u64);
    }
    Ok(c)
}

/// Topples the vertices in `order`, each exactly once, starting from `c`.
/// Returns `None` if some vertex is stable when its turn comes.
pub fn topple_in_order(
    g: &FerrersGraph,
    c: &SandpileConfig,
    order: &[usize],
) -> Result<Option<SandpileConfig>> {
    c.check_size(g)?;
    let mut config = c.clone();
    for &v in order {
        let d = g.degree(v) as u64;
        if config.get(v) < d {
            return Ok(None);
        }
        config.set(v, config.get(v) - d);
        for &w in g.neighbors(v) {
            if w != 0 {
                config.set(w, config.get(w) + 1);
            }
        }
    }
    Ok(Some(config))
}

/// Whether toppling the configuration of `e`, with a grain added to each
/// column, in the reading order of `e` is legal and returns to the
/// configuration of `e`.
pub fn toppling_order_check(e: &Tableau) -> Result<bool> {
    let g = FerrersGraph::new(e.shape())?;
    let c = config_of(e)?;
    let order = psi(e)?;
    let after = topple_in_order(&g, &add_per_column(&g, &c), order.letters())?;
    Ok(after.as_ref() == Some(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate, enumerate_size};
    use crate::shape::{shapes_with_cells, FerrersShape};
    use std::collections::BTreeSet;

    fn graph(rows: &[usize]) -> FerrersGraph {
        FerrersGraph::new(&FerrersShape::new(rows.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn two_leaves() {
        let g = graph(&[2]);
        let s = stabilize(&g, &SandpileConfig::new(vec![1, 1])).unwrap();
        assert_eq!(s.config, SandpileConfig::zeros(2));
        assert_eq!(s.odometer, vec![1, 1]);
        assert!(is_recurrent(&g, &SandpileConfig::zeros(2)).unwrap());
        let mrc = enumerate_minimal_recurrent(&g).unwrap();
        assert_eq!(mrc, vec![SandpileConfig::zeros(2)]);
    }

    #[test]
    fn stable_input_untouched() {
        let g = graph(&[3, 2]);
        let c = SandpileConfig::new(vec![0, 1, 1, 1]);
        assert!(c.is_stable(&g));
        let s = stabilize(&g, &c).unwrap();
        assert_eq!(s.config, c);
        assert!(s.odometer.iter().all(|&x| x == 0));
    }

    #[test]
    fn zero_on_square_not_recurrent() {
        let g = graph(&[2, 2]);
        assert!(!is_recurrent(&g, &SandpileConfig::zeros(3)).unwrap());
        let unstable = SandpileConfig::new(vec![5, 0, 0]);
        assert!(matches!(
            is_recurrent(&g, &unstable),
            Err(Error::Unstable(1))
        ));
    }

    #[test]
    fn schedules_agree() {
        let g = graph(&[3, 2]);
        let mut seed = 12345u64;
        for _ in 0..100 {
            let grains = (0..g.n())
                .map(|_| {
                    seed = seed
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    (seed >> 33) % 9
                })
                .collect();
            let c = SandpileConfig::new(grains);
            let a = stabilize_with(&g, &c, Schedule::Fifo, DEFAULT_TOPPLE_LIMIT).unwrap();
            let b = stabilize_with(&g, &c, Schedule::Lifo, DEFAULT_TOPPLE_LIMIT).unwrap();
            assert_eq!(a, b);
            assert!(a.config.is_stable(&g));
        }
    }

    #[test]
    fn topple_limit_reported() {
        let g = graph(&[2, 2]);
        let c = SandpileConfig::new(vec![50, 50, 50]);
        assert!(matches!(
            stabilize_with(&g, &c, Schedule::Fifo, 3),
            Err(Error::ToppleLimit(3))
        ));
    }

    #[test]
    fn config_parse_and_display() {
        let c = SandpileConfig::parse("2:3 1:1", 3).unwrap();
        assert_eq!(c.to_string(), "1:1 2:3 3:0");
        assert!(SandpileConfig::parse("4:1", 3).is_err());
        assert!(SandpileConfig::parse("1-1", 3).is_err());
    }

    #[test]
    fn tree_example_configuration() {
        let e = Tableau::from_strs(Family::Ew, &["111", "101", "0"]).unwrap();
        assert_eq!(psi(&e).unwrap().to_string(), "31254");
        let c = config_of(&e).unwrap();
        assert_eq!(c.grains(), &[2, 0, 1, 0, 1]);
        let g = FerrersGraph::new(e.shape()).unwrap();
        let degrees: Vec<_> = (1..=5).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![3, 2, 2, 1, 3]);
        assert!(c.is_stable(&g));
        assert!(toppling_order_check(&e).unwrap());
    }

    #[test]
    fn single_row_is_zero_and_recurrent() {
        let e = Tableau::from_strs(Family::Ew, &["111"]).unwrap();
        let c = config_of(&e).unwrap();
        assert_eq!(c, SandpileConfig::zeros(3));
        assert!(is_recurrent(&FerrersGraph::new(e.shape()).unwrap(), &c).unwrap());
    }

    #[test]
    fn sink_neighbors_are_columns() {
        for cells in 1..=8 {
            for s in shapes_with_cells(cells) {
                let g = FerrersGraph::new(&s).unwrap();
                let c = SandpileConfig::zeros(g.n());
                assert_eq!(add_sink_neighbors(&g, &c), add_per_column(&g, &c));
            }
        }
    }

    #[test]
    fn recurrent_stabilization_topples_each_vertex_once() {
        let g = graph(&[3, 3, 1]);
        for c in enumerate_minimal_recurrent(&g).unwrap() {
            let s = stabilize(&g, &add_sink_neighbors(&g, &c)).unwrap();
            assert!(s.odometer.iter().all(|&x| x == 1));
        }
    }

    #[test]
    fn ew_configurations_are_the_minimal_recurrent_ones() {
        for cells in 1..=7 {
            for s in shapes_with_cells(cells) {
                let g = FerrersGraph::new(&s).unwrap();
                let mrc: BTreeSet<_> = enumerate_minimal_recurrent(&g)
                    .unwrap()
                    .into_iter()
                    .collect();
                let mut from_ew = BTreeSet::new();
                for e in enumerate(&s, Family::Ew) {
                    assert!(from_ew.insert(config_of(&e).unwrap()));
                }
                assert_eq!(mrc, from_ew, "{s}");
            }
        }
    }

    #[test]
    fn reading_order_topples() {
        for n in 1..=6 {
            for e in enumerate_size(n, Family::Ew) {
                assert!(toppling_order_check(&e).unwrap(), "{e}");
            }
        }
    }
}
