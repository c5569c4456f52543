//! The individual suites. Tableau suites walk all of `S_n` in parallel and
//! build each tableau with the inverse reading map; graph suites walk the
//! shapes with `n` cells.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bijections::{psi_inverse, psi_with_passes};
use crate::enumerate::enumerate;
use crate::error::{Error, Result};
use crate::graph::FerrersGraph;
use crate::pattern::{contains_pattern, Pattern};
use crate::perm::{factorial, Permutation};
use crate::sandpile::{
    arcs_descend_blocks, config_of, enumerate_minimal_recurrent, external_activity,
    find_directed_cycle, longest_directed_path, orientation_of, paths_zigzag, row_major_order,
    spanning_tree_of, toppling_order_check, Orientation,
};
use crate::shape::{shapes_of_size, shapes_with_cells, Family, FerrersShape, LineKind};
use crate::stats::{
    big_descents, decreasing_adjacencies, excedance_bottoms, fixed_points, rtl_minima,
    run_decomposition,
};
use crate::structure::{is_domination_free, is_top_justified, structure_stats};
use crate::tableau::{row_mask, validate, Filling, Tableau};
use crate::transform::desexc;
use crate::verify::numbers::{binomial, catalan, eulerian, fibonacci, narayana, stirling2};
use crate::verify::report::{Tally, MAX_COUNTEREXAMPLES};

#[derive(Debug, Default)]
pub(super) struct Outcome {
    pub tallies: Vec<Tally>,
    pub counterexamples: Vec<String>,
}

impl Outcome {
    fn tally(&mut self, n: usize, key: impl Into<String>, expected: u64, observed: u64) {
        self.tallies.push(Tally {
            n,
            key: key.into(),
            expected,
            observed,
        });
    }

    fn absorb(&mut self, failures: Vec<(u64, String)>) {
        for (_, msg) in failures {
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(msg);
            }
        }
    }
}

pub(super) fn measure(name: &str) -> &'static str {
    match name {
        "cycles" | "sandpile" | "trees" => "cells",
        _ => "n",
    }
}

pub(super) fn run(name: &str, n: usize, out: &mut Outcome) -> Result<()> {
    match name {
        "thm1" => thm1(n, out),
        "fibonacci" => fibonacci_suite(n, out),
        "stirling_top" => stirling_top(n, out),
        "stirling_domfree" => stirling_domfree(n, out),
        "bigdesc" => bigdesc(n, out),
        "eulerian" => eulerian_suite(n, out),
        "allzero" => allzero(n, out),
        "fixedpts" => fixedpts(n, out),
        "pattern231" => pattern231(n, out),
        "pattern213" => pattern213(n, out),
        "pattern231new" => pattern231new(n, out),
        "noncrossing" => noncrossing(n, out),
        "ordering" => ordering(n, out),
        "paths" => paths(n, out),
        "cycles" => cycles(n, out),
        "sandpile" => sandpile(n, out),
        "trees" => trees(n, out),
        _ => return Err(Error::UnknownSuite(name.to_string())),
    }
    Ok(())
}

/// Keyed counters plus the earliest failures, mergeable in any order.
#[derive(Debug, Default)]
struct Acc {
    counts: BTreeMap<(&'static str, usize), u64>,
    failures: Vec<(u64, String)>,
}

impl Acc {
    fn add(&mut self, key: &'static str, k: usize) {
        *self.counts.entry((key, k)).or_insert(0) += 1;
    }

    fn fail(&mut self, rank: u64, msg: String) {
        self.failures.push((rank, msg));
        if self.failures.len() > 2 * MAX_COUNTEREXAMPLES {
            self.trim();
        }
    }

    fn trim(&mut self) {
        self.failures.sort();
        self.failures.truncate(MAX_COUNTEREXAMPLES);
    }

    fn merge(mut self, other: Acc) -> Acc {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self.failures.extend(other.failures);
        self.trim();
        self
    }

    fn get(&self, key: &'static str, k: usize) -> u64 {
        self.counts.get(&(key, k)).copied().unwrap_or(0)
    }

    /// Histogram of one key.
    fn hist(&self, key: &'static str) -> BTreeMap<usize, u64> {
        self.counts
            .iter()
            .filter(|((k, _), _)| *k == key)
            .map(|(&(_, i), &v)| (i, v))
            .collect()
    }
}

/// Folds `f` over all permutations of `n` letters, each paired with its
/// tableau of `family`.
fn over_tableaux<F>(n: usize, family: Family, f: F) -> Acc
where
    F: Fn(&mut Acc, u64, &Permutation, &Tableau) + Sync,
{
    (0..factorial(n) as usize)
        .into_par_iter()
        .with_min_len(512)
        .fold(Acc::default, |mut acc, rank| {
            let rank = rank as u64;
            let p = Permutation::unrank(n, rank);
            let t = psi_inverse(&p, family).expect("every permutation has a tableau");
            f(&mut acc, rank, &p, &t);
            acc
        })
        .reduce(Acc::default, Acc::merge)
}

fn finish(out: &mut Outcome, mut acc: Acc) -> Acc {
    acc.trim();
    out.absorb(std::mem::take(&mut acc.failures));
    acc
}

/// Expected against observed over the union of both histograms' keys.
fn compare(
    out: &mut Outcome,
    n: usize,
    prefix: &str,
    expected: &BTreeMap<usize, u64>,
    observed: &BTreeMap<usize, u64>,
) {
    let keys: std::collections::BTreeSet<usize> =
        expected.keys().chain(observed.keys()).copied().collect();
    for k in keys {
        let e = expected.get(&k).copied().unwrap_or(0);
        let o = observed.get(&k).copied().unwrap_or(0);
        out.tally(n, format!("{prefix}k={k}"), e, o);
    }
}

fn label_list(labels: &[usize]) -> String {
    if labels.is_empty() {
        "none".into()
    } else {
        labels
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// EW tableaux per shape, counted by filling enumeration, against
/// permutations with the matching excedance bottoms.
fn thm1(n: usize, out: &mut Outcome) {
    let expected: BTreeMap<Vec<usize>, u64> = (0..factorial(n) as usize)
        .into_par_iter()
        .with_min_len(512)
        .fold(BTreeMap::new, |mut m, rank| {
            *m.entry(excedance_bottoms(&Permutation::unrank(n, rank as u64)))
                .or_insert(0) += 1;
            m
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let observed: Vec<(Vec<usize>, u64)> = shapes_of_size(n, Family::Ew)
        .into_par_iter()
        .map(|s| {
            let labels = crate::shape::BorderLabeling::new(&s, 0);
            let rows = labels.row_labels()[1..].to_vec();
            (rows, enumerate(&s, Family::Ew).count() as u64)
        })
        .collect();
    let mut observed: BTreeMap<Vec<usize>, u64> = observed.into_iter().collect();
    let keys: std::collections::BTreeSet<Vec<usize>> =
        expected.keys().chain(observed.keys()).cloned().collect();
    let mut total = 0;
    for k in keys {
        let e = expected.get(k.as_slice()).copied().unwrap_or(0);
        let o = observed.remove(k.as_slice()).unwrap_or(0);
        total += o;
        out.tally(n, format!("bottoms={}", label_list(&k)), e, o);
    }
    out.tally(n, "total", factorial(n), total);
}

fn fibonacci_suite(n: usize, out: &mut Outcome) {
    let acc = over_tableaux(n, Family::Ew, |acc, _, _, t| {
        let s = structure_stats(t).expect("EW");
        if s.is_zero_minimal {
            acc.add("top", t.shape().row_len(0));
        }
    });
    let mut total = 0;
    for k in 1..=n {
        let e = binomial(2 * n - 1 - k, k - 1);
        let o = acc.get("top", k);
        total += o;
        if e != 0 || o != 0 {
            out.tally(n, format!("k={k}"), e, o);
        }
    }
    out.tally(n, "total", fibonacci(2 * n - 2), total);
}

fn stirling_top(n: usize, out: &mut Outcome) {
    let acc = over_tableaux(n, Family::New, |acc, _, _, t| {
        if is_top_justified(t) {
            acc.add("rows", t.shape().num_rows());
        }
    });
    let expected = (1..=n).map(|k| (k, stirling2(n, k))).collect();
    compare(out, n, "", &expected, &acc.hist("rows"));
}

fn starts_with_one_avoiding_32_1(p: &Permutation) -> bool {
    p.at(1) == 1 && !contains_pattern(p, &Pattern::Vincular32_1)
}

fn stirling_domfree(n: usize, out: &mut Outcome) {
    let acc = over_tableaux(n, Family::New, |acc, rank, p, t| {
        let free = is_domination_free(t);
        let perm_side = starts_with_one_avoiding_32_1(p);
        let zero_cols = structure_stats(t).expect("NEW").zero_containing_columns;
        if free {
            acc.add("tab", zero_cols);
        }
        if perm_side {
            acc.add("perm", n - rtl_minima(p).len());
        }
        if free != perm_side || (free && zero_cols != n - rtl_minima(p).len()) {
            acc.fail(
                rank,
                format!("domination-free NEW {p}: tableau {free}, permutation {perm_side}"),
            );
        }
    });
    let acc = finish(out, acc);
    let expected = (0..n).map(|k| (k, stirling2(n - 1, n - 1 - k))).collect();
    compare(out, n, "tableaux:", &expected, &acc.hist("tab"));
    compare(out, n, "permutations:", &expected, &acc.hist("perm"));
}

fn bigdesc(n: usize, out: &mut Outcome) {
    let acc = over_tableaux(n, Family::New, |acc, _, p, t| {
        acc.add(
            "tab",
            structure_stats(t).expect("NEW").zero_containing_columns,
        );
        acc.add("perm", big_descents(p));
    });
    compare(out, n, "", &acc.hist("perm"), &acc.hist("tab"));
}

fn eulerian_suite(n: usize, out: &mut Outcome) {
    let acc = over_tableaux(n, Family::Ew, |acc, _, _, t| {
        acc.add(
            "tab",
            structure_stats(t).expect("EW").zero_containing_columns,
        );
    });
    let expected = (0..n).map(|k| (k, eulerian(n, k))).collect();
    compare(out, n, "", &expected, &acc.hist("tab"));
}

fn allzero(n: usize, out: &mut Outcome) {
    let acc = over_tableaux(n, Family::Ew, |acc, _, p, t| {
        acc.add("tab", structure_stats(t).expect("EW").all_zero_rows);
        acc.add("adj", decreasing_adjacencies(p));
        acc.add("fix", fixed_points(p).iter().filter(|&&x| x != 1).count());
    });
    let tab = acc.hist("tab");
    compare(out, n, "adjacencies:", &acc.hist("adj"), &tab);
    compare(out, n, "fixed:", &acc.hist("fix"), &tab);
}

fn all_one_column_labels(t: &Tableau) -> Vec<usize> {
    let labels = t.labeling();
    let mut out: Vec<usize> = (0..t.shape().num_cols())
        .filter(|&c| t.filling().zeros_in_col(c) == 0)
        .map(|c| labels.col_label(c))
        .collect();
    out.sort_unstable();
    out
}

/// Rows with no 0; an empty row counts.
fn all_one_rows(t: &Tableau) -> usize {
    (0..t.shape().num_rows())
        .filter(|&r| t.filling().zeros_in_row(r) == 0)
        .count()
}

fn fixedpts(n: usize, out: &mut Outcome) {
    let ew = over_tableaux(n, Family::Ew, |acc, rank, p, t| {
        let fixed = fixed_points(&desexc(p));
        if all_one_column_labels(t) == fixed {
            acc.add("ok", 0);
        } else {
            acc.fail(
                rank,
                format!("EW {p}: all-1 columns differ from fixed points"),
            );
        }
    });
    let ew = finish(out, ew);
    out.tally(n, "EW", factorial(n), ew.get("ok", 0));
    let new = over_tableaux(n, Family::New, |acc, rank, p, t| {
        let fixed = fixed_points(&desexc(p));
        let mut predicted = all_one_column_labels(t);
        if t.filling().zeros_in_row(0) == 0 && all_one_rows(t) == 1 {
            predicted.insert(0, 1);
        }
        if predicted == fixed {
            acc.add("ok", 0);
        } else {
            acc.fail(
                rank,
                format!("NEW {p}: all-1 columns differ from fixed points"),
            );
        }
    });
    let new = finish(out, new);
    out.tally(n, "NEW", factorial(n), new.get("ok", 0));
}

fn pattern231(n: usize, out: &mut Outcome) {
    let pat = Pattern::Classical(vec![2, 3, 1]);
    let acc = over_tableaux(n, Family::Ew, |acc, rank, p, t| {
        if t.shape().num_rows() < 2 || contains_pattern(p, &pat) {
            return;
        }
        acc.add("avoid", 0);
        if t.filling().zeros_in_row(1) == 1 {
            acc.add("unique", 0);
        } else {
            acc.fail(
                rank,
                format!("EW {p} avoids 231 but its second row has several 0s"),
            );
        }
    });
    let acc = finish(out, acc);
    out.tally(
        n,
        "avoiders-with-unique-0",
        acc.get("avoid", 0),
        acc.get("unique", 0),
    );
}

/// Rows read left to right as `0..01..1`, and below the leftmost 1 of any
/// row its column has no 1.
fn zeros_then_ones_condition(t: &Tableau) -> bool {
    let shape = t.shape();
    let rows = t.rows();
    for r in 0..shape.num_rows() {
        let len = shape.row_len(r);
        let x = rows[r];
        if x == 0 {
            continue;
        }
        let first = x.trailing_zeros() as usize;
        if x != row_mask(len) & !row_mask(first) {
            return false;
        }
        if (r + 1..shape.num_rows()).any(|r2| rows[r2] >> first & 1 == 1) {
            return false;
        }
    }
    true
}

fn pattern213(n: usize, out: &mut Outcome) {
    let pat = Pattern::Classical(vec![2, 1, 3]);
    let acc = over_tableaux(n, Family::Ew, |acc, rank, p, t| {
        let avoids = !contains_pattern(p, &pat);
        let condition = zeros_then_ones_condition(t);
        if avoids == condition {
            acc.add("agree", 0);
        } else {
            acc.fail(
                rank,
                format!("EW {p}: avoids 213 is {avoids}, row condition is {condition}"),
            );
        }
        if condition {
            acc.add("condition", 0);
        }
    });
    let acc = finish(out, acc);
    out.tally(n, "equivalence", factorial(n), acc.get("agree", 0));
    out.tally(n, "condition-count", catalan(n), acc.get("condition", 0));
}

fn pattern231new(n: usize, out: &mut Outcome) {
    let pat = Pattern::Classical(vec![2, 3, 1]);
    let acc = over_tableaux(n, Family::New, |acc, rank, p, t| {
        if contains_pattern(p, &pat) {
            return;
        }
        acc.add("avoid", 0);
        if is_top_justified(t) {
            acc.add("ok", 0);
        } else {
            acc.fail(rank, format!("NEW {p} avoids 231 but has a 0 above a 1"));
        }
    });
    let acc = finish(out, acc);
    out.tally(
        n,
        "avoiders-top-justified",
        acc.get("avoid", 0),
        acc.get("ok", 0),
    );
}

/// Non-crossing set partitions of `1..=n` by number of blocks, counted from
/// restricted growth strings.
fn noncrossing_partitions(n: usize) -> BTreeMap<usize, u64> {
    fn crossing(blocks: &[usize]) -> bool {
        let n = blocks.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if blocks[a] == blocks[c]
                            && blocks[b] == blocks[d]
                            && blocks[a] != blocks[b]
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
    fn walk(blocks: &mut Vec<usize>, used: usize, n: usize, hist: &mut BTreeMap<usize, u64>) {
        if blocks.len() == n {
            if !crossing(blocks) {
                *hist.entry(used).or_insert(0) += 1;
            }
            return;
        }
        for b in 0..=used {
            blocks.push(b);
            walk(blocks, used.max(b + 1), n, hist);
            blocks.pop();
        }
    }
    let mut hist = BTreeMap::new();
    walk(&mut Vec::with_capacity(n), 0, n, &mut hist);
    hist
}

/// Counts both sides: 231-avoiding NEW tableaux by
/// number of rows against non-crossing partitions by number of blocks.
fn noncrossing(n: usize, out: &mut Outcome) {
    let pat = Pattern::Classical(vec![2, 3, 1]);
    let acc = over_tableaux(n, Family::New, |acc, _, p, t| {
        if !contains_pattern(p, &pat) {
            acc.add("rows", t.shape().num_rows());
        }
    });
    let partitions = noncrossing_partitions(n);
    for k in 1..=n {
        debug_assert_eq!(partitions.get(&k).copied().unwrap_or(0), narayana(n, k));
    }
    compare(out, n, "", &partitions, &acc.hist("rows"));
    out.tally(n, "total", catalan(n), acc.hist("rows").values().sum());
}

fn ordering(n: usize, out: &mut Outcome) {
    let acc = over_tableaux(n, Family::Ew, |acc, rank, p, t| {
        let (q, passes) = psi_with_passes(t).expect("EW");
        debug_assert_eq!(&q, p);
        let kinds_alternate = passes.iter().enumerate().all(|(i, pass)| {
            let want = if i % 2 == 0 {
                LineKind::Column
            } else {
                LineKind::Row
            };
            pass.kind == want && !pass.labels.is_empty()
        });
        let monotone = passes.iter().all(|pass| match pass.kind {
            LineKind::Column => pass.labels.windows(2).all(|w| w[0] < w[1]),
            LineKind::Row => pass.labels.windows(2).all(|w| w[0] > w[1]),
        });
        if kinds_alternate && monotone {
            acc.add("passes", 0);
        } else {
            acc.fail(
                rank,
                format!("EW {p}: passes do not alternate monotonically"),
            );
        }
        let labels = t.labeling();
        let letters = p.letters();
        let precedence = !labels.is_row_label(letters[0])
            && letters
                .windows(2)
                .all(|w| (w[0] > w[1]) == labels.is_row_label(w[1]));
        if precedence {
            acc.add("precedence", 0);
        } else {
            acc.fail(
                rank,
                format!("EW {p}: row labels are not exactly the descent bottoms"),
            );
        }
        let blocks: Vec<Vec<usize>> = passes.into_iter().map(|pass| pass.labels).collect();
        if blocks == run_decomposition(p) {
            acc.add("blocks", 0);
        } else {
            acc.fail(
                rank,
                format!("EW {p}: run blocks differ from reading passes"),
            );
        }
    });
    let acc = finish(out, acc);
    let total = factorial(n);
    out.tally(n, "alternating-passes", total, acc.get("passes", 0));
    out.tally(
        n,
        "rows-are-descent-bottoms",
        total,
        acc.get("precedence", 0),
    );
    out.tally(n, "run-blocks-are-passes", total, acc.get("blocks", 0));
}

fn paths(n: usize, out: &mut Outcome) {
    let acc = over_tableaux(n, Family::Ew, |acc, rank, p, t| {
        let o = orientation_of(t).expect("EW");
        let blocks = run_decomposition(p).len();
        let longest = longest_directed_path(&o).expect("acyclic");
        // The sink closes every maximal path and is not a letter of p.
        if longest == blocks + 1 {
            acc.add("longest", 0);
        } else {
            acc.fail(
                rank,
                format!("EW {p}: longest path {longest}, {blocks} blocks"),
            );
        }
        if arcs_descend_blocks(&o, p) {
            acc.add("blocks", 0);
        } else {
            acc.fail(rank, format!("EW {p}: a path meets one block twice"));
        }
    });
    let acc = finish(out, acc);
    let total = factorial(n);
    out.tally(
        n,
        "longest-path-is-blocks-plus-sink",
        total,
        acc.get("longest", 0),
    );
    out.tally(n, "one-vertex-per-block", total, acc.get("blocks", 0));
}

/// All 0/1 fillings of a shape, bit `i` of the mask on the `i`-th cell in
/// row-major order.
fn filling_of_mask(shape: &FerrersShape, mask: u64) -> Filling {
    let mut f = Filling::zeros(shape.clone());
    for (i, (r, c)) in shape.cells().enumerate() {
        f.set(r, c, mask >> i & 1 == 1);
    }
    f
}

fn cycles(cells: usize, out: &mut Outcome) {
    let per_shape: Vec<Acc> = shapes_with_cells(cells)
        .into_par_iter()
        .map(|shape| {
            let mut acc = Acc::default();
            for mask in 0..1u64 << cells {
                let o = Orientation::from_filling(&filling_of_mask(&shape, mask)).expect("shape");
                if !o.is_acyclic() {
                    acc.add("cyclic", 0);
                    if find_directed_cycle(&o).is_some_and(|c| c.len() == 4) {
                        acc.add("four", 0);
                    } else {
                        acc.fail(mask, format!("shape {shape} mask {mask:b}: no 4-cycle"));
                    }
                } else if o.sinks() == [0] {
                    acc.add("unique-sink", 0);
                }
            }
            acc.add("ew", 0);
            *acc.counts.get_mut(&("ew", 0)).expect("just added") =
                enumerate(&shape, Family::Ew).count() as u64;
            acc
        })
        .collect();
    let acc = finish(out, per_shape.into_iter().fold(Acc::default(), Acc::merge));
    out.tally(
        cells,
        "cyclic-with-4-cycle",
        acc.get("cyclic", 0),
        acc.get("four", 0),
    );
    out.tally(
        cells,
        "unique-sink-acyclic",
        acc.get("ew", 0),
        acc.get("unique-sink", 0),
    );
}

fn sandpile(cells: usize, out: &mut Outcome) {
    let per_shape: Vec<Result<Acc>> = shapes_with_cells(cells)
        .into_par_iter()
        .map(|shape| {
            let mut acc = Acc::default();
            let g = FerrersGraph::new(&shape)?;
            let mrc = enumerate_minimal_recurrent(&g)?;
            let mut from_ew = Vec::new();
            for e in enumerate(&shape, Family::Ew) {
                from_ew.push(config_of(&e)?);
                acc.add("ew", 0);
                if toppling_order_check(&e)? {
                    acc.add("topple", 0);
                } else {
                    acc.fail(0, format!("shape {shape}: reading order fails to topple"));
                }
            }
            from_ew.sort();
            let distinct = from_ew.windows(2).all(|w| w[0] != w[1]);
            acc.add("shapes", 0);
            if distinct && from_ew == mrc {
                acc.add("agree", 0);
            } else {
                acc.fail(
                    0,
                    format!(
                        "shape {shape}: EW configurations differ from the minimal recurrent ones"
                    ),
                );
            }
            for _ in 0..mrc.len() {
                acc.add("mrc", 0);
            }
            Ok(acc)
        })
        .collect();
    let mut acc = Acc::default();
    for a in per_shape {
        match a {
            Ok(a) => acc = acc.merge(a),
            Err(e) => acc.fail(0, e.to_string()),
        }
    }
    let acc = finish(out, acc);
    out.tally(
        cells,
        "shapes-with-equal-sets",
        acc.get("shapes", 0),
        acc.get("agree", 0),
    );
    out.tally(
        cells,
        "minimal-recurrent",
        acc.get("mrc", 0),
        acc.get("ew", 0),
    );
    out.tally(
        cells,
        "reading-order-topples",
        acc.get("ew", 0),
        acc.get("topple", 0),
    );
}

fn trees(cells: usize, out: &mut Outcome) {
    let per_shape: Vec<Acc> = shapes_with_cells(cells)
        .into_par_iter()
        .map(|shape| {
            let mut acc = Acc::default();
            let order = row_major_order(&shape);
            for mask in 0..1u64 << cells {
                let f = filling_of_mask(&shape, mask);
                let tree_like = validate(Family::Tree, &f).is_ok();
                let s = spanning_tree_of(&f).expect("shape");
                let inactive = s.is_spanning_tree()
                    && external_activity(&s, &order).expect("compatible order") == 0;
                acc.add("fillings", 0);
                if tree_like {
                    acc.add("tree", 0);
                    if paths_zigzag(&s).unwrap_or(false) {
                        acc.add("zigzag", 0);
                    } else {
                        acc.fail(
                            mask,
                            format!("shape {shape} mask {mask:b}: path is not a zigzag"),
                        );
                    }
                }
                if inactive {
                    acc.add("inactive", 0);
                }
                if tree_like == inactive {
                    acc.add("agree", 0);
                } else {
                    acc.fail(
                        mask,
                        format!("shape {shape} mask {mask:b}: tree-like {tree_like}"),
                    );
                }
            }
            acc
        })
        .collect();
    let acc = finish(out, per_shape.into_iter().fold(Acc::default(), Acc::merge));
    out.tally(
        cells,
        "tree-like-vs-inactive-trees",
        acc.get("tree", 0),
        acc.get("inactive", 0),
    );
    out.tally(
        cells,
        "fillings-agreeing",
        acc.get("fillings", 0),
        acc.get("agree", 0),
    );
    out.tally(
        cells,
        "zigzag-paths",
        acc.get("tree", 0),
        acc.get("zigzag", 0),
    );
}
