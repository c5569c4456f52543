//! Permutation statistics.

use serde::Serialize;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub descent_bottoms: Vec<usize>,
    pub descent_tops: Vec<usize>,
    pub excedance_bottoms: Vec<usize>,
    pub excedance_tops: Vec<usize>,
    pub weak_excedance_bottoms: Vec<usize>,
    pub fixed_points: Vec<usize>,
    pub rtl_minima: Vec<usize>,
    pub big_descents: usize,
    pub decreasing_adjacencies: usize,
    pub run_decomposition: Vec<Vec<usize>>,
    pub up_down_run_count: usize,
}

pub fn stats(p: &Permutation) -> StatRecord {
    let mut descent_tops: Vec<usize> = descents(p).map(|(top, _)| top).collect();
    descent_tops.sort_unstable();
    let mut excedance_tops: Vec<usize> = excedances(p).map(|(_, top)| top).collect();
    excedance_tops.sort_unstable();
    let runs = run_decomposition(p);
    StatRecord {
        descent_bottoms: descent_bottoms(p),
        descent_tops,
        excedance_bottoms: excedance_bottoms(p),
        excedance_tops,
        weak_excedance_bottoms: weak_excedance_bottoms(p),
        fixed_points: fixed_points(p),
        rtl_minima: rtl_minima(p),
        big_descents: big_descents(p),
        decreasing_adjacencies: decreasing_adjacencies(p),
        up_down_run_count: runs.len(),
        run_decomposition: runs,
    }
}

/// `(a_i, a_{i+1})` for every `a_i > a_{i+1}`.
pub fn descents(p: &Permutation) -> impl Iterator<Item = (usize, usize)> + '_ {
    p.letters()
        .windows(2)
        .filter(|w| w[0] > w[1])
        .map(|w| (w[0], w[1]))
}

/// Sorted.
pub fn descent_bottoms(p: &Permutation) -> Vec<usize> {
    let mut out: Vec<usize> = descents(p).map(|(_, b)| b).collect();
    out.sort_unstable();
    out
}

/// `(i, a_i)` for every `a_i > i`.
pub fn excedances(p: &Permutation) -> impl Iterator<Item = (usize, usize)> + '_ {
    p.letters()
        .iter()
        .enumerate()
        .map(|(i, &a)| (i + 1, a))
        .filter(|&(i, a)| a > i)
}

pub fn excedance_bottoms(p: &Permutation) -> Vec<usize> {
    excedances(p).map(|(i, _)| i).collect()
}

pub fn excedance_count(p: &Permutation) -> usize {
    excedances(p).count()
}

pub fn weak_excedance_bottoms(p: &Permutation) -> Vec<usize> {
    (1..=p.len()).filter(|&i| p.at(i) >= i).collect()
}

pub fn fixed_points(p: &Permutation) -> Vec<usize> {
    (1..=p.len()).filter(|&i| p.at(i) == i).collect()
}

/// Letters smaller than everything to their right, sorted.
pub fn rtl_minima(p: &Permutation) -> Vec<usize> {
    let mut out = Vec::new();
    let mut min = usize::MAX;
    for &a in p.letters().iter().rev() {
        if a < min {
            min = a;
            out.push(a);
        }
    }
    out.sort_unstable();
    out
}

pub fn big_descents(p: &Permutation) -> usize {
    p.letters().windows(2).filter(|w| w[0] >= w[1] + 2).count()
}

pub fn decreasing_adjacencies(p: &Permutation) -> usize {
    p.letters().windows(2).filter(|w| w[0] == w[1] + 1).count()
}

/// Maximal monotone runs of `0 a_1 ... a_n`, each with its first letter
/// removed. `51368427` gives `5 | 1 | 368 | 42 | 7`.
pub fn run_decomposition(p: &Permutation) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut prev = 0;
    let mut rising = None;
    for &a in p.letters() {
        let up = a > prev;
        if rising == Some(up) {
            blocks.last_mut().expect("a block is open").push(a);
        } else {
            blocks.push(vec![a]);
            rising = Some(up);
        }
        prev = a;
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::p;

    #[test]
    fn worked_examples() {
        let s = stats(&p("51368427"));
        assert_eq!(s.up_down_run_count, 5);
        assert_eq!(
            s.run_decomposition,
            vec![vec![5], vec![1], vec![3, 6, 8], vec![4, 2], vec![7]]
        );
        assert_eq!(decreasing_adjacencies(&p("65478132")), 3);
        assert_eq!(rtl_minima(&p("3172546")), vec![1, 2, 4, 6]);
    }

    #[test]
    fn record_fields() {
        let s = stats(&p("361542"));
        assert_eq!(s.descent_bottoms, vec![1, 2, 4]);
        assert_eq!(s.descent_tops, vec![4, 5, 6]);
        assert_eq!(s.excedance_bottoms, vec![1, 2, 4]);
        assert_eq!(s.excedance_tops, vec![3, 5, 6]);
        assert_eq!(s.weak_excedance_bottoms, vec![1, 2, 4]);
        assert!(s.fixed_points.is_empty());
        assert_eq!(s.rtl_minima, vec![1, 2]);
        assert_eq!(s.big_descents, 2);
        assert_eq!(s.decreasing_adjacencies, 1);
        assert_eq!(fixed_points(&p("2134")), vec![3, 4]);
    }

    #[test]
    fn run_blocks_partition_the_letters() {
        for perm in crate::perm::all_permutations(6) {
            let mut letters: Vec<usize> = run_decomposition(&perm).concat();
            assert_eq!(letters, perm.letters());
            letters.sort_unstable();
            assert_eq!(letters, (1..=6).collect::<Vec<_>>());
        }
    }
}
