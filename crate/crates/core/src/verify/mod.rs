//! Exhaustive verification of the counting results, suite by suite.

pub mod numbers;
pub mod report;
mod suites;

use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::{Error, Result};

pub use report::{Status, Tally, VerificationReport};

/// Suite names, with the default and largest allowed `n` for each.
pub const SUITES: &[(&str, usize, usize)] = &[
    ("thm1", 8, 10),
    ("fibonacci", 8, 10),
    ("stirling_top", 8, 10),
    ("stirling_domfree", 8, 10),
    ("bigdesc", 8, 10),
    ("eulerian", 9, 11),
    ("allzero", 8, 10),
    ("fixedpts", 8, 10),
    ("pattern231", 8, 10),
    ("pattern213", 8, 10),
    ("pattern231new", 8, 10),
    ("noncrossing", 8, 10),
    ("ordering", 7, 10),
    ("paths", 7, 10),
    ("cycles", 12, 16),
    ("sandpile", 10, 12),
    ("trees", 12, 16),
];

fn lookup(name: &str) -> Result<(usize, usize)> {
    SUITES
        .iter()
        .find(|(s, _, _)| *s == name)
        .map(|&(_, default, max)| (default, max))
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

pub fn default_size(name: &str) -> Result<usize> {
    lookup(name).map(|(d, _)| d)
}

/// Runs suite `name` for every `n` in `1..=max_n`.
pub fn run_suite(name: &str, max_n: usize) -> Result<VerificationReport> {
    let (_, limit) = lookup(name)?;
    if max_n > limit {
        return Err(Error::Guardrail(format!(
            "{name} allows n <= {limit}, got {max_n}"
        )));
    }
    let start = Instant::now();
    let mut out = suites::Outcome::default();
    for n in 1..=max_n {
        suites::run(name, n, &mut out)?;
    }
    Ok(VerificationReport {
        suite: name.to_string(),
        measure: suites::measure(name),
        min_n: 1,
        max_n,
        tallies: out.tallies,
        counterexamples: out.counterexamples,
        conjecture: name == "eulerian",
        elapsed: start.elapsed(),
    })
}

/// Exact histogram of a statistic, keys ascending.
pub fn distribution<T>(
    objects: impl IntoIterator<Item = T>,
    statistic: impl Fn(&T) -> usize,
) -> BTreeMap<usize, u64> {
    let mut hist = BTreeMap::new();
    for x in objects {
        *hist.entry(statistic(&x)).or_insert(0) += 1;
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use crate::stats::{decreasing_adjacencies, fixed_points};

    #[test]
    fn histograms() {
        let adj = distribution(all_permutations(3), decreasing_adjacencies);
        assert_eq!(adj, BTreeMap::from([(0, 3), (1, 2), (2, 1)]));
        let fix = distribution(all_permutations(3), |p| {
            fixed_points(p).iter().filter(|&&x| x != 1).count()
        });
        assert_eq!(fix, adj);
        assert!(distribution(Vec::<u8>::new(), |_| 0).is_empty());
    }

    #[test]
    fn fibonacci_three() {
        let r = run_suite("fibonacci", 3).unwrap();
        assert!(r.passed());
        let text = r.to_string();
        assert!(text.contains("3 total 5 5 PASS"), "{text}");
        assert!(text.contains("3 k=1 1 1 PASS"));
        assert!(text.contains("3 k=2 3 3 PASS"));
        assert!(text.contains("3 k=3 1 1 PASS"));
        assert!(r.structured().contains("fibonacci\t3\ttotal\t5\t5\tPASS\n"));
    }

    #[test]
    fn eulerian_four_is_conjecture_consistent() {
        let r = run_suite("eulerian", 4).unwrap();
        assert_eq!(r.status(), Status::ConjectureConsistent);
        let rows: Vec<_> = r
            .tallies
            .iter()
            .filter(|t| t.n == 4)
            .map(|t| t.observed)
            .collect();
        assert_eq!(rows, vec![1, 11, 11, 1]);
    }

    #[test]
    fn unknown_and_guarded() {
        assert!(matches!(run_suite("nope", 3), Err(Error::UnknownSuite(_))));
        assert!(matches!(run_suite("thm1", 40), Err(Error::Guardrail(_))));
    }

    #[test]
    fn every_suite_passes_small() {
        for &(name, _, _) in SUITES {
            let r = run_suite(name, 5).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn thread_count_does_not_change_reports() {
        for name in ["allzero", "sandpile", "stirling_domfree"] {
            let one = rayon::ThreadPoolBuilder::new()
                .num_threads(1)
                .build()
                .unwrap();
            let four = rayon::ThreadPoolBuilder::new()
                .num_threads(4)
                .build()
                .unwrap();
            let a = one.install(|| run_suite(name, 6)).unwrap();
            let b = four.install(|| run_suite(name, 6)).unwrap();
            assert!(a.same_outcome(&b), "{name}");
            assert_eq!(a.to_string(), b.to_string());
        }
    }
}
