//! Classical patterns of length at most 4 and the vincular pattern 32-1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    /// One-line notation of a permutation of `1..=k`, `k <= 4`.
    Classical(Vec<usize>),
    /// An adjacent descent followed later by a smaller letter.
    Vincular32_1,
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "32-1" | "32--1") {
            return Ok(Pattern::Vincular32_1);
        }
        let unsupported = || Error::UnsupportedPattern(s.to_string());
        if s.is_empty() || s.len() > 4 {
            return Err(unsupported());
        }
        let letters: Vec<usize> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(unsupported)?;
        Permutation::new(letters.clone()).map_err(|_| unsupported())?;
        Ok(Pattern::Classical(letters))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Classical(letters) => {
                for a in letters {
                    write!(f, "{a}")?;
                }
                Ok(())
            }
            Pattern::Vincular32_1 => f.write_str("32-1"),
        }
    }
}

pub fn contains_pattern(p: &Permutation, pattern: &Pattern) -> bool {
    match pattern {
        Pattern::Classical(q) => contains_classical(p.letters(), q),
        Pattern::Vincular32_1 => contains_32_1(p.letters()),
    }
}

/// Parses `pattern` and tests containment.
pub fn contains(p: &Permutation, pattern: &str) -> Result<bool> {
    Ok(contains_pattern(p, &pattern.parse()?))
}

fn contains_classical(a: &[usize], q: &[usize]) -> bool {
    fn extend(a: &[usize], q: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == q.len() {
            return true;
        }
        for i in start..a.len() {
            if a.len() - i < q.len() - k {
                break;
            }
            // The new letter must sit relative to each chosen letter as the
            // pattern says.
            let fits = chosen
                .iter()
                .zip(q)
                .all(|(&b, &qb)| (a[i] > b) == (q[k] > qb));
            if fits {
                chosen.push(a[i]);
                if extend(a, q, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    extend(a, q, 0, &mut Vec::with_capacity(q.len()))
}

fn contains_32_1(a: &[usize]) -> bool {
    let n = a.len();
    if n < 3 {
        return false;
    }
    // suffix_min[i] = min(a[i..])
    let mut suffix_min = vec![usize::MAX; n + 1];
    for i in (0..n).rev() {
        suffix_min[i] = suffix_min[i + 1].min(a[i]);
    }
    (0..n - 2).any(|i| a[i] > a[i + 1] && suffix_min[i + 2] < a[i + 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, p};
    use itertools::Itertools;

    fn naive(perm: &Permutation, pattern: &str) -> bool {
        let a = perm.letters();
        if pattern == "32-1" {
            return (0..a.len())
                .tuple_combinations()
                .any(|(i, j, k)| j == i + 1 && a[i] > a[j] && a[j] > a[k]);
        }
        let q: Vec<usize> = pattern
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect();
        (0..a.len()).combinations(q.len()).any(|idx| {
            idx.iter()
                .tuple_combinations()
                .zip(q.iter().tuple_combinations())
                .all(|((&x, &y), (&qx, &qy))| (a[x] < a[y]) == (qx < qy))
        })
    }

    #[test]
    fn worked_examples() {
        assert!(contains(&p("351624"), "231").unwrap());
        assert!(!contains(&p("351624"), "321").unwrap());
        assert!(!contains(&p("4132"), "32-1").unwrap());
        assert!(contains(&p("4231"), "32-1").unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "12345".parse::<Pattern>(),
            Err(Error::UnsupportedPattern(_))
        ));
        assert!("22".parse::<Pattern>().is_err());
        assert!("3-21".parse::<Pattern>().is_err());
        assert_eq!("32-1".parse::<Pattern>().unwrap().to_string(), "32-1");
    }

    #[test]
    fn agrees_with_naive_oracle() {
        for n in 0..=6 {
            for perm in all_permutations(n) {
                for pat in ["231", "213", "321", "32-1", "1", "12", "2413", "1324"] {
                    assert_eq!(
                        contains(&perm, pat).unwrap(),
                        naive(&perm, pat),
                        "{perm} {pat}"
                    );
                }
            }
        }
    }
}
