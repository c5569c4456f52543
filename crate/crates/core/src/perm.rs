//! Permutations of `1..=n`, one-indexed positions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &a in &letters {
            if a == 0 || a > n {
                return Err(Error::InvalidPermutation(format!(
                    "letter {a} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidPermutation(format!("letter {a} repeated")));
            }
        }
        Ok(Permutation(letters))
    }

    pub(crate) fn new_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(letters.clone()).is_ok(), "{letters:?}");
        Permutation(letters)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// The letter at one-indexed position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `pos[a]` is the one-indexed position of letter `a`; `pos[0] = 0`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &a) in self.0.iter().enumerate() {
            pos[a] = i + 1;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        Permutation(self.positions()[1..].to_vec())
    }

    /// The `rank`-th permutation of `1..=n` in lexicographic order.
    pub fn unrank(n: usize, mut rank: u64) -> Permutation {
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut out = Vec::with_capacity(n);
        for k in (0..n).rev() {
            let f = factorial(k);
            let idx = (rank / f) as usize;
            rank %= f;
            out.push(pool.remove(idx));
        }
        Permutation(out)
    }

    /// Steps to the lexicographically next permutation; false after the last.
    pub fn next_lex(&mut self) -> bool {
        let a = &mut self.0;
        let n = a.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while a[j] <= a[i - 1] {
            j -= 1;
        }
        a.swap(i - 1, j);
        a[i..].reverse();
        true
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut cur = Some(Permutation::identity(n));
    std::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        if next.next_lex() {
            cur = Some(next);
        }
        Some(out)
    })
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Commas select the comma form; otherwise each character is one letter.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad letter {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad letter {ch:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        if letters.is_empty() {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        Permutation::new(letters)
    }
}

/// Parses a permutation literal, panicking on bad input. Test helper.
#[cfg(test)]
pub(crate) fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!(p("361542").letters(), &[3, 6, 1, 5, 4, 2]);
        let long: Permutation = "10,1,2,3,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "10,1,2,3,4,5,6,7,8,9");
        assert_eq!("3,1,2".parse::<Permutation>().unwrap().to_string(), "312");
        assert!("112".parse::<Permutation>().is_err());
        assert!("14".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn enumeration_orders_agree() {
        for n in 0..=6 {
            let listed: Vec<_> = all_permutations(n).collect();
            assert_eq!(listed.len() as u64, factorial(n));
            for (rank, perm) in listed.iter().enumerate() {
                assert_eq!(&Permutation::unrank(n, rank as u64), perm);
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        for perm in all_permutations(5) {
            assert_eq!(perm.inverse().inverse(), perm);
            let inv = perm.inverse();
            for i in 1..=5 {
                assert_eq!(inv.at(perm.at(i)), i);
            }
        }
    }
}
