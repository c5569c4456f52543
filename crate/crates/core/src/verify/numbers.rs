//! Expected-value generators, all computed by recurrence.

/// Fibonacci numbers with `F_0 = F_1 = 1`.
pub fn fibonacci(m: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..m {
        (a, b) = (b, a + b);
    }
    a
}

/// Zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k]
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: usize, k: usize) -> u64 {
    let mut row = vec![1u64];
    for i in 1..=n {
        let mut next = vec![0u64; i + 1];
        for j in 1..=i {
            let stay = if j < i { j as u64 * row[j] } else { 0 };
            next[j] = stay + row[j - 1];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// Permutations of `n` letters with `k` excedances.
pub fn eulerian(n: usize, k: usize) -> u64 {
    let mut row = vec![1u64];
    for i in 1..=n {
        let mut next = vec![0u64; i];
        for (j, slot) in next.iter_mut().enumerate() {
            let same = row.get(j).map_or(0, |&a| (j as u64 + 1) * a);
            let up = if j > 0 {
                row.get(j - 1).map_or(0, |&a| (i - j) as u64 * a)
            } else {
                0
            };
            *slot = same + up;
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

pub fn catalan(n: usize) -> u64 {
    binomial(2 * n, n) / (n as u64 + 1)
}

/// Non-crossing partitions of `n` elements into `k` blocks.
pub fn narayana(n: usize, k: usize) -> u64 {
    if n == 0 || k == 0 || k > n {
        return u64::from(n == 0 && k == 0);
    }
    binomial(n, k) * binomial(n, k - 1) / n as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use crate::stats::excedance_count;

    #[test]
    fn small_values() {
        let fib: Vec<_> = (0..8).map(fibonacci).collect();
        assert_eq!(fib, vec![1, 1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(
            (0..=4).map(|k| stirling2(4, k)).collect::<Vec<_>>(),
            vec![0, 1, 7, 6, 1]
        );
        assert_eq!(stirling2(0, 0), 1);
        assert_eq!(
            (0..4).map(|k| eulerian(4, k)).collect::<Vec<_>>(),
            vec![1, 11, 11, 1]
        );
        assert_eq!(eulerian(0, 0), 1);
        assert_eq!(
            (0..6).map(catalan).collect::<Vec<_>>(),
            vec![1, 1, 2, 5, 14, 42]
        );
        assert_eq!((1..=4).map(|k| narayana(4, k)).sum::<u64>(), catalan(4));
    }

    #[test]
    fn fibonacci_is_binomial_sum() {
        for n in 1..=12 {
            let sum: u64 = (1..=n).map(|k| binomial(2 * n - 1 - k, k - 1)).sum();
            assert_eq!(sum, fibonacci(2 * n - 2));
        }
    }

    #[test]
    fn eulerian_counts_excedances() {
        for n in 1..=7 {
            let mut hist = vec![0u64; n];
            for p in all_permutations(n) {
                hist[excedance_count(&p)] += 1;
            }
            let rec: Vec<_> = (0..n).map(|k| eulerian(n, k)).collect();
            assert_eq!(hist, rec);
        }
    }
}
