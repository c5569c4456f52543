//! The descent-to-excedance bijection and cyclic shifts.

use crate::perm::Permutation;

/// Sends descent bottoms to excedance bottoms.
///
/// With `a_0 = 0` in front: if `a_i` has a smaller letter to its right then
/// `b[a_{i+1}] = a_i`; otherwise `b[a_{k+1}] = a_i` where `a_k` is the
/// rightmost letter smaller than `a_i`.
pub fn desexc(p: &Permutation) -> Permutation {
    let n = p.len();
    let mut a = Vec::with_capacity(n + 1);
    a.push(0);
    a.extend_from_slice(p.letters());
    // suffix_min[i] = min(a[i..]), over positions 1..=n
    let mut suffix_min = vec![usize::MAX; n + 2];
    for i in (1..=n).rev() {
        suffix_min[i] = suffix_min[i + 1].min(a[i]);
    }
    let mut b = vec![0; n + 1];
    for i in 1..=n {
        if suffix_min[i + 1] < a[i] {
            b[a[i + 1]] = a[i];
        } else {
            let k = (0..i)
                .rev()
                .find(|&k| a[k] < a[i])
                .expect("a_0 = 0 is smaller");
            b[a[k + 1]] = a[i];
        }
    }
    Permutation::new_unchecked(b[1..].to_vec())
}

/// Inverse of [`desexc`]: cycles of `s` by increasing minimum, each written
/// from `s⁻¹(min)` by iterating `s⁻¹` and ending at the minimum.
pub fn desexc_inverse(s: &Permutation) -> Permutation {
    let n = s.len();
    let inv = s.positions();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::with_capacity(n);
    for min in 1..=n {
        if seen[min] {
            continue;
        }
        let mut x = inv[min];
        loop {
            seen[x] = true;
            out.push(x);
            if x == min {
                break;
            }
            x = inv[x];
        }
    }
    Permutation::new_unchecked(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftDirection {
    /// `a_1 ... a_n` to `a_n a_1 ... a_{n-1}`.
    Right,
    Left,
}

pub fn cyclic_shift(p: &Permutation, direction: ShiftDirection) -> Permutation {
    let mut letters = p.letters().to_vec();
    if !letters.is_empty() {
        match direction {
            ShiftDirection::Right => letters.rotate_right(1),
            ShiftDirection::Left => letters.rotate_left(1),
        }
    }
    Permutation::new_unchecked(letters)
}

/// Subtracts 1 from every letter, with 0 becoming `n`.
pub fn cyclic_down_shift(p: &Permutation) -> Permutation {
    let n = p.len();
    Permutation::new_unchecked(
        p.letters()
            .iter()
            .map(|&a| if a == 1 { n } else { a - 1 })
            .collect(),
    )
}

/// Inverse of [`cyclic_down_shift`].
pub fn cyclic_up_shift(p: &Permutation) -> Permutation {
    let n = p.len();
    Permutation::new_unchecked(
        p.letters()
            .iter()
            .map(|&a| if a == n { 1 } else { a + 1 })
            .collect(),
    )
}
