//! Integer-partition helpers shared by the theorem checks.
//!
//! These work on plain slices so the integral and (0,1) decision paths never
//! touch big rationals.

use std::ops::AddAssign;

use num_traits::Zero;

/// Weakly decreasing rearrangement. The sort is stable, so equal values keep
/// their original relative order.
pub fn sorted_desc<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut out = v.to_vec();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Indices of `v` ordered by decreasing value, ties by increasing index.
pub fn order_desc<T: Ord>(v: &[T]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&a, &b| v[b].cmp(&v[a]).then(a.cmp(&b)));
    idx
}

/// Conjugate partition: entry `k-1` counts the entries that are `>= k`.
/// Nonpositive entries contribute nothing, so an all-zero input gives `[]`.
pub fn conjugate(v: &[i64]) -> Vec<i64> {
    let max = v.iter().copied().max().unwrap_or(0).max(0);
    (1..=max)
        .map(|k| v.iter().filter(|&&x| x >= k).count() as i64)
        .collect()
}

/// `a` majorizes `b`: equal totals and every prefix sum of the decreasing
/// rearrangement of `a` dominates that of `b`. The shorter vector is padded
/// with zeros.
pub fn majorizes<T>(a: &[T], b: &[T]) -> bool
where
    T: Ord + Clone + Zero + for<'x> AddAssign<&'x T>,
{
    let a = sorted_desc(a);
    let b = sorted_desc(b);
    let zero = T::zero();
    let len = a.len().max(b.len());
    let mut pa = T::zero();
    let mut pb = T::zero();
    for k in 0..len {
        pa += a.get(k).unwrap_or(&zero);
        pb += b.get(k).unwrap_or(&zero);
        if pa < pb {
            return false;
        }
    }
    pa == pb
}

/// First prefix length (1-based) at which `a` fails to dominate `b`, if any.
pub fn majorization_failure(a: &[i64], b: &[i64]) -> Option<usize> {
    let a = sorted_desc(a);
    let b = sorted_desc(b);
    let len = a.len().max(b.len());
    let (mut pa, mut pb) = (0i64, 0i64);
    for k in 0..len {
        pa += a.get(k).copied().unwrap_or(0);
        pb += b.get(k).copied().unwrap_or(0);
        if pa < pb {
            return Some(k + 1);
        }
    }
    None
}

pub fn is_palindromic<T: PartialEq>(v: &[T]) -> bool {
    v.iter().eq(v.iter().rev())
}

pub fn reversed<T: Clone>(v: &[T]) -> Vec<T> {
    v.iter().rev().cloned().collect()
}

pub fn odd_count(v: &[i64]) -> usize {
    v.iter().filter(|&&x| x.rem_euclid(2) == 1).count()
}

/// Brualdi–Ryser test for a symmetric (0,1,2)-matrix with row sums `r`,
/// using the reduced family on the decreasing rearrangement:
/// `2kl >= sum_{i<=k} r_i - sum_{i>l} r_i` for `1 <= k <= l <= n`.
pub fn symmetric_012_realizable(r: &[i64]) -> bool {
    if r.iter().any(|&x| x < 0) {
        return false;
    }
    let r = sorted_desc(r);
    let n = r.len();
    let mut prefix = vec![0i64; n + 1];
    for i in 0..n {
        prefix[i + 1] = prefix[i] + r[i];
    }
    let total = prefix[n];
    for k in 1..=n {
        for l in k..=n {
            let lhs = 2 * (k as i64) * (l as i64);
            let rhs = prefix[k] - (total - prefix[l]);
            if lhs < rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&[2, 2, 2]), vec![3, 3]);
        assert_eq!(conjugate(&[6, 6, 6, 2, 1, 1]), vec![6, 4, 3, 3, 3, 3]);
        assert_eq!(conjugate(&[0, 0]), Vec::<i64>::new());
        assert_eq!(conjugate(&[]), Vec::<i64>::new());
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&[3i64, 1], &[2, 2]));
        assert!(!majorizes(&[2i64, 2], &[3, 1]));
        assert!(!majorizes(&[2i64, 1], &[2, 2]));
        // padding with zeros
        assert!(majorizes(&[4i64], &[2, 1, 1]));
        assert_eq!(majorization_failure(&[4, 4, 3, 3, 3, 3], &[4, 4, 4, 4, 2, 2]), Some(3));
    }

    #[test]
    fn order_desc_breaks_ties_by_index() {
        assert_eq!(order_desc(&[1, 3, 3, 2]), vec![1, 2, 3, 0]);
    }

    #[test]
    fn reduced_family_small_cases() {
        assert!(symmetric_012_realizable(&[2, 2]));
        assert!(!symmetric_012_realizable(&[4, 0]));
        assert!(symmetric_012_realizable(&[]));
        assert!(symmetric_012_realizable(&[1]));
        assert!(!symmetric_012_realizable(&[3]));
    }
}
