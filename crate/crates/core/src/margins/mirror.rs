use crate::symmetry::DenseMatrix;

use super::partition;

/// A permutation of positions `0..n` commuting with the reversal `i -> n-1-i`.
///
/// Stored as a source map: the permuted vector is `v'[k] = v[source[k]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MirrorPermutation {
    source: Vec<usize>,
}

impl MirrorPermutation {
    pub fn identity(n: usize) -> Self {
        MirrorPermutation { source: (0..n).collect() }
    }

    /// Sorts the top half of `v` decreasingly (ties by index) and mirrors the
    /// same moves onto the bottom half. The center of an odd length is fixed.
    pub fn sorting<T: Ord>(v: &[T]) -> Self {
        let n = v.len();
        let h = n / 2;
        let top = partition::order_desc(&v[..h]);
        let mut source: Vec<usize> = (0..n).collect();
        for (k, &i) in top.iter().enumerate() {
            source[k] = i;
            source[n - 1 - k] = n - 1 - i;
        }
        MirrorPermutation { source }
    }

    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source.is_empty()
    }

    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn is_identity(&self) -> bool {
        self.source.iter().enumerate().all(|(k, &i)| k == i)
    }

    /// Checks `sigma(n-1-i) = n-1-sigma(i)` and bijectivity.
    pub fn is_mirror(&self) -> bool {
        let n = self.source.len();
        let mut seen = vec![false; n];
        for &i in &self.source {
            if i >= n || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        (0..n).all(|k| self.source[n - 1 - k] == n - 1 - self.source[k])
    }

    pub fn inverse(&self) -> Self {
        let mut source = vec![0; self.source.len()];
        for (k, &i) in self.source.iter().enumerate() {
            source[i] = k;
        }
        MirrorPermutation { source }
    }

    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        self.source.iter().map(|&i| v[i].clone()).collect()
    }

    pub fn permute_rows<T: Clone>(&self, a: &DenseMatrix<T>) -> DenseMatrix<T> {
        DenseMatrix::from_fn(a.rows(), a.cols(), |i, j| a.get(self.source[i], j).clone())
    }

    pub fn permute_cols<T: Clone>(&self, a: &DenseMatrix<T>) -> DenseMatrix<T> {
        DenseMatrix::from_fn(a.rows(), a.cols(), |i, j| a.get(i, self.source[j]).clone())
    }
}
