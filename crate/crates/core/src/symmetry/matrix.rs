use std::fmt;
use std::ops::AddAssign;

use num_traits::Zero;

use super::{Symmetry, SubgroupId};
use crate::error::{Error, Result};
use crate::margins::Scalar;

/// A dense row-major `m x n` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> DenseMatrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows; every row must have the same length.
    /// An empty row list gives the `0 x 0` matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(m * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Ragged { row: i, len: row.len(), expected: n });
            }
            data.extend(row);
        }
        Ok(DenseMatrix { rows: m, cols: n, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Clone> DenseMatrix<T> {
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        DenseMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// The image of this matrix under `g`. Quarter turns and the diagonal
    /// reflections swap the dimensions.
    pub fn apply(&self, g: Symmetry) -> Self {
        let (m, n) = (self.rows, self.cols);
        let (rm, rn) = g.image_shape(m, n);
        DenseMatrix::from_fn(rm, rn, |i, j| {
            let (si, sj) = g.source_cell(i, j, m, n);
            self.get(si, sj).clone()
        })
    }
}

impl<T: Clone + PartialEq> DenseMatrix<T> {
    /// True iff the matrix is fixed by every element of `h`.
    pub fn is_invariant(&self, h: SubgroupId) -> Result<bool> {
        if h.requires_square() && !self.is_square() {
            return Err(Error::NotSquare { subgroup: h, m: self.rows, n: self.cols });
        }
        Ok(self.is_invariant_under(h.generators()))
    }

    pub(crate) fn is_invariant_under(&self, gens: &[Symmetry]) -> bool {
        let (m, n) = (self.rows, self.cols);
        gens.iter().all(|&g| {
            if g.image_shape(m, n) != (m, n) {
                return false;
            }
            (0..m).all(|i| {
                (0..n).all(|j| {
                    let (si, sj) = g.source_cell(i, j, m, n);
                    self.get(i, j) == self.get(si, sj)
                })
            })
        })
    }
}

impl<T: Zero + Clone> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }
}

impl<T> DenseMatrix<T>
where
    T: Zero + Clone + for<'a> AddAssign<&'a T>,
{
    pub fn row_sums(&self) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for x in self.row(i) {
                    acc += x;
                }
                acc
            })
            .collect()
    }

    pub fn col_sums(&self) -> Vec<T> {
        let mut out = vec![T::zero(); self.cols];
        for i in 0..self.rows {
            for (acc, x) in out.iter_mut().zip(self.row(i)) {
                *acc += x;
            }
        }
        out
    }
}

impl DenseMatrix<i64> {
    pub fn to_scalar(&self) -> DenseMatrix<Scalar> {
        self.map(|&x| Scalar::from_integer(x))
    }

    /// Adds `other` entrywise; shapes must agree.
    pub(crate) fn add_assign(&mut self, other: &DenseMatrix<i64>) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += *b;
        }
    }
}

impl DenseMatrix<Scalar> {
    /// Integer view, if every entry is an integer that fits in `i64`.
    pub fn to_integers(&self) -> Option<DenseMatrix<i64>> {
        let data = self.data.iter().map(Scalar::to_i64).collect::<Option<Vec<_>>>()?;
        Some(DenseMatrix { rows: self.rows, cols: self.cols, data })
    }
}

impl<T: fmt::Display> fmt::Display for DenseMatrix<T> {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.debug_list().entries(&self.data[i * self.cols..(i + 1) * self.cols]).finish()?;
        }
        f.write_str("]")
    }
}
