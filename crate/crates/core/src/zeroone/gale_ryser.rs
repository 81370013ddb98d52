use crate::error::{Error, Result};
use crate::margins::partition::{conjugate, majorizes, order_desc};
use crate::margins::{MarginPair, Scalar};
use crate::symmetry::DenseMatrix;

/// Whether `A(R,S)` is nonempty: `S` is majorized by `R*`.
pub fn gale_ryser_feasible(p: &MarginPair) -> Result<bool> {
    let (r, s) = p.zero_one_margins()?;
    Ok(feasible(&r, &s))
}

/// Deterministic Gale–Ryser construction.
pub fn gale_ryser_construct(p: &MarginPair) -> Result<DenseMatrix<Scalar>> {
    let (r, s) = p.zero_one_margins()?;
    construct(&r, &s)
        .map(|a| a.to_scalar())
        .ok_or_else(|| Error::Infeasible(format!("{p}: S is not majorized by R*")))
}

/// Bounds need no separate check: an entry of `R` above `n` makes `R*` too
/// long to be dominated by `S`, and an entry of `S` above `m` exceeds `R*_1`.
pub(crate) fn feasible(r: &[i64], s: &[i64]) -> bool {
    if r.iter().chain(s).any(|&x| x < 0) {
        return false;
    }
    let conj = conjugate(r);
    let pad = s.len().saturating_sub(conj.len());
    let conj: Vec<i64> = conj.into_iter().chain(std::iter::repeat_n(0, pad)).collect();
    conj.len() <= s.len() && majorizes(&conj, s)
}

/// Columns in decreasing order of `s_j` (ties by index); each column takes
/// ones in the rows with the largest remaining sums, lowest index first.
/// Returns `None` when a column cannot be filled.
pub(crate) fn construct(r: &[i64], s: &[i64]) -> Option<DenseMatrix<i64>> {
    if r.iter().sum::<i64>() != s.iter().sum::<i64>() {
        return None;
    }
    let mut left = r.to_vec();
    let mut a = DenseMatrix::zeros(r.len(), s.len());
    for j in order_desc(s) {
        let need = usize::try_from(s[j]).ok()?;
        let rows = order_desc(&left);
        if need > rows.len() || rows[..need].iter().any(|&i| left[i] <= 0) {
            return None;
        }
        for &i in &rows[..need] {
            a.set(i, j, 1);
            left[i] -= 1;
        }
    }
    left.iter().all(|&x| x == 0).then_some(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: Vec<Vec<i64>>) -> DenseMatrix<i64> {
        DenseMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn feasibility_examples() {
        assert!(feasible(&[6, 6, 6, 2, 1, 1], &[4, 4, 2, 2, 2, 4, 4]));
        assert!(!feasible(&[6, 6, 6, 2], &[4, 4, 2, 2, 4, 4]));
        assert!(feasible(&[1, 1], &[2]));
        assert!(!feasible(&[3], &[1, 1]));
    }

    #[test]
    fn construction_examples() {
        assert_eq!(construct(&[2, 1, 1], &[2, 1, 1]).unwrap(), ints(vec![vec![1, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]));
        assert_eq!(construct(&[3], &[1, 1, 1]).unwrap(), ints(vec![vec![1, 1, 1]]));
        assert_eq!(construct(&[2, 2], &[2, 2]).unwrap(), ints(vec![vec![1, 1], vec![1, 1]]));
        assert!(construct(&[2, 2], &[3, 1]).is_none());
    }
}
