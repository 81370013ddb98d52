use crate::error::Result;
use crate::margins::{MarginPair, Scalar};
use crate::symmetry::DenseMatrix;

/// `t_ij = r_i s_j / N`; the zero matrix when `N = 0`.
pub fn proportional_fill(p: &MarginPair) -> DenseMatrix<Scalar> {
    let total = p.total();
    if total.is_zero() {
        return DenseMatrix::zeros(p.m(), p.n());
    }
    let (r, s) = (p.rows().entries(), p.cols().entries());
    DenseMatrix::from_fn(p.m(), p.n(), |i, j| &(&r[i] * &s[j]) / total)
}

/// Transportation algorithm on integer margins.
pub fn greedy_integral(p: &MarginPair) -> Result<DenseMatrix<Scalar>> {
    let (r, s) = p.to_integers()?;
    Ok(greedy(&r, &s).to_scalar())
}

/// Northwest-corner transportation greedy: always pivot on the lowest live
/// row and column; on a tie the row is retired. Totals must agree.
pub(crate) fn greedy(r: &[i64], s: &[i64]) -> DenseMatrix<i64> {
    debug_assert_eq!(r.iter().sum::<i64>(), s.iter().sum::<i64>());
    let mut r = r.to_vec();
    let mut s = s.to_vec();
    let mut a = DenseMatrix::zeros(r.len(), s.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() && j < s.len() {
        if r[i] <= s[j] {
            a.set(i, j, r[i]);
            s[j] -= r[i];
            r[i] = 0;
            i += 1;
        } else {
            a.set(i, j, s[j]);
            r[i] -= s[j];
            s[j] = 0;
            j += 1;
        }
    }
    a
}

/// Spreads `total` over `caps`, lowest index first, consuming capacity.
/// Returns the allocation; any remainder that does not fit is dropped, so
/// callers check `sum(alloc) == total` when it matters.
pub(crate) fn spread(total: i64, caps: &mut [i64]) -> Vec<i64> {
    let mut left = total;
    caps.iter_mut()
        .map(|c| {
            let x = left.min(*c).max(0);
            *c -= x;
            left -= x;
            x
        })
        .collect()
}

/// The parity markers of a margin pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkerTriple {
    /// Ones in the central column at rows with odd `r_i` (n odd only).
    pub a_r: DenseMatrix<i64>,
    /// Ones in the central row at columns with odd `s_j` (m odd only).
    pub a_s: DenseMatrix<i64>,
    /// Entrywise max of the two (both dimensions odd only).
    pub a_plus: DenseMatrix<i64>,
}

pub fn marker_matrices(p: &MarginPair) -> Result<MarkerTriple> {
    let (r, s) = p.to_integers()?;
    Ok(markers(&r, &s))
}

pub(crate) fn markers(r: &[i64], s: &[i64]) -> MarkerTriple {
    let (m, n) = (r.len(), s.len());
    let mut a_r = DenseMatrix::zeros(m, n);
    let mut a_s = DenseMatrix::zeros(m, n);
    if n % 2 == 1 {
        for (i, &x) in r.iter().enumerate() {
            a_r.set(i, n / 2, x.rem_euclid(2));
        }
    }
    if m % 2 == 1 {
        for (j, &x) in s.iter().enumerate() {
            a_s.set(m / 2, j, x.rem_euclid(2));
        }
    }
    let a_plus = if m % 2 == 1 && n % 2 == 1 {
        entrywise_max(&a_r, &a_s)
    } else {
        DenseMatrix::zeros(m, n)
    };
    MarkerTriple { a_r, a_s, a_plus }
}

/// `max(A^R, A^S)` with whichever markers exist for the given parities.
pub(crate) fn parity_marker(r: &[i64], s: &[i64]) -> DenseMatrix<i64> {
    let t = markers(r, s);
    entrywise_max(&t.a_r, &t.a_s)
}

fn entrywise_max(a: &DenseMatrix<i64>, b: &DenseMatrix<i64>) -> DenseMatrix<i64> {
    DenseMatrix::from_fn(a.rows(), a.cols(), |i, j| (*a.get(i, j)).max(*b.get(i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(r: &[i64], s: &[i64]) -> MarginPair {
        MarginPair::from_integers(r, s).unwrap()
    }

    fn ints(rows: Vec<Vec<i64>>) -> DenseMatrix<i64> {
        DenseMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn proportional_examples() {
        let a = proportional_fill(&pair(&[2, 2], &[2, 2]));
        assert_eq!(a, ints(vec![vec![1, 1], vec![1, 1]]).to_scalar());
        let a = proportional_fill(&pair(&[3, 1], &[2, 2]));
        let h = |p, q| Scalar::new(p, q);
        assert_eq!(a.to_rows(), vec![vec![h(3, 2), h(3, 2)], vec![h(1, 2), h(1, 2)]]);
        assert_eq!(proportional_fill(&pair(&[1], &[1])), ints(vec![vec![1]]).to_scalar());
        assert_eq!(proportional_fill(&pair(&[0, 0], &[0])), ints(vec![vec![0], vec![0]]).to_scalar());
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy(&[2, 1], &[1, 2]), ints(vec![vec![1, 1], vec![0, 1]]));
        assert_eq!(greedy(&[5], &[5]), ints(vec![vec![5]]));
        assert_eq!(greedy(&[2, 2], &[2, 2]), ints(vec![vec![2, 0], vec![0, 2]]));
        assert_eq!(greedy(&[0, 3], &[1, 0, 2]), ints(vec![vec![0, 0, 0], vec![1, 0, 2]]));
    }

    #[test]
    fn marker_examples() {
        let t = markers(&[1, 2, 3], &[2, 2, 2]);
        assert_eq!(t.a_r, ints(vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 1, 0]]));
        let t = markers(&[2, 2], &[1, 1, 2]);
        assert_eq!(t.a_r, DenseMatrix::zeros(2, 3));
        assert_eq!(t.a_s, DenseMatrix::zeros(2, 3));
        let t = markers(&[1], &[1]);
        assert_eq!(t.a_plus, ints(vec![vec![1]]));
        assert_eq!(t.a_r.row_sums(), vec![1]);
    }

    #[test]
    fn spread_respects_capacities() {
        let mut caps = vec![1, 0, 3];
        assert_eq!(spread(3, &mut caps), vec![1, 0, 2]);
        assert_eq!(caps, vec![0, 0, 1]);
    }
}
