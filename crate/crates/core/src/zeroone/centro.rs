//! Central-line reductions for centrosymmetric (0,1)-matrices.

use crate::error::{Error, Result};
use crate::margins::partition::is_palindromic;
use crate::margins::{MarginPair, MarginVector, MirrorPermutation};
use crate::symmetry::DenseMatrix;

/// One replayable reduction record.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReductionStep {
    /// Margins were sorted into initially nonincreasing form.
    Normalize { rows: MirrorPermutation, cols: MirrorPermutation },
    /// The central row (value `row`) and/or central column (value `col`)
    /// were deleted after decrementing the first and last `row/2` columns
    /// and `col/2` rows.
    Peel { row: Option<i64>, col: Option<i64> },
}

/// Even-dimensional margins plus the trace that lifts their witnesses back.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedPair {
    pub rows: MarginVector,
    pub cols: MarginVector,
    pub trace: Vec<ReductionStep>,
}

impl ReducedPair {
    /// Replays the trace backwards on a witness for the reduced margins.
    pub fn lift(&self, a: &DenseMatrix<i64>) -> DenseMatrix<i64> {
        lift(&self.trace, a)
    }
}

/// Reduces palindromic (0,1) margins to even dimensions.
pub fn centro_reduce(p: &MarginPair) -> Result<ReducedPair> {
    let (r, s) = p.zero_one_margins()?;
    let (r, s, trace) = reduce(&r, &s)?;
    Ok(ReducedPair {
        rows: MarginVector::from_integers(&r)?,
        cols: MarginVector::from_integers(&s)?,
        trace,
    })
}

pub(crate) type Reduction = (Vec<i64>, Vec<i64>, Vec<ReductionStep>);

pub(crate) fn reduce(r: &[i64], s: &[i64]) -> Result<Reduction> {
    if !is_palindromic(r) || !is_palindromic(s) {
        return Err(Error::NotPalindromic);
    }
    let (sr, sc) = (MirrorPermutation::sorting(r), MirrorPermutation::sorting(s));
    let mut r = sr.apply(r);
    let mut s = sc.apply(s);
    let mut trace = vec![ReductionStep::Normalize { rows: sr, cols: sc }];
    let (m, n) = (r.len(), s.len());
    let row = (m % 2 == 1).then(|| r[m / 2]);
    let col = (n % 2 == 1).then(|| s[n / 2]);
    if row.is_none() && col.is_none() {
        return Ok((r, s, trace));
    }
    if let Some(rc) = row {
        r.remove(m / 2);
        if col.is_some() {
            s.remove(n / 2);
        }
        decrement_ends(&mut s, rc / 2);
    }
    if let Some(sc) = col {
        if row.is_none() {
            s.remove(n / 2);
        }
        decrement_ends(&mut r, sc / 2);
    }
    if let Some(x) = r.iter().chain(&s).find(|&&x| x < 0) {
        return Err(Error::Infeasible(format!("central reduction leaves a negative margin {x}")));
    }
    trace.push(ReductionStep::Peel { row, col });
    Ok((r, s, trace))
}

/// Decrements the first and last `k` entries; entries beyond the length are
/// driven negative so the caller reports infeasibility.
fn decrement_ends(v: &mut [i64], k: i64) {
    let n = v.len();
    let k = usize::try_from(k).unwrap_or(0);
    if 2 * k > n {
        v.iter_mut().for_each(|x| *x = -1);
        return;
    }
    for i in 0..k {
        v[i] -= 1;
        v[n - 1 - i] -= 1;
    }
}

pub(crate) fn lift(trace: &[ReductionStep], a: &DenseMatrix<i64>) -> DenseMatrix<i64> {
    let mut a = a.clone();
    for step in trace.iter().rev() {
        a = match step {
            ReductionStep::Normalize { rows, cols } => rows.inverse().permute_rows(&cols.inverse().permute_cols(&a)),
            ReductionStep::Peel { row, col } => insert_center(&a, *row, *col),
        };
    }
    a
}

fn insert_center(a: &DenseMatrix<i64>, row: Option<i64>, col: Option<i64>) -> DenseMatrix<i64> {
    let m = a.rows() + usize::from(row.is_some());
    let n = a.cols() + usize::from(col.is_some());
    let (hm, hn) = (a.rows() / 2, a.cols() / 2);
    let src_row = |i: usize| if row.is_some() && i >= hm { i.checked_sub(1) } else { Some(i) };
    let src_col = |j: usize| if col.is_some() && j >= hn { j.checked_sub(1) } else { Some(j) };
    let mut out = DenseMatrix::from_fn(m, n, |i, j| {
        let central = (row.is_some() && i == hm) || (col.is_some() && j == hn);
        match (central, src_row(i), src_col(j)) {
            (false, Some(si), Some(sj)) => *a.get(si, sj),
            _ => 0,
        }
    });
    if let Some(rc) = row {
        let k = (rc / 2) as usize;
        for t in 0..k {
            out.set(hm, t, 1);
            out.set(hm, n - 1 - t, 1);
        }
    }
    if let Some(sc) = col {
        let k = (sc / 2) as usize;
        for t in 0..k {
            out.set(t, hn, 1);
            out.set(m - 1 - t, hn, 1);
        }
    }
    if let (Some(rc), Some(_)) = (row, col) {
        out.set(hm, hn, rc % 2);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(r: &[i64], s: &[i64]) -> MarginPair {
        MarginPair::from_integers(r, s).unwrap()
    }

    fn ints(v: &[i64]) -> MarginVector {
        MarginVector::from_integers(v).unwrap()
    }

    #[test]
    fn central_row_reduction() {
        let red = centro_reduce(&pair(&[2, 2, 2], &[2, 1, 1, 2])).unwrap();
        assert_eq!((red.rows, red.cols), (ints(&[2, 2]), ints(&[1, 1, 1, 1])));
    }

    #[test]
    fn cross_reduction() {
        let red = centro_reduce(&pair(&[1, 1, 1], &[1, 1, 1])).unwrap();
        assert_eq!((red.rows, red.cols), (ints(&[1, 1]), ints(&[1, 1])));
    }

    #[test]
    fn normalization_is_recorded() {
        let red = centro_reduce(&pair(&[1, 2, 2, 2, 1], &[2, 2, 2, 2])).unwrap();
        let ReductionStep::Normalize { rows, .. } = &red.trace[0] else { panic!("missing normalization") };
        assert_eq!(rows.apply(&[1, 2, 2, 2, 1]), vec![2, 1, 2, 1, 2]);
        assert_eq!((red.rows, red.cols), (ints(&[2, 1, 1, 2]), ints(&[1, 2, 2, 1])));
    }

    #[test]
    fn negative_margins_signal_infeasibility() {
        assert!(matches!(reduce(&[1, 4, 1], &[3, 0, 0, 3]), Err(Error::Infeasible(_))));
    }

    #[test]
    fn lift_restores_margins() {
        let (r, s) = (vec![1, 3, 1], vec![2, 1, 2]);
        let (rr, ss, trace) = reduce(&r, &s).unwrap();
        let base = super::super::flow::centrosymmetric_even(&rr, &ss).unwrap();
        let a = lift(&trace, &base);
        assert_eq!(a.row_sums(), r);
        assert_eq!(a.col_sums(), s);
    }
}
