//! Symmetric realizations: (0,1) via certified search under `R ⪯ R*`, and
//! (0,1,2) via certified search under the Brualdi–Ryser inequalities, plus
//! the diagonal cleanup and `M = B + Bᵗ` split used for quarter-turns.

use crate::error::{Error, Result};
use crate::margins::partition::{conjugate, majorizes, order_desc, symmetric_012_realizable};
use crate::margins::{MarginVector, Scalar};
use crate::symmetry::DenseMatrix;

/// Whether a symmetric (0,1)-matrix with row sums `r` exists.
pub(crate) fn symmetric_01_realizable(r: &[i64]) -> bool {
    r.iter().all(|&x| x >= 0) && majorizes(&conjugate(r), r)
}

pub fn symmetric_012_feasible(r: &MarginVector) -> Result<bool> {
    Ok(symmetric_012_realizable(&r.to_integers()?))
}

pub fn symmetric_01_construct(r: &MarginVector) -> Result<DenseMatrix<Scalar>> {
    let r = r.to_integers()?;
    sym01(&r)
        .map(|a| a.to_scalar())
        .ok_or_else(|| Error::Infeasible(format!("{r:?} is not majorized by its conjugate")))
}

pub fn symmetric_012_construct(r: &MarginVector) -> Result<DenseMatrix<Scalar>> {
    let r = r.to_integers()?;
    sym012(&r)
        .map(|a| a.to_scalar())
        .ok_or_else(|| Error::Infeasible(format!("{r:?} violates the symmetric (0,1,2) inequalities")))
}

/// Row `p` is settled at step `p`. Candidates are the later indices in
/// decreasing residual order followed by the diagonal; the first subset of
/// size `r_p` (lexicographic in candidate order) whose residual stays
/// realizable is committed.
pub(crate) fn sym01(r: &[i64]) -> Option<DenseMatrix<i64>> {
    if !symmetric_01_realizable(r) {
        return None;
    }
    let n = r.len();
    let mut left = r.to_vec();
    let mut a = DenseMatrix::zeros(n, n);
    for p in 0..n {
        let later: Vec<usize> = (p + 1..n).collect();
        let mut candidates: Vec<usize> = order_desc(&later.iter().map(|&q| left[q]).collect::<Vec<_>>())
            .into_iter()
            .map(|k| later[k])
            .collect();
        candidates.push(p);
        let need = usize::try_from(left[p]).ok()?;
        let chosen = first_subset(&candidates, need, |set| {
            let mut rest = left.clone();
            for &q in set {
                rest[q] -= 1;
            }
            symmetric_01_realizable(&rest[p + 1..])
        })?;
        for q in chosen {
            a.set(p, q, 1);
            a.set(q, p, 1);
            if q != p {
                left[q] -= 1;
            }
        }
        left[p] = 0;
    }
    Some(a)
}

/// Lexicographically first `k`-subset of `items` accepted by `ok`.
fn first_subset(items: &[usize], k: usize, mut ok: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if k > items.len() {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let set: Vec<usize> = idx.iter().map(|&i| items[i]).collect();
        if ok(&set) {
            return Some(set);
        }
        let mut t = k;
        while t > 0 && idx[t - 1] == items.len() - k + t - 1 {
            t -= 1;
        }
        if t == 0 {
            return None;
        }
        idx[t - 1] += 1;
        for u in t..k {
            idx[u] = idx[u - 1] + 1;
        }
    }
}

/// Row `p` is settled at step `p`: the diagonal first, from `min(2, r_p)`
/// down, then later indices in decreasing residual order with values 2, 1,
/// 0. A choice is committed once the residual passes the Brualdi–Ryser test.
pub(crate) fn sym012(r: &[i64]) -> Option<DenseMatrix<i64>> {
    if !symmetric_012_realizable(r) {
        return None;
    }
    let n = r.len();
    let mut left = r.to_vec();
    let mut a = DenseMatrix::zeros(n, n);
    for p in 0..n {
        let later: Vec<usize> = (p + 1..n).collect();
        let order: Vec<usize> = order_desc(&later.iter().map(|&q| left[q]).collect::<Vec<_>>())
            .into_iter()
            .map(|k| later[k])
            .collect();
        let mut found = None;
        for d in (0..=left[p].min(2)).rev() {
            let mut vals = vec![0i64; order.len()];
            if assign_row(&order, 0, left[p] - d, &mut left.clone(), &mut vals, p) {
                found = Some((d, vals));
                break;
            }
        }
        let (d, vals) = found?;
        a.set(p, p, d);
        for (&q, &v) in order.iter().zip(&vals) {
            a.set(p, q, v);
            a.set(q, p, v);
            left[q] -= v;
        }
        left[p] = 0;
    }
    Some(a)
}

fn assign_row(order: &[usize], k: usize, need: i64, left: &mut [i64], vals: &mut [i64], p: usize) -> bool {
    if k == order.len() {
        return need == 0 && symmetric_012_realizable(&left[p + 1..]);
    }
    let q = order[k];
    for v in (0..=need.min(2).min(left[q])).rev() {
        left[q] -= v;
        vals[k] = v;
        if assign_row(order, k + 1, need - v, left, vals, p) {
            left[q] += v;
            return true;
        }
        left[q] += v;
    }
    vals[k] = 0;
    false
}

fn check_symmetric_012(m: &DenseMatrix<i64>) -> Result<()> {
    let n = m.rows();
    if !m.is_square() {
        return Err(Error::NotSymmetric012);
    }
    for i in 0..n {
        for j in 0..n {
            let v = *m.get(i, j);
            if !(0..=2).contains(&v) || v != *m.get(j, i) {
                return Err(Error::NotSymmetric012);
            }
        }
    }
    Ok(())
}

/// Pairs the diagonal ones lowest index first and rewrites each pair's
/// 2×2 principal submatrix so that no diagonal one remains.
pub fn clean_diagonal(m: &DenseMatrix<i64>) -> Result<DenseMatrix<i64>> {
    check_symmetric_012(m)?;
    let ones: Vec<usize> = (0..m.rows()).filter(|&i| *m.get(i, i) == 1).collect();
    if ones.len() % 2 == 1 {
        return Err(Error::OddDiagonalOnes(ones.len()));
    }
    let mut out = m.clone();
    for pair in ones.chunks(2) {
        let (i, j) = (pair[0], pair[1]);
        let (diag, off) = match *m.get(i, j) {
            0 => (0, 1),
            1 => (0, 2),
            _ => (2, 1),
        };
        out.set(i, i, diag);
        out.set(j, j, diag);
        out.set(i, j, off);
        out.set(j, i, off);
    }
    Ok(out)
}

/// Writes a cleaned symmetric (0,1,2)-matrix as `B + Bᵗ`: a 1 above the
/// diagonal goes to the lower triangle of `B`, a 2 goes to both cells.
pub fn split_symmetric(m: &DenseMatrix<i64>) -> Result<DenseMatrix<i64>> {
    check_symmetric_012(m)?;
    let n = m.rows();
    if let Some(i) = (0..n).find(|&i| *m.get(i, i) == 1) {
        return Err(Error::DiagonalOne(i));
    }
    Ok(DenseMatrix::from_fn(n, n, |i, j| match *m.get(i, j) {
        2 => 1,
        1 if i > j => 1,
        _ => 0,
    }))
}
