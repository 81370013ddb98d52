//! Integer witnesses for each subgroup. Every function assumes the governing
//! conditions already hold; the caller verifies the result.

use super::fill::{greedy, parity_marker, spread};
use crate::symmetry::{fill_orbit, DenseMatrix, SubgroupId};

pub(crate) fn diagonal(r: &[i64]) -> DenseMatrix<i64> {
    let n = r.len();
    DenseMatrix::from_fn(n, n, |i, j| if i == j { r[i] } else { 0 })
}

pub(crate) fn antidiagonal(r: &[i64]) -> DenseMatrix<i64> {
    let n = r.len();
    DenseMatrix::from_fn(n, n, |i, j| if i + j + 1 == n { r[i] } else { 0 })
}

/// Diagonal rounded up plus antidiagonal rounded down; the two halves share
/// the central cell when `n` is odd.
pub(crate) fn diag_plus_antidiag(r: &[i64]) -> DenseMatrix<i64> {
    let n = r.len();
    let mut a = DenseMatrix::zeros(n, n);
    for i in 0..n {
        *a.get_mut(i, i) += r[i] - r[i] / 2;
        *a.get_mut(i, n - 1 - i) += r[i] / 2;
    }
    a
}

/// Centrosymmetric integer matrix for palindromic `r`, `s`.
///
/// Central row and column pairs are spread over the column (row) budgets,
/// the central cell takes `min(r_c, s_c)`, and the even core is a greedy
/// block `B` in the top-left with its half-turn in the bottom-right.
pub(crate) fn centrosymmetric(r: &[i64], s: &[i64]) -> DenseMatrix<i64> {
    let (m, n) = (r.len(), s.len());
    let (hm, hn) = (m / 2, n / 2);
    let mut a = DenseMatrix::zeros(m, n);
    let mut rr = r.to_vec();
    let mut ss = s.to_vec();

    let center = if m % 2 == 1 && n % 2 == 1 { r[hm].min(s[hn]) } else { 0 };
    if m % 2 == 1 && n % 2 == 1 {
        a.set(hm, hn, center);
    }
    if m % 2 == 1 {
        let alloc = spread((r[hm] - center) / 2, &mut ss[..hn]);
        for (j, x) in alloc.into_iter().enumerate() {
            a.set(hm, j, x);
            a.set(hm, n - 1 - j, x);
            ss[n - 1 - j] -= x;
        }
    }
    if n % 2 == 1 {
        let alloc = spread((s[hn] - center) / 2, &mut rr[..hm]);
        for (i, x) in alloc.into_iter().enumerate() {
            a.set(i, hn, x);
            a.set(m - 1 - i, hn, x);
            rr[m - 1 - i] -= x;
        }
    }
    let b = greedy(&rr[..hm], &ss[..hn]);
    for i in 0..hm {
        for j in 0..hn {
            let x = *b.get(i, j);
            a.set(i, j, x);
            a.set(m - 1 - i, n - 1 - j, x);
        }
    }
    a
}

/// Integer matrix fixed by the vertical-axis reflection.
///
/// After removing the central-column parity marker every row sum is even;
/// the halved problem (rows `r̄_i/2`, columns `s_1..s_h` and `s̄_c/2`) is
/// solved greedily and each paired cell is copied to its mirror.
pub(crate) fn vertical_mirror(r: &[i64], s: &[i64]) -> DenseMatrix<i64> {
    let (m, n) = (r.len(), s.len());
    let h = n / 2;
    let odd = n % 2 == 1;
    let parity: Vec<i64> = r.iter().map(|&x| if odd { x % 2 } else { 0 }).collect();
    let rows: Vec<i64> = r.iter().zip(&parity).map(|(x, p)| (x - p) / 2).collect();
    let mut cols: Vec<i64> = s[..h].to_vec();
    if odd {
        cols.push((s[h] - parity.iter().sum::<i64>()) / 2);
    }
    let q = greedy(&rows, &cols);
    let mut a = DenseMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..h {
            a.set(i, j, *q.get(i, j));
            a.set(i, n - 1 - j, *q.get(i, j));
        }
        if odd {
            a.set(i, h, 2 * q.get(i, h) + parity[i]);
        }
    }
    a
}

/// Integer matrix fixed by both axis reflections.
///
/// Subtract the parity marker, then solve a quarter problem: rows `r̄_i/2`
/// for the top half plus a pseudo-row `(r̄_c - z)/4` for the central row,
/// columns likewise, with `z` the central cell. Central-row and
/// central-column cells carry twice their quarter value. The
/// pseudo-row/pseudo-column cell is never used.
pub(crate) fn axis_mirror(r: &[i64], s: &[i64]) -> DenseMatrix<i64> {
    let (m, n) = (r.len(), s.len());
    let (hm, hn) = (m / 2, n / 2);
    let (mo, no) = (m % 2 == 1, n % 2 == 1);
    let marker = parity_marker(r, s);
    let rbar: Vec<i64> = r.iter().zip(marker.row_sums()).map(|(x, y)| x - y).collect();
    let sbar: Vec<i64> = s.iter().zip(marker.col_sums()).map(|(x, y)| x - y).collect();
    let z = if mo && no { rbar[hm].min(sbar[hn]) } else { 0 };

    let mut rows: Vec<i64> = rbar[..hm].iter().map(|x| x / 2).collect();
    let mut cols: Vec<i64> = sbar[..hn].iter().map(|x| x / 2).collect();
    let qm = hm + usize::from(mo);
    let qn = hn + usize::from(no);
    let mut q = DenseMatrix::zeros(qm, qn);
    if mo {
        let alloc = spread((rbar[hm] - z) / 4, &mut cols);
        for (j, x) in alloc.into_iter().enumerate() {
            q.set(hm, j, x);
        }
    }
    if no {
        let alloc = spread((sbar[hn] - z) / 4, &mut rows);
        for (i, x) in alloc.into_iter().enumerate() {
            q.set(i, hn, x);
        }
    }
    let core = greedy(&rows, &cols);
    for i in 0..hm {
        for j in 0..hn {
            q.set(i, j, *core.get(i, j));
        }
    }

    let mut a = DenseMatrix::zeros(m, n);
    for i in 0..qm {
        for j in 0..qn {
            let central_row = mo && i == hm;
            let central_col = no && j == hn;
            let v = match (central_row, central_col) {
                (false, false) => *q.get(i, j),
                (true, true) => z,
                _ => 2 * q.get(i, j),
            };
            fill_orbit(&mut a, SubgroupId::Plus, i, j, v);
        }
    }
    a.add_assign(&marker);
    a
}

/// Quarter-turn invariant integer matrix for `R = S` palindromic with
/// (c) or (d). `B = D + P`: `D` halves the top rows, `P` pairs up the odd
/// ones; with (c) failing, the last odd row is fixed through the central
/// column instead and the center takes `r_c - 2`.
pub(crate) fn quarter_turn(r: &[i64]) -> DenseMatrix<i64> {
    let n = r.len();
    let h = n / 2;
    let mut odd: Vec<usize> = (0..h).filter(|&i| r[i] % 2 == 1).collect();
    let mut b = DenseMatrix::zeros(h, h);
    for i in 0..h {
        b.set(i, i, r[i] / 2);
    }
    let mut a = DenseMatrix::zeros(n, n);
    if n % 2 == 1 {
        let mut center = r[h];
        if odd.len() % 2 == 1 {
            let last = odd.pop().expect("odd count is positive");
            fill_orbit(&mut a, SubgroupId::Rot90, last, h, 1);
            center -= 2;
        }
        a.set(h, h, center);
    }
    for pair in odd.chunks(2) {
        if let [x, y] = *pair {
            *b.get_mut(x, y) += 1;
        }
    }
    for i in 0..h {
        for j in 0..h {
            fill_orbit(&mut a, SubgroupId::Rot90, i, j, *b.get(i, j));
        }
    }
    a
}

/// Fully symmetric integer matrix: diagonal plus antidiagonal of `r̄/2`
/// where `r̄ = R - R(A^+)`, then add the parity marker back.
pub(crate) fn full_symmetric(r: &[i64]) -> DenseMatrix<i64> {
    let n = r.len();
    let marker = parity_marker(r, r);
    let rbar: Vec<i64> = r.iter().zip(marker.row_sums()).map(|(x, y)| x - y).collect();
    let mut a = DenseMatrix::zeros(n, n);
    for i in 0..n {
        *a.get_mut(i, i) += rbar[i] / 2;
        *a.get_mut(i, n - 1 - i) += rbar[i] / 2;
    }
    a.add_assign(&marker);
    a
}
