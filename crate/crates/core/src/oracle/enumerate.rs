use crate::error::{Error, Result};
use crate::margins::{MarginPair, Scalar};
use crate::report::MatrixClass;
use crate::symmetry::{DenseMatrix, SubgroupId};

/// Exhaustive search over one value per `H`-orbit.
///
/// Orbits are visited in order of their minimal cell (row-major) and
/// values are tried from the largest admissible down. Integral entries are
/// capped at `entry_bound` (default `min(max R, max S)`); (0,1) at 1.
pub fn enumerate(
    p: &MarginPair,
    h: SubgroupId,
    c: MatrixClass,
    entry_bound: Option<i64>,
) -> Result<Option<DenseMatrix<Scalar>>> {
    crate::transport::check_shape(p, h)?;
    let (r, s) = match c {
        MatrixClass::Real => return Err(Error::RealEnumeration),
        MatrixClass::Integral => p.to_integers()?,
        MatrixClass::ZeroOne => p.to_integers()?,
    };
    let cap = match c {
        MatrixClass::ZeroOne => 1,
        _ => entry_bound.unwrap_or_else(|| {
            let mr = r.iter().copied().max().unwrap_or(0);
            let ms = s.iter().copied().max().unwrap_or(0);
            mr.min(ms)
        }),
    };
    Ok(search(&r, &s, h, cap).map(|a| a.to_scalar()))
}

struct Orbit {
    cells: Vec<(usize, usize)>,
    /// `(line, multiplicity)`; rows are `0..m`, columns `m..m+n`.
    lines: Vec<(usize, i64)>,
    cap: i64,
}

pub(crate) fn search(r: &[i64], s: &[i64], h: SubgroupId, cap: i64) -> Option<DenseMatrix<i64>> {
    let (m, n) = (r.len(), s.len());
    let target: Vec<i64> = r.iter().chain(s).copied().collect();
    let orbits: Vec<Orbit> = h
        .orbits(m, n)
        .into_iter()
        .map(|cells| {
            let mut mult = std::collections::BTreeMap::new();
            for &(i, j) in &cells {
                *mult.entry(i).or_insert(0i64) += 1;
                *mult.entry(m + j).or_insert(0i64) += 1;
            }
            let lines: Vec<(usize, i64)> = mult.into_iter().collect();
            let fit = lines.iter().map(|&(l, k)| target[l] / k).min().unwrap_or(0);
            Orbit { cells, lines, cap: cap.min(fit).max(0) }
        })
        .collect();
    // room[k][l]: most that orbits k.. can still add to line l
    let lines = m + n;
    let mut room = vec![vec![0i64; lines]; orbits.len() + 1];
    for k in (0..orbits.len()).rev() {
        room[k] = room[k + 1].clone();
        for &(l, mult) in &orbits[k].lines {
            room[k][l] += mult * orbits[k].cap;
        }
    }
    if (0..lines).any(|l| room[0][l] < target[l]) {
        return None;
    }
    let mut partial = vec![0i64; lines];
    let mut values = vec![0i64; orbits.len()];
    if !dfs(0, &orbits, &room, &target, &mut partial, &mut values) {
        return None;
    }
    let mut a = DenseMatrix::zeros(m, n);
    for (orbit, &v) in orbits.iter().zip(&values) {
        for &(i, j) in &orbit.cells {
            a.set(i, j, v);
        }
    }
    Some(a)
}

fn dfs(k: usize, orbits: &[Orbit], room: &[Vec<i64>], target: &[i64], partial: &mut [i64], values: &mut [i64]) -> bool {
    if k == orbits.len() {
        return partial.iter().zip(target).all(|(a, b)| a == b);
    }
    let orbit = &orbits[k];
    let mut hi = orbit.cap;
    let mut lo = 0i64;
    for &(l, mult) in &orbit.lines {
        let left = target[l] - partial[l];
        hi = hi.min(left / mult);
        // what the remaining orbits cannot supply must come from here
        let short = left - room[k + 1][l];
        if short > 0 {
            lo = lo.max((short + mult - 1) / mult);
        }
    }
    let mut v = hi;
    while v >= lo {
        for &(l, mult) in &orbit.lines {
            partial[l] += mult * v;
        }
        values[k] = v;
        let ok = dfs(k + 1, orbits, room, target, partial, values);
        for &(l, mult) in &orbit.lines {
            partial[l] -= mult * v;
        }
        if ok {
            return true;
        }
        v -= 1;
    }
    false
}
