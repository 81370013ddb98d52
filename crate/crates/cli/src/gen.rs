//! Seeded random instances.

use dihedral_core::{DenseMatrix, MarginPair, MarginVector, MatrixClass, Scalar, SubgroupId};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub struct GenConfig {
    pub max_m: usize,
    pub max_n: usize,
    pub max_entry: i64,
    pub subgroup: SubgroupId,
    pub class: MatrixClass,
    /// Probability of drawing margins from a random member of the class.
    pub feasible_bias: f64,
}

/// Margins that always satisfy the structural requirements of the subgroup
/// (equal totals, palindromes, `S = R` or its reverse, (0,1) bounds). With
/// probability `feasible_bias` they come from an actual invariant matrix.
pub fn generate(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> MarginPair {
    if !rng.gen_bool(cfg.feasible_bias.clamp(0.0, 1.0)) {
        for _ in 0..100 {
            if let Some(p) = structural(rng, cfg) {
                return p;
            }
        }
    }
    from_matrix(rng, cfg)
}

fn dims(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> (usize, usize) {
    let m = rng.gen_range(1..=cfg.max_m.max(1));
    if cfg.subgroup.requires_square() {
        (m, m)
    } else {
        (m, rng.gen_range(1..=cfg.max_n.max(1)))
    }
}

fn from_matrix(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> MarginPair {
    let (m, n) = dims(rng, cfg);
    let hi = cfg.max_entry.max(0);
    let mut a = DenseMatrix::zeros(m, n);
    for orbit in cfg.subgroup.orbits(m, n) {
        let v = match cfg.class {
            MatrixClass::ZeroOne => Scalar::from_integer(i64::from(rng.gen_bool(0.5))),
            MatrixClass::Integral => Scalar::from_integer(rng.gen_range(0..=hi)),
            MatrixClass::Real => {
                let q = rng.gen_range(1..=4);
                Scalar::new(rng.gen_range(0..=hi * q), q)
            }
        };
        for (i, j) in orbit {
            a.set(i, j, v.clone());
        }
    }
    let rows = MarginVector::new(a.row_sums()).expect("nonnegative");
    let cols = MarginVector::new(a.col_sums()).expect("nonnegative");
    MarginPair::new(rows, cols).expect("equal totals")
}

fn structural(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Option<MarginPair> {
    use SubgroupId::*;
    let (m, n) = dims(rng, cfg);
    let h = cfg.subgroup;
    let zero_one = cfg.class == MatrixClass::ZeroOne;
    let row_cap = if zero_one { n as i64 } else { cfg.max_entry.max(0) * n as i64 };
    let col_cap = if zero_one { m as i64 } else { cfg.max_entry.max(0) * m as i64 };
    let rows_pal = matches!(h, Rot180 | ReflH | Times | Plus | Rot90 | Full);
    let cols_pal = matches!(h, Rot180 | ReflV | Times | Plus | Rot90 | Full);

    let mut r: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=row_cap)).collect();
    if rows_pal {
        for i in 0..m / 2 {
            r[m - 1 - i] = r[i];
        }
    }
    let s = match h {
        Diag | Times | Rot90 | Full => r.clone(),
        Antidiag => r.iter().rev().copied().collect(),
        _ => distribute(rng, r.iter().sum(), n, col_cap, cols_pal)?,
    };
    MarginPair::from_integers(&r, &s).ok()
}

/// A random vector of length `n` with the given total and entry cap.
fn distribute(rng: &mut ChaCha8Rng, total: i64, n: usize, cap: i64, palindromic: bool) -> Option<Vec<i64>> {
    let mut v = vec![0; n];
    let mut left = total;
    while left > 0 {
        // slots that can still take their unit (2 for a mirrored pair)
        let open: Vec<usize> = (0..n)
            .filter(|&j| {
                let step = if palindromic && 2 * j + 1 != n { 2 } else { 1 };
                (!palindromic || j <= n / 2) && v[j] < cap && step <= left
            })
            .collect();
        if open.is_empty() {
            return None;
        }
        let j = open[rng.gen_range(0..open.len())];
        v[j] += 1;
        left -= 1;
        if palindromic && 2 * j + 1 != n {
            v[n - 1 - j] += 1;
            left -= 1;
        }
    }
    Some(v)
}
