use std::fmt;

use crate::margins::{MarginPair, Scalar};
use crate::report::MatrixClass;
use crate::symmetry::{DenseMatrix, SubgroupId};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub kind: &'static str,
    pub index: usize,
    pub expected: String,
    pub actual: String,
}

/// Outcome of checking a candidate matrix against margins, symmetry and
/// entry domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub margins_ok: bool,
    pub invariant_ok: bool,
    pub domain_ok: bool,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.margins_ok && self.invariant_ok && self.domain_ok && self.mismatches.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (margins {}, invariance {}, domain {})",
            if self.pass() { "pass" } else { "fail" },
            ok(self.margins_ok),
            ok(self.invariant_ok),
            ok(self.domain_ok)
        )?;
        for m in &self.mismatches {
            write!(f, "; {}[{}] expected {} got {}", m.kind, m.index, m.expected, m.actual)?;
        }
        Ok(())
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "bad"
    }
}

pub fn verify(a: &DenseMatrix<Scalar>, p: &MarginPair, h: SubgroupId, c: MatrixClass) -> VerifyReport {
    let mut mismatches = Vec::new();
    let mut margins_ok = true;
    if a.rows() != p.m() || a.cols() != p.n() {
        margins_ok = false;
        mismatches.push(Mismatch {
            kind: "shape",
            index: 0,
            expected: format!("{}x{}", p.m(), p.n()),
            actual: format!("{}x{}", a.rows(), a.cols()),
        });
    } else {
        for (kind, got, want) in [("row", a.row_sums(), p.rows().entries()), ("col", a.col_sums(), p.cols().entries())] {
            for (index, (x, y)) in got.iter().zip(want).enumerate() {
                if x != y {
                    margins_ok = false;
                    mismatches.push(Mismatch { kind, index, expected: y.to_string(), actual: x.to_string() });
                }
            }
        }
    }
    let invariant_ok = a.is_invariant(h).unwrap_or(false);
    if !invariant_ok {
        mismatches.push(Mismatch { kind: "invariance", index: 0, expected: h.name().to_string(), actual: "not fixed".to_string() });
    }
    let mut domain_ok = true;
    for (index, x) in a.entries().iter().enumerate() {
        if !c.admits(x) {
            domain_ok = false;
            mismatches.push(Mismatch { kind: "entry", index, expected: c.name().to_string(), actual: x.to_string() });
        }
    }
    VerifyReport { margins_ok, invariant_ok, domain_ok, mismatches }
}
