//! Feasibility reports and the frozen table of condition labels.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::margins::Scalar;
use crate::symmetry::{DenseMatrix, SubgroupId};

/// Which class of matrices is requested.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MatrixClass {
    /// Nonnegative rationals.
    Real,
    /// Nonnegative integers.
    Integral,
    /// Entries in {0, 1}.
    ZeroOne,
}

impl MatrixClass {
    pub const ALL: [MatrixClass; 3] = [MatrixClass::Real, MatrixClass::Integral, MatrixClass::ZeroOne];

    pub fn name(self) -> &'static str {
        match self {
            MatrixClass::Real => "real",
            MatrixClass::Integral => "integral",
            MatrixClass::ZeroOne => "zero-one",
        }
    }

    /// Whether `x` lies in the entry domain of the class.
    pub fn admits(self, x: &Scalar) -> bool {
        match self {
            MatrixClass::Real => !x.is_negative(),
            MatrixClass::Integral => !x.is_negative() && x.is_integer(),
            MatrixClass::ZeroOne => x.is_zero() || *x == Scalar::one(),
        }
    }
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MatrixClass::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::UnknownName { kind: "class", name: s.to_string() })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Decision {
    Feasible,
    Infeasible,
}

impl Decision {
    pub fn from_bool(feasible: bool) -> Self {
        if feasible {
            Decision::Feasible
        } else {
            Decision::Infeasible
        }
    }

    pub fn is_feasible(self) -> bool {
        self == Decision::Feasible
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Feasible => "feasible",
            Decision::Infeasible => "infeasible",
        })
    }
}

/// One labeled clause of the governing characterization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Condition {
    pub label: &'static str,
    pub holds: bool,
    pub detail: String,
}

impl Condition {
    pub(crate) fn new(label: &'static str, holds: bool, detail: impl Into<String>) -> Self {
        debug_assert!(describe(label).is_some(), "unregistered label {label}");
        Condition { label, holds, detail: detail.into() }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label, self.holds)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

/// The decision, every evaluated clause, and a verified witness when feasible.
#[derive(Clone, PartialEq, Debug)]
pub struct FeasibilityReport {
    pub subgroup: SubgroupId,
    pub class: MatrixClass,
    pub theorem: &'static str,
    pub decision: Decision,
    pub conditions: Vec<Condition>,
    pub witness: Option<DenseMatrix<Scalar>>,
}

impl FeasibilityReport {
    pub fn is_feasible(&self) -> bool {
        self.decision.is_feasible()
    }

    pub fn condition(&self, label: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.label == label)
    }
}

/// Frozen condition labels: `(label, clause, statement)`.
///
/// Indices are 1-based in the statements; `c` denotes the central index
/// `ceil(n/2)` (or `ceil(m/2)` for rows) and `h = floor(n/2)`.
pub const LABELS: &[(&str, &str, &str)] = &[
    ("T.sums", "T(R,S)", "sum R = sum S"),
    ("Tpi.R", "T^pi", "R is palindromic"),
    ("Tpi.S", "T^pi", "S is palindromic"),
    ("Tm1.a", "T^-1", "R = S"),
    ("Tp1.a", "T^+1", "S = reverse(R)"),
    ("Ttimes.a", "T^x (a)", "R = S"),
    ("Ttimes.b", "T^x (b)", "R is palindromic"),
    ("Tinfty.a", "T^infty (a)", "S is palindromic"),
    ("Tinfty.b", "T^infty_Z (b)", "n even: R even; n odd: s_c >= o(R)"),
    ("T0.a", "T^0 (a)", "R is palindromic"),
    ("T0.b", "T^0_Z (b)", "m even: S even; m odd: r_c >= o(S)"),
    ("Tpi2.a", "T^pi/2 (a)", "R = S"),
    ("Tpi2.b", "T^pi/2 (b)", "R is palindromic"),
    ("Tpi2.c", "T^pi/2_Z (c)", "r_1 + ... + r_h is even"),
    ("Tpi2.d", "T^pi/2_Z (d)", "n odd and r_c >= 2"),
    ("T4.a", "T^4 (a)", "R = S"),
    ("T4.b", "T^4 (b)", "R is palindromic"),
    ("T4.c", "T^4_Z (c)", "n even: R even; n odd: r_c >= o(R)"),
    ("A.gr", "A(R,S)", "S is majorized by R*"),
    ("Api.R", "A^pi", "R is palindromic"),
    ("Api.S", "A^pi", "S is palindromic"),
    ("Api.reduce", "A^pi (ii)/(iii)", "central reductions leave nonnegative margins"),
    ("Api.gr", "A^pi (i)", "reduced S' is majorized by R'*"),
    ("Am1.a", "A^-1", "R = S"),
    ("Am1.b", "A^-1", "R is majorized by R*"),
    ("Ap1.a", "A^+1", "S = reverse(R)"),
    ("Ap1.b", "A^+1", "reverse(R) is majorized by R*"),
    ("Atimes.a", "A^x", "R = S"),
    ("Atimes.b", "A^x", "R is palindromic"),
    ("Atimes.pi", "A^x", "A^pi(R,R) is nonempty"),
    ("Ainfty.a", "A^infty (a)", "S is palindromic"),
    ("Ainfty.b", "A^infty (b)", "n even: R even; n odd: s_c >= o(R)"),
    ("Ainfty.c", "A^infty (c)", "S-bar is majorized by R-bar*"),
    ("A0.a", "A^0 (a)", "R is palindromic"),
    ("A0.b", "A^0 (b)", "m even: S even; m odd: r_c >= o(S)"),
    ("A0.c", "A^0 (c)", "R-bar is majorized by S-bar* (mirror of A^infty (c))"),
    ("Aplus.c", "A^+ (c)", "n odd: o(R) = s_c; m odd: o(S) = r_c"),
    ("Aplus.d", "A^+ (d)", "floor-halved S top half is majorized by the conjugate of the floor-halved R top half"),
    ("Api2.a", "A^pi/2 (a)", "R = S"),
    ("Api2.b", "A^pi/2 (b)", "R is palindromic"),
    ("Api2.c", "A^pi/2 (c)", "r_1 + ... + r_h is even"),
    ("Api2.d", "A^pi/2 (d)", "n odd and r_c >= 2"),
    ("Api2.rbar", "A^pi/2", "R-bar is nonnegative"),
    ("Api2.parity", "A^pi/2", "sum of R-bar is even"),
    ("Api2.sym", "A^pi/2", "R-bar satisfies the symmetric (0,1,2) inequalities"),
    ("A4.a", "A^4 (a)", "R = S"),
    ("A4.b", "A^4 (b)", "R is palindromic"),
    ("A4.c", "A^4 (c)", "n even: R even; n odd: o(R) = r_c"),
    ("A4.d", "A^4 (d)", "the floor-halved top half of R is majorized by its conjugate"),
];

/// Clause and statement for a label.
pub fn describe(label: &str) -> Option<(&'static str, &'static str)> {
    LABELS.iter().find(|(l, _, _)| *l == label).map(|&(_, c, s)| (c, s))
}
