//! Dihedral matrix classes: given margins `R`, `S`, a subgroup `H` of the
//! symmetries of the square and a class (real, integral, or (0,1)), decide
//! whether an `H`-invariant matrix with those margins exists and build one.
//!
//! ```
//! use dihedral_core::{solve, MarginPair, MatrixClass, SubgroupId};
//!
//! let p = MarginPair::from_integers(&[2, 1, 2], &[2, 1, 2]).unwrap();
//! let report = solve(&p, SubgroupId::Full, MatrixClass::ZeroOne).unwrap();
//! assert!(report.is_feasible());
//! ```

pub mod error;
pub mod margins;
pub mod oracle;
mod report;
pub mod symmetry;
pub mod transport;
pub mod zeroone;

pub use error::{Error, Result};
pub use margins::{MarginPair, MarginVector, MirrorPermutation, Scalar};
pub use report::{describe, Condition, Decision, FeasibilityReport, MatrixClass, LABELS};
pub use symmetry::{DenseMatrix, SubgroupId, Symmetry};

/// Decides nonemptiness for any class, with a verified witness when
/// nonempty.
pub fn solve(p: &MarginPair, h: SubgroupId, c: MatrixClass) -> Result<FeasibilityReport> {
    match c {
        MatrixClass::ZeroOne => zeroone::feasible01(p, h),
        _ => transport::feasible(p, h, c),
    }
}
