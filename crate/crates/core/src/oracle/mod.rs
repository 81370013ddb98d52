//! Ground truth: witness verification, exhaustive orbit enumeration, and
//! sweeps comparing the characterizations against enumeration.

mod enumerate;
mod sweep;
mod verify;

pub use enumerate::enumerate;
pub use sweep::{sweep, sweep_with, Discrepancy, SweepConfig, SweepReport};
pub use verify::{verify, Mismatch, VerifyReport};
