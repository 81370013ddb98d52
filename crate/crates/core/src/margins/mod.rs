//! Exact scalars, margin vectors and the partition utilities behind every
//! theorem condition.

mod mirror;
pub mod partition;
mod scalar;
mod vector;

pub use mirror::MirrorPermutation;
pub use scalar::Scalar;
pub use vector::{MarginPair, MarginVector};
