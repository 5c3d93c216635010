//! Explicit matrices for the spin and vector representations and their intertwiners.

pub mod linop;
pub mod spin;
pub mod trivalent;
pub mod checks;

pub use linop::{apply_at, basis, pack, unpack, Factor, Key, LinOp, SVec, Sig};
pub use spin::{gen_op, Gen};
