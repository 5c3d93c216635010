//! Exact spin-colored quantum `so(2n+1)` link polynomials, colored `sl_N`
//! polynomials, and a verification battery for the underlying identities.

pub mod error;
pub mod clifford;
pub mod qalg;
pub mod report;
pub mod rep;
pub mod xcalc;
pub mod iqsym;
pub mod spinpoly;
pub mod schur;
pub mod cli;

pub use error::Error;
