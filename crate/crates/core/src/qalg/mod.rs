//! Exact scalar arithmetic.

pub mod appendix;
pub mod format;
pub mod graded;
pub mod int;
pub mod laurent;
pub mod qnum;
pub mod ratfunc;

pub use graded::GradedScalar;
pub use int::Int;
pub use laurent::Laurent;
pub use qnum::{binom, circle_value, d_value, devil, gen_binom, qbinom, qbinom_at, qint, qint_at, qtwo, rho, selfconj_sum, sign};
pub use ratfunc::RatFunc;
