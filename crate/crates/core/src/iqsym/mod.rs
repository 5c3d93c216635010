//! Symbolic side: the devil's divided powers, the relation tables, and the rewriting evaluator.

pub mod algebra;
pub mod engine;
pub mod gk;
pub mod route;
pub mod tables;

pub use algebra::{x_mult_table, AlgElement, XWord};
pub use engine::{eval_spin_symbolic, Engine};
pub use gk::iq_suite;
pub use route::route_suite;
