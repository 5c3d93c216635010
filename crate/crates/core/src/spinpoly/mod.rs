//! Braid words and the spin-colored link polynomial of their closures.

pub mod braid;
pub mod eval;

pub use braid::{all_words, parse_braid, BraidWord};
pub use eval::{eval_raw, eval_spin, markov_battery, markov_suite, Normalization};
