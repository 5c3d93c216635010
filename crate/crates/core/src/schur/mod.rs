//! Type A side: idempotented quantum `gl_m`, its `N`-bounded quotient, and colored `sl_N`
//! link polynomials.

pub mod algebra;
pub mod form;
pub mod link;
pub mod suite;

pub use algebra::{ef_commute, Gen, GlWeight, Kind, SchurElement};
pub use form::{bilinear_form, FormEvaluator};
pub use link::{c_pm, eval_sln, kauffman_oracle};
pub use suite::{dictionary, form_suite, oracle_suite, DICTIONARY};
