//! The divided-power operators `X^{(k)}` on `S ⊗ S`, traces, and the relation battery.

pub mod family;
pub mod relations;
pub mod spectral;
pub mod trace;

pub use family::{braiding, build_x, build_x_poly, x_eigenvalues, XFamily};
pub use trace::{ptrace, qtrace, qtrace_dominant, qtrace_intertwiner};
