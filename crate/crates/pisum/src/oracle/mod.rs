//! Ground truth that shares no code path with the triangular solvers.
//!
//! * closed forms from Bernoulli and Euler numbers,
//! * tail-bounded partial sums of the defining series,
//! * adaptive quadrature of the Fourier coefficient integrals,
//! * an arctangent computation of π that validates the built-in constant.

mod numbers;
mod partial_sum;
mod pi;
mod quadrature;

pub use numbers::{
    bernoulli_numbers, beta_closed_form, beta_closed_table, euler_numbers, zeta_closed_form,
    zeta_closed_table,
};
pub use partial_sum::{partial_sum, Series};
pub use pi::{machin_pi, validate_pi, PiMismatch};
pub use quadrature::{integrate, integrate_mean, QuadratureError, ABS_TOLERANCE};
