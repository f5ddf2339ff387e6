//! Exact rational coefficients for even zeta values and odd Dirichlet beta values.
//!
//! Every ζ(2k) is a rational multiple of π^{2k}, and every β(2k+1) is a rational
//! multiple of π^{2k+1}. This crate recovers those rationals without any numerical
//! summation. It evaluates the Fourier series of two piecewise power functions at a
//! point where the sum is known. That produces one linear identity per `k`, lower
//! triangular in the unknown coefficients, and the identities are solved by forward
//! substitution over arbitrary-precision rationals.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use pisum_core::engine::{solve_beta_table, solve_zeta_table};
//! use pisum_core::exact::rat;
//!
//! let zeta = solve_zeta_table(6).unwrap();
//! assert_eq!(zeta.get(6), Some(&rat(691, 638_512_875).unwrap()));
//!
//! let beta = solve_beta_table(2).unwrap();
//! assert_eq!(beta.get(2), Some(&rat(5, 1536).unwrap()));
//! ```

#![no_std]
#![deny(rustdoc::broken_intra_doc_links)]

extern crate alloc;

pub mod decimal;
pub mod engine;
pub mod error;
pub mod exact;
pub mod fourier;

pub use error::{Error, Result};
