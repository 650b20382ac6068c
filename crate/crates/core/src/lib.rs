//! Exact decisions for perfect state transfer and periodicity of continuous
//! quantum walks `U(t) = exp(itH)` on small graphs.
//!
//! The crate is `no_std` (with `alloc`). Eigenvalue supports are computed as
//! Krylov minimal polynomials in exact integer arithmetic; a floating-point
//! spectral decomposition is kept alongside to certify every exact verdict.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod graph;
pub mod numeric;
pub mod survey;
pub mod transfer;

pub use error::{Error, Result};
pub use graph::{Family, Graph};
