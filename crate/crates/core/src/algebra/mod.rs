//! Exact integer algebra: polynomials, Hamiltonians, Krylov minimal
//! polynomials and eigenvalues in integer or real-quadratic form.

mod factor;
mod matrix;
mod number;
mod poly;

pub use factor::{factor_linear_quadratic, numeric_roots, FactoredSpectrum, SpectrumFactor};
pub use matrix::{
    characteristic_polynomial, distinct_eigenvalue_count, hamiltonian, krylov_min_poly, HamiltonianKind, IntMatrix,
};
pub use number::{algebraic_difference, AlgebraicNumber, FieldDifference};
pub use poly::IntPolynomial;
