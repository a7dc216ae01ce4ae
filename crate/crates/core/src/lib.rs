//! Exact bosonisation of few-fermion harmonic-oscillator shells.
//!
//! Antisymmetric oscillator states in Bargmann space form a free module of
//! rank N!^(d-1) over the Euler bosons (one-axis elementary symmetric
//! polynomials); the generators are the shapes, the orthogonal complement
//! of all bosonically excited states. This crate computes shell bases,
//! shapes, angular-momentum multiplets, relative-motion classification,
//! and the N = 3, d = 2 Vandermonde identification, entirely over
//! Gaussian rationals with zero numerical tolerance.

pub mod error;
pub mod exec;
pub mod fock;
pub mod fqhe;
pub mod gaussian;
pub mod linalg;
pub mod monomial;
pub mod multiplets;
pub mod operators;
pub mod polynomial;
pub mod rmcm;
pub mod shapes;
pub mod text;

pub use error::Error;
pub use gaussian::{GaussianRational, Rational};
pub use monomial::{Monomial, VariableId};
pub use polynomial::Polynomial;
