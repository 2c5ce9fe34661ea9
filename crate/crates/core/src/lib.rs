//! Exact symplectic spinor algebra on degree-truncated polynomial models.
//!
//! The crate works over Gaussian rationals with no floating point anywhere.
//! It provides the symplectic Clifford action on `ℂ[x¹,…,x^l]`, the operators
//! `X`, `Y`, `Σ^σ`, `Θ^σ` on spinor-valued forms `Λ^•V*⊗S`, the decomposition
//! of `Λ^iV*⊗S` into the components `E^{ij}` with their projections, the
//! curvature operator built from a symplectic Ricci tensor, and a
//! polynomial-coefficient model of Fedosov connections on `ℝ^{2l}`.
//!
//! Indices in the public API follow the mathematical 1-based convention where
//! they name basis vectors (`omega(1, 3)`), and 0-based slots where they
//! address storage ([`FormIndex`], [`Monomial`]).

#![no_std]

extern crate alloc;

pub mod curvature;
pub mod decomposition;
pub mod error;
pub mod fedosov;
pub mod forms;
pub mod linalg;
pub mod monomial;
pub mod operators;
pub mod scalar;
pub mod spinor;
pub mod symplectic;

pub use error::{Error, Result};
pub use forms::SpinorForm;
pub use linalg::{SparseMatrix, SparseVector};
pub use monomial::{FormIndex, Monomial};
pub use scalar::{Rational, Scalar};
pub use spinor::{PolySpinor, SpElement};
pub use symplectic::SymplecticSpace;
