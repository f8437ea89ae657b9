//! Numerical toolkit for Fischer-type determinantal inequalities of
//! accretive-dissipative matrices.
//!
//! A complex square matrix `A` is accretive-dissipative (AD) when both
//! Hermitian parts of its Cartesian decomposition `A = B + iC` are positive
//! definite. For a 2x2 block partition of such a matrix, the Fischer ratio
//! `|det A| / (|det A11| |det A22|)` is bounded by `3^m` (Ikramov), by the
//! sharper piecewise bound `2^(3m/2)` / `2^(n/2)`, and conjecturally by
//! `2^m`, where `m` is the order of the smaller diagonal block.
//!
//! The crate provides:
//!
//! - [`linalg`]: dense complex primitives (LU determinants, inverses,
//!   Cholesky positive-definiteness certificates, a cyclic Jacobi Hermitian
//!   eigensolver, HPD square roots, Loewner-order comparisons);
//! - [`ad`]: the accretive-dissipative domain layer (Cartesian
//!   decomposition, certified block partitions, Schur complements, the
//!   structural lemma checks);
//! - [`inequalities`]: the bound set, the Fischer ratio, the two-sided
//!   `|det(B+iC)| <= det(B+C) <= 2^(n/2)|det(B+iC)|` verifier, and
//!   step-by-step verifiers for both proof chains;
//! - [`generation`]: reproducible random HPD / AD matrix ensembles and the
//!   tight epsilon-family;
//! - [`search`]: derivative-free maximization of the Fischer ratio, probing
//!   the conjectured `2^m` bound.

pub mod ad;
pub mod error;
pub mod generation;
pub mod inequalities;
pub mod linalg;
mod rng;
pub mod search;

pub use crate::error::Error;
pub use crate::linalg::{ComplexMatrix, HermitianMatrix, LinalgError};
