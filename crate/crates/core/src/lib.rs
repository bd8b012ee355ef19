//! Exact computer algebra for matrices over Lie nilpotent rings.
//!
//! The crate provides concrete noncommutative ℚ-algebras (Grassmann algebras,
//! algebras given by structure constants, upper triangular matrix algebras and
//! truncated relatively free Lie nilpotent algebras), the symmetric
//! determinant / right adjoint sequence machinery built on top of them, and
//! verification procedures for the Cayley-Hamilton type identities these
//! matrices satisfy. All arithmetic is exact.

pub mod backend;
pub mod dettheory;
pub mod error;
pub mod expr;
pub mod findim;
pub mod grassmann;
pub mod identities;
pub mod matpoly;
pub mod relfree;
pub mod ringcore;

pub use error::{Error, Result};
pub use ringcore::{Rational, Ring};
