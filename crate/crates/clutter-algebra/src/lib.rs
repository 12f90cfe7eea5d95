//! Exact decision procedures for clutters, edge ideals and their blowup algebras.

pub mod canonical;
pub mod clutter;
pub mod error;
pub mod graphs;
pub mod int;
pub mod linalg;
pub mod polyhedra;
pub mod rational;
pub mod rounding;
pub mod semigroup;
pub mod symbolic;

pub use clutter::Clutter;
pub use error::{Error, Result};
pub use int::{Int, IntVec};
pub use linalg::IntMatrix;
pub use rational::Rational;
