//! Exact computations in the half quantum group U>=0 of a finite-type Cartan
//! datum and in its finite-dimensional quotients at roots of unity.

pub mod algebra;
pub mod cache;
pub mod cartan;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod linalg;
pub mod lincomb;
pub mod par;
pub mod repmod;
pub mod rmatrix;
pub mod scalars;
pub mod yd;

pub use error::{Error, Result};
