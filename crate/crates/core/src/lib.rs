//! Exact computations with locally complex algebras: Cayley-Dickson
//! doubling, identity checks, structure recognition, and low-dimensional
//! classification.

pub mod algebra;
pub mod cayley_dickson;
pub mod error;
pub mod expr;
pub mod io;
pub mod lowdim;
pub mod matrix;
pub mod properties;
pub mod rational;
pub mod rotation;
pub mod structure;
pub mod subspace;
pub mod tables;
pub mod verify;

pub use algebra::{Algebra, Element, MinimalQuadratic};
pub use error::{Error, ParseError, Result};
pub use matrix::QMatrix;
pub use rational::Rational;
pub use subspace::Subspace;
