//! Exact computations with linearly compact Lie superalgebras of vector
//! fields, their forms over non-closed fields, and finite Lie conformal
//! superalgebras.

pub mod checks;
pub mod conformal;
pub mod error;
pub mod families;
pub mod forms;
pub mod linalg;
pub mod poly;
pub mod qforms;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod vfield;

pub use error::{Error, Result};
pub use scalar::{ExactScalar, FieldDescriptor, Rational};
