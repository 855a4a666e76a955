//! Exact computation of quasimap I-functions for GIT quotients `X // G` of
//! vector spaces, together with the supporting combinatorics (anticones,
//! effective classes, sectors), presentation extensions, mirror maps and the
//! quantum period of one del Pezzo orbifold.
//!
//! The algebra layer is generic over [`algebra::Scalar`]; everything above it
//! works with exact rationals through the aliases below.

pub mod algebra;
pub mod config;
pub mod effective;
pub mod error;
pub mod fixtures;
pub mod iseries;
pub mod linalg;
pub mod lp;
pub mod period;
pub mod presentation;

pub use error::{Error, Result, Violation};

pub type Rational = num_rational::BigRational;
pub type HPoly = algebra::MPoly<Rational>;
pub type ZLaurent = algebra::Laurent<Rational>;
pub use algebra::HLinearForm;
