//! Polynomial vector fields on the Beltrami/inertial chart: derivation
//! action, Lie bracket, evaluation and exact decomposition.

pub mod decompose;
pub mod vector_field;
pub mod xpoly;

pub use decompose::{decompose, recombine, Decomposer, NotInSpan};
pub use vector_field::{apply, bracket, eval_field, Point, VectorField};
pub use xpoly::{Monomial, XPoly};
