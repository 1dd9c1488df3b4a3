//! Exact graph inertia and inertia-based lower bounds for the chromatic
//! number, with solvers for the exact chromatic, independence and fractional
//! chromatic numbers and a harness that checks the bounds over graph corpora.

pub mod bounds;
pub mod chromatic;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod inertia;
pub mod spectrum;
pub mod srg;

/// Exact fraction used for bound values and LP optima.
pub type Rational = num_rational::BigRational;

pub use graph::{Graph, GraphError};
pub use inertia::{inertia, Inertia};
