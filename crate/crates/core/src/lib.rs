//! Exact domination polynomials of composed graphs.
//!
//! The crate is split into four layers:
//!
//! * [`graph`]: bitmask graphs of order at most 64, named families, and the
//!   graph algebra (union, join, complement, lexicographic product) together
//!   with small-graph isomorphism and catalog generation.
//! * [`poly`]: dense univariate polynomials over arbitrary-precision integers.
//! * [`oracle`]: brute-force enumeration of dominating sets, domination
//!   numbers, and monitor numbers. This is the ground truth everything else is
//!   checked against.
//! * [`formulas`]: closed-form domination polynomials of special products,
//!   computed symbolically from operand polynomials and orders.

pub mod error;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use formulas::FormulaId;
pub use graph::{Graph, VertexSet, MAX_ORDER};
pub use oracle::{DominationSummary, OracleConfig};
pub use poly::IntPoly;
