//! Exact computations around suspensions of hyperbolic toral automorphisms:
//! `RL`-word normal forms for SL(2,Z) conjugacy classes, the parallelogram
//! and pair-of-pants construction of genus-one Birkhoff sections, their
//! Euler/boundary bookkeeping and first-return maps, trace descent, and
//! bounded exploration of the word, conjugacy and Ghys graphs.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`); nothing here uses
//! floating point.

pub mod birkhoff;
pub mod error;
pub mod graph;
pub mod sl2z;
pub mod torus;

pub use error::{Error, Result};
