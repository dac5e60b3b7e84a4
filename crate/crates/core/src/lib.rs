//! Symbolic contraction expansion of vacuum matrix elements of parabose and
//! charged parafermi field products of order `p`.
//!
//! An `N = 2n` point vacuum matrix element reduces to a sum over all perfect
//! matchings of the points 1..2n. Each matching is a [`ChordDiagram`]; each
//! term is the product of `n` two-point-function tokens weighted by an exact
//! integer-coefficient polynomial in `p` that depends only on the diagram's
//! [`CrossingGraph`]. This crate enumerates the diagrams, counts and censuses
//! crossings, computes the coefficient polynomials three independent ways
//! (brute-force sum over Green indices, set-partition summation, and the
//! partition closed form for the maximally saturated graph), and assembles
//! the full expansion with text/LaTeX/JSON rendering.
//!
//! ```
//! use parawick::{expansion, FieldPattern, Limits};
//!
//! let pattern = FieldPattern::parabose(4).unwrap();
//! let e = expansion::expand(&pattern, &Limits::default()).unwrap();
//! assert_eq!(e.terms().len(), 3);
//! assert_eq!(e.terms()[1].coefficient.to_string(), "-p^2+2p");
//! ```

pub mod coefficients;
pub mod diagrams;
mod error;
pub mod expansion;
pub mod partitions;
pub mod poly;

pub use error::{Error, Result};

pub use diagrams::{ChordDiagram, CrossingGraph, FieldKind, FieldPattern};
pub use expansion::Expansion;
pub use partitions::IntegerPartition;
pub use poly::PPolynomial;

/// Resource caps shared by the enumeration and summation routines.
///
/// The defaults keep casual use well away from combinatorial blowup:
/// `(2n-1)!!` diagrams at `n = 8` is already 2,027,025.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest chord count `n` accepted by diagram enumeration.
    pub max_n: usize,
    /// Elementary-product budget for the brute-force coefficient sums.
    pub oracle_budget: u128,
    /// Largest vertex count for the set-partition coefficient sum
    /// (the sum has Bell(n) terms; Bell(10) = 115,975).
    pub max_set_partition_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 8,
            oracle_budget: 100_000_000,
            max_set_partition_n: 10,
        }
    }
}
