//! Exact q-Catalan toolkit: rational q-Catalan polynomials and their
//! parity-unimodality, truncated bivariate generating functions with the
//! positive-part and section operators, and the Dyck-path/tableau models of
//! the ordinary q-Catalan numbers.

pub mod combinatorics;
pub mod error;
pub mod genfun;
pub mod laurent;
pub mod qseries;
pub mod runner;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Region, SymmetryClass, UnimodalityReport, Verdict};
