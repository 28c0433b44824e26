//! Exact computations around Hilbert series of algebras attached to Hecke
//! symmetries: partitions and symmetric functions, truncated power series
//! with rationality and positivity certificates, explicit R-matrices with
//! dimension counts on tensor powers, and suites that compare the
//! combinatorial predictions with the matrix computations.
//!
//! All arithmetic is exact over the rationals.

pub mod arith;
pub mod error;
pub mod linalg;
pub mod par;
pub mod partitions;
pub mod rmatrix;
pub mod series;
pub mod symfunc;
pub mod verify;

pub use arith::Q;
pub use error::{Error, ParseError, Result};
pub use partitions::{Partition, PartitionPair};
pub use rmatrix::HeckeSymmetry;
pub use series::{BirankCertificate, Poly, RationalForm, TruncSeries};
pub use symfunc::{Basis, SymElement};
pub use verify::VerificationReport;
