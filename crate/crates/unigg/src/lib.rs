//! Exact combinatorics behind Gelfand-Graev and degenerate Gelfand-Graev
//! characters of finite unitary groups.
//!
//! - [`partitions`]: partition arithmetic, 2-cores and 2-quotients
//! - [`poly`]: exact Laurent polynomials with rational coefficients
//! - [`symfunc`]: symmetric functions in the p, s, m and Hall-Littlewood bases
//! - [`tableaux`]: symplectic and domino tableaux
//! - [`domino_quotient`]: domino tableaux versus pairs of semistandard tableaux
//! - [`unitary`]: multipartitions, battery tableaux and multiplicities
//! - [`ggvalues`]: Gelfand-Graev character values as polynomials in q

pub mod domino_quotient;
pub mod error;
pub mod ggvalues;
pub mod partitions;
pub mod poly;
pub mod symfunc;
pub mod tableaux;
pub mod unitary;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use poly::LaurentPolyQ;
