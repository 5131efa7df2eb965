//! Exact combinatorics of gentle algebras: strings, bands, their modules,
//! Auslander-Reiten translates, Hom/Ext via admissible pairs and
//! arrow/overlap extensions, quiver-Grassmannian Euler characteristics,
//! F-polynomials, g-vectors, cluster characters, the cluster-character
//! multiplication identity, polygon triangulations with the type-B
//! correspondence, and an independent seed-mutation oracle.
//!
//! Everything is exact: integer polynomial arithmetic throughout, and
//! arbitrary-precision rational linear algebra in the verification oracles.

pub mod algebra;
pub mod ar;
pub mod error;
pub mod fixtures;
pub mod homext;
pub mod invariants;
pub mod linalg;
pub mod modules;
pub mod multiplication;
pub mod oracle;
pub mod poly;
pub mod randgen;
pub mod rep;
pub mod strings;
pub mod typeb;

pub use algebra::{parse_algebra, validate_gentle, ExchangeMatrix, GentleAlgebra, Quiver};
pub use error::{DomainError, Error, ParseError};
pub use modules::{Module, ModuleSum, StringModule};
pub use poly::{LaurentCC, YPolynomial};
pub use strings::{Band, Letter, StringWord};
