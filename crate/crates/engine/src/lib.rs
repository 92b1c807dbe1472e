//! Exact-arithmetic commutative algebra over bigraded polynomial rings.
//!
//! The crate is organized bottom-up: coefficients and monomials, polynomial
//! arithmetic and parsing, Buchberger Groebner bases with the ideal-theoretic
//! toolkit (normal forms, colon, intersection, elimination, dimension/grade),
//! a module-level Groebner engine for syzygies, graded free complexes with
//! minimization and Betti tables, Hilbert series, and Koszul complexes with
//! homology presentations.

pub mod budget;
pub mod coeff;
pub mod complex;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod koszul;
pub mod matrix;
pub mod modgb;
pub mod modvec;
pub mod monomial;
pub mod order;
pub mod par;
pub mod parse;
pub mod poly;
pub mod resolution;
pub mod ring;

pub use budget::Budget;
pub use coeff::Coeff;
pub use complex::{FreeComplex, FreeModule, ModuleMap};
pub use error::{Error, Result};
pub use ideal::{GroebnerBasis, Ideal};
pub use monomial::Monomial;
pub use order::Order;
pub use poly::Polynomial;
pub use resolution::BettiTable;
pub use ring::{Bideg, PolyRing, RingRef};

/// Engine version string embedded in reports.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
