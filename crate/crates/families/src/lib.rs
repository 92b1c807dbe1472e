//! The ideal families under study and the machinery built on top of the
//! algebra engine: Pfaffians and the skew-matrix construction, binomial edge
//! ideals of two parameterized graph families, iterative deviation-two
//! extensions with their class checkers, symmetric-algebra resolutions, and
//! the regularity-of-powers experiment suites.

pub mod bei;
pub mod dseq;
pub mod experiments;
pub mod family;
pub mod graphs;
pub mod hu;
pub mod pfaffian;
pub mod report;
pub mod symres;

pub use family::{ClassTag, DeviationFamily};
pub use graphs::GraphSpec;
