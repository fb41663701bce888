//! Exact computer algebra for the combinatorial side of covariant Koszul
//! duality over the rationals.
//!
//! The crate is organised by subsystem:
//!
//! - [`exact`]: rationals, compositions, formal sums and truncated
//!   Poincaré series, plus exact rank computation.
//! - [`hopf`]: shuffle, quasi-shuffle and concatenation Hopf algebras on
//!   compositions, antipodes, the NSymm/QSymm pairing and Hoffman's
//!   exponential.
//! - [`bar`]: reduced bar complexes of graded-commutative augmented
//!   algebras and their rational homology.
//! - [`lie`]: free graded Lie algebra dimensions and Lyndon words.
//! - [`zeta`]: Bernoulli numbers, image-of-J orders and dimension presets.
//! - [`suite`]: named verification suites over all of the above.
//!
//! Algorithm families that are chosen at runtime (Hopf structures, algebra
//! presets, dimension presets, verification suites) sit behind a trait and
//! are looked up by name in a registry.

pub mod bar;
pub mod error;
pub mod exact;
pub mod hopf;
pub mod lie;
pub mod report;
pub mod suite;
pub mod zeta;

pub use error::{Error, Result};
pub use exact::{Composition, DimensionSeries, FormalSum, Partition, Rational, TensorSum};
pub use report::Report;
