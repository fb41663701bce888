//! Free graded Lie algebras at the level of dimensions: Witt numbers from
//! the PBW identity, Lyndon words, and Ext¹ bookkeeping.
//!
//! Generators carry a weight grading. Free Lie dimensions `ℓ_n` are the
//! unique integers with `Π (1 - t^n)^(-ℓ_n) = 1 / (1 - g(t))`, where `g` is
//! the generator series. No brackets are ever constructed.

mod generators;
mod lyndon;
mod witt;

pub use generators::GradedGeneratorSet;
pub use lyndon::{is_lyndon, lyndon_words};
pub use witt::{ext1_dimension, free_lie_dimensions, pbw_check, pbw_check_with};
