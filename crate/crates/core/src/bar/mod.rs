//! Reduced bar complexes of augmented graded-commutative Q-algebras and
//! their rational homology `Tor^A(Q, Q)`.

mod complex;
mod kuenneth;
mod presentation;
mod presets;

pub use complex::{
    build_bar_complex, homology_dimensions, induced_product, BarComplex, BarWord, Bidegree,
    HomologyResult,
};
pub use kuenneth::{kuenneth_preset_check, KUENNETH_PRESETS};
pub use presentation::{
    BasisElement, Generator, GradedAlgebraPresentation, IdealVector, PresentationDocument,
    RelationKind, TableEntry, ValueTerm,
};
pub use presets::{
    load_presentation, parametric_presentation, AlgebraPreset, PresetRegistry, RulePreset,
};
