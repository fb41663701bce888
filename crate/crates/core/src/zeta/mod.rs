//! Bernoulli numbers and the arithmetic around them (odd negative zeta
//! values, von Staudt–Clausen, image-of-J orders), plus dimension presets
//! for rational K-theory and mixed Tate motives.

mod arith;
mod bernoulli;
mod motivic;
mod presets;

pub(crate) use arith::odd_part;
pub use arith::{
    h1c_order_at_p, image_of_j_order, is_prime, von_staudt_clausen, zeta_odd_negative,
};
pub use bernoulli::{bernoulli, BernoulliTable};
pub use motivic::{
    lyndon_polynomial_series, motivic_consistency, motivic_consistency_with, mzv_dimension,
    mzv_dimensions,
};
pub use presets::{ktheory_preset, DegreeConvention, KTheoryPreset, KTheoryRegistry};
