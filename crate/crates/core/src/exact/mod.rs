//! Exact scalars, words, formal sums and truncated generating functions.

mod composition;
mod formal_sum;
pub mod linalg;
mod rational;
mod rule;
mod series;

pub use composition::{Composition, Partition};
pub use formal_sum::{FormalSum, TensorSum};
pub use rational::{format_rational, parse_rational, Rational};
pub use rule::DegreeRule;
pub use series::{
    series_of_exterior_algebra, series_of_polynomial_algebra, series_of_tensor_algebra,
    series_pointwise_product, DimensionSeries,
};
