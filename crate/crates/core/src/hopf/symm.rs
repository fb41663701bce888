use num::One;

use crate::exact::{FormalSum, Partition, Rational};

/// Image of the monomial symmetric function `m_λ` in the monomial
/// quasisymmetric basis: the sum of `M_α` over the distinct rearrangements
/// `α` of `λ`.
pub fn symm_to_qsymm(lambda: &Partition) -> FormalSum {
    lambda
        .distinct_rearrangements()
        .into_iter()
        .map(|c| (c, Rational::one()))
        .collect()
}
