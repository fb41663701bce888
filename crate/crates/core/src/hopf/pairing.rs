use num::{One, Zero};

use crate::exact::{Composition, FormalSum, Rational, TensorSum};

/// `⟨Z_I, M_J⟩ = δ_{I,J}`.
pub fn pairing(z: &Composition, m: &Composition) -> Rational {
    if z == m {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Bilinear extension of [`pairing`]: `x` in the `Z` basis, `y` in the
/// `M` basis.
pub fn pair(x: &FormalSum, y: &FormalSum) -> Rational {
    x.iter().map(|(w, a)| a * y.coeff(w)).sum()
}

/// `⟨a ⊗ b, c ⊗ d⟩ = ⟨a, c⟩⟨b, d⟩`, extended bilinearly.
pub fn pair_tensors(x: &TensorSum, y: &TensorSum) -> Rational {
    x.iter().map(|(l, r, a)| a * y.coeff(l, r)).sum()
}
