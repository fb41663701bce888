use super::{deconcatenate, nsymm_coproduct, prepend_letter, HopfStructure};
use crate::exact::{Composition, FormalSum, TensorSum};

/// The first-letter recursion
///
/// ```text
/// (v·x) * (w·y) = v·(x * (w·y)) + w·((v·x) * y) [+ (v+w)·(x * y)]
/// ```
///
/// with the bracketed merge term present iff `merge`. Without it this is
/// the shuffle product, with it the quasi-shuffle for letter addition.
pub fn overlapping_shuffle(u: &Composition, v: &Composition, merge: bool) -> FormalSum {
    let (Some(a), Some(b)) = (u.first(), v.first()) else {
        return FormalSum::word(u.concat(v));
    };
    let (x, y) = (u.tail(), v.tail());
    let mut out = prepend_letter(a, &overlapping_shuffle(&x, v, merge));
    out = &out + &prepend_letter(b, &overlapping_shuffle(u, &y, merge));
    if merge {
        out = &out + &prepend_letter(a + b, &overlapping_shuffle(&x, &y, merge));
    }
    out
}

/// Sum over all interleavings of `u` and `v` preserving the order within
/// each.
pub fn shuffle(u: &Composition, v: &Composition) -> FormalSum {
    overlapping_shuffle(u, v, false)
}

/// Quasi-shuffle (stuffle) with letters merged by addition.
pub fn quasi_shuffle(u: &Composition, v: &Composition) -> FormalSum {
    overlapping_shuffle(u, v, true)
}

pub fn concatenate(u: &Composition, v: &Composition) -> FormalSum {
    FormalSum::word(u.concat(v))
}

/// Shuffle product with deconcatenation coproduct.
#[derive(Debug, Clone, Copy, Default)]
pub struct Shuffle;

impl HopfStructure for Shuffle {
    fn name(&self) -> &'static str {
        "shuffle"
    }

    fn description(&self) -> &'static str {
        "shuffle product, deconcatenation coproduct"
    }

    fn multiply_words(&self, u: &Composition, v: &Composition) -> FormalSum {
        shuffle(u, v)
    }

    fn comultiply_word(&self, w: &Composition) -> TensorSum {
        deconcatenate(w)
    }

    fn is_commutative(&self) -> bool {
        true
    }
}

/// Quasi-shuffle product with deconcatenation coproduct (monomial basis of
/// quasisymmetric functions).
#[derive(Debug, Clone, Copy, Default)]
pub struct QuasiShuffle;

impl HopfStructure for QuasiShuffle {
    fn name(&self) -> &'static str {
        "stuffle"
    }

    fn description(&self) -> &'static str {
        "quasi-shuffle product (letters merge by addition), deconcatenation coproduct"
    }

    fn multiply_words(&self, u: &Composition, v: &Composition) -> FormalSum {
        quasi_shuffle(u, v)
    }

    fn comultiply_word(&self, w: &Composition) -> TensorSum {
        deconcatenate(w)
    }

    fn is_commutative(&self) -> bool {
        true
    }
}

/// Concatenation product with `ΔZ_n = Σ_{i+j=n} Z_i ⊗ Z_j`
/// (noncommutative symmetric functions).
#[derive(Debug, Clone, Copy, Default)]
pub struct Concatenation;

impl HopfStructure for Concatenation {
    fn name(&self) -> &'static str {
        "concat"
    }

    fn description(&self) -> &'static str {
        "concatenation product, coproduct multiplicative with ΔZ_n = Σ Z_i⊗Z_j"
    }

    fn multiply_words(&self, u: &Composition, v: &Composition) -> FormalSum {
        concatenate(u, v)
    }

    fn comultiply_word(&self, w: &Composition) -> TensorSum {
        nsymm_coproduct(w)
    }

    fn is_commutative(&self) -> bool {
        false
    }
}
