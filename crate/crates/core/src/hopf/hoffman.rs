use std::collections::HashMap;

use num::{BigInt, One};

use crate::exact::{Composition, FormalSum, Rational};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Hoffman's exponential on a single word:
///
/// `exp(a_1…a_n) = Σ_{(i_1,…,i_k) ⊨ n} (Π 1/i_j!) · [a_1+…+a_{i_1}, …]`,
///
/// the sum over compositions of the length, each block of consecutive
/// letters merged by addition.
pub fn hoffman_exp_word(w: &Composition) -> FormalSum {
    let n = w.len();
    if n == 0 {
        return FormalSum::one();
    }
    let mut out = FormalSum::zero();
    for blocks in Composition::all_of_weight(n as u64) {
        let mut letters = Vec::with_capacity(blocks.len());
        let mut denom = BigInt::one();
        let mut pos = 0;
        for &b in blocks.letters() {
            let b = b as usize;
            letters.push(w.letters()[pos..pos + b].iter().sum());
            denom *= factorial(b);
            pos += b;
        }
        out.add_term(
            Composition::from_letters(letters),
            Rational::new(BigInt::one(), denom),
        );
    }
    out
}

/// Linear extension of [`hoffman_exp_word`]. Maps the shuffle algebra
/// isomorphically onto the quasi-shuffle algebra.
pub fn hoffman_exp(x: &FormalSum) -> FormalSum {
    x.map_linear(hoffman_exp_word)
}

/// Inverse of [`hoffman_exp`].
///
/// `exp(w) = w + (terms of shorter length)`, so the inverse is obtained by
/// back-substitution: `log(w) = w - Σ_{u ≠ w} c_u log(u)`.
pub fn hoffman_log(x: &FormalSum) -> FormalSum {
    let mut memo: HashMap<Composition, FormalSum> = HashMap::new();
    x.map_linear(|w| log_word(w, &mut memo))
}

fn log_word(w: &Composition, memo: &mut HashMap<Composition, FormalSum>) -> FormalSum {
    if let Some(s) = memo.get(w) {
        return s.clone();
    }
    let mut out = FormalSum::word(w.clone());
    for (u, c) in hoffman_exp_word(w).iter() {
        if u != w {
            let lu = log_word(u, memo);
            out.add_scaled(&lu, &-c.clone());
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::HopfStructure;
    use crate::hopf::{deconcatenate, quasi_shuffle, shuffle, QuasiShuffle};

    fn w(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn fs(s: &str) -> FormalSum {
        s.parse().unwrap()
    }

    /// Closed-form logarithm with block coefficients (-1)^(i-1)/i.
    fn log_closed_form(w: &Composition) -> FormalSum {
        let n = w.len();
        if n == 0 {
            return FormalSum::one();
        }
        let mut out = FormalSum::zero();
        for blocks in Composition::all_of_weight(n as u64) {
            let mut letters = Vec::new();
            let mut coeff = Rational::one();
            let mut pos = 0;
            for &b in blocks.letters() {
                let b = b as usize;
                letters.push(w.letters()[pos..pos + b].iter().sum());
                let s = if b % 2 == 1 { 1 } else { -1 };
                coeff *= Rational::new(BigInt::from(s), BigInt::from(b));
                pos += b;
            }
            out.add_term(Composition::new(letters).unwrap(), coeff);
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(hoffman_exp_word(&w("4")), fs("(4)"));
        assert_eq!(hoffman_exp_word(&w("1,1")), fs("(1,1) + 1/2*(2)"));
        let lhs = hoffman_exp(&shuffle(&w("1"), &w("1")));
        assert_eq!(lhs, fs("2*(1,1) + (2)"));
        assert_eq!(lhs, quasi_shuffle(&w("1"), &w("1")));
        assert_eq!(hoffman_log(&fs("(3)")), fs("(3)"));
        assert_eq!(hoffman_log(&fs("(1,1) + 1/2*(2)")), fs("(1,1)"));
    }

    #[test]
    fn log_matches_closed_form_and_inverts_exp() {
        for x in Composition::all_up_to_weight(8) {
            let lx = hoffman_log(&FormalSum::word(x.clone()));
            assert_eq!(lx, log_closed_form(&x), "log({x})");
            assert_eq!(hoffman_exp(&lx), FormalSum::word(x.clone()));
            assert_eq!(
                hoffman_log(&hoffman_exp_word(&x)),
                FormalSum::word(x.clone())
            );
        }
    }

    #[test]
    fn exp_is_a_weight_preserving_morphism() {
        let words = Composition::all_up_to_weight(4);
        for u in &words {
            let eu = hoffman_exp_word(u);
            assert!(eu.support().all(|t| t.weight() == u.weight()));
            for v in &words {
                let lhs = hoffman_exp(&shuffle(u, v));
                let rhs = QuasiShuffle.multiply(&eu, &hoffman_exp_word(v));
                assert_eq!(lhs, rhs, "{u} {v}");
            }
            let lhs = deconcatenate(u).map_each(hoffman_exp_word, hoffman_exp_word);
            let mut rhs = crate::exact::TensorSum::zero();
            for (t, c) in eu.iter() {
                rhs.add_scaled(&deconcatenate(t), c);
            }
            assert_eq!(lhs, rhs);
        }
    }
}
