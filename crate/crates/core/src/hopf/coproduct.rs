use num::One;

use crate::exact::{Composition, Rational, TensorSum};

/// `Δ(v_1…v_r) = Σ_{i=0..r} (v_1…v_i) ⊗ (v_{i+1}…v_r)`.
pub fn deconcatenate(w: &Composition) -> TensorSum {
    let mut out = TensorSum::zero();
    for i in 0..=w.len() {
        let (l, r) = w.split_at(i);
        out.add_term(l, r, Rational::one());
    }
    out
}

/// Coproduct of `Z_I = Z_{i_1} ⋯ Z_{i_k}` in noncommutative symmetric
/// functions: the multiplicative extension of `ΔZ_n = Σ_{i+j=n} Z_i ⊗ Z_j`
/// with `Z_0 = 1`.
pub fn nsymm_coproduct(w: &Composition) -> TensorSum {
    let mut acc = TensorSum::zero();
    acc.add_term(Composition::empty(), Composition::empty(), Rational::one());
    for &n in w.letters() {
        let mut next = TensorSum::zero();
        for (l, r, c) in acc.iter() {
            for i in 0..=n {
                let left = if i > 0 {
                    l.concat(&Composition::letter(i))
                } else {
                    l.clone()
                };
                let right = if i < n {
                    r.concat(&Composition::letter(n - i))
                } else {
                    r.clone()
                };
                next.add_term(left, right, c.clone());
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn deconcatenation_examples() {
        assert_eq!(
            deconcatenate(&w("1,2")).to_string(),
            "()⊗(1,2) + (1)⊗(2) + (1,2)⊗()"
        );
        assert_eq!(deconcatenate(&Composition::empty()).to_string(), "()⊗()");
        assert_eq!(deconcatenate(&w("5")).to_string(), "()⊗(5) + (5)⊗()");
    }

    #[test]
    fn nsymm_examples() {
        assert_eq!(
            nsymm_coproduct(&w("2")).to_string(),
            "()⊗(2) + (1)⊗(1) + (2)⊗()"
        );
        assert_eq!(nsymm_coproduct(&w("1")).to_string(), "()⊗(1) + (1)⊗()");
        let t = nsymm_coproduct(&w("1,1"));
        assert_eq!(t.to_string(), "()⊗(1,1) + 2*(1)⊗(1) + (1,1)⊗()");
        assert_eq!(t.mass(), Rational::from_integer(4.into()));
    }

    #[test]
    fn coproduct_terms_preserve_weight() {
        for x in Composition::all_up_to_weight(6) {
            for t in [deconcatenate(&x), nsymm_coproduct(&x)] {
                assert!(t
                    .iter()
                    .all(|(l, r, _)| l.weight() + r.weight() == x.weight()));
            }
        }
    }
}
