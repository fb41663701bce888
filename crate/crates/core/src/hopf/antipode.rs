use std::collections::HashMap;

use super::HopfStructure;
use crate::exact::{Composition, FormalSum};

/// Memoised antipode of a connected graded bialgebra.
///
/// `S(()) = ()` and, for a nonempty word `w` with
/// `Δw = w ⊗ () + Σ w' ⊗ w''` (`w''` nonempty),
/// `S(w) = -Σ S(w')·w''`. The `w' = ()` term contributes `-w`.
pub struct AntipodeMemo<'a> {
    hopf: &'a dyn HopfStructure,
    cache: HashMap<Composition, FormalSum>,
}

impl<'a> AntipodeMemo<'a> {
    pub fn new(hopf: &'a dyn HopfStructure) -> Self {
        AntipodeMemo {
            hopf,
            cache: HashMap::new(),
        }
    }

    pub fn of_word(&mut self, w: &Composition) -> FormalSum {
        if let Some(s) = self.cache.get(w) {
            return s.clone();
        }
        let s = if w.is_empty() {
            FormalSum::one()
        } else {
            let mut acc = FormalSum::zero();
            for (l, r, c) in self.hopf.comultiply_word(w).iter() {
                if r.is_empty() {
                    continue;
                }
                let sl = self.of_word(l);
                let term = self.hopf.multiply(&sl, &FormalSum::word(r.clone()));
                acc.add_scaled(&term, &-c.clone());
            }
            acc
        };
        self.cache.insert(w.clone(), s.clone());
        s
    }

    pub fn of_sum(&mut self, x: &FormalSum) -> FormalSum {
        x.map_linear(|w| self.of_word(w))
    }
}

/// Antipode of `x` in the given Hopf structure.
pub fn antipode(x: &FormalSum, algebra: &dyn HopfStructure) -> FormalSum {
    AntipodeMemo::new(algebra).of_sum(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::hopf::{product_choice, Concatenation, QuasiShuffle, Shuffle};
    use num::{One, Signed};

    fn w(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn sign(len: usize) -> Rational {
        if len.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    /// Coarsenings of `w`: merge consecutive blocks by addition.
    fn coarsenings(w: &Composition) -> Vec<Composition> {
        let n = w.len();
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out = Vec::new();
        for cuts in 0u32..(1 << (n - 1)) {
            let mut letters = vec![w.letters()[0]];
            for i in 1..n {
                if cuts & (1 << (i - 1)) != 0 {
                    letters.push(w.letters()[i]);
                } else {
                    *letters.last_mut().unwrap() += w.letters()[i];
                }
            }
            out.push(Composition::new(letters).unwrap());
        }
        out
    }

    #[test]
    fn examples() {
        let sh = product_choice("shuffle").unwrap();
        let st = product_choice("stuffle").unwrap();
        assert_eq!(antipode(&FormalSum::one(), sh), FormalSum::one());
        assert_eq!(
            antipode(&FormalSum::word(w("1,2")), sh),
            FormalSum::word(w("2,1"))
        );
        assert_eq!(
            antipode(&FormalSum::word(w("2")), st),
            FormalSum::term(w("2"), -Rational::one())
        );
    }

    #[test]
    fn shuffle_closed_form() {
        let mut memo = AntipodeMemo::new(&Shuffle);
        for x in Composition::all_up_to_weight(8) {
            let expect = FormalSum::term(x.reversed(), sign(x.len()));
            assert_eq!(memo.of_word(&x), expect, "S({x})");
        }
    }

    #[test]
    fn stuffle_closed_form() {
        // S(M_w) = (-1)^len Σ over coarsenings of reverse(w)
        let mut memo = AntipodeMemo::new(&QuasiShuffle);
        for x in Composition::all_up_to_weight(7) {
            let mut expect = FormalSum::zero();
            for c in coarsenings(&x.reversed()) {
                expect.add_term(c, sign(x.len()));
            }
            assert_eq!(memo.of_word(&x), expect, "S({x})");
        }
    }

    #[test]
    fn nsymm_closed_form_on_generators() {
        // S(Z_n) = Σ_{I ⊨ n} (-1)^len(I) Z_I
        let mut memo = AntipodeMemo::new(&Concatenation);
        for n in 1..=7u64 {
            let mut expect = FormalSum::zero();
            for c in Composition::all_of_weight(n) {
                let s = sign(c.len());
                expect.add_term(c, s);
            }
            assert_eq!(memo.of_word(&Composition::letter(n as u32)), expect);
        }
    }

    #[test]
    fn shuffle_and_stuffle_antipodes_differ_as_maps() {
        let a = antipode(&FormalSum::word(w("1,1")), &Shuffle);
        let b = antipode(&FormalSum::word(w("1,1")), &QuasiShuffle);
        assert_ne!(a, b);
        assert!(b.coeff(&w("2")).is_positive());
    }
}
