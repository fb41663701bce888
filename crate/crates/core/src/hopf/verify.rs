use std::collections::BTreeMap;

use num::Zero;

use super::{AntipodeMemo, HopfStructure};
use crate::exact::{Composition, FormalSum, Rational, TensorSum};
use crate::report::Report;

type Triple = BTreeMap<(Composition, Composition, Composition), Rational>;

fn add_triple(t: &mut Triple, key: (Composition, Composition, Composition), c: Rational) {
    let e = t.entry(key).or_insert_with(Rational::zero);
    *e += c;
}

fn normalize(mut t: Triple) -> Triple {
    t.retain(|_, c| !c.is_zero());
    t
}

/// `(a⊗b)(c⊗d) = ac ⊗ bd` in the tensor square of `hopf`.
pub fn tensor_product_in(hopf: &dyn HopfStructure, x: &TensorSum, y: &TensorSum) -> TensorSum {
    let mut out = TensorSum::zero();
    for (a, b, c1) in x.iter() {
        for (c, d, c2) in y.iter() {
            let left = hopf.multiply_words(a, c);
            let right = hopf.multiply_words(b, d);
            out.add_scaled(&TensorSum::tensor(&left, &right), &(c1 * c2));
        }
    }
    out
}

fn word(w: &Composition) -> FormalSum {
    FormalSum::word(w.clone())
}

/// Exhaustively checks the Hopf algebra axioms on basis words.
///
/// Unit, counit, coassociativity and both antipode identities are checked
/// for every word of weight `<= cap`; commutativity (when claimed) and
/// `Δ(uv) = Δ(u)Δ(v)` for every pair, and associativity for every triple,
/// of total weight `<= cap`.
pub fn verify_bialgebra(hopf: &dyn HopfStructure, cap: u64) -> Report {
    let mut report = Report::new(format!("bialgebra[{}] weight<={cap}", hopf.name()));
    let words = Composition::all_up_to_weight(cap);
    let empty = Composition::empty();
    let mut antipode = AntipodeMemo::new(hopf);

    for w in &words {
        let x = word(w);
        report.check(
            hopf.multiply_words(&empty, w) == x && hopf.multiply_words(w, &empty) == x,
            || format!("unit law fails on ({w})"),
        );

        let delta = hopf.comultiply_word(w);
        report.check(
            delta
                .iter()
                .all(|(l, r, _)| l.weight() + r.weight() == w.weight()),
            || format!("coproduct of ({w}) is not weight graded"),
        );

        let left_counit = delta.contract(|l, r| {
            if l.is_empty() {
                word(r)
            } else {
                FormalSum::zero()
            }
        });
        let right_counit = delta.contract(|l, r| {
            if r.is_empty() {
                word(l)
            } else {
                FormalSum::zero()
            }
        });
        report.check(left_counit == x && right_counit == x, || {
            format!("counit law fails on ({w})")
        });

        let mut lhs = Triple::new();
        let mut rhs = Triple::new();
        for (l, r, c) in delta.iter() {
            for (ll, lr, c2) in hopf.comultiply_word(l).iter() {
                add_triple(&mut lhs, (ll.clone(), lr.clone(), r.clone()), c * c2);
            }
            for (rl, rr, c2) in hopf.comultiply_word(r).iter() {
                add_triple(&mut rhs, (l.clone(), rl.clone(), rr.clone()), c * c2);
            }
        }
        report.check(normalize(lhs) == normalize(rhs), || {
            format!("coassociativity fails on ({w})")
        });

        let eps = if w.is_empty() {
            FormalSum::one()
        } else {
            FormalSum::zero()
        };
        let s_id = delta.contract(|l, r| hopf.multiply(&antipode.of_word(l), &word(r)));
        let id_s = delta.contract(|l, r| hopf.multiply(&word(l), &antipode.of_word(r)));
        report.check(s_id == eps, || {
            format!("S*id != unit∘counit on ({w}): got {s_id}")
        });
        report.check(id_s == eps, || {
            format!("id*S != unit∘counit on ({w}): got {id_s}")
        });
    }

    for u in &words {
        for v in &words {
            if u.weight() + v.weight() > cap {
                continue;
            }
            let uv = hopf.multiply_words(u, v);
            report.check(
                uv.support().all(|t| t.weight() == u.weight() + v.weight()),
                || format!("product ({u})·({v}) is not weight graded"),
            );
            if hopf.is_commutative() {
                report.check(uv == hopf.multiply_words(v, u), || {
                    format!("({u})·({v}) != ({v})·({u})")
                });
            }
            let lhs = hopf.comultiply(&uv);
            let rhs = tensor_product_in(hopf, &hopf.comultiply_word(u), &hopf.comultiply_word(v));
            report.check(lhs == rhs, || format!("Δ(({u})·({v})) != Δ({u})Δ({v})"));
        }
    }

    for u in &words {
        for v in &words {
            if u.weight() + v.weight() > cap {
                continue;
            }
            let uv = hopf.multiply_words(u, v);
            for t in &words {
                if u.weight() + v.weight() + t.weight() > cap {
                    continue;
                }
                let left = hopf.multiply(&uv, &word(t));
                let right = hopf.multiply(&word(u), &hopf.multiply_words(v, t));
                report.check(left == right, || {
                    format!("associativity fails on ({u}),({v}),({t})")
                });
            }
        }
    }

    report
}
