//! Named verification suites, each a batch of exact identity checks
//! parameterised by a single cap.

use std::sync::OnceLock;

use crate::bar::{build_bar_complex, Generator, GradedAlgebraPresentation};
use crate::error::{Error, Result};
use crate::exact::{
    series_of_polynomial_algebra, series_of_tensor_algebra, Composition, DimensionSeries,
    FormalSum, TensorSum,
};
use crate::hopf::{
    deconcatenate, hoffman_exp, hoffman_exp_word, hoffman_log, nsymm_coproduct, pair, pair_tensors,
    quasi_shuffle, shuffle, verify_bialgebra, HopfRegistry,
};
use crate::lie::{free_lie_dimensions, lyndon_words, pbw_check, GradedGeneratorSet};
use crate::report::Report;
use crate::zeta::{h1c_order_at_p, image_of_j_order, is_prime, odd_part, von_staudt_clausen};

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn run(&self, cap: u64) -> Result<Report>;
}

struct FnSuite {
    name: &'static str,
    description: &'static str,
    run: fn(u64) -> Result<Report>,
}

impl Suite for FnSuite {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn run(&self, cap: u64) -> Result<Report> {
        (self.run)(cap)
    }
}

pub struct SuiteRegistry {
    entries: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        SuiteRegistry {
            entries: Vec::new(),
        }
    }

    pub fn register(&mut self, suite: Box<dyn Suite>) {
        self.entries.push(suite);
    }

    pub fn with_builtins() -> Self {
        let table: [(&'static str, &'static str, fn(u64) -> Result<Report>); 6] = [
            ("hopf", "bialgebra and antipode axioms for every registered product, words of weight <= cap", hopf_suite),
            ("duality", "NSymm/QSymm pairing adjunctions, weight <= cap", duality_suite),
            ("exp-iso", "Hoffman exp is a Hopf isomorphism shuffle -> stuffle, and log inverts it", exp_iso_suite),
            ("bar", "bar homology of exterior and square-zero algebras on {1,3,5}, total degree <= cap", bar_suite),
            ("witt", "PBW identity and Lyndon counts, weight <= cap", witt_suite),
            ("zeta-global", "von Staudt–Clausen and local-global image-of-J orders, k <= cap", zeta_global_suite),
        ];
        let mut r = SuiteRegistry::empty();
        for (name, description, run) in table {
            r.register(Box::new(FnSuite {
                name,
                description,
                run,
            }));
        }
        r
    }

    pub fn builtin() -> &'static SuiteRegistry {
        static REGISTRY: OnceLock<SuiteRegistry> = OnceLock::new();
        REGISTRY.get_or_init(SuiteRegistry::with_builtins)
    }

    pub fn get(&self, name: &str) -> Result<&dyn Suite> {
        self.entries
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::unknown("suite", name))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|s| s.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Suite> {
        self.entries.iter().map(|s| s.as_ref())
    }
}

pub fn hopf_suite(cap: u64) -> Result<Report> {
    let mut report = Report::new(format!("hopf weight<={cap}"));
    for h in HopfRegistry::builtin().iter() {
        report.absorb(verify_bialgebra(h, cap));
    }
    Ok(report)
}

/// `⟨Z_I Z_J, M_K⟩ = ⟨Z_I ⊗ Z_J, Δ M_K⟩` and
/// `⟨Δ Z_K, M_I ⊗ M_J⟩ = ⟨Z_K, M_I ⧢̄ M_J⟩` for `|I| + |J| = |K| <= cap`.
pub fn duality_suite(cap: u64) -> Result<Report> {
    let mut report = Report::new(format!("duality weight<={cap}"));
    let words = Composition::all_up_to_weight(cap);
    for i in &words {
        for j in &words {
            if i.weight() + j.weight() > cap {
                continue;
            }
            let zij = FormalSum::word(i.concat(j));
            let zi_zj = TensorSum::tensor(&FormalSum::word(i.clone()), &FormalSum::word(j.clone()));
            let mi_mj = quasi_shuffle(i, j);
            let mij = zi_zj.clone();
            for k in Composition::all_of_weight(i.weight() + j.weight()) {
                let mk = FormalSum::word(k.clone());
                let (a, b) = (pair(&zij, &mk), pair_tensors(&zi_zj, &deconcatenate(&k)));
                report.check(a == b, || {
                    format!("<Z_({i})Z_({j}), M_({k})> = {a} but <Z⊗Z, ΔM> = {b}")
                });
                let (c, d) = (pair_tensors(&nsymm_coproduct(&k), &mij), pair(&mk, &mi_mj));
                report.check(c == d, || {
                    format!("<ΔZ_({k}), M_({i})⊗M_({j})> = {c} but <Z, M⧢̄M> = {d}")
                });
            }
        }
    }
    Ok(report)
}

/// `exp(u ⧢ v) = exp(u) ⧢̄ exp(v)`, `(exp ⊗ exp)∘Δ = Δ∘exp` and
/// `log∘exp = id`, all for weight `<= cap`.
pub fn exp_iso_suite(cap: u64) -> Result<Report> {
    let mut report = Report::new(format!("exp-iso weight<={cap}"));
    let words = Composition::all_up_to_weight(cap);
    let stuffle = |x: &FormalSum, y: &FormalSum| x.map_bilinear(y, quasi_shuffle);
    let exp: Vec<FormalSum> = words.iter().map(hoffman_exp_word).collect();
    for (u, eu) in words.iter().zip(&exp) {
        for (v, ev) in words.iter().zip(&exp) {
            if u.weight() + v.weight() > cap {
                continue;
            }
            let lhs = hoffman_exp(&shuffle(u, v));
            report.check(lhs == stuffle(eu, ev), || {
                format!("exp(({u})⧢({v})) != exp({u})⧢̄exp({v})")
            });
        }
        let lhs = deconcatenate(u).map_each(hoffman_exp_word, hoffman_exp_word);
        let mut rhs = TensorSum::zero();
        for (w, c) in eu.iter() {
            rhs.add_scaled(&deconcatenate(w), c);
        }
        report.check(lhs == rhs, || format!("(exp⊗exp)Δ({u}) != Δexp({u})"));
        let back = hoffman_log(eu);
        report.check(back == FormalSum::word(u.clone()), || {
            format!("log(exp({u})) = {back}")
        });
    }
    Ok(report)
}

fn generators(degrees: &[u32]) -> Vec<Generator> {
    degrees
        .iter()
        .map(|&d| Generator {
            name: format!("e{d}"),
            degree: d,
        })
        .collect()
}

fn compare_series(
    report: &mut Report,
    label: &str,
    got: &DimensionSeries,
    expect: &DimensionSeries,
) {
    let diff = got.first_difference(expect);
    report.check(diff.is_none(), || {
        let d = diff.unwrap_or_default();
        format!(
            "{label}: degree {d}: {} vs {}",
            got.get(d).unwrap_or(0),
            expect.get(d).unwrap_or(0)
        )
    });
}

/// Square-zero algebra on `degrees`: bar homology equals the tensor
/// algebra on shifted degrees, the differential vanishes, and the induced
/// product agrees with the shuffle on position words.
pub fn square_zero_duality(degrees: &[u32], cap: u32) -> Result<Report> {
    let mut report = Report::new(format!("square-zero {degrees:?} total degree<={cap}"));
    let a = GradedAlgebraPresentation::square_zero("Etilde", generators(degrees), cap)?;
    let c = build_bar_complex(&a, cap)?;
    report.check(c.differentials_vanish(), || {
        "square-zero differential is nonzero".into()
    });
    report.absorb(c.check_d_squared());
    let shifted: Vec<u32> = degrees.iter().map(|d| d + 1).collect();
    compare_series(
        &mut report,
        "Tor vs tensor algebra",
        &c.homology_dimensions().series,
        &series_of_tensor_algebra(&shifted, cap as usize)?,
    );
    let positions: Vec<u32> = (1..=degrees.len() as u32).collect();
    let words = Composition::words_over(&positions, u64::from(cap));
    let shifted_degree = |w: &Composition| {
        w.letters()
            .iter()
            .map(|&l| shifted[l as usize - 1])
            .sum::<u32>()
    };
    for u in &words {
        for v in &words {
            if shifted_degree(u) + shifted_degree(v) > cap {
                continue;
            }
            let p = c.induced_product(u, v)?;
            if shifted.iter().all(|d| d % 2 == 0) {
                report.check(p == shuffle(u, v), || {
                    format!("[{u}]·[{v}] = {p} differs from the shuffle")
                });
            }
            report.check(p == c.induced_product(v, u)?, || {
                format!("[{u}]·[{v}] != [{v}]·[{u}]")
            });
        }
    }
    Ok(report)
}

/// Exterior algebra on `degrees`: bar homology equals the polynomial
/// algebra on shifted degrees and `d∘d = 0` on every block.
pub fn exterior_duality(degrees: &[u32], cap: u32) -> Result<Report> {
    let mut report = Report::new(format!("exterior {degrees:?} total degree<={cap}"));
    let a = GradedAlgebraPresentation::exterior("E", generators(degrees), cap)?;
    let c = build_bar_complex(&a, cap)?;
    report.absorb(c.check_d_squared());
    let shifted: Vec<u32> = degrees.iter().map(|d| d + 1).collect();
    compare_series(
        &mut report,
        "Tor vs polynomial algebra",
        &c.homology_dimensions().series,
        &series_of_polynomial_algebra(&shifted, cap as usize)?,
    );
    Ok(report)
}

pub fn bar_suite(cap: u64) -> Result<Report> {
    let cap = u32::try_from(cap).map_err(|_| Error::InvalidArgument("cap too large".into()))?;
    let mut report = Report::new(format!("bar total degree<={cap}"));
    report.absorb(square_zero_duality(&[1, 3, 5], cap)?);
    report.absorb(exterior_duality(&[1, 3, 5], cap)?);
    Ok(report)
}

/// PBW for `{1}`, `{1,1}`, `{2,3}`, `odd>=3`, and Lyndon{2,3} counts
/// against `ℓ_n`.
pub fn witt_suite(cap: u64) -> Result<Report> {
    let cap32 = u32::try_from(cap).map_err(|_| Error::InvalidArgument("cap too large".into()))?;
    let mut report = Report::new(format!("witt weight<={cap}"));
    for rule in ["1", "1,1", "2,3", "odd>=3"] {
        report.absorb(pbw_check(&GradedGeneratorSet::parse(rule, cap32)?)?);
    }
    let lie = free_lie_dimensions(&GradedGeneratorSet::from_degrees(&[2, 3], cap32)?)?;
    let words = lyndon_words(&[2, 3], cap);
    for n in 1..=cap {
        let count = words.iter().filter(|w| w.weight() == n).count() as u64;
        let l = lie.get(n as i64)?;
        report.check(count == l, || {
            format!("weight {n}: {count} Lyndon words but ℓ = {l}")
        });
    }
    Ok(report)
}

/// For `k = 1..=cap`: von Staudt–Clausen integrality at `2k`, and the odd
/// part of the image-of-J order equals `Π_{p odd} h1c_order_at_p(p, k)`.
pub fn zeta_global_suite(cap: u64) -> Result<Report> {
    let mut report = Report::new(format!("zeta-global k<={cap}"));
    for k in 1..=cap {
        let vsc = von_staudt_clausen(2 * k);
        report.check(vsc.is_ok(), || {
            format!("von Staudt–Clausen fails at 2k = {}", 2 * k)
        });
        let order = image_of_j_order(k)?;
        let odd = odd_part(order);
        let mut local = 1u64;
        for p in (3..=2 * k + 1).filter(|&p| is_prime(p)) {
            local = local
                .checked_mul(h1c_order_at_p(p, k)?)
                .ok_or(Error::Overflow("h1c product"))?;
        }
        report.check(odd == local, || {
            format!("k = {k}: odd part of |im J| is {odd}, local orders give {local}")
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_caps() {
        for s in SuiteRegistry::builtin().iter() {
            let r = s.run(5).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.checks > 0, "{}", s.name());
        }
    }

    #[test]
    fn lookup() {
        let r = SuiteRegistry::builtin();
        assert_eq!(
            r.names(),
            ["hopf", "duality", "exp-iso", "bar", "witt", "zeta-global"]
        );
        assert!(matches!(r.get("nope"), Err(Error::Unknown { .. })));
    }
}
