use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use super::GradedGeneratorSet;
use crate::error::{Error, Result};
use crate::exact::DimensionSeries;
use crate::report::Report;

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Free Lie algebra dimensions `ℓ_0..=ℓ_cap` (with `ℓ_0 = 0`).
///
/// With `T = 1/(1 - g)`, the power sums `p_N = Σ_{d|N} d·ℓ_d` satisfy
/// `N·T_N = Σ_{k=1}^N p_k T_{N-k}`; Möbius inversion then gives
/// `ℓ_N = (1/N) Σ_{d|N} μ(N/d) p_d`.
pub fn free_lie_dimensions(generators: &GradedGeneratorSet) -> Result<DimensionSeries> {
    let cap = generators.cap() as usize;
    let counts = generators.counts();
    let mut t = vec![BigInt::zero(); cap + 1];
    t[0] = BigInt::one();
    for n in 1..=cap {
        t[n] = (1..=n).map(|d| BigInt::from(counts[d]) * &t[n - d]).sum();
    }
    let mut p = vec![BigInt::zero(); cap + 1];
    for n in 1..=cap {
        let mut acc = BigInt::from(n) * &t[n];
        for k in 1..n {
            acc -= &p[k] * &t[n - k];
        }
        p[n] = acc;
    }
    let mut dims = vec![0u64; cap + 1];
    for n in 1..=cap {
        let mut acc = BigInt::zero();
        for d in (1..=n).filter(|d| n % d == 0) {
            acc += BigInt::from(mobius((n / d) as u64)) * &p[d];
        }
        let l = BigRational::new(acc, BigInt::from(n));
        if !l.is_integer() || l.is_negative() {
            return Err(Error::Internal(format!(
                "free Lie dimension in weight {n} is {l}, not a nonnegative integer"
            )));
        }
        dims[n] = l
            .to_integer()
            .to_u64()
            .ok_or(Error::Overflow("free Lie dimension"))?;
    }
    Ok(DimensionSeries::from_coefficients(dims))
}

/// Checks `Π (1 - t^n)^(-ℓ_n) = 1/(1 - g)` for the computed `ℓ`.
pub fn pbw_check(generators: &GradedGeneratorSet) -> Result<Report> {
    let lie = free_lie_dimensions(generators)?;
    pbw_check_with(generators, &lie)
}

/// Checks the PBW identity for supplied Lie dimensions.
pub fn pbw_check_with(generators: &GradedGeneratorSet, lie: &DimensionSeries) -> Result<Report> {
    let cap = generators.cap() as usize;
    let mut report = Report::new(format!("pbw {generators}"));
    let enveloping = DimensionSeries::polynomial_from_counts(&lie.nonnegative_coefficients(), cap)?;
    let tensor = generators.tensor_series()?;
    for n in 0..=cap as i64 {
        let (u, t) = (enveloping.get(n)?, tensor.get(n)?);
        report.check(u == t, || {
            format!("weight {n}: Π(1-t^n)^(-ℓ_n) gives {u}, tensor algebra has {t}")
        });
    }
    Ok(report)
}

/// `dim Ext¹(Q(0), Q(n))`: the number of free generators in weight `n`.
pub fn ext1_dimension(generators: &GradedGeneratorSet, n: u32) -> Result<u64> {
    generators.count(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// `(1/n) Σ_{d|n} μ(d) k^{n/d}` by direct evaluation.
    fn witt_oracle(k: u64, n: u64) -> u64 {
        let mut acc: i128 = 0;
        for d in 1..=n {
            if n.is_multiple_of(d) {
                let mu = match d {
                    1 => 1,
                    _ => {
                        let mut f = Vec::new();
                        let mut m = d;
                        for p in 2..=d {
                            while m % p == 0 {
                                f.push(p);
                                m /= p;
                            }
                        }
                        let mut g = f.clone();
                        g.dedup();
                        if g.len() != f.len() {
                            0
                        } else if f.len() % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    }
                };
                acc += mu * i128::from(k).pow((n / d) as u32);
            }
        }
        assert_eq!(acc % i128::from(n), 0);
        (acc / i128::from(n)) as u64
    }

    fn dims(rule: &str, cap: u32) -> Vec<u64> {
        free_lie_dimensions(&GradedGeneratorSet::parse(rule, cap).unwrap())
            .unwrap()
            .nonnegative_coefficients()
    }

    #[test]
    fn one_generator_is_abelian() {
        assert_eq!(dims("1", 10), [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn witt_numbers() {
        assert_eq!(&dims("1,1", 6)[1..], [2, 1, 2, 3, 6, 9]);
        for k in 1..=3u64 {
            let rule = vec!["1"; k as usize].join(",");
            let d = dims(&rule, 24);
            for n in 1..=24 {
                assert_eq!(d[n as usize], witt_oracle(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn odd_generators_against_closed_form() {
        // 1/(1-g) with g = t^3 + t^5 + ... is (1-t^2)/(1-t^2-t^3)
        let g = GradedGeneratorSet::parse("odd>=3", 12).unwrap();
        let mut expect = vec![0i64; 13];
        let mut q = [0i64; 13];
        q[0] = 1;
        for n in 1..=12 {
            q[n] = if n >= 2 { q[n - 2] } else { 0 } + if n >= 3 { q[n - 3] } else { 0 };
        }
        for n in 0..=12 {
            expect[n] = q[n] - if n >= 2 { q[n - 2] } else { 0 };
        }
        let got = g.tensor_series().unwrap().nonnegative_coefficients();
        assert_eq!(got.iter().map(|&x| x as i64).collect::<Vec<_>>(), expect);
        assert!(pbw_check(&g).unwrap().passed());
        assert_eq!(&dims("odd>=3", 12)[..7], [0, 0, 0, 1, 0, 1, 0]);
    }

    #[test]
    fn pbw_detects_corruption() {
        let g = GradedGeneratorSet::parse("3,5,7,9,11", 12).unwrap();
        assert!(pbw_check(&g).unwrap().passed());
        let mut l = free_lie_dimensions(&g).unwrap().nonnegative_coefficients();
        l[8] += 1;
        let r = pbw_check_with(&g, &DimensionSeries::from_coefficients(l)).unwrap();
        assert!(r.failure.as_deref().unwrap().starts_with("weight 8"), "{r}");
    }

    #[test]
    fn ext1() {
        let g = GradedGeneratorSet::parse("odd>=3", 12).unwrap();
        assert_eq!(ext1_dimension(&g, 3).unwrap(), 1);
        assert_eq!(ext1_dimension(&g, 2).unwrap(), 0);
        assert_eq!(ext1_dimension(&g, 4).unwrap(), 0);
        assert!(matches!(
            ext1_dimension(&g, 13),
            Err(Error::CapExceeded { .. })
        ));
    }

    proptest! {
        #[test]
        fn integral_and_nonnegative(degrees in proptest::collection::vec(1u32..6, 1..4), cap in 1u32..24) {
            let g = GradedGeneratorSet::from_degrees(&degrees, cap).unwrap();
            prop_assert!(pbw_check(&g).unwrap().passed());
        }
    }
}
