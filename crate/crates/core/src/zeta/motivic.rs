use crate::error::{Error, Result};
use crate::exact::{series_of_polynomial_algebra, DimensionSeries};
use crate::lie::lyndon_words;
use crate::report::Report;

use super::ktheory_preset;

/// `d_n` with `d_0 = 1, d_1 = 0, d_2 = 1, d_n = d_{n-2} + d_{n-3}`.
pub fn mzv_dimension(n: u64) -> Result<u64> {
    Ok(*mzv_dimensions(n as usize)?.last().expect("nonempty"))
}

/// `d_0..=d_cap`.
pub fn mzv_dimensions(cap: usize) -> Result<Vec<u64>> {
    let mut d = vec![1u64, 0, 1];
    for n in 3..=cap {
        let v = d[n - 2]
            .checked_add(d[n - 3])
            .ok_or(Error::Overflow("mzv dimension"))?;
        d.push(v);
    }
    d.truncate(cap + 1);
    Ok(d)
}

/// Polynomial algebra with one generator in weight `|w|` for each Lyndon
/// word `w` over `{2, 3}`.
pub fn lyndon_polynomial_series(cap: usize) -> Result<DimensionSeries> {
    let mut counts = vec![0u64; cap + 1];
    for w in lyndon_words(&[2, 3], cap as u64) {
        counts[w.weight() as usize] += 1;
    }
    DimensionSeries::polynomial_from_counts(&counts, cap)
}

/// Compares three computations of `d_n` through weight `cap`: the
/// recursion, the polynomial algebra on Lyndon{2,3}, and the cotensor
/// algebra on the `KQZ-weights` generators times `Q[f_2]`.
pub fn motivic_consistency(cap: usize) -> Result<Report> {
    let kqz = ktheory_preset("KQZ-weights")?.series(cap as i64)?;
    motivic_consistency_with(&kqz, cap)
}

/// As [`motivic_consistency`], with the generator series supplied.
pub fn motivic_consistency_with(kqz: &DimensionSeries, cap: usize) -> Result<Report> {
    let mut report = Report::new(format!("motivic consistency weight<={cap}"));
    let recursion = mzv_dimensions(cap)?;
    let lyndon = lyndon_polynomial_series(cap)?;
    let counts = kqz.truncate(cap as i64)?.nonnegative_coefficients();
    let cotensor = DimensionSeries::tensor_from_counts(&counts, cap)?
        .product(&series_of_polynomial_algebra(&[2], cap)?)?;
    for n in 0..=cap {
        let (a, b, c) = (recursion[n], lyndon.get(n as i64)?, cotensor.get(n as i64)?);
        report.check(a == b && b == c, || {
            format!("weight {n}: recursion {a}, Lyndon polynomial {b}, cotensor × Q[f2] {c}")
        });
    }
    Ok(report)
}
