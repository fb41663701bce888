use std::fmt;

use crate::error::{Error, Result};

/// Graded dimensions `dims(n)` for `min_degree <= n <= cap`.
///
/// Degrees below `min_degree` have dimension zero. Degrees above `cap` are
/// unknown and querying them is an error.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimensionSeries {
    min_degree: i64,
    cap: i64,
    dims: Vec<u64>,
}

impl DimensionSeries {
    /// Series starting in degree 0 with the given coefficients; the cap is
    /// the last listed degree.
    pub fn from_coefficients(dims: Vec<u64>) -> Self {
        assert!(!dims.is_empty(), "a series needs at least degree 0");
        let cap = dims.len() as i64 - 1;
        DimensionSeries {
            min_degree: 0,
            cap,
            dims,
        }
    }

    pub fn with_min_degree(min_degree: i64, dims: Vec<u64>) -> Self {
        assert!(!dims.is_empty(), "a series needs at least one degree");
        let cap = min_degree + dims.len() as i64 - 1;
        DimensionSeries {
            min_degree,
            cap,
            dims,
        }
    }

    pub fn from_fn(cap: usize, f: impl FnMut(usize) -> u64) -> Self {
        DimensionSeries::from_coefficients((0..=cap).map(f).collect())
    }

    /// `1` in degree 0 and nothing else.
    pub fn ground_field(cap: usize) -> Self {
        DimensionSeries::from_fn(cap, |n| u64::from(n == 0))
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn get(&self, degree: i64) -> Result<u64> {
        if degree > self.cap {
            return Err(Error::CapExceeded {
                requested: degree,
                cap: self.cap,
            });
        }
        if degree < self.min_degree {
            return Ok(0);
        }
        Ok(self.dims[(degree - self.min_degree) as usize])
    }

    /// `(degree, dim)` pairs from `min_degree` to `cap`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .map(move |(i, &d)| (self.min_degree + i as i64, d))
    }

    /// Coefficients of degrees `0..=cap`, padding with zeros below
    /// `min_degree` and dropping negative degrees.
    pub fn nonnegative_coefficients(&self) -> Vec<u64> {
        if self.cap < 0 {
            return Vec::new();
        }
        (0..=self.cap)
            .map(|n| self.get(n).expect("within cap"))
            .collect()
    }

    pub fn truncate(&self, cap: i64) -> Result<DimensionSeries> {
        if cap > self.cap {
            return Err(Error::CapExceeded {
                requested: cap,
                cap: self.cap,
            });
        }
        if cap < self.min_degree {
            return Err(Error::InvalidArgument(format!(
                "cannot truncate below the first degree {}",
                self.min_degree
            )));
        }
        let len = (cap - self.min_degree + 1) as usize;
        Ok(DimensionSeries {
            min_degree: self.min_degree,
            cap,
            dims: self.dims[..len].to_vec(),
        })
    }

    /// First degree in `lo..=min(cap)` where the two series differ.
    pub fn first_difference(&self, other: &DimensionSeries) -> Option<i64> {
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.cap.min(other.cap);
        (lo..=hi).find(|&n| self.get(n).unwrap() != other.get(n).unwrap())
    }

    /// Cauchy product; the result is valid up to the smaller cap.
    pub fn product(&self, other: &DimensionSeries) -> Result<DimensionSeries> {
        let min = self.min_degree + other.min_degree;
        let cap = (self.cap + other.min_degree).min(other.cap + self.min_degree);
        if cap < min {
            return Err(Error::InvalidArgument(
                "series product has an empty range".into(),
            ));
        }
        let mut dims = vec![0u64; (cap - min + 1) as usize];
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                let n = i + j;
                if n > cap {
                    break;
                }
                let slot = &mut dims[(n - min) as usize];
                *slot = a
                    .checked_mul(b)
                    .and_then(|p| slot.checked_add(p))
                    .ok_or(Error::Overflow("series product"))?;
            }
        }
        Ok(DimensionSeries {
            min_degree: min,
            cap,
            dims,
        })
    }

    /// Multiplies by `(1 - t^d)^(-m)` in place.
    pub(crate) fn mul_polynomial_factor(&mut self, degree: u32, multiplicity: u64) -> Result<()> {
        assert_eq!(self.min_degree, 0);
        let d = degree as usize;
        assert!(d > 0);
        if multiplicity == 0 {
            return Ok(());
        }
        // coefficients C(m + j - 1, j) of (1 - x)^(-m)
        let top = self.dims.len() / d;
        let mut binom = vec![1u128; top + 1];
        for j in 1..=top {
            let num = binom[j - 1]
                .checked_mul(u128::from(multiplicity) + j as u128 - 1)
                .ok_or(Error::Overflow("polynomial series"))?;
            binom[j] = num / j as u128;
        }
        let old = self.dims.clone();
        for n in 0..self.dims.len() {
            let mut acc: u128 = 0;
            for j in 0..=n / d {
                acc = acc
                    .checked_add(binom[j] * u128::from(old[n - j * d]))
                    .ok_or(Error::Overflow("polynomial series"))?;
            }
            self.dims[n] = u64::try_from(acc).map_err(|_| Error::Overflow("polynomial series"))?;
        }
        Ok(())
    }

    /// Polynomial algebra on `counts[d]` generators in each degree `d >= 1`.
    pub fn polynomial_from_counts(counts: &[u64], cap: usize) -> Result<DimensionSeries> {
        let mut s = DimensionSeries::ground_field(cap);
        for (d, &m) in counts.iter().enumerate().skip(1) {
            if d > cap {
                break;
            }
            s.mul_polynomial_factor(d as u32, m)?;
        }
        Ok(s)
    }

    /// Tensor algebra on `counts[d]` generators in each degree `d >= 1`.
    pub fn tensor_from_counts(counts: &[u64], cap: usize) -> Result<DimensionSeries> {
        let mut dims = vec![0u64; cap + 1];
        dims[0] = 1;
        for n in 1..=cap {
            let mut acc: u64 = 0;
            for (d, &m) in counts.iter().enumerate().skip(1).take(n) {
                acc = m
                    .checked_mul(dims[n - d])
                    .and_then(|p| acc.checked_add(p))
                    .ok_or(Error::Overflow("tensor series"))?;
            }
            dims[n] = acc;
        }
        Ok(DimensionSeries::from_coefficients(dims))
    }
}

impl fmt::Display for DimensionSeries {
    /// `(d_min, ..., d_cap)`, prefixed by the first degree when it is not 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.min_degree != 0 {
            write!(f, "[from degree {}] ", self.min_degree)?;
        }
        f.write_str("(")?;
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

fn counts_of(degrees: &[u32], cap: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; cap + 1];
    for &d in degrees {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "generator degrees must be at least 1".into(),
            ));
        }
        if (d as usize) <= cap {
            counts[d as usize] += 1;
        }
    }
    Ok(counts)
}

/// Coefficients of `1 / (1 - Σ_g t^deg(g))` up to `cap`.
pub fn series_of_tensor_algebra(degrees: &[u32], cap: usize) -> Result<DimensionSeries> {
    DimensionSeries::tensor_from_counts(&counts_of(degrees, cap)?, cap)
}

/// Coefficients of `Π_g (1 - t^deg(g))^(-1)` up to `cap`.
pub fn series_of_polynomial_algebra(degrees: &[u32], cap: usize) -> Result<DimensionSeries> {
    DimensionSeries::polynomial_from_counts(&counts_of(degrees, cap)?, cap)
}

/// Coefficients of `Π_g (1 + t^deg(g))` up to `cap`.
pub fn series_of_exterior_algebra(degrees: &[u32], cap: usize) -> Result<DimensionSeries> {
    counts_of(degrees, cap)?;
    let mut dims = vec![0u64; cap + 1];
    dims[0] = 1;
    for &d in degrees {
        let d = d as usize;
        if d > cap {
            continue;
        }
        for n in (d..=cap).rev() {
            dims[n] = dims[n]
                .checked_add(dims[n - d])
                .ok_or(Error::Overflow("exterior series"))?;
        }
    }
    Ok(DimensionSeries::from_coefficients(dims))
}

/// Cauchy product of two Poincaré series, truncated at the smaller cap.
pub fn series_pointwise_product(
    a: &DimensionSeries,
    b: &DimensionSeries,
) -> Result<DimensionSeries> {
    a.product(b)
}
