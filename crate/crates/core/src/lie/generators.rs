use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{DegreeRule, DimensionSeries};

/// Free Lie generators: how many sit in each weight `1..=cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedGeneratorSet {
    counts: Vec<u64>,
    label: String,
}

impl GradedGeneratorSet {
    pub fn from_rule(rule: &DegreeRule, cap: u32) -> Self {
        GradedGeneratorSet {
            counts: rule.counts(u64::from(cap)),
            label: rule.to_string(),
        }
    }

    pub fn from_degrees(degrees: &[u32], cap: u32) -> Result<Self> {
        Ok(Self::from_rule(
            &DegreeRule::explicit(degrees.to_vec())?,
            cap,
        ))
    }

    /// Parses a rule such as `odd>=3`, `4k+1,k>=1` or `2,3`.
    pub fn parse(rule: &str, cap: u32) -> Result<Self> {
        Ok(Self::from_rule(&rule.parse()?, cap))
    }

    pub fn cap(&self) -> u32 {
        self.counts.len() as u32 - 1
    }

    /// Generator counts by weight, index 0 always zero.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, weight: u32) -> Result<u64> {
        self.counts
            .get(weight as usize)
            .copied()
            .ok_or(Error::CapExceeded {
                requested: i64::from(weight),
                cap: i64::from(self.cap()),
            })
    }

    /// The generator series `g(t)`.
    pub fn series(&self) -> DimensionSeries {
        DimensionSeries::from_coefficients(self.counts.clone())
    }

    /// Dimensions of the free associative (tensor) algebra, `1 / (1 - g)`.
    pub fn tensor_series(&self) -> Result<DimensionSeries> {
        DimensionSeries::tensor_from_counts(&self.counts, self.cap() as usize)
    }
}

impl fmt::Display for GradedGeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}} to weight {}", self.label, self.cap())
    }
}
