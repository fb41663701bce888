use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::DimensionSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeConvention {
    /// Topological degree of homotopy or homology groups.
    Topological,
    /// Motivic weight; topological degree is twice the weight.
    Weight,
}

impl fmt::Display for DegreeConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeConvention::Topological => "degree",
            DegreeConvention::Weight => "weight",
        })
    }
}

/// A named graded dimension pattern.
pub trait KTheoryPreset: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn convention(&self) -> DegreeConvention;

    /// The dimension series through degree `cap`.
    fn series(&self, cap: i64) -> Result<DimensionSeries>;

    /// Labelled rows; a single row unless the preset is bigraded.
    fn rows(&self, cap: i64) -> Result<Vec<(String, DimensionSeries)>> {
        Ok(vec![("dim".to_string(), self.series(cap)?)])
    }
}

/// A preset given by a dimension rule on degrees `min_degree..`.
struct RulePreset {
    name: &'static str,
    description: &'static str,
    convention: DegreeConvention,
    min_degree: i64,
    rule: fn(i64) -> u64,
}

impl KTheoryPreset for RulePreset {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn convention(&self) -> DegreeConvention {
        self.convention
    }

    fn series(&self, cap: i64) -> Result<DimensionSeries> {
        if cap < self.min_degree {
            return Err(Error::InvalidArgument(format!(
                "{} starts in degree {}",
                self.name, self.min_degree
            )));
        }
        let dims = (self.min_degree..=cap).map(self.rule).collect();
        Ok(DimensionSeries::with_min_degree(self.min_degree, dims))
    }
}

/// `Ext^i_MT(Q(0), Q(n))` for `i = 0, 1, 2`, by weight `n`.
struct MixedTateExt;

fn mt_ext(i: u32, n: i64) -> u64 {
    match i {
        0 => u64::from(n == 0),
        1 => u64::from(n >= 3 && n % 2 == 1),
        _ => 0,
    }
}

impl KTheoryPreset for MixedTateExt {
    fn name(&self) -> &'static str {
        "MT-ext-pattern"
    }

    fn description(&self) -> &'static str {
        "Ext^i of Q(0) by Q(n) in mixed Tate motives over Z: Q in (0,0), Q in (1,n) for odd n >= 3, zero for i > 1"
    }

    fn convention(&self) -> DegreeConvention {
        DegreeConvention::Weight
    }

    /// The `Ext¹` row, which carries all the nonzero groups in positive
    /// weight.
    fn series(&self, cap: i64) -> Result<DimensionSeries> {
        let cap = usize::try_from(cap)
            .map_err(|_| Error::InvalidArgument("weight cap must be >= 0".into()))?;
        Ok(DimensionSeries::from_fn(cap, |n| mt_ext(1, n as i64)))
    }

    fn rows(&self, cap: i64) -> Result<Vec<(String, DimensionSeries)>> {
        let cap = usize::try_from(cap)
            .map_err(|_| Error::InvalidArgument("weight cap must be >= 0".into()))?;
        Ok((0..=2)
            .map(|i| {
                (
                    format!("Ext^{i}"),
                    DimensionSeries::from_fn(cap, |n| mt_ext(i, n as i64)),
                )
            })
            .collect())
    }
}

pub struct KTheoryRegistry {
    entries: Vec<Box<dyn KTheoryPreset>>,
}

impl KTheoryRegistry {
    pub fn empty() -> Self {
        KTheoryRegistry {
            entries: Vec::new(),
        }
    }

    pub fn register(&mut self, preset: Box<dyn KTheoryPreset>) {
        self.entries.push(preset);
    }

    pub fn with_builtins() -> Self {
        use DegreeConvention::*;
        let mut r = KTheoryRegistry::empty();
        let rules = [
            RulePreset {
                name: "KS0-rational",
                description: "rational homology of K(S^0): Q in degree 0 and in each degree 4k+1, k >= 1",
                convention: Topological,
                min_degree: 0,
                rule: |n| u64::from(n == 0 || (n >= 5 && n % 4 == 1)),
            },
            RulePreset {
                name: "Kcell-rational",
                description: "rational K-theory of the cellular category: Q in degree 0, Q^2 in each degree 4k > 0",
                convention: Topological,
                min_degree: 0,
                rule: |n| match n {
                    0 => 1,
                    n if n > 0 && n % 4 == 0 => 2,
                    _ => 0,
                },
            },
            RulePreset {
                name: "KQZ-weights",
                description: "K_{2n-1}(Z) ⊗ Q placed in weight n: one generator in each odd weight n >= 3",
                convention: Weight,
                min_degree: 0,
                rule: |n| u64::from(n >= 3 && n % 2 == 1),
            },
            RulePreset {
                name: "TCgeo-rational",
                description: "rational homology of TC^geo(S^0): Q in degree 0 and in each degree 2k+1, k >= -1",
                convention: Topological,
                min_degree: -1,
                rule: |n| u64::from(n == 0 || n % 2 != 0),
            },
        ];
        for p in rules {
            r.register(Box::new(p));
        }
        r.register(Box::new(MixedTateExt));
        r
    }

    pub fn builtin() -> &'static KTheoryRegistry {
        static REGISTRY: OnceLock<KTheoryRegistry> = OnceLock::new();
        REGISTRY.get_or_init(KTheoryRegistry::with_builtins)
    }

    pub fn get(&self, name: &str) -> Result<&dyn KTheoryPreset> {
        self.entries
            .iter()
            .find(|p| p.name() == name)
            .map(|p| p.as_ref())
            .ok_or_else(|| Error::unknown("preset", name))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|p| p.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn KTheoryPreset> {
        self.entries.iter().map(|p| p.as_ref())
    }
}

pub fn ktheory_preset(name: &str) -> Result<&'static dyn KTheoryPreset> {
    KTheoryRegistry::builtin().get(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(name: &str, cap: i64) -> Vec<u64> {
        ktheory_preset(name)
            .unwrap()
            .series(cap)
            .unwrap()
            .iter()
            .map(|(_, d)| d)
            .collect()
    }

    #[test]
    fn quoted_values() {
        assert_eq!(coeffs("KS0-rational", 9), [1, 0, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(
            ktheory_preset("Kcell-rational")
                .unwrap()
                .series(8)
                .unwrap()
                .get(8)
                .unwrap(),
            2
        );
        assert_eq!(&coeffs("KQZ-weights", 5)[1..], [0, 0, 1, 0, 1]);
        let tc = ktheory_preset("TCgeo-rational").unwrap().series(5).unwrap();
        assert_eq!(tc.min_degree(), -1);
        assert_eq!(
            tc.iter().collect::<Vec<_>>(),
            [(-1, 1), (0, 1), (1, 1), (2, 0), (3, 1), (4, 0), (5, 1)]
        );
    }

    #[test]
    fn mixed_tate_rows() {
        let rows = ktheory_preset("MT-ext-pattern").unwrap().rows(7).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(
            rows[0].1.nonnegative_coefficients(),
            [1, 0, 0, 0, 0, 0, 0, 0]
        );
        assert_eq!(
            rows[1].1.nonnegative_coefficients(),
            [0, 0, 0, 1, 0, 1, 0, 1]
        );
        assert!(rows[2].1.nonnegative_coefficients().iter().all(|&d| d == 0));
    }

    #[test]
    fn unknown() {
        assert!(matches!(ktheory_preset("KU"), Err(Error::Unknown { .. })));
    }
}
