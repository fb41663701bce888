use std::sync::OnceLock;

use super::presentation::{
    Generator, GradedAlgebraPresentation, PresentationDocument, RelationKind,
};
use crate::error::{Error, Result};
use crate::exact::DegreeRule;

/// A named family of algebras, instantiated at a degree cap.
pub trait AlgebraPreset: Send + Sync {
    fn name(&self) -> &str;

    fn description(&self) -> &str;

    fn instantiate(&self, cap: u32) -> Result<GradedAlgebraPresentation>;
}

/// A preset given by a relation kind and a degree rule for its generators.
pub struct RulePreset {
    name: &'static str,
    description: &'static str,
    kind: RelationKind,
    rule: DegreeRule,
}

impl RulePreset {
    pub fn new(
        name: &'static str,
        description: &'static str,
        kind: RelationKind,
        rule: &str,
    ) -> Result<Self> {
        Ok(RulePreset {
            name,
            description,
            kind,
            rule: rule.parse()?,
        })
    }

    pub fn rule(&self) -> &DegreeRule {
        &self.rule
    }

    pub fn kind(&self) -> RelationKind {
        self.kind
    }
}

fn generators_for(rule: &DegreeRule, prefix: &str, cap: u32) -> Vec<Generator> {
    let degrees = rule.degrees(u64::from(cap));
    let mut out: Vec<Generator> = Vec::with_capacity(degrees.len());
    for (i, &d) in degrees.iter().enumerate() {
        let repeat = degrees[..i].iter().filter(|&&e| e == d).count();
        let name = if repeat == 0 {
            format!("{prefix}{d}")
        } else {
            format!("{prefix}{d}_{repeat}")
        };
        out.push(Generator { name, degree: d });
    }
    out
}

fn build(
    kind: RelationKind,
    name: &str,
    rule: &DegreeRule,
    cap: u32,
) -> Result<GradedAlgebraPresentation> {
    match kind {
        RelationKind::Exterior => {
            GradedAlgebraPresentation::exterior(name, generators_for(rule, "e", cap), cap)
        }
        RelationKind::SquareZero => {
            GradedAlgebraPresentation::square_zero(name, generators_for(rule, "e", cap), cap)
        }
        RelationKind::Table => {
            GradedAlgebraPresentation::polynomial(name, generators_for(rule, "x", cap), cap)
        }
    }
}

impl AlgebraPreset for RulePreset {
    fn name(&self) -> &str {
        self.name
    }

    fn description(&self) -> &str {
        self.description
    }

    fn instantiate(&self, cap: u32) -> Result<GradedAlgebraPresentation> {
        build(self.kind, self.name, &self.rule, cap)
    }
}

pub struct PresetRegistry {
    entries: Vec<Box<dyn AlgebraPreset>>,
}

impl PresetRegistry {
    pub fn empty() -> Self {
        PresetRegistry {
            entries: Vec::new(),
        }
    }

    pub fn register(&mut self, preset: Box<dyn AlgebraPreset>) {
        self.entries.push(preset);
    }

    pub fn with_builtins() -> Self {
        use RelationKind::*;
        let table = [
            (
                "E(odd)",
                "exterior algebra, one generator in each odd degree",
                Exterior,
                "odd",
            ),
            (
                "Etilde(2k+1)",
                "square-zero extension on generators of degree 2k+1, k>=0",
                SquareZero,
                "2k+1,k>=0",
            ),
            (
                "Etilde(4k+1)",
                "square-zero extension on generators of degree 4k+1, k>=0",
                SquareZero,
                "4k+1,k>=0",
            ),
            (
                "KS0-rational",
                "square-zero extension on degrees 4k+1, k>=1 (rational K(S^0))",
                SquareZero,
                "4k+1,k>=1",
            ),
            (
                "SU/SO",
                "exterior algebra on degrees 4k+1, k>=1",
                Exterior,
                "4k+1,k>=1",
            ),
            (
                "CP-loop",
                "square-zero extension on degrees 2k, k>=1",
                SquareZero,
                "2k,k>=1",
            ),
        ];
        let mut r = PresetRegistry::empty();
        for (name, description, kind, rule) in table {
            r.register(Box::new(
                RulePreset::new(name, description, kind, rule).expect("builtin rule parses"),
            ));
        }
        r
    }

    pub fn builtin() -> &'static PresetRegistry {
        static REGISTRY: OnceLock<PresetRegistry> = OnceLock::new();
        REGISTRY.get_or_init(PresetRegistry::with_builtins)
    }

    pub fn get(&self, name: &str) -> Result<&dyn AlgebraPreset> {
        self.entries
            .iter()
            .find(|p| p.name() == name)
            .map(|p| p.as_ref())
            .ok_or_else(|| Error::unknown("algebra preset", name))
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|p| p.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn AlgebraPreset> {
        self.entries.iter().map(|p| p.as_ref())
    }
}

/// Parses `E(rule)`, `Etilde(rule)` or `P(rule)` for any degree rule,
/// e.g. `E(1,3)`, `Etilde(4k+1, k=1..3)`, `P(2,4)`.
pub fn parametric_presentation(
    source: &str,
    cap: u32,
) -> Result<Option<GradedAlgebraPresentation>> {
    let s = source.trim();
    let Some(body) = s.strip_suffix(')') else {
        return Ok(None);
    };
    let (kind, inner) = if let Some(r) = body.strip_prefix("Etilde(") {
        (RelationKind::SquareZero, r)
    } else if let Some(r) = body.strip_prefix("E(") {
        (RelationKind::Exterior, r)
    } else if let Some(r) = body.strip_prefix("P(") {
        (RelationKind::Table, r)
    } else {
        return Ok(None);
    };
    let rule: DegreeRule = inner.parse()?;
    build(kind, s, &rule, cap).map(Some)
}

/// Resolves a presentation from a JSON document, a preset name or a
/// parametric form. A document carries its own cap; `cap` applies to the
/// other two.
pub fn load_presentation(source: &str, cap: u32) -> Result<GradedAlgebraPresentation> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') {
        return PresentationDocument::parse(trimmed)?.into_presentation();
    }
    if let Ok(p) = PresetRegistry::builtin().get(source.trim()) {
        return p.instantiate(cap);
    }
    match parametric_presentation(source, cap)? {
        Some(p) => Ok(p),
        None => Err(Error::unknown("algebra", source.trim())),
    }
}
