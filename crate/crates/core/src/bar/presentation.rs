use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationKind {
    /// Free graded-commutative algebra modulo squares of generators.
    Exterior,
    /// All products of positive-degree elements vanish.
    SquareZero,
    /// Explicit structure constants on a listed basis of the augmentation
    /// ideal.
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// One element of the chosen basis of the augmentation ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    pub degree: u32,
}

/// A sparse vector over the ideal basis: `(index, coefficient)` pairs with
/// nonzero coefficients, sorted by index.
pub type IdealVector = Vec<(usize, Rational)>;

/// A graded-commutative augmented Q-algebra `Q ⊕ I`, given by a basis of
/// the augmentation ideal `I` in degrees `1..=cap` and structure constants.
///
/// The augmentation is the projection onto `Q`. Products that would land
/// above `cap` are outside the truncation and are never consulted.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedAlgebraPresentation {
    name: String,
    kind: RelationKind,
    generators: Vec<Generator>,
    cap: u32,
    basis: Vec<BasisElement>,
    products: HashMap<(usize, usize), IdealVector>,
}

fn koszul_sign(p: u32, q: u32) -> Rational {
    if p % 2 == 1 && q % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    }
}

impl GradedAlgebraPresentation {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> RelationKind {
        self.kind
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn is_square_zero(&self) -> bool {
        self.products.values().all(|v| v.is_empty())
    }

    /// Product of two ideal basis elements, empty when zero.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        self.products.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Exterior algebra on the given generators: monomials are subsets of
    /// generators, multiplied with Koszul signs, and every generator squares
    /// to zero.
    pub fn exterior(name: impl Into<String>, generators: Vec<Generator>, cap: u32) -> Result<Self> {
        check_generators(&generators)?;
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        fn go(
            start: usize,
            deg: u32,
            cur: &mut Vec<usize>,
            gens: &[Generator],
            cap: u32,
            out: &mut Vec<Vec<usize>>,
        ) {
            for i in start..gens.len() {
                let d = deg + gens[i].degree;
                if d > cap {
                    continue;
                }
                cur.push(i);
                out.push(cur.clone());
                go(i + 1, d, cur, gens, cap, out);
                cur.pop();
            }
        }
        go(0, 0, &mut Vec::new(), &generators, cap, &mut subsets);
        let degree_of = |s: &[usize]| s.iter().map(|&i| generators[i].degree).sum::<u32>();
        subsets.sort_by(|a, b| {
            degree_of(a)
                .cmp(&degree_of(b))
                .then(a.len().cmp(&b.len()))
                .then(a.cmp(b))
        });
        let index: HashMap<Vec<usize>, usize> = subsets
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let basis = subsets
            .iter()
            .map(|s| BasisElement {
                label: s
                    .iter()
                    .map(|&i| generators[i].name.as_str())
                    .collect::<Vec<_>>()
                    .join("·"),
                degree: degree_of(s),
            })
            .collect();
        let mut products = HashMap::new();
        for (i, s) in subsets.iter().enumerate() {
            for (j, t) in subsets.iter().enumerate() {
                if s.iter().any(|x| t.contains(x)) || degree_of(s) + degree_of(t) > cap {
                    continue;
                }
                // sort s ++ t, one Koszul sign per inverted pair
                let mut sign = Rational::one();
                for &a in s {
                    for &b in t {
                        if b < a {
                            sign *= koszul_sign(generators[a].degree, generators[b].degree);
                        }
                    }
                }
                let mut u: Vec<usize> = s.iter().chain(t).copied().collect();
                u.sort_unstable();
                products.insert((i, j), vec![(index[&u], sign)]);
            }
        }
        Ok(GradedAlgebraPresentation {
            name: name.into(),
            kind: RelationKind::Exterior,
            generators,
            cap,
            basis,
            products,
        })
    }

    /// `Q ⊕ I` with `I` spanned by the generators and `I·I = 0`.
    pub fn square_zero(
        name: impl Into<String>,
        generators: Vec<Generator>,
        cap: u32,
    ) -> Result<Self> {
        check_generators(&generators)?;
        let mut generators: Vec<Generator> =
            generators.into_iter().filter(|g| g.degree <= cap).collect();
        generators.sort_by_key(|g| g.degree);
        let basis = generators
            .iter()
            .map(|g| BasisElement {
                label: g.name.clone(),
                degree: g.degree,
            })
            .collect();
        Ok(GradedAlgebraPresentation {
            name: name.into(),
            kind: RelationKind::SquareZero,
            generators,
            cap,
            basis,
            products: HashMap::new(),
        })
    }

    /// Explicit structure constants. `basis` lists the augmentation ideal;
    /// missing entries are filled in by graded commutativity, and pairs with
    /// neither order listed multiply to zero.
    pub fn from_table(
        name: impl Into<String>,
        basis: Vec<Generator>,
        table: Vec<(usize, usize, IdealVector)>,
        cap: u32,
    ) -> Result<Self> {
        check_generators(&basis)?;
        for g in &basis {
            if g.degree > cap {
                return Err(Error::Validation(format!(
                    "basis element {} has degree {} above the cap {cap}",
                    g.name, g.degree
                )));
            }
        }
        let deg = |i: usize| basis[i].degree;
        let mut products: HashMap<(usize, usize), IdealVector> = HashMap::new();
        for (a, b, value) in table {
            if a >= basis.len() || b >= basis.len() {
                return Err(Error::Validation(
                    "table entry refers to an unknown basis element".into(),
                ));
            }
            let target = deg(a) + deg(b);
            if target > cap {
                return Err(Error::Validation(format!(
                    "product {}·{} has degree {target} above the cap {cap}",
                    basis[a].name, basis[b].name
                )));
            }
            let mut merged: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, c) in value {
                if k >= basis.len() {
                    return Err(Error::Validation(
                        "table value refers to an unknown basis element".into(),
                    ));
                }
                if deg(k) != target {
                    return Err(Error::Validation(format!(
                        "non-graded product: deg({}·{}) = {} but {} has degree {}",
                        basis[a].name,
                        basis[b].name,
                        target,
                        basis[k].name,
                        deg(k)
                    )));
                }
                *merged.entry(k).or_insert_with(Rational::zero) += c;
            }
            let v: IdealVector = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if products.insert((a, b), v).is_some() {
                return Err(Error::Validation(format!(
                    "duplicate table entry for {}·{}",
                    basis[a].name, basis[b].name
                )));
            }
        }
        // graded commutativity: ba = (-1)^{|a||b|} ab
        let keys: Vec<(usize, usize)> = products.keys().copied().collect();
        for (a, b) in keys {
            let sign = koszul_sign(deg(a), deg(b));
            let expected: IdealVector = products[&(a, b)]
                .iter()
                .map(|(k, c)| (*k, c * &sign))
                .collect();
            match products.get(&(b, a)) {
                Some(v) if *v == expected => {}
                Some(_) => {
                    return Err(Error::Validation(format!(
                        "sign violation: {}·{} is not (-1)^(|a||b|) {}·{}",
                        basis[b].name, basis[a].name, basis[a].name, basis[b].name
                    )))
                }
                None => {
                    products.insert((b, a), expected);
                }
            }
        }
        let elements = basis
            .iter()
            .map(|g| BasisElement {
                label: g.name.clone(),
                degree: g.degree,
            })
            .collect();
        let p = GradedAlgebraPresentation {
            name: name.into(),
            kind: RelationKind::Table,
            generators: basis,
            cap,
            basis: elements,
            products,
        };
        p.check_associative()?;
        Ok(p)
    }

    /// Truncated polynomial algebra on even-degree generators: monomials of
    /// degree `<= cap`.
    pub fn polynomial(
        name: impl Into<String>,
        generators: Vec<Generator>,
        cap: u32,
    ) -> Result<Self> {
        check_generators(&generators)?;
        if let Some(g) = generators.iter().find(|g| g.degree % 2 == 1) {
            return Err(Error::Validation(format!(
                "polynomial generator {} has odd degree {}; graded commutativity forces it to square to zero",
                g.name, g.degree
            )));
        }
        let mut monomials: Vec<Vec<u32>> = Vec::new();
        fn go(
            i: usize,
            deg: u32,
            cur: &mut Vec<u32>,
            gens: &[Generator],
            cap: u32,
            out: &mut Vec<Vec<u32>>,
        ) {
            if i == gens.len() {
                if deg > 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let mut e = 0;
            while deg + e * gens[i].degree <= cap {
                cur.push(e);
                go(i + 1, deg + e * gens[i].degree, cur, gens, cap, out);
                cur.pop();
                e += 1;
            }
        }
        go(0, 0, &mut Vec::new(), &generators, cap, &mut monomials);
        let degree_of = |m: &[u32]| {
            m.iter()
                .zip(&generators)
                .map(|(e, g)| e * g.degree)
                .sum::<u32>()
        };
        monomials.sort_by(|a, b| degree_of(a).cmp(&degree_of(b)).then(b.cmp(a)));
        let label = |m: &[u32]| {
            m.iter()
                .zip(&generators)
                .filter(|(e, _)| **e > 0)
                .map(|(e, g)| {
                    if *e == 1 {
                        g.name.clone()
                    } else {
                        format!("{}^{e}", g.name)
                    }
                })
                .collect::<Vec<_>>()
                .join("·")
        };
        let index: HashMap<Vec<u32>, usize> = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let basis: Vec<Generator> = monomials
            .iter()
            .map(|m| Generator {
                name: label(m),
                degree: degree_of(m),
            })
            .collect();
        let mut table = Vec::new();
        for (i, a) in monomials.iter().enumerate() {
            for (j, b) in monomials.iter().enumerate() {
                let prod: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if let Some(&k) = index.get(&prod) {
                    table.push((i, j, vec![(k, Rational::one())]));
                }
            }
        }
        let mut p = GradedAlgebraPresentation::from_table(name, basis, table, cap)?;
        p.generators = generators;
        Ok(p)
    }

    fn multiply_vec(&self, x: &IdealVector, b: usize) -> IdealVector {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (a, c) in x {
            for (k, d) in self.product(*a, b) {
                *acc.entry(*k).or_insert_with(Rational::zero) += c * d;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.basis.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.basis[a].degree + self.basis[b].degree + self.basis[c].degree > self.cap
                    {
                        continue;
                    }
                    let left = self.multiply_vec(&self.product(a, b).to_vec(), c);
                    let bc = self.product(b, c).to_vec();
                    let mut right: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (k, d) in &bc {
                        for (m, e) in self.product(a, *k) {
                            *right.entry(*m).or_insert_with(Rational::zero) += d * e;
                        }
                    }
                    let right: IdealVector =
                        right.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    if left != right {
                        return Err(Error::Validation(format!(
                            "product is not associative on ({}, {}, {})",
                            self.basis[a].label, self.basis[b].label, self.basis[c].label
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Serializes into the presentation document format.
    pub fn to_document(&self) -> PresentationDocument {
        let (kind, generators, table) = match self.kind {
            RelationKind::Exterior | RelationKind::SquareZero => {
                (self.kind, self.generators.clone(), None)
            }
            RelationKind::Table => {
                let mut keys: Vec<&(usize, usize)> = self.products.keys().collect();
                keys.sort();
                let table = keys
                    .into_iter()
                    .filter(|k| !self.products[k].is_empty())
                    .map(|&(a, b)| TableEntry {
                        left: self.basis[a].label.clone(),
                        right: self.basis[b].label.clone(),
                        value: self.products[&(a, b)]
                            .iter()
                            .map(|(k, c)| ValueTerm {
                                monomial: Some(self.basis[*k].label.clone()),
                                word: None,
                                coeff: format_rational(c),
                            })
                            .collect(),
                    })
                    .collect();
                let basis = self
                    .basis
                    .iter()
                    .map(|b| Generator {
                        name: b.label.clone(),
                        degree: b.degree,
                    })
                    .collect();
                (RelationKind::Table, basis, Some(table))
            }
        };
        PresentationDocument {
            name: self.name.clone(),
            kind,
            generators,
            table,
            cap: self.cap,
        }
    }
}

fn check_generators(gens: &[Generator]) -> Result<()> {
    for g in gens {
        if g.degree == 0 {
            return Err(Error::Validation(format!(
                "generator {} must have positive degree",
                g.name
            )));
        }
    }
    let mut names: Vec<&str> = gens.iter().map(|g| g.name.as_str()).collect();
    names.sort_unstable();
    if names.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Validation("generator names must be distinct".into()));
    }
    Ok(())
}

/// JSON document describing a presentation:
///
/// ```json
/// { "name": "...", "kind": "exterior" | "square-zero" | "table",
///   "generators": [{"name": "x", "degree": 2}, ...],
///   "table": [{"left": "x", "right": "x", "value": [{"monomial": "x2", "coeff": "1"}]}],
///   "cap": 8 }
/// ```
///
/// For `table`, `generators` lists the basis of the augmentation ideal and
/// each value term names its basis element either by `monomial` or by a
/// one-letter `word` holding its 1-based position in `generators`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    pub name: String,
    pub kind: RelationKind,
    pub generators: Vec<Generator>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableEntry>>,
    pub cap: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub left: String,
    pub right: String,
    pub value: Vec<ValueTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValueTerm {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<u32>>,
    pub coeff: String,
}

impl PresentationDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("presentation document: {e}")))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }

    pub fn into_presentation(self) -> Result<GradedAlgebraPresentation> {
        match self.kind {
            RelationKind::Exterior => {
                if self.table.is_some() {
                    return Err(Error::Validation(
                        "exterior presentations take no table".into(),
                    ));
                }
                GradedAlgebraPresentation::exterior(self.name, self.generators, self.cap)
            }
            RelationKind::SquareZero => {
                if self.table.as_ref().is_some_and(|t| !t.is_empty()) {
                    return Err(Error::Validation(
                        "square-zero presentations have no nonzero products".into(),
                    ));
                }
                GradedAlgebraPresentation::square_zero(self.name, self.generators, self.cap)
            }
            RelationKind::Table => {
                let index: HashMap<&str, usize> = self
                    .generators
                    .iter()
                    .enumerate()
                    .map(|(i, g)| (g.name.as_str(), i))
                    .collect();
                let lookup = |name: &str| {
                    index
                        .get(name)
                        .copied()
                        .ok_or_else(|| Error::Validation(format!("unknown basis element `{name}`")))
                };
                let mut table = Vec::new();
                for e in self.table.as_deref().unwrap_or(&[]) {
                    let mut value = Vec::new();
                    for t in &e.value {
                        let k = match (&t.monomial, &t.word) {
                            (Some(m), None) => lookup(m)?,
                            (None, Some(w)) if w.len() == 1 && w[0] >= 1 => {
                                let k = w[0] as usize - 1;
                                if k >= self.generators.len() {
                                    return Err(Error::Validation(format!("basis position {} out of range", w[0])));
                                }
                                k
                            }
                            _ => {
                                return Err(Error::Parse(
                                    "table value terms need exactly one of `monomial` or a one-letter `word`".into(),
                                ))
                            }
                        };
                        value.push((k, parse_rational(&t.coeff)?));
                    }
                    table.push((lookup(&e.left)?, lookup(&e.right)?, value));
                }
                GradedAlgebraPresentation::from_table(self.name, self.generators, table, self.cap)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str, degree: u32) -> Generator {
        Generator {
            name: name.into(),
            degree,
        }
    }

    #[test]
    fn exterior_basis_and_signs() {
        let e = GradedAlgebraPresentation::exterior("E", vec![g("e1", 1), g("e3", 3)], 10).unwrap();
        let labels: Vec<&str> = e.basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, ["e1", "e3", "e1·e3"]);
        // e3·e1 = -e1·e3, e1·e1 = 0
        assert_eq!(e.product(0, 1), &[(2, Rational::one())]);
        assert_eq!(e.product(1, 0), &[(2, -Rational::one())]);
        assert!(e.product(0, 0).is_empty());
        assert!(!e.is_square_zero());
    }

    #[test]
    fn polynomial_truncation() {
        let p = GradedAlgebraPresentation::polynomial("P", vec![g("x", 2)], 8).unwrap();
        let labels: Vec<&str> = p.basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, ["x", "x^2", "x^3", "x^4"]);
        assert_eq!(p.product(0, 0), &[(1, Rational::one())]);
        assert!(p.product(1, 2).is_empty());
        assert!(GradedAlgebraPresentation::polynomial("P", vec![g("y", 3)], 8).is_err());
    }

    #[test]
    fn table_validation() {
        let basis = vec![g("a", 1), g("b", 2), g("c", 4)];
        let non_graded = GradedAlgebraPresentation::from_table(
            "bad",
            basis.clone(),
            vec![(0, 1, vec![(2, Rational::one())])],
            8,
        );
        assert!(matches!(non_graded, Err(Error::Validation(m)) if m.contains("non-graded")));

        let basis = vec![g("a", 1), g("b", 1), g("c", 2)];
        let one = Rational::one();
        let bad_sign = GradedAlgebraPresentation::from_table(
            "bad",
            basis.clone(),
            vec![
                (0, 1, vec![(2, one.clone())]),
                (1, 0, vec![(2, one.clone())]),
            ],
            8,
        );
        assert!(matches!(bad_sign, Err(Error::Validation(m)) if m.contains("sign")));

        let over_cap = GradedAlgebraPresentation::from_table(
            "bad",
            basis.clone(),
            vec![(0, 1, vec![(2, one.clone())])],
            1,
        );
        assert!(over_cap.is_err());

        let ok = GradedAlgebraPresentation::from_table(
            "ok",
            basis,
            vec![(0, 1, vec![(2, one.clone())])],
            8,
        )
        .unwrap();
        assert_eq!(ok.product(1, 0), &[(2, -one)]);
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // a·a = c and c·b = d, but a·b = 0: (a·a)·b = d while a·(a·b) = 0
        let basis = vec![g("a", 2), g("b", 2), g("c", 4), g("d", 6)];
        let one = Rational::one();
        let t = vec![
            (0, 0, vec![(2, one.clone())]),
            (2, 1, vec![(3, one.clone())]),
        ];
        let r = GradedAlgebraPresentation::from_table("na", basis, t, 8);
        assert!(matches!(r, Err(Error::Validation(m)) if m.contains("associative")));
    }

    #[test]
    fn document_round_trip() {
        let p = GradedAlgebraPresentation::polynomial("P", vec![g("x", 2)], 6).unwrap();
        let doc = p.to_document();
        let text = doc.to_json_string();
        let back = PresentationDocument::parse(&text)
            .unwrap()
            .into_presentation()
            .unwrap();
        assert_eq!(back.basis(), p.basis());
        for i in 0..p.basis().len() {
            for j in 0..p.basis().len() {
                assert_eq!(back.product(i, j), p.product(i, j));
            }
        }
    }

    #[test]
    fn document_word_references() {
        let text = r#"{"name":"t","kind":"table","cap":4,
            "generators":[{"name":"x","degree":2},{"name":"x2","degree":4}],
            "table":[{"left":"x","right":"x","value":[{"word":[2],"coeff":"1"}]}]}"#;
        let p = PresentationDocument::parse(text)
            .unwrap()
            .into_presentation()
            .unwrap();
        assert_eq!(p.product(0, 0), &[(1, Rational::one())]);
        assert!(PresentationDocument::parse(r#"{"name":"t"}"#).is_err());
        assert!(PresentationDocument::parse("not json").is_err());
    }
}
