use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::composition::Composition;
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// A finite rational linear combination of compositions. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct FormalSum {
    terms: BTreeMap<Composition, Rational>,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        FormalSum::word(Composition::empty())
    }

    pub fn word(w: Composition) -> Self {
        FormalSum::term(w, Rational::one())
    }

    pub fn term(w: Composition, c: Rational) -> Self {
        let mut s = FormalSum::zero();
        s.add_term(w, c);
        s
    }

    pub fn add_term(&mut self, w: Composition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FormalSum, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> FormalSum {
        let mut out = FormalSum::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, w: &Composition) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical composition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Composition> {
        self.terms.keys()
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.terms.keys().map(Composition::weight).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut ws = self.terms.keys().map(Composition::weight);
        match ws.next() {
            None => true,
            Some(w) => ws.all(|x| x == w),
        }
    }

    /// The weight-`n` part.
    pub fn component(&self, n: u64) -> FormalSum {
        FormalSum {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.weight() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Extends a map on basis words linearly.
    pub fn map_linear<F>(&self, mut f: F) -> FormalSum
    where
        F: FnMut(&Composition) -> FormalSum,
    {
        let mut out = FormalSum::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Extends a map on pairs of basis words bilinearly.
    pub fn map_bilinear<F>(&self, other: &FormalSum, mut f: F) -> FormalSum
    where
        F: FnMut(&Composition, &Composition) -> FormalSum,
    {
        let mut out = FormalSum::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_scaled(&f(u, v), &(a * b));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.json_terms()).expect("formal sum serializes")
    }

    pub fn json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(w, c)| JsonTerm {
                word: w.letters().to_vec(),
                coeff: format_rational(c),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<FormalSum> {
        let mut out = FormalSum::zero();
        for t in terms {
            out.add_term(Composition::new(t.word.clone())?, parse_rational(&t.coeff)?);
        }
        Ok(out)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<FormalSum> {
        let terms: Vec<JsonTerm> = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("formal sum JSON: {e}")))?;
        FormalSum::from_json_terms(&terms)
    }
}

/// One term of the JSON form `{"word": [ints], "coeff": "p/q"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub word: Vec<u32>,
    pub coeff: String,
}

impl FromIterator<(Composition, Rational)> for FormalSum {
    fn from_iter<I: IntoIterator<Item = (Composition, Rational)>>(iter: I) -> Self {
        let mut out = FormalSum::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

impl Add for &FormalSum {
    type Output = FormalSum;
    fn add(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Add for FormalSum {
    type Output = FormalSum;
    fn add(self, rhs: FormalSum) -> FormalSum {
        &self + &rhs
    }
}

impl Sub for &FormalSum {
    type Output = FormalSum;
    fn sub(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Sub for FormalSum {
    type Output = FormalSum;
    fn sub(self, rhs: FormalSum) -> FormalSum {
        &self - &rhs
    }
}

impl Neg for &FormalSum {
    type Output = FormalSum;
    fn neg(self) -> FormalSum {
        self.scale(&-Rational::one())
    }
}

impl Neg for FormalSum {
    type Output = FormalSum;
    fn neg(self) -> FormalSum {
        -&self
    }
}

/// Writes `c*(x)` style terms joined by ` + ` / ` - `.
fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a Rational)>,
{
    let mut first = true;
    for (body, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        if !abs.is_one() {
            write!(f, "{}*", format_rational(&abs))?;
        }
        f.write_str(&body)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn paren(w: &Composition) -> String {
    if w.is_empty() {
        "()".to_string()
    } else {
        format!("({w})")
    }
}

impl fmt::Display for FormalSum {
    /// `q1*(w1) + q2*(w2) ...` in canonical order, unit coefficients
    /// omitted, `0` for the zero sum.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(w, c)| (paren(w), c)))
    }
}

impl FromStr for FormalSum {
    type Err = Error;

    /// Parses the text form written by `Display`. A bare word such as
    /// `1,2` is read as that word with coefficient 1.
    fn from_str(s: &str) -> Result<Self> {
        let src = s.trim();
        if src == "0" {
            return Ok(FormalSum::zero());
        }
        if !src.contains('(') {
            return Ok(FormalSum::word(src.parse()?));
        }
        let bad = |why: &str| Error::Parse(format!("invalid formal sum `{s}`: {why}"));
        let mut out = FormalSum::zero();
        let mut rest = src;
        let mut sign = Rational::one();
        let mut expect_term = true;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if expect_term {
                if let Some(r) = rest.strip_prefix('-') {
                    sign = -sign;
                    rest = r;
                    continue;
                }
                let open = rest.find('(').ok_or_else(|| bad("missing `(`"))?;
                let close = rest.find(')').ok_or_else(|| bad("missing `)`"))?;
                if close < open {
                    return Err(bad("unbalanced parentheses"));
                }
                let coeff_src = rest[..open].trim();
                let coeff = if coeff_src.is_empty() {
                    Rational::one()
                } else {
                    let c = coeff_src
                        .strip_suffix('*')
                        .ok_or_else(|| bad("expected `*`"))?;
                    parse_rational(c)?
                };
                let word: Composition = rest[open..=close].parse()?;
                out.add_term(word, &sign * coeff);
                rest = &rest[close + 1..];
                expect_term = false;
            } else {
                if let Some(r) = rest.strip_prefix('+') {
                    sign = Rational::one();
                    rest = r;
                } else if let Some(r) = rest.strip_prefix('-') {
                    sign = -Rational::one();
                    rest = r;
                } else {
                    return Err(bad("expected `+` or `-`"));
                }
                expect_term = true;
            }
        }
        if expect_term {
            return Err(bad("dangling operator"));
        }
        Ok(out)
    }
}

/// A finite rational combination of pairs of compositions, an element of
/// the tensor square.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorSum {
    terms: BTreeMap<(Composition, Composition), Rational>,
}

impl TensorSum {
    pub fn zero() -> Self {
        TensorSum::default()
    }

    pub fn add_term(&mut self, left: Composition, right: Composition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorSum, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for ((l, r), x) in &other.terms {
            self.add_term(l.clone(), r.clone(), x * c);
        }
    }

    pub fn coeff(&self, left: &Composition, right: &Composition) -> Rational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &Composition, &Rational)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> Rational {
        self.terms.values().sum()
    }

    /// `x ⊗ y` for formal sums.
    pub fn tensor(x: &FormalSum, y: &FormalSum) -> TensorSum {
        let mut out = TensorSum::zero();
        for (l, a) in x.iter() {
            for (r, b) in y.iter() {
                out.add_term(l.clone(), r.clone(), a * b);
            }
        }
        out
    }

    /// Applies `f ⊗ g` termwise.
    pub fn map_each<F, G>(&self, mut f: F, mut g: G) -> TensorSum
    where
        F: FnMut(&Composition) -> FormalSum,
        G: FnMut(&Composition) -> FormalSum,
    {
        let mut out = TensorSum::zero();
        for ((l, r), c) in &self.terms {
            let t = TensorSum::tensor(&f(l), &g(r));
            out.add_scaled(&t, c);
        }
        out
    }

    /// Applies a map `(l, r) -> FormalSum` termwise and sums, e.g.
    /// multiplication or a convolution.
    pub fn contract<F>(&self, mut f: F) -> FormalSum
    where
        F: FnMut(&Composition, &Composition) -> FormalSum,
    {
        let mut out = FormalSum::zero();
        for ((l, r), c) in &self.terms {
            out.add_scaled(&f(l, r), c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|((l, r), c)| {
                    serde_json::json!({
                        "left": l.letters(),
                        "right": r.letters(),
                        "coeff": format_rational(c),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms
                .iter()
                .map(|((l, r), c)| (format!("{}⊗{}", paren(l), paren(r)), c)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn w(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut s = FormalSum::word(w("1,2"));
        s.add_term(w("3"), int(0));
        assert_eq!(s.len(), 1);
        s.add_term(w("1,2"), int(-1));
        assert!(s.is_zero());
        assert_eq!(s.to_string(), "0");
    }

    #[test]
    fn display_and_parse() {
        let mut s = FormalSum::zero();
        s.add_term(w("1,1"), int(2));
        s.add_term(w("2"), int(1));
        assert_eq!(s.to_string(), "(2) + 2*(1,1)");
        let mut t = FormalSum::zero();
        t.add_term(w("1,1"), int(1));
        t.add_term(w("2"), Rational::new(1.into(), 2.into()));
        t.add_term(w("3"), int(-3));
        t.add_term(Composition::empty(), int(-1));
        let txt = t.to_string();
        assert_eq!(txt, "-() + 1/2*(2) + (1,1) - 3*(3)");
        assert_eq!(txt.parse::<FormalSum>().unwrap(), t);
        assert_eq!(
            "-(2)".parse::<FormalSum>().unwrap(),
            FormalSum::term(w("2"), int(-1))
        );
        assert_eq!(
            "1,2".parse::<FormalSum>().unwrap(),
            FormalSum::word(w("1,2"))
        );
        assert!("(1) +".parse::<FormalSum>().is_err());
        assert!("(1) (2)".parse::<FormalSum>().is_err());
        assert!("x*(1)".parse::<FormalSum>().is_err());
    }

    #[test]
    fn json_form() {
        let s: FormalSum = "(1,1) + 1/2*(2)".parse().unwrap();
        let j = s.to_json();
        assert_eq!(
            j.to_string(),
            r#"[{"coeff":"1/2","word":[2]},{"coeff":"1","word":[1,1]}]"#
        );
        assert_eq!(FormalSum::from_json(&j).unwrap(), s);
        assert!(FormalSum::from_json(&serde_json::json!([{"word": [0], "coeff": "1"}])).is_err());
    }

    #[test]
    fn tensor_display() {
        let mut t = TensorSum::zero();
        t.add_term(w("1"), Composition::empty(), int(1));
        t.add_term(Composition::empty(), w("1"), int(1));
        assert_eq!(t.to_string(), "()⊗(1) + (1)⊗()");
        assert_eq!(t.mass(), int(2));
    }
}
