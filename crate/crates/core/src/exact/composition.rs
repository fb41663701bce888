use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite word of positive integers.
///
/// Compositions index the monomial bases of QSymm and NSymm as well as bar
/// words. Their weight is the sum of the letters. The total order is by
/// weight, then length, then lexicographic on letters; every serialization
/// and every matrix row ordering in the crate follows it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Validation(format!(
                "composition letters must be positive, got {letters:?}"
            )));
        }
        Ok(Composition(letters))
    }

    /// Caller guarantees every letter is positive.
    pub(crate) fn from_letters(letters: Vec<u32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l > 0));
        Composition(letters)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn letter(a: u32) -> Self {
        assert!(a > 0, "composition letters must be positive");
        Composition(vec![a])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&l| u64::from(l)).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// The word with its first letter removed.
    pub fn tail(&self) -> Composition {
        Composition(self.0.get(1..).unwrap_or(&[]).to_vec())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    pub fn prepend(&self, a: u32) -> Composition {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(a);
        v.extend_from_slice(&self.0);
        Composition(v)
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn split_at(&self, i: usize) -> (Composition, Composition) {
        let (a, b) = self.0.split_at(i);
        (Composition(a.to_vec()), Composition(b.to_vec()))
    }

    /// Topological degree under the doubling convention (twice the weight).
    pub fn topological_degree(&self) -> u64 {
        2 * self.weight()
    }

    /// All compositions of `n`, in canonical order.
    pub fn all_of_weight(n: u64) -> Vec<Composition> {
        fn go(rest: u64, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(prefix.clone()));
                return;
            }
            for first in 1..=rest {
                prefix.push(first as u32);
                go(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All compositions of weight at most `cap`, in canonical order.
    pub fn all_up_to_weight(cap: u64) -> Vec<Composition> {
        (0..=cap).flat_map(Composition::all_of_weight).collect()
    }

    /// Words over `alphabet` with weight at most `cap`, in canonical order.
    pub fn words_over(alphabet: &[u32], cap: u64) -> Vec<Composition> {
        fn go(alphabet: &[u32], rest: u64, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            out.push(Composition(prefix.clone()));
            for &a in alphabet {
                if u64::from(a) <= rest {
                    prefix.push(a);
                    go(alphabet, rest - u64::from(a), prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut alpha: Vec<u32> = alphabet.iter().copied().filter(|&a| a > 0).collect();
        alpha.sort_unstable();
        alpha.dedup();
        let mut out = Vec::new();
        go(&alpha, cap, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    /// Comma-separated letters; the empty word is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `2,3,3`, `(2,3,3)` and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(Composition::empty());
        }
        let letters = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid composition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(letters)
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

/// A weakly decreasing composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Validation(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition(Composition::new(parts)?))
    }

    /// Sorts the parts into decreasing order.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        self.0.letters()
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.weight()
    }

    /// Every distinct rearrangement of the parts, in canonical order.
    pub fn distinct_rearrangements(&self) -> Vec<Composition> {
        let mut cur: Vec<u32> = self.parts().to_vec();
        cur.sort_unstable();
        let mut out = vec![Composition(cur.clone())];
        // lexicographic next-permutation handles repeated parts without duplicates
        loop {
            let n = cur.len();
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Composition(cur.clone()));
        }
        out.sort();
        out
    }

    /// All partitions of `n`.
    pub fn all_of_weight(n: u64) -> Vec<Partition> {
        fn go(rest: u64, max: u64, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(Composition(prefix.clone())));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p as u32);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let c: Composition = s.parse()?;
        Partition::new(c.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn text_form() {
        assert_eq!(c("2,3,3").to_string(), "2,3,3");
        assert_eq!(Composition::empty().to_string(), "()");
        assert_eq!(c("()"), Composition::empty());
        assert_eq!(c("(1,2)"), c("1,2"));
        assert!("1,0".parse::<Composition>().is_err());
        assert!("1,,2".parse::<Composition>().is_err());
        assert!("a".parse::<Composition>().is_err());
    }

    #[test]
    fn weight_and_length() {
        assert_eq!(Composition::empty().weight(), 0);
        assert_eq!(Composition::empty().len(), 0);
        assert_eq!(c("2,3,3").weight(), 8);
        assert_eq!(c("2,3,3").topological_degree(), 16);
    }

    #[test]
    fn canonical_order() {
        let mut v = [
            c("3"),
            c("1,1"),
            c("2"),
            c("1"),
            Composition::empty(),
            c("1,2"),
            c("2,1"),
            c("1,1,1"),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["()", "1", "2", "1,1", "3", "1,2", "2,1", "1,1,1"]);
    }

    #[test]
    fn composition_counts() {
        for n in 1..=10u64 {
            assert_eq!(Composition::all_of_weight(n).len(), 1 << (n - 1));
        }
        assert_eq!(Composition::all_of_weight(0), vec![Composition::empty()]);
        let all = Composition::all_up_to_weight(4);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn words_over_alphabet() {
        let w = Composition::words_over(&[2, 3], 5);
        let s: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["()", "2", "3", "2,2", "2,3", "3,2"]);
    }

    #[test]
    fn partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        let p = Partition::new(vec![2, 1, 1]).unwrap();
        let r: Vec<String> = p
            .distinct_rearrangements()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(r, ["1,1,2", "1,2,1", "2,1,1"]);
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_weight(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
