use std::collections::{BTreeMap, HashMap};

use num::One;

use super::presentation::GradedAlgebraPresentation;
use crate::error::{Error, Result};
use crate::exact::linalg::Matrix;
use crate::exact::{Composition, DimensionSeries, FormalSum, Rational};
use crate::report::Report;

/// A bar word `[a_1|…|a_n]` as indices into the ideal basis.
pub type BarWord = Vec<usize>;

/// Bar-length and internal degree of a block.
pub type Bidegree = (usize, u32);

#[derive(Debug, Clone)]
struct Block {
    words: Vec<BarWord>,
    index: HashMap<BarWord, usize>,
    /// `d : C_{n,d} -> C_{n-1,d}`, one row per source word. `None` when the
    /// target block is empty or `n < 2`.
    differential: Option<Matrix>,
}

/// The reduced bar complex `⊕_n I[1]^{⊗n}` of an augmented algebra,
/// truncated by total degree.
///
/// A word `[a_1|…|a_n]` has internal degree `Σ deg a_i` and total degree
/// `Σ (deg a_i + 1)`. The differential is
///
/// ```text
/// d[a_1|…|a_n] = Σ_{i=1}^{n-1} (-1)^{ε_i} [a_1|…|a_i·a_{i+1}|…|a_n],
/// ε_i = Σ_{j<=i} (deg a_j + 1),
/// ```
///
/// which preserves internal degree and lowers bar-length by one. Blocks are
/// built one total degree past `cap` so that homology in degree `cap` sees
/// its incoming boundaries.
#[derive(Debug, Clone)]
pub struct BarComplex {
    algebra: GradedAlgebraPresentation,
    cap: u32,
    blocks: BTreeMap<Bidegree, Block>,
}

/// Rational homology of a bar complex, i.e. `Tor^A(Q, Q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    /// Dimensions by total (shifted) degree.
    pub series: DimensionSeries,
    /// Nonzero dimensions by (bar-length, internal degree).
    pub bigraded: BTreeMap<Bidegree, u64>,
}

fn sign(exponent: u32) -> Rational {
    if exponent.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

impl BarComplex {
    pub fn build(algebra: &GradedAlgebraPresentation, cap: u32) -> Result<BarComplex> {
        if cap > algebra.cap() {
            return Err(Error::CapExceeded {
                requested: i64::from(cap),
                cap: i64::from(algebra.cap()),
            });
        }
        let basis = algebra.basis();
        let limit = cap + 1;
        let mut words: BTreeMap<Bidegree, Vec<BarWord>> = BTreeMap::new();
        fn go(
            basis: &[super::BasisElement],
            total: u32,
            internal: u32,
            limit: u32,
            cur: &mut BarWord,
            out: &mut BTreeMap<Bidegree, Vec<BarWord>>,
        ) {
            out.entry((cur.len(), internal))
                .or_default()
                .push(cur.clone());
            for (i, b) in basis.iter().enumerate() {
                let t = total + b.degree + 1;
                if t <= limit {
                    cur.push(i);
                    go(basis, t, internal + b.degree, limit, cur, out);
                    cur.pop();
                }
            }
        }
        go(basis, 0, 0, limit, &mut Vec::new(), &mut words);

        let mut blocks: BTreeMap<Bidegree, Block> = words
            .into_iter()
            .map(|(k, mut ws)| {
                ws.sort();
                let index = ws
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, w)| (w, i))
                    .collect();
                (
                    k,
                    Block {
                        words: ws,
                        index,
                        differential: None,
                    },
                )
            })
            .collect();

        let keys: Vec<Bidegree> = blocks.keys().copied().collect();
        for (n, d) in keys {
            if n < 2 {
                continue;
            }
            let Some(target) = blocks.get(&(n - 1, d)) else {
                continue;
            };
            let source = &blocks[&(n, d)];
            let mut m = Matrix::zeros(source.words.len(), target.words.len());
            for (row, w) in source.words.iter().enumerate() {
                let mut eps = 0u32;
                for i in 0..n - 1 {
                    eps += basis[w[i]].degree + 1;
                    for (k, c) in algebra.product(w[i], w[i + 1]) {
                        let mut t = Vec::with_capacity(n - 1);
                        t.extend_from_slice(&w[..i]);
                        t.push(*k);
                        t.extend_from_slice(&w[i + 2..]);
                        let col = target.index[&t];
                        let v = m.get(row, col) + sign(eps) * c;
                        m.set(row, col, v);
                    }
                }
            }
            blocks.get_mut(&(n, d)).unwrap().differential = Some(m);
        }
        Ok(BarComplex {
            algebra: algebra.clone(),
            cap,
            blocks,
        })
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn algebra(&self) -> &GradedAlgebraPresentation {
        &self.algebra
    }

    /// Basis words of a block, empty if the block is outside the truncation.
    pub fn words(&self, bidegree: Bidegree) -> &[BarWord] {
        self.blocks
            .get(&bidegree)
            .map(|b| b.words.as_slice())
            .unwrap_or(&[])
    }

    /// The differential out of a block, if it has a nonempty target.
    pub fn differential(&self, bidegree: Bidegree) -> Option<&Matrix> {
        self.blocks
            .get(&bidegree)
            .and_then(|b| b.differential.as_ref())
    }

    /// Bidegrees of all blocks with total degree `<= cap`.
    pub fn bidegrees(&self) -> impl Iterator<Item = Bidegree> + '_ {
        self.blocks
            .keys()
            .copied()
            .filter(|&(n, d)| n as u32 + d <= self.cap)
    }

    pub fn differentials_vanish(&self) -> bool {
        self.blocks
            .values()
            .filter_map(|b| b.differential.as_ref())
            .all(Matrix::is_zero)
    }

    /// Checks `d ∘ d = 0` on every composable pair of blocks.
    pub fn check_d_squared(&self) -> Report {
        let mut report = Report::new(format!("d∘d=0 [{}] cap {}", self.algebra.name(), self.cap));
        for (&(n, d), block) in &self.blocks {
            let (Some(outer), Some(inner)) = (
                block.differential.as_ref(),
                self.blocks
                    .get(&(n.wrapping_sub(1), d))
                    .and_then(|b| b.differential.as_ref()),
            ) else {
                continue;
            };
            report.check(outer.mul(inner).is_zero(), || {
                format!("d∘d ≠ 0 on block (n={n}, d={d})")
            });
        }
        report
    }

    fn rank(&self, bidegree: Bidegree, cache: &mut HashMap<Bidegree, usize>) -> usize {
        if let Some(&r) = cache.get(&bidegree) {
            return r;
        }
        let r = self.differential(bidegree).map_or(0, Matrix::rank);
        cache.insert(bidegree, r);
        r
    }

    /// `dim ker d - rank d_in` per total degree, by exact elimination.
    pub fn homology_dimensions(&self) -> HomologyResult {
        let mut ranks = HashMap::new();
        let mut dims = vec![0u64; self.cap as usize + 1];
        let mut bigraded = BTreeMap::new();
        let keys: Vec<Bidegree> = self.bidegrees().collect();
        for (n, d) in keys {
            let size = self.words((n, d)).len();
            let out = self.rank((n, d), &mut ranks);
            let incoming = self.rank((n + 1, d), &mut ranks);
            let h = (size - out - incoming) as u64;
            if h > 0 {
                bigraded.insert((n, d), h);
                dims[n + d as usize] += h;
            }
        }
        HomologyResult {
            series: DimensionSeries::from_coefficients(dims),
            bigraded,
        }
    }

    /// Product of the cycles `[u]` and `[v]` for a square-zero algebra.
    ///
    /// Words are compositions of 1-based positions in the ideal basis. The
    /// product is the shuffle of bar words with the Koszul sign of the
    /// shifted degrees `deg a + 1`; when every shifted degree is even this
    /// is exactly [`crate::hopf::shuffle`] on the position words.
    pub fn induced_product(&self, u: &Composition, v: &Composition) -> Result<FormalSum> {
        if !self.algebra.is_square_zero() {
            return Err(Error::InvalidArgument(format!(
                "induced product needs a square-zero algebra; `{}` has nonzero products",
                self.algebra.name()
            )));
        }
        let shifted = |w: &Composition| -> Result<Vec<u32>> {
            w.letters()
                .iter()
                .map(|&l| {
                    self.algebra
                        .basis()
                        .get(l as usize - 1)
                        .map(|b| b.degree + 1)
                        .ok_or_else(|| {
                            Error::InvalidArgument(format!("no basis element at position {l}"))
                        })
                })
                .collect()
        };
        let (su, sv) = (shifted(u)?, shifted(v)?);
        let total: u32 = su.iter().chain(&sv).sum();
        if total > self.cap {
            return Err(Error::CapExceeded {
                requested: i64::from(total),
                cap: i64::from(self.cap),
            });
        }
        Ok(signed_shuffle(u.letters(), &su, v.letters(), &sv))
    }
}

/// Shuffle of two words whose letters carry the given degrees, with the
/// sign `(-1)^{|x||y|}` each time a letter `y` of the second word moves in
/// front of a letter `x` of the first.
fn signed_shuffle(u: &[u32], du: &[u32], v: &[u32], dv: &[u32]) -> FormalSum {
    if u.is_empty() || v.is_empty() {
        let mut w = u.to_vec();
        w.extend_from_slice(v);
        return FormalSum::word(Composition::new(w).expect("positions are positive"));
    }
    let mut out = FormalSum::zero();
    for (w, c) in signed_shuffle(&u[1..], &du[1..], v, dv).iter() {
        out.add_term(w.prepend(u[0]), c.clone());
    }
    // v[0] passes every letter of u
    let passed: u32 = du.iter().sum::<u32>() * dv[0];
    let s = sign(passed % 2);
    for (w, c) in signed_shuffle(u, du, &v[1..], &dv[1..]).iter() {
        out.add_term(w.prepend(v[0]), c * &s);
    }
    out
}

/// Builds the bar complex of `algebra` truncated at total degree `cap`.
pub fn build_bar_complex(algebra: &GradedAlgebraPresentation, cap: u32) -> Result<BarComplex> {
    BarComplex::build(algebra, cap)
}

pub fn homology_dimensions(complex: &BarComplex) -> HomologyResult {
    complex.homology_dimensions()
}

pub fn induced_product(
    complex: &BarComplex,
    u: &Composition,
    v: &Composition,
) -> Result<FormalSum> {
    complex.induced_product(u, v)
}
