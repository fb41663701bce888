use std::sync::{Mutex, OnceLock};

use num::{BigInt, One, Zero};

use crate::exact::Rational;

/// Append-only cache of `B_0, B_1, …` with `B_1 = -1/2`, filled from
/// `Σ_{j=0}^{n} C(n+1, j) B_j = 0`.
#[derive(Debug, Clone, Default)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            values: vec![Rational::one()],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&mut self, n: usize) -> Rational {
        if self.values.is_empty() {
            self.values.push(Rational::one());
        }
        while self.values.len() <= n {
            let m = self.values.len();
            // binomials C(m+1, j) for j = 0..m
            let mut binom = BigInt::one();
            let mut acc = Rational::zero();
            for (j, b) in self.values.iter().enumerate() {
                acc += b * Rational::from(binom.clone());
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            self.values.push(-acc / Rational::from(BigInt::from(m + 1)));
        }
        self.values[n].clone()
    }
}

/// `B_n` from a process-wide cache.
pub fn bernoulli(n: usize) -> Rational {
    static TABLE: OnceLock<Mutex<BernoulliTable>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(BernoulliTable::new()));
    table.lock().unwrap_or_else(|e| e.into_inner()).get(n)
}
