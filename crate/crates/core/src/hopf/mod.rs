//! Graded connected Hopf algebras with basis indexed by compositions.
//!
//! Three structures share the composition basis and differ in product and
//! coproduct:
//!
//! | name      | product        | coproduct        | algebra            |
//! |-----------|----------------|------------------|--------------------|
//! | `shuffle` | shuffle        | deconcatenation  | QSymm (bold), Tor of the square-zero algebra |
//! | `stuffle` | quasi-shuffle  | deconcatenation  | QSymm, monomial basis `M_J` |
//! | `concat`  | concatenation  | `ΔZ_n = Σ Z_i ⊗ Z_j` | NSymm, basis `Z_I` |
//!
//! Letters carry even shifted degree throughout, so no Koszul signs appear
//! in any product or coproduct. Weight (the letter sum) is the grading;
//! [`Composition::topological_degree`] gives the doubled view.
//!
//! Each structure implements [`HopfStructure`] and is registered by name
//! in a [`HopfRegistry`].

mod antipode;
mod coproduct;
mod hoffman;
mod pairing;
mod product;
mod symm;
mod verify;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::{Composition, FormalSum, Rational, TensorSum};

pub use antipode::{antipode, AntipodeMemo};
pub use coproduct::{deconcatenate, nsymm_coproduct};
pub use hoffman::{hoffman_exp, hoffman_exp_word, hoffman_log};
pub use pairing::{pair, pair_tensors, pairing};
pub use product::{
    concatenate, overlapping_shuffle, quasi_shuffle, shuffle, Concatenation, QuasiShuffle, Shuffle,
};
pub use symm::symm_to_qsymm;
pub use verify::{tensor_product_in, verify_bialgebra};

/// A product/coproduct pair on the composition basis.
pub trait HopfStructure: Send + Sync {
    /// Registry key.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn multiply_words(&self, u: &Composition, v: &Composition) -> FormalSum;

    fn comultiply_word(&self, w: &Composition) -> TensorSum;

    fn is_commutative(&self) -> bool;

    fn multiply(&self, x: &FormalSum, y: &FormalSum) -> FormalSum {
        x.map_bilinear(y, |u, v| self.multiply_words(u, v))
    }

    fn comultiply(&self, x: &FormalSum) -> TensorSum {
        let mut out = TensorSum::zero();
        for (w, c) in x.iter() {
            out.add_scaled(&self.comultiply_word(w), c);
        }
        out
    }

    /// Coefficient of the empty word.
    fn counit(&self, x: &FormalSum) -> Rational {
        x.coeff(&Composition::empty())
    }

    fn antipode(&self, x: &FormalSum) -> FormalSum
    where
        Self: Sized,
    {
        antipode(x, self)
    }
}

/// Name-indexed collection of Hopf structures.
pub struct HopfRegistry {
    entries: Vec<(Vec<&'static str>, Box<dyn HopfStructure>)>,
}

impl HopfRegistry {
    pub fn empty() -> Self {
        HopfRegistry {
            entries: Vec::new(),
        }
    }

    /// Registers `s` under its own name plus `aliases`.
    pub fn register(&mut self, s: Box<dyn HopfStructure>, aliases: &[&'static str]) {
        let mut names = vec![s.name()];
        names.extend_from_slice(aliases);
        self.entries.push((names, s));
    }

    pub fn with_builtins() -> Self {
        let mut r = HopfRegistry::empty();
        r.register(Box::new(Shuffle), &[]);
        r.register(Box::new(QuasiShuffle), &["quasi-shuffle"]);
        r.register(Box::new(Concatenation), &["concatenation", "nsymm"]);
        r
    }

    /// The process-wide registry of built-in structures.
    pub fn builtin() -> &'static HopfRegistry {
        static REGISTRY: OnceLock<HopfRegistry> = OnceLock::new();
        REGISTRY.get_or_init(HopfRegistry::with_builtins)
    }

    pub fn get(&self, name: &str) -> Result<&dyn HopfStructure> {
        self.entries
            .iter()
            .find(|(names, _)| names.contains(&name))
            .map(|(_, s)| s.as_ref())
            .ok_or_else(|| Error::unknown("product", name))
    }

    /// Primary names in registration order.
    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _)| n[0]).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn HopfStructure> {
        self.entries.iter().map(|(_, s)| s.as_ref())
    }
}

/// Looks up a built-in structure by name or alias.
pub fn product_choice(name: &str) -> Result<&'static dyn HopfStructure> {
    HopfRegistry::builtin().get(name)
}

pub(crate) fn prepend_letter(a: u32, x: &FormalSum) -> FormalSum {
    x.iter().map(|(w, c)| (w.prepend(a), c.clone())).collect()
}
