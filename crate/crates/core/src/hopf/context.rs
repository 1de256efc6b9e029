//! Generators and the families that fix their coproducts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ARITY: usize = 4;

/// A generator `g(index)` of a family. Indices of curve families are
/// nonzero multi-indices in `Z≥0^arity`; primitive families use a single
/// integer index which may be negative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorId {
    family: char,
    arity: u8,
    index: [i64; MAX_ARITY],
}

impl GeneratorId {
    pub fn new(family: char, index: &[i64]) -> Self {
        assert!(!index.is_empty() && index.len() <= MAX_ARITY, "index arity out of range");
        let mut idx = [0; MAX_ARITY];
        idx[..index.len()].copy_from_slice(index);
        GeneratorId { family, arity: index.len() as u8, index: idx }
    }

    pub fn single(family: char, n: i64) -> Self {
        Self::new(family, &[n])
    }

    pub fn family(&self) -> char {
        self.family
    }

    pub fn index(&self) -> &[i64] {
        &self.index[..self.arity as usize]
    }

    pub fn total_index(&self) -> i64 {
        self.index().iter().sum()
    }

    pub fn with_index(&self, index: &[i64]) -> Self {
        Self::new(self.family, index)
    }
}

impl fmt::Debug for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arity == 1 {
            write!(f, "{}{}", self.family, self.index[0])
        } else {
            let parts: Vec<String> = self.index().iter().map(|i| i.to_string()).collect();
            write!(f, "{}[{}]", self.family, parts.join(","))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    /// `Δ g(α) = Σ_{0≤β≤α} g(β) ⊗ g(α−β)` with `g(0) = 1`.
    Curve,
    /// `Δ g = g ⊗ 1 + 1 ⊗ g`.
    Primitive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub symbol: char,
    pub arity: usize,
    pub kind: FamilyKind,
}

/// The declared generator families of a free bialgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfContext {
    families: Vec<Family>,
}

impl HopfContext {
    pub fn new(families: Vec<Family>) -> Self {
        for (i, f) in families.iter().enumerate() {
            assert!(f.arity >= 1 && f.arity <= MAX_ARITY, "family arity out of range");
            assert!(families[..i].iter().all(|g| g.symbol != f.symbol), "duplicate family symbol");
        }
        HopfContext { families }
    }

    /// One-variable curve families, e.g. `['a', 'b']` for the two-family
    /// universal example.
    pub fn curves(symbols: &[char]) -> Self {
        Self::new(symbols.iter().map(|&s| Family { symbol: s, arity: 1, kind: FamilyKind::Curve }).collect())
    }

    /// `F_n`: one curve family `Z` indexed by `Z≥0^n`.
    pub fn free_fn(n: usize) -> Self {
        Self::new(vec![Family { symbol: 'Z', arity: n, kind: FamilyKind::Curve }])
    }

    pub fn primitives(symbols: &[char]) -> Self {
        Self::new(symbols.iter().map(|&s| Family { symbol: s, arity: 1, kind: FamilyKind::Primitive }).collect())
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn family(&self, symbol: char) -> Option<&Family> {
        self.families.iter().find(|f| f.symbol == symbol)
    }

    /// Length of multidegree vectors: the sum of the family arities.
    pub fn grading_rank(&self) -> usize {
        self.families.iter().map(|f| f.arity).sum()
    }

    pub fn check(&self, g: &GeneratorId) -> Result<&Family> {
        let fam = self
            .family(g.family())
            .ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
        if fam.arity != g.index().len() {
            return Err(Error::UnknownGenerator(format!("{g}: expected arity {}", fam.arity)));
        }
        if fam.kind == FamilyKind::Curve && (g.index().iter().any(|&i| i < 0) || g.index().iter().all(|&i| i == 0)) {
            return Err(Error::UnknownGenerator(format!("{g}: curve generators need a nonzero index in Z≥0")));
        }
        Ok(fam)
    }

    /// Multidegree of a letter: its index placed in the slot of its family.
    pub fn letter_degree(&self, g: &GeneratorId) -> Vec<i64> {
        let mut out = vec![0; self.grading_rank()];
        let mut off = 0;
        for f in &self.families {
            if f.symbol == g.family() {
                out[off..off + f.arity].copy_from_slice(g.index());
                return out;
            }
            off += f.arity;
        }
        panic!("undeclared generator {g}");
    }

    /// Generator of `family` at a (possibly zero) index; `None` for index 0.
    pub fn generator(&self, family: char, index: &[i64]) -> Option<GeneratorId> {
        if index.iter().all(|&i| i == 0) {
            None
        } else {
            Some(GeneratorId::new(family, index))
        }
    }
}
