//! Elements of `H ⊗ H` and `H ⊗ H ⊗ H` for free algebras.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::ncpoly::{NCPoly, Word};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct TensorElement<S> {
    terms: BTreeMap<(Word, Word), S>,
}

impl<S: Scalar> TensorElement<S> {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(Vec::new(), Vec::new(), S::one());
        t
    }

    /// `a ⊗ b`.
    pub fn simple(a: &NCPoly<S>, b: &NCPoly<S>) -> Self {
        let mut t = Self::zero();
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                t.add_term(u.clone(), v.clone(), x.clone() * y.clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &Word, v: &Word) -> S {
        self.terms.get(&(u.clone(), v.clone())).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: S) {
        if c.is_zero() {
            return;
        }
        let key = (u, v);
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for ((u, v), c) in &other.terms {
            self.add_term(u.clone(), v.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.add_term(u.clone(), v.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero();
        for ((u, v), c) in &self.terms {
            out.add_term(u.clone(), v.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Product in `H ⊗ H`: `(u⊗v)(u'⊗v') = uu' ⊗ vv'`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((u, v), a) in &self.terms {
            for ((x, y), b) in &other.terms {
                let mut l = u.clone();
                l.extend_from_slice(x);
                let mut r = v.clone();
                r.extend_from_slice(y);
                out.add_term(l, r, a.clone() * b.clone());
            }
        }
        out
    }

    /// `(f ⊗ id)` for a linear functional `f` on words.
    pub fn contract_left(&self, f: impl Fn(&Word) -> S) -> NCPoly<S> {
        NCPoly::from_terms(self.terms.iter().map(|((u, v), c)| (v.clone(), c.clone() * f(u))))
    }

    pub fn contract_right(&self, f: impl Fn(&Word) -> S) -> NCPoly<S> {
        NCPoly::from_terms(self.terms.iter().map(|((u, v), c)| (u.clone(), c.clone() * f(v))))
    }

    /// Swaps the two tensor factors.
    pub fn flip(&self) -> Self {
        let mut out = Self::zero();
        for ((u, v), c) in &self.terms {
            out.add_term(v.clone(), u.clone(), c.clone());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3<S> {
    terms: BTreeMap<(Word, Word, Word), S>,
}

impl<S: Scalar> Tensor3<S> {
    pub fn zero() -> Self {
        Tensor3 { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, key: (Word, Word, Word), c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
