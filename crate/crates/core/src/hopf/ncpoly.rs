//! Noncommutative polynomials: finite combinations of words in generators.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::context::{GeneratorId, HopfContext};
use crate::scalar::{ExactScalar, Scalar};

pub type Word = Vec<GeneratorId>;

#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct NCPoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> NCPoly<S> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn letter(g: GeneratorId) -> Self {
        Self::monomial(vec![g], S::one())
    }

    pub fn monomial(w: Word, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[GeneratorId]) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient of the empty word.
    pub fn counit(&self) -> S {
        self.coeff(&[])
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.clone() * s.clone())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a.clone() * b.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> NCPoly<T> {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Algebra homomorphism determined by the image of each letter.
    pub fn substitute(&self, f: impl Fn(&GeneratorId) -> NCPoly<S>) -> Self {
        let mut cache: BTreeMap<GeneratorId, NCPoly<S>> = BTreeMap::new();
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for g in w {
                let img = cache.entry(*g).or_insert_with(|| f(g));
                acc = acc.mul(img);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc);
        }
        out
    }

    /// Multidegree of every word, if all words share one.
    pub fn multidegree(&self, ctx: &HopfContext) -> Option<Vec<i64>> {
        let mut deg: Option<Vec<i64>> = None;
        for w in self.terms.keys() {
            let d = word_degree(ctx, w);
            match &deg {
                None => deg = Some(d),
                Some(e) if *e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn letters(&self) -> std::collections::BTreeSet<GeneratorId> {
        self.terms.keys().flatten().copied().collect()
    }
}

pub fn word_degree(ctx: &HopfContext, w: &[GeneratorId]) -> Vec<i64> {
    let mut d = vec![0; ctx.grading_rank()];
    for g in w {
        for (x, y) in d.iter_mut().zip(ctx.letter_degree(g)) {
            *x += y;
        }
    }
    d
}

impl<S: ExactScalar> NCPoly<S> {
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integral())
    }

    /// Integer coefficients reduced into `[0, p)`; `None` if some coefficient
    /// is not an integer.
    pub fn reduce_mod(&self, p: u64) -> Option<NCPoly<BigInt>> {
        let p = BigInt::from(p);
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.to_bigint()?.mod_floor(&p));
        }
        Some(out)
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w.is_empty() {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "({c})")?;
                }
                for g in w {
                    write!(f, "{g}")?;
                }
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let letters: String = w.iter().map(|g| g.to_string()).collect();
                format!("{c:?}·[{letters}]")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
