//! Commutative polynomials: a sparse multivariate type keyed by an arbitrary
//! ordered variable type, and a dense univariate type.

use std::collections::BTreeMap;
use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Monomial as a sorted list of `(variable, exponent)` with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial<V: Ord>(Vec<(V, u32)>);

impl<V: Ord + Clone> Monomial<V> {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: V) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn var_pow(v: V, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (V, u32)>) -> Self {
        let mut map: BTreeMap<V, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn pairs(&self) -> &[(V, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &V) -> u32 {
        self.0.iter().find(|(w, _)| w == v).map(|(_, e)| *e).unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Removes one factor of `v`; `None` if `v` does not divide.
    pub fn without_one(&self, v: &V) -> Option<Self> {
        let pos = self.0.iter().position(|(w, _)| w == v)?;
        let mut out = self.0.clone();
        if out[pos].1 == 1 {
            out.remove(pos);
        } else {
            out[pos].1 -= 1;
        }
        Some(Monomial(out))
    }
}

/// Sparse commutative polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "V: Serialize + Ord, S: Serialize", deserialize = "V: Deserialize<'de> + Ord, S: Deserialize<'de>"))]
pub struct CommPoly<V: Ord, S> {
    terms: BTreeMap<Monomial<V>, S>,
}

impl<V: Ord + Clone + Debug, S: Scalar> CommPoly<V, S> {
    pub fn zero() -> Self {
        CommPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: V) -> Self {
        Self::term(Monomial::var(v), S::one())
    }

    pub fn term(m: Monomial<V>, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial<V>, S> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial<V>) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        CommPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * s.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Product truncated to monomials whose `weight` does not exceed `bound`.
    pub fn mul_truncated(&self, other: &Self, bound: u32, weight: impl Fn(&Monomial<V>) -> u32) -> Self {
        let mut out = Self::zero();
        let w2: Vec<(u32, &Monomial<V>, &S)> = other.terms.iter().map(|(m, c)| (weight(m), m, c)).collect();
        for (m1, c1) in &self.terms {
            let w1 = weight(m1);
            if w1 > bound {
                continue;
            }
            for (w, m2, c2) in &w2 {
                if w1 + w <= bound {
                    out.add_term(m1.mul(m2), c1.clone() * (*c2).clone());
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn truncate(&self, bound: u32, weight: impl Fn(&Monomial<V>) -> u32) -> Self {
        CommPoly {
            terms: self.terms.iter().filter(|(m, _)| weight(m) <= bound).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Substitutes every variable by a polynomial (possibly over another
    /// variable type).
    pub fn substitute<W: Ord + Clone + Debug>(&self, f: impl Fn(&V) -> CommPoly<W, S>) -> CommPoly<W, S> {
        let mut out = CommPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = CommPoly::constant(c.clone());
            for (v, e) in m.pairs() {
                acc = acc.mul(&f(v).pow(*e));
            }
            out.add_assign(&acc);
        }
        out
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> CommPoly<V, T> {
        let mut out = CommPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Formal derivative with respect to `v`.
    pub fn derivative(&self, v: &V) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                out.add_term(m.without_one(v).expect("exponent positive"), c.clone() * S::from_int(e as i64));
            }
        }
        out
    }
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> UniPoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: S, degree: usize) -> Self {
        let mut v = vec![S::zero(); degree + 1];
        v[degree] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, t: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// Exact quotient by `divisor`; `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Some(Self::zero()) } else { None };
        }
        let mut quot = vec![S::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone() / lead.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
            }
            quot[i] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(quot))
        } else {
            None
        }
    }
}

impl<S: Scalar> UniPoly<S> {
    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use num_rational::BigRational;

    type P = CommPoly<u8, BigRational>;

    #[test]
    fn commutative_product() {
        let x = P::var(0);
        let y = P::var(1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&Monomial::from_pairs([(0, 1), (1, 1)])), q(2));
        assert_eq!(sq.len(), 3);
        assert!(sq.sub(&sq).is_zero());
    }

    #[test]
    fn univariate_exact_division() {
        let t = UniPoly::new(vec![q(0), q(1)]);
        let p = t.mul(&t).scale(&q(4));
        assert_eq!(p.div_exact(&t.scale(&q(2))), Some(t.scale(&q(2))));
        assert_eq!(UniPoly::new(vec![q(1), q(1)]).div_exact(&t), None);
        assert_eq!(p.eval(&q(3)), q(36));
    }

    #[test]
    fn derivative_and_substitution() {
        let x = P::var(0);
        let p = x.pow(3);
        assert_eq!(p.derivative(&0), x.pow(2).scale(&q(3)));
        let shifted = p.substitute(|_| P::var(0).add(&P::one()));
        assert_eq!(shifted.coeff(&Monomial::one()), q(1));
        assert_eq!(shifted.coeff(&Monomial::var(0)), q(3));
    }
}
