//! Truncated power series `c₀ + c₁x + … + c_N x^N` over a (possibly
//! noncommutative) coefficient ring.

use std::fmt::Debug;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::matrix::Matrix;
use crate::error::{Error, Result};
use crate::hopf::coproduct::{coproduct, Classification};
use crate::hopf::divided::{tensor_mul, DividedPowerElement, DividedTensor};
use crate::hopf::{HopfContext, NCPoly, TensorElement};
use crate::scalar::Scalar;

/// Coefficient rings for curves. `zero_like`/`one_like` exist so that
/// shaped rings (matrices, fixed index sets) can produce conforming units.
pub trait CurveRing: Clone + PartialEq + Debug {
    type Scalar: Scalar;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, s: &Self::Scalar) -> Self;
    fn is_zero(&self) -> bool;
}

impl<S: Scalar> CurveRing for NCPoly<S> {
    type Scalar = S;
    fn zero_like(&self) -> Self {
        NCPoly::zero()
    }
    fn one_like(&self) -> Self {
        NCPoly::one()
    }
    fn add(&self, o: &Self) -> Self {
        NCPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        NCPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        NCPoly::mul(self, o)
    }
    fn scale(&self, s: &S) -> Self {
        NCPoly::scale(self, s)
    }
    fn is_zero(&self) -> bool {
        NCPoly::is_zero(self)
    }
}

impl<S: Scalar> CurveRing for DividedPowerElement<S> {
    type Scalar = S;
    fn zero_like(&self) -> Self {
        DividedPowerElement::zero(self.rank())
    }
    fn one_like(&self) -> Self {
        DividedPowerElement::one(self.rank())
    }
    fn add(&self, o: &Self) -> Self {
        DividedPowerElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        DividedPowerElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        DividedPowerElement::mul(self, o)
    }
    fn scale(&self, s: &S) -> Self {
        DividedPowerElement::scale(self, s)
    }
    fn is_zero(&self) -> bool {
        DividedPowerElement::is_zero(self)
    }
}

impl<S: Scalar> CurveRing for Matrix<S> {
    type Scalar = S;
    fn zero_like(&self) -> Self {
        Matrix::zeros(self.rows(), self.cols())
    }
    fn one_like(&self) -> Self {
        Matrix::identity(self.rows())
    }
    fn add(&self, o: &Self) -> Self {
        Matrix::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Matrix::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Matrix::mul(self, o)
    }
    fn scale(&self, s: &S) -> Self {
        Matrix::scale(self, s)
    }
    fn is_zero(&self) -> bool {
        Matrix::is_zero(self)
    }
}

/// A coalgebra structure on a curve ring, enough to certify group-likeness.
pub trait Bialgebra<T: CurveRing> {
    type Tensor: Clone + PartialEq + Debug;
    fn coproduct(&self, x: &T) -> Result<Self::Tensor>;
    fn tensor(&self, a: &T, b: &T) -> Self::Tensor;
    fn tensor_add(&self, a: &Self::Tensor, b: &Self::Tensor) -> Self::Tensor;
    fn tensor_sub(&self, a: &Self::Tensor, b: &Self::Tensor) -> Self::Tensor;
    fn tensor_is_zero(&self, t: &Self::Tensor) -> bool;
    fn classify(&self, x: &T) -> Result<Classification>;
}

impl<S: Scalar> Bialgebra<NCPoly<S>> for HopfContext {
    type Tensor = TensorElement<S>;
    fn coproduct(&self, x: &NCPoly<S>) -> Result<TensorElement<S>> {
        coproduct(x, self)
    }
    fn tensor(&self, a: &NCPoly<S>, b: &NCPoly<S>) -> TensorElement<S> {
        TensorElement::simple(a, b)
    }
    fn tensor_add(&self, a: &TensorElement<S>, b: &TensorElement<S>) -> TensorElement<S> {
        a.add(b)
    }
    fn tensor_sub(&self, a: &TensorElement<S>, b: &TensorElement<S>) -> TensorElement<S> {
        a.sub(b)
    }
    fn tensor_is_zero(&self, t: &TensorElement<S>) -> bool {
        t.is_zero()
    }
    fn classify(&self, x: &NCPoly<S>) -> Result<Classification> {
        crate::hopf::classify(x, self)
    }
}

/// Marker carrying the index-set size of a divided-power algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DividedPowerAlgebra(pub usize);

impl<S: Scalar> Bialgebra<DividedPowerElement<S>> for DividedPowerAlgebra {
    type Tensor = DividedTensor<S>;
    fn coproduct(&self, x: &DividedPowerElement<S>) -> Result<DividedTensor<S>> {
        Ok(x.coproduct())
    }
    fn tensor(&self, a: &DividedPowerElement<S>, b: &DividedPowerElement<S>) -> DividedTensor<S> {
        DividedPowerElement::tensor(a, b)
    }
    fn tensor_add(&self, a: &DividedTensor<S>, b: &DividedTensor<S>) -> DividedTensor<S> {
        let mut out = a.clone();
        for (k, c) in b {
            let v = out.remove(k).unwrap_or_else(S::zero) + c.clone();
            if !v.is_zero() {
                out.insert(k.clone(), v);
            }
        }
        out
    }
    fn tensor_sub(&self, a: &DividedTensor<S>, b: &DividedTensor<S>) -> DividedTensor<S> {
        let neg: DividedTensor<S> = b.iter().map(|(k, c)| (k.clone(), -c.clone())).collect();
        self.tensor_add(a, &neg)
    }
    fn tensor_is_zero(&self, t: &DividedTensor<S>) -> bool {
        t.is_empty()
    }
    fn classify(&self, x: &DividedPowerElement<S>) -> Result<Classification> {
        Ok(x.classify())
    }
}

#[doc(hidden)]
pub fn divided_tensor_mul<S: Scalar>(a: &DividedTensor<S>, b: &DividedTensor<S>) -> DividedTensor<S> {
    tensor_mul(a, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CombineMode {
    Mul,
    SubstitutePower(usize),
    Scale(i64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Curve<T> {
    coeffs: Vec<T>,
}

impl<T: CurveRing> Curve<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a curve has at least its constant coefficient");
        Curve { coeffs }
    }

    /// The constant curve `1` of the given order.
    pub fn one(template: &T, order: usize) -> Self {
        let mut c = vec![template.zero_like(); order + 1];
        c[0] = template.one_like();
        Curve { coeffs: c }
    }

    /// `1 + a x`, truncated at `order`.
    pub fn linear(a: &T, order: usize) -> Self {
        let mut c = Self::one(a, order);
        if order >= 1 {
            c.coeffs[1] = a.clone();
        }
        c
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, v: T) {
        self.coeffs[k] = v;
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Curve { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Extends with zero coefficients.
    pub fn pad(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        while c.len() < order + 1 {
            c.push(self.coeffs[0].zero_like());
        }
        Curve { coeffs: c }
    }

    pub fn has_unit_constant(&self) -> bool {
        self.coeffs[0] == self.coeffs[0].one_like()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        let n = self.order();
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        Ok(Curve { coeffs: out })
    }

    /// `a(x^k)`, keeping the order.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let n = self.order();
        let mut out = vec![self.coeffs[0].zero_like(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k <= n {
                out[i * k] = c.clone();
            }
        }
        Curve { coeffs: out }
    }

    /// `a(r x)`.
    pub fn scale_variable(&self, r: &T::Scalar) -> Self {
        let mut pow = T::Scalar::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(if pow.is_zero() { c.zero_like() } else { c.scale(&pow) });
            pow = pow * r.clone();
        }
        Curve { coeffs: out }
    }

    pub fn combine(&self, other: Option<&Self>, mode: CombineMode) -> Result<Self> {
        match mode {
            CombineMode::Mul => self.mul(other.ok_or_else(|| Error::OrderMismatch(self.order(), 0))?),
            CombineMode::SubstitutePower(k) => Ok(self.substitute_power(k)),
            CombineMode::Scale(r) => Ok(self.scale_variable(&T::Scalar::from_int(r))),
        }
    }

    /// `c(x)^{-1} = Σ_m (1 − c(x))^m`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.has_unit_constant() {
            return Err(Error::BadConstant(format!("{:?}", self.coeffs[0])));
        }
        let n = self.order();
        let one = Self::one(&self.coeffs[0], n);
        let mut b = self.clone();
        for c in b.coeffs.iter_mut() {
            *c = c.scale(&-T::Scalar::one());
        }
        b.coeffs[0] = b.coeffs[0].zero_like();
        let mut acc = one.clone();
        let mut pow = one;
        for _ in 0..n {
            pow = pow.mul(&b)?;
            acc = acc.add(&pow);
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Self {
        Curve { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Curve { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &T::Scalar) -> Self {
        Curve { coeffs: self.coeffs.iter().map(|a| a.scale(s)).collect() }
    }

    /// `log c = Σ_{m≥1} (−1)^{m+1} (c−1)^m / m`, with zero constant term.
    pub fn log(&self) -> Result<Self> {
        if !self.has_unit_constant() {
            return Err(Error::BadConstant(format!("{:?}", self.coeffs[0])));
        }
        let n = self.order();
        let mut u = self.clone();
        u.coeffs[0] = u.coeffs[0].zero_like();
        let mut acc = Curve { coeffs: vec![u.coeffs[0].clone(); n + 1] };
        let mut pow = u.clone();
        for m in 1..=n {
            let sign = if m % 2 == 1 { T::Scalar::one() } else { -T::Scalar::one() };
            acc = acc.add(&pow.scale(&(sign * T::Scalar::recip_int(m as i64))));
            pow = pow.mul(&u)?;
        }
        Ok(acc)
    }

    /// `exp q = Σ q^m / m!` for a curve with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstant("exp needs a vanishing constant term".into()));
        }
        let n = self.order();
        let one = Self::one(&self.coeffs[0], n);
        let mut acc = one.clone();
        let mut term = one;
        for m in 1..=n {
            term = term.mul(self)?.scale(&T::Scalar::recip_int(m as i64));
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// `Δ(c_k) − Σ_{m} c_m ⊗ c_{k−m}` for every `k ≤ order`.
    pub fn grouplike_residues<B: Bialgebra<T>>(&self, alg: &B) -> Result<Vec<B::Tensor>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for k in 0..=self.order() {
            let mut rhs = alg.tensor(&self.coeffs[0], &self.coeffs[k]);
            for m in 1..=k {
                rhs = alg.tensor_add(&rhs, &alg.tensor(&self.coeffs[m], &self.coeffs[k - m]));
            }
            out.push(alg.tensor_sub(&alg.coproduct(&self.coeffs[k])?, &rhs));
        }
        Ok(out)
    }

    /// First order at which the group-like relations fail, if any.
    pub fn first_grouplike_failure<B: Bialgebra<T>>(&self, alg: &B) -> Result<Option<usize>> {
        if !self.has_unit_constant() {
            return Ok(Some(0));
        }
        Ok(self.grouplike_residues(alg)?.iter().position(|t| !alg.tensor_is_zero(t)))
    }

    pub fn is_grouplike<B: Bialgebra<T>>(&self, alg: &B) -> Result<bool> {
        Ok(self.first_grouplike_failure(alg)?.is_none())
    }
}

