//! Divided-power algebras: the commutative algebra with basis `Z_α`,
//! `α ∈ Z≥0^r`, product `Z_α Z_β = ∏ C(α_i+β_i, β_i) Z_{α+β}` and coproduct
//! `Δ Z_α = Σ_{0≤β≤α} Z_β ⊗ Z_{α−β}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::coproduct::{sub_indices, Classification};
use crate::error::{Error, Result};
use crate::scalar::{binomial_i, ExactScalar, Scalar};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(r: usize) -> Self {
        MultiIndex(vec![0; r])
    }

    /// `k·ε_i`.
    pub fn unit(r: usize, i: usize, k: u32) -> Self {
        let mut v = vec![0; r];
        v[i] = k;
        MultiIndex(v)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Option<Self> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(MultiIndex)
    }

    pub fn divide(&self, p: u32) -> Option<Self> {
        if self.0.iter().all(|a| a % p == 0) {
            Some(MultiIndex(self.0.iter().map(|a| a / p).collect()))
        } else {
            None
        }
    }

    pub fn sub_indices(&self) -> Vec<MultiIndex> {
        let alpha: Vec<i64> = self.0.iter().map(|&a| a as i64).collect();
        sub_indices(&alpha).into_iter().map(|b| MultiIndex(b.into_iter().map(|x| x as u32).collect())).collect()
    }

    /// All multi-indices in `Z≥0^r` of size at most `bound`.
    pub fn all_up_to(r: usize, bound: u32) -> Vec<MultiIndex> {
        let mut out = vec![Vec::new()];
        for _ in 0..r {
            out = out
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    let used: u32 = p.iter().sum();
                    (0..=bound - used).map(move |a| {
                        let mut q = p.clone();
                        q.push(a);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiIndex).collect()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `∏_i C(α_i+β_i, β_i)`.
pub fn product_coefficient(a: &MultiIndex, b: &MultiIndex) -> BigInt {
    a.0.iter().zip(&b.0).map(|(&x, &y)| binomial_i((x + y) as i64, y as u64)).product()
}

#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "S: Serialize", deserialize = "S: Deserialize<'de>"))]
pub struct DividedPowerElement<S> {
    rank: usize,
    terms: BTreeMap<MultiIndex, S>,
}

pub type DividedTensor<S> = BTreeMap<(MultiIndex, MultiIndex), S>;

fn add_into<K: Ord, S: Scalar>(map: &mut BTreeMap<K, S>, k: K, c: S) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&k) {
        Some(v) => {
            *v = v.clone() + c;
            if v.is_zero() {
                map.remove(&k);
            }
        }
        None => {
            map.insert(k, c);
        }
    }
}

impl<S: Scalar> DividedPowerElement<S> {
    pub fn zero(rank: usize) -> Self {
        DividedPowerElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::basis(MultiIndex::zero(rank))
    }

    pub fn basis(alpha: MultiIndex) -> Self {
        Self::term(alpha, S::one())
    }

    pub fn term(alpha: MultiIndex, c: S) -> Self {
        let mut e = Self::zero(alpha.0.len());
        e.add_term(alpha, c);
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> S {
        self.terms.get(alpha).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: MultiIndex, c: S) {
        assert_eq!(alpha.0.len(), self.rank, "multi-index over a different index set");
        add_into(&mut self.terms, alpha, c);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.rank);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let k = S::from_bigint_lossless(product_coefficient(a, b));
                out.add_term(a.add(b), x.clone() * y.clone() * k);
            }
        }
        out
    }

    /// Coefficient of `Z_0`.
    pub fn counit(&self) -> S {
        self.coeff(&MultiIndex::zero(self.rank))
    }

    pub fn coproduct(&self) -> DividedTensor<S> {
        let mut out = BTreeMap::new();
        for (a, c) in &self.terms {
            for b in a.sub_indices() {
                let rest = a.sub(&b).expect("β ≤ α");
                add_into(&mut out, (b, rest), c.clone());
            }
        }
        out
    }

    pub fn tensor(a: &Self, b: &Self) -> DividedTensor<S> {
        let mut out = BTreeMap::new();
        for (x, c) in &a.terms {
            for (y, d) in &b.terms {
                add_into(&mut out, (x.clone(), y.clone()), c.clone() * d.clone());
            }
        }
        out
    }

    pub fn classify(&self) -> Classification {
        let d = self.coproduct();
        let one = Self::one(self.rank);
        let mut prim = Self::tensor(self, &one);
        for (k, c) in Self::tensor(&one, self) {
            add_into(&mut prim, k, c);
        }
        if d == prim {
            Classification::Primitive
        } else if d == Self::tensor(self, self) {
            Classification::Grouplike
        } else {
            Classification::Neither
        }
    }
}

/// Product in the tensor square of the (commutative) divided-power algebra.
pub fn tensor_mul<S: Scalar>(a: &DividedTensor<S>, b: &DividedTensor<S>) -> DividedTensor<S> {
    let mut out = BTreeMap::new();
    for ((u, v), x) in a {
        for ((s, t), y) in b {
            let k = S::from_bigint_lossless(product_coefficient(u, s) * product_coefficient(v, t));
            add_into(&mut out, (u.add(s), v.add(t)), x.clone() * y.clone() * k);
        }
    }
    out
}

/// `(Δ⊗id)Δ(Z_α) == (id⊗Δ)Δ(Z_α)`.
pub fn coassociative_on(alpha: &MultiIndex) -> bool {
    let mut left: BTreeMap<(MultiIndex, MultiIndex, MultiIndex), i64> = BTreeMap::new();
    let mut right = BTreeMap::new();
    for b in alpha.sub_indices() {
        let rest = alpha.sub(&b).unwrap();
        for c in b.sub_indices() {
            *left.entry((c.clone(), b.sub(&c).unwrap(), rest.clone())).or_insert(0) += 1;
        }
        for c in rest.sub_indices() {
            *right.entry((b.clone(), c.clone(), rest.sub(&c).unwrap())).or_insert(0) += 1;
        }
    }
    left == right
}

impl<S: Scalar> DividedPowerElement<S> {
    /// `(ε⊗id)Δ(x) = x = (id⊗ε)Δ(x)`.
    pub fn satisfies_counit(&self) -> bool {
        let d = self.coproduct();
        let mut l = Self::zero(self.rank);
        let mut r = Self::zero(self.rank);
        for ((u, v), c) in &d {
            if u.is_zero() {
                l.add_term(v.clone(), c.clone());
            }
            if v.is_zero() {
                r.add_term(u.clone(), c.clone());
            }
        }
        l == *self && r == *self
    }

    /// `Δ(xy) = Δ(x)Δ(y)`.
    pub fn coproduct_is_multiplicative_with(&self, other: &Self) -> bool {
        self.mul(other).coproduct() == tensor_mul(&self.coproduct(), &other.coproduct())
    }
}

impl<S: ExactScalar> DividedPowerElement<S> {
    /// `V_p(Z_α) = Z_{α/p}` (zero unless `p | α`), coefficients mod `p`.
    pub fn verschiebung(&self, p: u32) -> Result<DividedPowerElement<BigInt>> {
        let pb = BigInt::from(p);
        let mut out = DividedPowerElement::zero(self.rank);
        for (a, c) in &self.terms {
            let c = c
                .to_bigint()
                .ok_or_else(|| Error::NonIntegral(format!("coefficient {c:?} of Z_{a:?}")))?;
            if let Some(b) = a.divide(p) {
                out.add_term(b, c.mod_floor(&pb));
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

/// Conversion used by the binomial product law; every exact scalar in this
/// crate holds integers without loss.
pub trait FromBigIntLossless {
    fn from_bigint_lossless(n: BigInt) -> Self;
}

impl<S: Scalar> FromBigIntLossless for S {
    fn from_bigint_lossless(n: BigInt) -> Self {
        use num_traits::ToPrimitive;
        if let Some(small) = n.to_i64() {
            return S::from_int(small);
        }
        let base = S::from_int(1 << 32);
        let (sign, digits) = n.to_u32_digits();
        let mut acc = S::zero();
        for d in digits.iter().rev() {
            acc = acc * base.clone() + S::from_u64(*d as u64).unwrap();
        }
        if sign == num_bigint::Sign::Minus {
            -acc
        } else {
            acc
        }
    }
}

/// `Z_α · Z_β` as a divided-power element.
pub fn divided_power_product<S: Scalar>(alpha: &MultiIndex, beta: &MultiIndex) -> DividedPowerElement<S> {
    DividedPowerElement::basis(alpha.clone()).mul(&DividedPowerElement::basis(beta.clone()))
}

impl<S: Scalar> fmt::Debug for DividedPowerElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(a, c)| format!("{c:?}·Z{:?}", a.0)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
