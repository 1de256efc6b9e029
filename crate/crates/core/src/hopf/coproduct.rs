//! The coalgebra structure on free algebras generated by group-like curves
//! and primitive letters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::context::{FamilyKind, GeneratorId, HopfContext};
use super::ncpoly::{NCPoly, Word};
use super::tensor::{Tensor3, TensorElement};
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    Grouplike,
    Primitive,
    Neither,
}

/// Sub-indices `β` with `0 ≤ β ≤ α`, in lexicographic order.
pub fn sub_indices(alpha: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &a in alpha {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=a).map(move |b| {
                    let mut q = p.clone();
                    q.push(b);
                    q
                })
            })
            .collect();
    }
    out
}

/// The terms `(left, right)` of `Δ(g)`, each with coefficient one.
pub fn letter_coproduct(ctx: &HopfContext, g: &GeneratorId) -> Result<Vec<(Word, Word)>> {
    let fam = ctx.check(g)?;
    Ok(match fam.kind {
        FamilyKind::Primitive => vec![(vec![*g], Vec::new()), (Vec::new(), vec![*g])],
        FamilyKind::Curve => sub_indices(g.index())
            .into_iter()
            .map(|b| {
                let rest: Vec<i64> = g.index().iter().zip(&b).map(|(a, b)| a - b).collect();
                let l = ctx.generator(g.family(), &b).into_iter().collect();
                let r = ctx.generator(g.family(), &rest).into_iter().collect();
                (l, r)
            })
            .collect(),
    })
}

fn word_coproduct(ctx: &HopfContext, w: &Word, cache: &mut BTreeMap<GeneratorId, Vec<(Word, Word)>>) -> Result<BTreeMap<(Word, Word), u64>> {
    let mut acc: BTreeMap<(Word, Word), u64> = BTreeMap::new();
    acc.insert((Vec::new(), Vec::new()), 1);
    for g in w {
        if !cache.contains_key(g) {
            cache.insert(*g, letter_coproduct(ctx, g)?);
        }
        let parts = &cache[g];
        let mut next = BTreeMap::new();
        for ((l, r), n) in &acc {
            for (x, y) in parts {
                let mut l2 = l.clone();
                l2.extend_from_slice(x);
                let mut r2 = r.clone();
                r2.extend_from_slice(y);
                *next.entry((l2, r2)).or_insert(0) += n;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// `Δ(x)`, the algebra homomorphism extending the generator rules.
pub fn coproduct<S: Scalar>(x: &NCPoly<S>, ctx: &HopfContext) -> Result<TensorElement<S>> {
    let mut cache = BTreeMap::new();
    let mut out = TensorElement::zero();
    for (w, c) in x.terms() {
        for ((l, r), n) in word_coproduct(ctx, w, &mut cache)? {
            out.add_term(l, r, c.clone() * S::from_u64(n).expect("count fits the scalar"));
        }
    }
    Ok(out)
}

/// `(Δ⊗id)Δ(x)` and `(id⊗Δ)Δ(x)`.
pub fn iterated_coproducts<S: Scalar>(x: &NCPoly<S>, ctx: &HopfContext) -> Result<(Tensor3<S>, Tensor3<S>)> {
    let d = coproduct(x, ctx)?;
    let mut cache = BTreeMap::new();
    let mut left = Tensor3::zero();
    let mut right = Tensor3::zero();
    for ((u, v), c) in d.terms() {
        for ((a, b), n) in word_coproduct(ctx, u, &mut cache)? {
            left.add_term((a, b, v.clone()), c.clone() * S::from_u64(n).unwrap());
        }
        for ((a, b), n) in word_coproduct(ctx, v, &mut cache)? {
            right.add_term((u.clone(), a, b), c.clone() * S::from_u64(n).unwrap());
        }
    }
    Ok((left, right))
}

pub fn is_coassociative_on<S: Scalar>(x: &NCPoly<S>, ctx: &HopfContext) -> Result<bool> {
    let (l, r) = iterated_coproducts(x, ctx)?;
    Ok(l == r)
}

/// `(ε⊗id)Δ(x) = x = (id⊗ε)Δ(x)`.
pub fn satisfies_counit<S: Scalar>(x: &NCPoly<S>, ctx: &HopfContext) -> Result<bool> {
    let d = coproduct(x, ctx)?;
    let eps = |w: &Word| if w.is_empty() { S::one() } else { S::zero() };
    Ok(d.contract_left(eps) == *x && d.contract_right(eps) == *x)
}

/// Classification by exact comparison; `0` counts as primitive.
pub fn classify<S: Scalar>(x: &NCPoly<S>, ctx: &HopfContext) -> Result<Classification> {
    let d = coproduct(x, ctx)?;
    let one = NCPoly::one();
    if d == TensorElement::simple(x, &one).add(&TensorElement::simple(&one, x)) {
        Ok(Classification::Primitive)
    } else if d == TensorElement::simple(x, x) {
        Ok(Classification::Grouplike)
    } else {
        Ok(Classification::Neither)
    }
}

/// The Verschiebung `V_p` on integral elements, reduced mod `p`:
/// `g(α) ↦ g(α/p)` (zero unless `p | α`), primitive letters to zero,
/// extended multiplicatively.
pub fn verschiebung_ncpoly<S: ExactScalar>(x: &NCPoly<S>, p: u64, ctx: &HopfContext) -> Result<NCPoly<BigInt>> {
    let xi = x
        .reduce_mod(p)
        .ok_or_else(|| Error::NonIntegral("Verschiebung of an element with non-integer coefficients".into()))?;
    for g in xi.letters() {
        ctx.check(&g)?;
    }
    let pi = p as i64;
    let img = xi.substitute(|g| {
        let fam = ctx.family(g.family()).expect("checked above");
        match fam.kind {
            FamilyKind::Primitive => NCPoly::zero(),
            FamilyKind::Curve => {
                if g.index().iter().all(|i| i % pi == 0) {
                    let idx: Vec<i64> = g.index().iter().map(|i| i / pi).collect();
                    NCPoly::letter(g.with_index(&idx))
                } else {
                    NCPoly::zero()
                }
            }
        }
    });
    Ok(reduce_big(&img, p))
}

pub fn reduce_big(x: &NCPoly<BigInt>, p: u64) -> NCPoly<BigInt> {
    let p = BigInt::from(p);
    NCPoly::from_terms(x.terms().map(|(w, c)| (w.clone(), c.mod_floor(&p))).filter(|(_, c)| !c.is_zero()))
}

pub fn reduce_tensor(t: &TensorElement<BigInt>, p: u64) -> TensorElement<BigInt> {
    let p = BigInt::from(p);
    let mut out = TensorElement::zero();
    for ((u, v), c) in t.terms() {
        out.add_term(u.clone(), v.clone(), c.mod_floor(&p));
    }
    out
}

/// Checks `Δ∘V_p ≡ (V_p⊗V_p)∘Δ (mod p)` on `x`.
pub fn verschiebung_is_comultiplicative(x: &NCPoly<BigInt>, p: u64, ctx: &HopfContext) -> Result<bool> {
    let lhs = reduce_tensor(&coproduct(&verschiebung_ncpoly(x, p, ctx)?, ctx)?, p);
    let mut rhs = TensorElement::zero();
    for ((u, v), c) in coproduct(x, ctx)?.terms() {
        let vu = verschiebung_ncpoly(&NCPoly::monomial(u.clone(), BigInt::from(1)), p, ctx)?;
        let vv = verschiebung_ncpoly(&NCPoly::monomial(v.clone(), BigInt::from(1)), p, ctx)?;
        rhs.add_assign(&TensorElement::simple(&vu, &vv).scale(c));
    }
    Ok(lhs == reduce_tensor(&rhs, p))
}
