//! Order-by-order integral lifting of primitive elements.
//!
//! Given an integral group-like curve `c₀..c_{k−1}`, the rational solutions
//! of `Δ(c_k) = Σ c_m ⊗ c_{k−m}` form the coset `c_k^Q + P_Q` where
//! `c_k^Q` is the `x^k` coefficient of `exp` of the truncated logarithm and
//! `P_Q` is the space of primitives of the right multidegree. The integral
//! points of that coset are found as an affine lattice, one coordinate
//! congruence at a time.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::primitives::primitive_basis;
use crate::arith::lattice::{solve_integer_system, IntLatticeBasis};
use crate::arith::matrix::Matrix;
use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::hopf::{classify, Classification, HopfContext, NCPoly, Word};
use crate::Q;

/// Bound on the multidegree of any coefficient the solver will build.
pub const MAX_TOTAL_DEGREE: usize = 12;

fn qi(n: BigInt) -> Q {
    Q::from_integer(n)
}

/// An affine lattice `{z0 + B y : y ∈ Z^k}` inside `Z^r`.
#[derive(Clone, Debug)]
struct AffineLattice {
    z0: Vec<BigInt>,
    basis: Vec<Vec<BigInt>>,
}

impl AffineLattice {
    fn full(r: usize) -> Self {
        AffineLattice { z0: vec![BigInt::zero(); r], basis: IntLatticeBasis::standard(r).scaled_columns().to_vec() }
    }

    /// Restricts to the points with `a·z + s ∈ Z`.
    fn impose(&mut self, a: &[Q], s: &Q) -> bool {
        let k = self.basis.len();
        let ab: Vec<Q> = self
            .basis
            .iter()
            .map(|col| a.iter().zip(col).filter(|(x, _)| !x.is_zero()).map(|(x, c)| x * qi(c.clone())).sum())
            .collect();
        let shift: Q = s + a.iter().zip(&self.z0).filter(|(x, _)| !x.is_zero()).map(|(x, c)| x * qi(c.clone())).sum::<Q>();
        let d = ab.iter().chain(std::iter::once(&shift)).fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        if d.is_one() {
            return true;
        }
        let dq = qi(d.clone());
        let mut row: Vec<BigInt> = ab.iter().map(|v| (v * &dq).to_integer()).collect();
        row.push(d.clone());
        let rhs = -(shift * &dq).to_integer();
        let Some((part, hom)) = solve_integer_system(&[row], &[rhs], k + 1) else { return false };
        let apply = |y: &[BigInt]| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); self.z0.len()];
            for (col, yi) in self.basis.iter().zip(y) {
                if yi.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(col) {
                    *o += c * yi;
                }
            }
            out
        };
        let dz = apply(&part[..k]);
        let new_basis: Vec<Vec<BigInt>> = hom.iter().map(|h| apply(&h[..k])).collect();
        let lat = IntLatticeBasis::from_generators(&new_basis, self.z0.len()).expect("dimensions agree");
        let z0: Vec<BigInt> = self.z0.iter().zip(&dz).map(|(a, b)| a + b).collect();
        self.z0 = lat.reduce(&z0);
        self.basis = lat.scaled_columns().to_vec();
        true
    }
}

fn scalar_multiple(d: &[i64], k: usize) -> Vec<i64> {
    d.iter().map(|x| x * k as i64).collect()
}

/// The rational group-like completion of an order-`(k−1)` group-like curve:
/// the `x^k` coefficient of `exp` of its logarithm with the `x^k` term
/// dropped.
pub fn rational_completion(c: &Curve<NCPoly<Q>>, k: usize) -> Result<NCPoly<Q>> {
    let base = c.truncate(k - 1).pad(k);
    let mut log = base.log()?;
    log.set_coeff(k, NCPoly::zero());
    Ok(log.exp()?.coeff(k).clone())
}

/// All integral solutions for the `x^k` coefficient, as
/// `(particular, lattice basis)` in the monomial coordinates `support`.
pub struct CoefficientSolution {
    pub support: Vec<Word>,
    pub coefficient: NCPoly<Q>,
    pub primitive_rank: usize,
}

/// Finds an integral `c_k` extending the integral group-like curve `c`
/// (of order at least `k − 1`) whose first coefficient has multidegree `d`.
pub fn solve_coefficient(c: &Curve<NCPoly<Q>>, k: usize, d: &[i64], ctx: &HopfContext) -> Result<CoefficientSolution> {
    let target = scalar_multiple(d, k);
    let crat = rational_completion(c, k)?;
    let prims = primitive_basis(ctx, &target)?;
    let mut support: BTreeSet<Word> = crat.terms().map(|(w, _)| w.clone()).collect();
    for p in &prims {
        support.extend(p.terms().map(|(w, _)| w.clone()));
    }
    let support: Vec<Word> = support.into_iter().collect();
    let pos: BTreeMap<&Word, usize> = support.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let m = support.len();
    let r = prims.len();
    let mut pm = Matrix::<Q>::zeros(r, m);
    for (i, p) in prims.iter().enumerate() {
        for (w, c) in p.terms() {
            pm.set(i, pos[w], c.clone());
        }
    }
    let g0: Vec<Q> = support.iter().map(|w| crat.coeff(w)).collect();
    if r == 0 {
        if g0.iter().any(|x| !x.is_integer()) {
            return Err(Error::NoIntegralSolution(format!("{target:?}: rigid coefficient is not integral")));
        }
        return Ok(CoefficientSolution { support, coefficient: crat, primitive_rank: 0 });
    }
    let (rref, pivots) = pm.rref();
    if pivots.len() != r {
        return Err(Error::Degenerate("primitive basis is linearly dependent".into()));
    }
    // Parametrise by z = values at the pivot coordinates: c = g + Ĝ z where
    // Ĝ has the rref rows as its columns.
    let mut g = g0.clone();
    for (i, &p) in pivots.iter().enumerate() {
        let v = g0[p].clone();
        if v.is_zero() {
            continue;
        }
        for j in 0..m {
            let e = rref.get(i, j);
            if !e.is_zero() {
                g[j] -= &v * e;
            }
        }
    }
    let mut aff = AffineLattice::full(r);
    for j in 0..m {
        if pivots.contains(&j) {
            continue;
        }
        let a: Vec<Q> = (0..r).map(|i| rref.get(i, j).clone()).collect();
        if !aff.impose(&a, &g[j]) {
            return Err(Error::NoIntegralSolution(format!(
                "multidegree {target:?}: congruence at word {:?} has no solution",
                support[j]
            )));
        }
    }
    let z = &aff.z0;
    let mut coeff = NCPoly::zero();
    for j in 0..m {
        let mut v = g[j].clone();
        for i in 0..r {
            let e = rref.get(i, j);
            if !e.is_zero() && !z[i].is_zero() {
                v += e * qi(z[i].clone());
            }
        }
        coeff.add_term(support[j].clone(), v);
    }
    Ok(CoefficientSolution { support, coefficient: coeff, primitive_rank: r })
}

fn check_primitive_input(p: &NCPoly<Q>, ctx: &HopfContext) -> Result<Vec<i64>> {
    if !p.is_integral() {
        return Err(Error::NonIntegral(format!("{p:?}")));
    }
    if classify(p, ctx)? != Classification::Primitive {
        return Err(Error::NotPrimitive(format!("{p:?}")));
    }
    let d = p
        .multidegree(ctx)
        .ok_or_else(|| Error::Degenerate("primitive is not homogeneous".into()))?;
    if d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0) {
        return Err(Error::Degenerate(format!("multidegree {d:?} is not positive")));
    }
    Ok(d)
}

/// An integral group-like curve `1 + p x + c₂x² + … + c_N x^N`.
pub fn solve_integral_lift(p: &NCPoly<Q>, order: usize, ctx: &HopfContext) -> Result<Curve<NCPoly<Q>>> {
    if p.is_zero() {
        return Ok(Curve::one(p, order));
    }
    let d = check_primitive_input(p, ctx)?;
    let total: i64 = d.iter().sum();
    if total as usize * order > MAX_TOTAL_DEGREE {
        return Err(Error::DegreeOverflow(MAX_TOTAL_DEGREE));
    }
    let mut c = Curve::linear(p, order);
    for k in 2..=order {
        let sol = solve_coefficient(&c, k, &d, ctx)?;
        c.set_coeff(k, sol.coefficient);
    }
    Ok(c)
}

/// Largest absolute coefficient of a curve, as a size witness.
pub fn height(c: &Curve<NCPoly<Q>>) -> BigInt {
    c.coeffs()
        .iter()
        .flat_map(|p| p.terms().map(|(_, v)| v.numer().abs()).collect::<Vec<_>>())
        .max()
        .unwrap_or_default()
}
