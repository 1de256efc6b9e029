//! Seed liftings, lifting oracles and one-order extension of liftings.

use num_bigint::BigInt;

use super::solver::solve_integral_lift;
use crate::curve::{Bialgebra, Curve, CurveRing, DividedPowerAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{Classification, DividedPowerElement, HopfContext, MultiIndex, NCPoly};
use crate::scalar::{factorial, ExactScalar, Scalar};
use crate::Q;

/// Something that can lift primitive elements to group-like curves.
pub trait LiftingOracle<T: CurveRing> {
    fn lift(&self, primitive: &T, order: usize) -> Result<Curve<T>>;
}

/// Lifts through the integral solver of the free bialgebra.
pub struct SolverOracle<'a> {
    pub ctx: &'a HopfContext,
}

impl LiftingOracle<NCPoly<Q>> for SolverOracle<'_> {
    fn lift(&self, primitive: &NCPoly<Q>, order: usize) -> Result<Curve<NCPoly<Q>>> {
        solve_integral_lift(primitive, order, self.ctx).map_err(|e| Error::OracleFailure(e.to_string()))
    }
}

/// Lifts `Σ r_i Z_{ε_i}` as `∏_i (Σ_n Z_{nε_i} x^n)(r_i x)`.
pub struct DividedPowerOracle {
    pub rank: usize,
}

impl<S: ExactScalar> LiftingOracle<DividedPowerElement<S>> for DividedPowerOracle {
    fn lift(&self, primitive: &DividedPowerElement<S>, order: usize) -> Result<Curve<DividedPowerElement<S>>> {
        let mut out = Curve::one(&DividedPowerElement::one(self.rank), order);
        for (alpha, c) in primitive.terms() {
            let i = match alpha.0.iter().position(|&a| a == 1) {
                Some(i) if alpha.size() == 1 => i,
                _ => return Err(Error::OracleFailure(format!("Z{:?} is not a primitive generator", alpha.0))),
            };
            let r = c
                .to_bigint()
                .ok_or_else(|| Error::OracleFailure(format!("coefficient {c:?} is not an integer")))?;
            let coeffs = (0..=order)
                .map(|n| DividedPowerElement::basis(MultiIndex::unit(self.rank, i, n as u32)))
                .collect();
            let curve = Curve::new(coeffs).scale_variable(&S::from_bigint(r));
            out = out.mul(&curve)?;
        }
        Ok(out)
    }
}

/// `Σ_{0≤i≤n} (n!^i / i!) a^i x^i`, an order-`n` lifting of `n!·a`.
pub fn seed_lifting<T: CurveRing, B: Bialgebra<T>>(a: &T, n: usize, alg: &B) -> Result<Curve<T>>
where
    T::Scalar: ExactScalar,
{
    if alg.classify(a)? != Classification::Primitive {
        return Err(Error::NotPrimitive(format!("{a:?}")));
    }
    let nf = factorial(n as u64);
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut pow = a.one_like();
    for i in 0..=n {
        let c = nf.pow(i as u32) / factorial(i as u64);
        coeffs.push(pow.scale(&T::Scalar::from_bigint(c)));
        pow = pow.mul(a);
    }
    Ok(Curve::new(coeffs))
}

/// A divided-power primitive as an element (`Σ r_i Z_{ε_i}`).
pub fn divided_primitive<S: Scalar>(rank: usize, coeffs: &[i64]) -> DividedPowerElement<S> {
    let mut e = DividedPowerElement::zero(rank);
    for (i, &c) in coeffs.iter().enumerate() {
        e.add_term(MultiIndex::unit(rank, i, 1), S::from_int(c));
    }
    e
}

/// The extension step: from a group-like curve of order `n` to one of order
/// `n + 1` agreeing with it up to `x^n`.
pub fn extend_lifting<T, B, O>(a: &Curve<T>, oracle: &O, alg: &B) -> Result<Curve<T>>
where
    T: CurveRing,
    B: Bialgebra<T>,
    O: LiftingOracle<T>,
{
    if let Some(k) = a.first_grouplike_failure(alg)? {
        return Err(Error::NotGrouplike(format!("input fails at order {k}")));
    }
    let n = a.order();
    let target = a.pad(n + 1);
    let mut b = if n >= 1 { oracle.lift(a.coeff(1), n + 1)? } else { Curve::one(a.coeff(0), 1) };
    if b.order() != n + 1 {
        return Err(Error::OracleFailure(format!("oracle returned order {} instead of {}", b.order(), n + 1)));
    }
    loop {
        let defect = target.mul(&b.inverse()?)?;
        let Some(j) = (1..=n).find(|&j| !defect.coeff(j).is_zero()) else { break };
        let d = defect.coeff(j).clone();
        if alg.classify(&d)? != Classification::Primitive {
            return Err(Error::NotGrouplike(format!("defect at order {j} is not primitive")));
        }
        let lift = oracle.lift(&d, (n + 1) / j)?;
        let c = lift.pad(n + 1).substitute_power(j);
        b = c.mul(&b)?;
    }
    Ok(b)
}

/// `n!^i / i!` as computed by [`seed_lifting`].
pub fn seed_coefficient(n: u64, i: u64) -> BigInt {
    factorial(n).pow(i as u32) / factorial(i)
}

/// Helper for tests and suites: the divided-power algebra of rank `r`.
pub fn divided_algebra(rank: usize) -> DividedPowerAlgebra {
    DividedPowerAlgebra(rank)
}
