//! Complete homogeneous symmetric functions in terms of power sums, and
//! back.

use serde::{Deserialize, Serialize};

use crate::arith::poly::CommPoly;
use crate::scalar::Scalar;
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SymVar {
    P(u32),
    H(u32),
}

pub type SymPoly = CommPoly<SymVar, Q>;

/// `h_0 … h_max` as polynomials in the power sums, from
/// `exp(Σ_k p_k t^k / k) = Σ_n h_n t^n`.
pub fn h_from_p(max_n: usize) -> Vec<SymPoly> {
    // n h_n = Σ_{k=1}^n p_k h_{n−k}
    let mut h = vec![SymPoly::one()];
    for n in 1..=max_n {
        let mut acc = SymPoly::zero();
        for k in 1..=n {
            acc.add_assign(&SymPoly::var(SymVar::P(k as u32)).mul(&h[n - k]));
        }
        h.push(acc.scale(&Q::recip_int(n as i64)));
    }
    h
}

/// `p_1 … p_max` (index 0 unused and zero) as polynomials in the `h_n`,
/// from `p_n = n h_n − Σ_{i<n} p_i h_{n−i}`.
pub fn p_from_h(max_n: usize) -> Vec<SymPoly> {
    let mut p = vec![SymPoly::zero()];
    for n in 1..=max_n {
        let mut acc = SymPoly::var(SymVar::H(n as u32)).scale(&Q::from_int(n as i64));
        for i in 1..n {
            acc = acc.sub(&p[i].mul(&SymPoly::var(SymVar::H((n - i) as u32))));
        }
        p.push(acc);
    }
    p
}

/// Substitutes `h_n ↦ h_from_p[n]` into `p_from_h` and checks that every
/// `p_n` comes back.
pub fn roundtrip_is_identity(max_n: usize) -> bool {
    let h = h_from_p(max_n);
    p_from_h(max_n).iter().enumerate().skip(1).all(|(n, pn)| {
        let back = pn.substitute(|v| match v {
            SymVar::H(k) => h[*k as usize].clone(),
            SymVar::P(k) => SymPoly::var(SymVar::P(*k)),
        });
        back == SymPoly::var(SymVar::P(n as u32))
    })
}
