//! The series `E = exp(Σ_{m,n>0} Σ_{I,J} (Σ(I)/mn) Γ_I Γ_J)` with
//! `Σ(J) = −Σ(I) > 0`, expanded over a finite window of indices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::poly::{CommPoly, Monomial};
use crate::scalar::Scalar;
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GammaVar {
    Gamma(i64),
    X,
    /// The symbolic eigenvalue of `α(0)`.
    Alpha0,
}

pub type GammaPoly = CommPoly<GammaVar, Q>;

/// Total `Γ`-degree of a monomial.
pub fn gamma_degree(m: &Monomial<GammaVar>) -> u32 {
    m.pairs().iter().filter(|(v, _)| matches!(v, GammaVar::Gamma(_))).map(|(_, e)| e).sum()
}

/// `{±1, …, ±k}`.
pub fn symmetric_window(k: i64) -> Vec<i64> {
    (-k..=k).filter(|&i| i != 0).collect()
}

pub fn gamma_monomial(indices: &[i64]) -> Monomial<GammaVar> {
    indices.iter().fold(Monomial::one(), |m, &i| m.mul(&Monomial::var(GammaVar::Gamma(i))))
}

/// `F[m][s] = Σ_{I ∈ W^m, Σ(I) = s} Γ_I` for `1 ≤ m ≤ max_len`.
pub fn sequence_sums(window: &[i64], max_len: usize) -> Vec<BTreeMap<i64, GammaPoly>> {
    let mut out: Vec<BTreeMap<i64, GammaPoly>> = vec![BTreeMap::new(); max_len + 1];
    out[0].insert(0, GammaPoly::one());
    for m in 1..=max_len {
        let mut next: BTreeMap<i64, GammaPoly> = BTreeMap::new();
        for (s, p) in &out[m - 1] {
            for &i in window {
                let e = next.entry(s + i).or_insert_with(GammaPoly::zero);
                e.add_assign(&p.mul(&GammaPoly::var(GammaVar::Gamma(i))));
            }
        }
        out[m] = next;
    }
    out
}

/// The exponent of `E`, truncated to total `Γ`-degree `degree_bound`.
pub fn exponent(window: &[i64], degree_bound: usize) -> GammaPoly {
    let sums = sequence_sums(window, degree_bound.saturating_sub(1));
    let mut out = GammaPoly::zero();
    for m in 1..degree_bound {
        for n in 1..=degree_bound - m {
            for (&s, f) in &sums[m] {
                if s <= 0 {
                    continue;
                }
                let Some(g) = sums[n].get(&-s) else { continue };
                let c = Q::new(s.into(), ((m * n) as i64).into());
                out.add_assign(&f.mul(g).scale(&c));
            }
        }
    }
    out
}

/// `exp(p)` for `p` without constant term, truncated by `weight`.
pub fn exp_truncated(p: &GammaPoly, bound: u32, weight: impl Fn(&Monomial<GammaVar>) -> u32 + Copy) -> GammaPoly {
    let mut acc = GammaPoly::one();
    let mut term = GammaPoly::one();
    for k in 1..=bound {
        term = term.mul_truncated(p, bound, weight).scale(&Q::recip_int(k as i64));
        if term.is_zero() {
            break;
        }
        acc.add_assign(&term);
    }
    acc
}

/// `E` expanded directly from its exponent.
pub fn expand_e_direct(window: &[i64], degree_bound: usize) -> GammaPoly {
    exp_truncated(&exponent(window, degree_bound), degree_bound as u32, gamma_degree)
}

pub fn all_integral(p: &GammaPoly) -> bool {
    p.terms().all(|(_, c)| c.is_integer())
}

/// Restriction to the monomials whose `Γ` indices all lie in `window`.
pub fn restrict_support(p: &GammaPoly, window: &[i64]) -> GammaPoly {
    let mut out = GammaPoly::zero();
    for (m, c) in p.terms() {
        let inside = m.pairs().iter().all(|(v, _)| match v {
            GammaVar::Gamma(i) => window.contains(i),
            _ => true,
        });
        if inside {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}
