//! Necklace classes of pairs of sequences and the product form of `E`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::series::{gamma_degree, gamma_monomial, GammaPoly, GammaVar};
use crate::arith::poly::CommPoly;
use crate::error::{Error, Result};
use crate::scalar::binomial;
use crate::Q;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NecklaceClass {
    pub rep_i: Vec<i64>,
    pub rep_j: Vec<i64>,
    pub m: usize,
    pub n: usize,
    /// Number of distinct rotations of `rep_i`.
    pub m_orbit: usize,
    pub n_orbit: usize,
    pub exponent: i64,
}

/// Smallest period `d` with `s = t^{len/d}` for a word `t` of length `d`.
pub fn primitive_period(s: &[i64]) -> usize {
    let n = s.len();
    (1..=n).find(|&d| n % d == 0 && (0..n).all(|i| s[i] == s[i % d])).unwrap_or(n)
}

pub fn min_rotation(s: &[i64]) -> Vec<i64> {
    (0..s.len().max(1))
        .map(|r| s[r..].iter().chain(&s[..r]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

fn sequences(window: &[i64], len: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                window.iter().map(move |&i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

/// Necklaces (minimal rotations) of length `len` over the window, grouped
/// with their sums.
fn necklaces(window: &[i64], len: usize) -> Vec<(Vec<i64>, i64)> {
    let set: BTreeSet<Vec<i64>> = sequences(window, len).into_iter().map(|s| min_rotation(&s)).collect();
    set.into_iter().map(|s| {
        let sum = s.iter().sum();
        (s, sum)
    }).collect()
}

/// One representative per class of primitive pairs `(I, J)` with
/// `Σ(I) = −Σ(J) > 0` and `l(I) + l(J) ≤ max_len`.
pub fn necklace_classes(window: &[i64], max_len: usize) -> Result<Vec<NecklaceClass>> {
    let by_len: Vec<Vec<(Vec<i64>, i64)>> = (0..max_len).map(|l| if l == 0 { Vec::new() } else { necklaces(window, l) }).collect();
    let mut out = Vec::new();
    for m in 1..max_len {
        for n in 1..=max_len - m {
            for (i, si) in &by_len[m] {
                if *si <= 0 {
                    continue;
                }
                let mp = primitive_period(i);
                for (j, sj) in &by_len[n] {
                    if si + sj != 0 {
                        continue;
                    }
                    let np = primitive_period(j);
                    let (a, b) = (m / mp, n / np);
                    if a.gcd(&b) != 1 {
                        continue;
                    }
                    let num = si * (mp * np) as i64;
                    let den = (m * n) as i64;
                    if si % a as i64 != 0 || si % b as i64 != 0 || num % den != 0 {
                        return Err(Error::NonIntegerExponent(format!("I={i:?} J={j:?}: {num}/{den}")));
                    }
                    out.push(NecklaceClass {
                        rep_i: i.clone(),
                        rep_j: j.clone(),
                        m,
                        n,
                        m_orbit: mp,
                        n_orbit: np,
                        exponent: num / den,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// `(1 − u)^{−e} = Σ_j C(e+j−1, j) u^j`, truncated by `weight`.
pub fn negative_binomial_series(u: &GammaPoly, e: i64, bound: u32) -> GammaPoly {
    let w = u.terms().map(|(m, _)| gamma_degree(m)).min().unwrap_or(0).max(1);
    let mut out = GammaPoly::one();
    let mut pow = GammaPoly::one();
    for j in 1..=bound / w {
        pow = pow.mul_truncated(u, bound, gamma_degree);
        let c = binomial(&BigInt::from(e + j as i64 - 1), j as u64);
        out.add_assign(&pow.scale(&Q::from_integer(c)));
    }
    out
}

/// `∏_classes (1 − Γ_I Γ_J)^{−exponent}` truncated at total degree
/// `degree_bound`.
pub fn expand_e_product(classes: &[NecklaceClass], degree_bound: usize) -> GammaPoly {
    let bound = degree_bound as u32;
    let mut acc = GammaPoly::one();
    for c in classes {
        if c.m + c.n > degree_bound {
            continue;
        }
        let mut idx = c.rep_i.clone();
        idx.extend(&c.rep_j);
        let u = CommPoly::term(gamma_monomial(&idx), Q::from_integer(1.into()));
        let f = negative_binomial_series(&u, c.exponent, bound);
        acc = acc.mul_truncated(&f, bound, gamma_degree);
    }
    acc
}

/// `(1 − xΓ_J)^{−α(0)} = Σ_j C(α(0)+j−1, j) (xΓ_J)^j` with `α(0)` kept as the
/// variable [`GammaVar::Alpha0`], up to `x^order`.
pub fn alpha0_factor(j: &[i64], order: u32) -> GammaPoly {
    let u = CommPoly::term(gamma_monomial(j).mul(&crate::arith::poly::Monomial::var(GammaVar::X)), Q::from_integer(1.into()));
    let a0 = GammaPoly::var(GammaVar::Alpha0);
    let mut out = GammaPoly::one();
    let mut pow = GammaPoly::one();
    let mut binom = GammaPoly::one();
    for k in 1..=order {
        pow = pow.mul(&u);
        // C(a+k−1, k) = C(a+k−2, k−1)·(a+k−1)/k
        let lin = a0.add(&GammaPoly::constant(Q::from_integer((k as i64 - 1).into())));
        binom = binom.mul(&lin).scale(&Q::new(1.into(), (k as i64).into()));
        out.add_assign(&pow.mul(&binom));
    }
    out
}
