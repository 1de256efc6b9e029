//! Graded pieces of free bialgebras and rational bases of their primitives.
//!
//! Over `Q` the free algebra on a group-like curve family is also free on
//! the coefficients `π_α` of the logarithm of the curve, and these are
//! primitive. The primitives of a graded piece therefore have the
//! bracketed Lyndon words in the `π` letters as a basis.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hopf::{FamilyKind, GeneratorId, HopfContext, NCPoly, Word};
use crate::Q;

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Letters of the context whose multidegree is nonzero and at most `bound`.
pub fn alphabet(ctx: &HopfContext, bound: &[i64]) -> Result<Vec<GeneratorId>> {
    let mut out = Vec::new();
    let mut off = 0;
    for fam in ctx.families() {
        let slot = &bound[off..off + fam.arity];
        match fam.kind {
            FamilyKind::Curve => {
                for idx in crate::hopf::coproduct::sub_indices(slot) {
                    if idx.iter().any(|&i| i != 0) {
                        out.push(GeneratorId::new(fam.symbol, &idx));
                    }
                }
            }
            FamilyKind::Primitive => {
                if fam.arity != 1 {
                    return Err(Error::Degenerate("primitive families are single-indexed".into()));
                }
                for i in 1..=slot[0] {
                    out.push(GeneratorId::single(fam.symbol, i));
                }
            }
        }
        off += fam.arity;
    }
    out.sort();
    Ok(out)
}

/// Sequences over `letters` (given by their degrees) whose degrees sum to
/// `target`; each sequence is a list of positions into `letters`.
pub fn sequences_of_degree(degrees: &[Vec<i64>], target: &[i64]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(degrees: &[Vec<i64>], rest: &mut Vec<i64>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.iter().all(|&r| r == 0) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        for (i, d) in degrees.iter().enumerate() {
            if leq(d, rest) {
                for (r, x) in rest.iter_mut().zip(d) {
                    *r -= x;
                }
                cur.push(i);
                rec(degrees, rest, cur, out);
                cur.pop();
                for (r, x) in rest.iter_mut().zip(d) {
                    *r += x;
                }
            }
        }
    }
    let mut rest = target.to_vec();
    rec(degrees, &mut rest, &mut cur, &mut out);
    out
}

/// All words of a given (nonzero) multidegree, sorted.
pub fn words_of_degree(ctx: &HopfContext, deg: &[i64]) -> Result<Vec<Word>> {
    let letters = alphabet(ctx, deg)?;
    let degrees: Vec<Vec<i64>> = letters.iter().map(|g| ctx.letter_degree(g)).collect();
    let mut words: Vec<Word> = sequences_of_degree(&degrees, deg)
        .into_iter()
        .map(|s| s.into_iter().map(|i| letters[i]).collect())
        .collect();
    words.sort();
    Ok(words)
}

pub fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Standard factorisation `w = u v` with `v` the longest proper Lyndon suffix.
pub fn standard_factorisation(w: &[usize]) -> (&[usize], &[usize]) {
    let i = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("Lyndon words of length ≥ 2 have a Lyndon suffix");
    (&w[..i], &w[i..])
}

/// `π_α` for every generator of a curve family up to `bound`: the
/// coefficients of `log(Σ_α g(α) x^α)`.
pub fn family_logarithm(ctx: &HopfContext, family: char, bound: &[i64]) -> BTreeMap<Vec<i64>, NCPoly<Q>> {
    let one = Q::from_integer(1.into());
    let mut u: BTreeMap<Vec<i64>, NCPoly<Q>> = BTreeMap::new();
    for idx in crate::hopf::coproduct::sub_indices(bound) {
        if let Some(g) = ctx.generator(family, &idx) {
            u.insert(idx, NCPoly::letter(g));
        }
    }
    let mul = |a: &BTreeMap<Vec<i64>, NCPoly<Q>>, b: &BTreeMap<Vec<i64>, NCPoly<Q>>| {
        let mut out: BTreeMap<Vec<i64>, NCPoly<Q>> = BTreeMap::new();
        for (x, p) in a {
            for (y, q) in b {
                let s: Vec<i64> = x.iter().zip(y).map(|(i, j)| i + j).collect();
                if leq(&s, bound) {
                    let e = out.entry(s).or_insert_with(NCPoly::zero);
                    *e = e.add(&p.mul(q));
                }
            }
        }
        out
    };
    let max_total: i64 = bound.iter().sum();
    let mut log: BTreeMap<Vec<i64>, NCPoly<Q>> = BTreeMap::new();
    let mut pow = u.clone();
    for m in 1..=max_total {
        let sign = if m % 2 == 1 { one.clone() } else { -one.clone() };
        let f = sign / Q::from_integer(m.into());
        for (k, p) in &pow {
            let e = log.entry(k.clone()).or_insert_with(NCPoly::zero);
            *e = e.add(&p.scale(&f));
        }
        pow = mul(&pow, &u);
    }
    log.retain(|_, p| !p.is_zero());
    log
}

/// Rational basis of the primitives of multidegree `deg`, each element
/// written in the generator words.
pub fn primitive_basis(ctx: &HopfContext, deg: &[i64]) -> Result<Vec<NCPoly<Q>>> {
    let letters = alphabet(ctx, deg)?;
    let mut logs: BTreeMap<char, BTreeMap<Vec<i64>, NCPoly<Q>>> = BTreeMap::new();
    let mut pis = Vec::with_capacity(letters.len());
    let mut off = 0;
    let mut slots = BTreeMap::new();
    for fam in ctx.families() {
        slots.insert(fam.symbol, (off, fam.arity, fam.kind));
        off += fam.arity;
    }
    for g in &letters {
        let (o, a, kind) = slots[&g.family()];
        let pi = match kind {
            FamilyKind::Primitive => NCPoly::letter(*g),
            FamilyKind::Curve => logs
                .entry(g.family())
                .or_insert_with(|| family_logarithm(ctx, g.family(), &deg[o..o + a]))
                .get(g.index())
                .cloned()
                .unwrap_or_else(NCPoly::zero),
        };
        pis.push(pi);
    }
    let degrees: Vec<Vec<i64>> = letters.iter().map(|g| ctx.letter_degree(g)).collect();
    let mut memo: BTreeMap<Vec<usize>, NCPoly<Q>> = BTreeMap::new();
    fn bracket(w: &[usize], pis: &[NCPoly<Q>], memo: &mut BTreeMap<Vec<usize>, NCPoly<Q>>) -> NCPoly<Q> {
        if let Some(p) = memo.get(w) {
            return p.clone();
        }
        let p = if w.len() == 1 {
            pis[w[0]].clone()
        } else {
            let (u, v) = standard_factorisation(w);
            bracket(u, pis, memo).commutator(&bracket(v, pis, memo))
        };
        memo.insert(w.to_vec(), p.clone());
        p
    }
    let mut out = Vec::new();
    for s in sequences_of_degree(&degrees, deg) {
        if is_lyndon(&s) {
            out.push(bracket(&s, &pis, &mut memo));
        }
    }
    Ok(out)
}

/// Number of Lyndon words of each degree up to `bound` over an alphabet
/// with `letters_per_degree[d]` letters of degree `d` (single grading).
pub fn lyndon_counts(letters_per_degree: &[u64], bound: usize) -> Vec<u64> {
    // Words: W(x) = 1/(1 − Σ a_d x^d); Lyndon counts from
    // W(x) = ∏ (1 − x^d)^{−ℓ_d}.
    let mut words = vec![0u64; bound + 1];
    words[0] = 1;
    for n in 1..=bound {
        words[n] = (1..=n).map(|d| letters_per_degree.get(d).copied().unwrap_or(0) * words[n - d]).sum();
    }
    let mut lyndon = vec![0u64; bound + 1];
    for n in 1..=bound {
        let partial = euler_product(&lyndon, n);
        lyndon[n] = words[n] - partial[n];
    }
    lyndon
}

/// Coefficients of `∏_{d≥1} (1 − x^d)^{−m_d}` up to `bound`.
pub fn euler_product(m: &[u64], bound: usize) -> Vec<u64> {
    let mut out = vec![0u64; bound + 1];
    out[0] = 1;
    for d in 1..=bound.min(m.len().saturating_sub(1)) {
        for _ in 0..m[d] {
            for n in d..=bound {
                out[n] += out[n - d];
            }
        }
    }
    out
}
