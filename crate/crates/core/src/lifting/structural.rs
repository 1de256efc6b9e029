//! Bounded-degree certificate that `F_n` has a structural basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use super::primitives::{primitive_basis, words_of_degree};
use super::solver::solve_integral_lift;
use crate::arith::lattice::integer_kernel;
use crate::arith::matrix::{det_bareiss, Matrix};
use crate::curve::Curve;
use crate::error::Result;
use crate::hopf::coproduct::sub_indices;
use crate::hopf::{coproduct, HopfContext, NCPoly, Word};
use crate::report::Report;
use crate::Q;

fn nonzero_degrees(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut all = sub_indices(&vec![bound; n]);
    all.retain(|a| {
        let s: i64 = a.iter().sum();
        s > 0 && s <= bound
    });
    all.sort_by_key(|a| (a.iter().sum::<i64>(), a.clone()));
    all
}

/// Integer basis (HNF) of the primitives among integer combinations of the
/// words of multidegree `deg`.
pub fn integral_primitives(ctx: &HopfContext, deg: &[i64]) -> Result<(Vec<Word>, Vec<Vec<BigInt>>)> {
    let words = words_of_degree(ctx, deg)?;
    let mut rows: BTreeMap<(Word, Word), Vec<BigInt>> = BTreeMap::new();
    for (j, w) in words.iter().enumerate() {
        let d = coproduct(&NCPoly::<BigInt>::monomial(w.clone(), BigInt::one()), ctx)?;
        for ((u, v), c) in d.terms() {
            if u.is_empty() || v.is_empty() {
                continue;
            }
            rows.entry((u.clone(), v.clone())).or_insert_with(|| vec![BigInt::zero(); words.len()])[j] += c;
        }
    }
    let rows: Vec<Vec<BigInt>> = rows.into_values().collect();
    Ok((words.clone(), integer_kernel(&rows, words.len())))
}

fn to_poly(words: &[Word], v: &[BigInt]) -> NCPoly<Q> {
    NCPoly::from_terms(words.iter().zip(v).map(|(w, c)| (w.clone(), Q::from_integer(c.clone()))))
}

/// Coefficients of `∏_α (1 − x^α)^{−m_α}` on the degrees listed in `degs`.
fn euler_product_multi(m: &BTreeMap<Vec<i64>, usize>, degs: &[Vec<i64>], n: usize) -> BTreeMap<Vec<i64>, BigInt> {
    let mut series: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    series.insert(vec![0; n], BigInt::one());
    for d in degs {
        series.entry(d.clone()).or_default();
    }
    let mut order: Vec<Vec<i64>> = series.keys().cloned().collect();
    order.sort_by_key(|a| (a.iter().sum::<i64>(), a.clone()));
    for (alpha, &mult) in m {
        for _ in 0..mult {
            for beta in &order {
                let prev: Option<Vec<i64>> = {
                    let p: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - a).collect();
                    if p.iter().all(|&x| x >= 0) {
                        Some(p)
                    } else {
                        None
                    }
                };
                if let Some(p) = prev {
                    let add = series[&p].clone();
                    *series.get_mut(beta).unwrap() += add;
                }
            }
        }
    }
    series
}

/// Runs the structural-basis certificate for `F_n` up to total degree
/// `bound`.
pub fn check_fn_structural(n: usize, bound: usize) -> Report {
    let mut report = Report::new("hopf");
    report.param("n", n).param("degree_bound", bound);
    let ctx = HopfContext::free_fn(n);
    let degs = nonzero_degrees(n, bound as i64);
    let mut ranks: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut dims: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut lifts: Vec<(Vec<i64>, Curve<NCPoly<Q>>)> = Vec::new();
    for d in &degs {
        let tag = format!("{d:?}");
        let (words, kernel) = match integral_primitives(&ctx, d) {
            Ok(x) => x,
            Err(e) => {
                report.check(format!("primitives{tag}"), false, e.to_string());
                continue;
            }
        };
        dims.insert(d.clone(), words.len());
        ranks.insert(d.clone(), kernel.len());
        let basis: Vec<String> = kernel.iter().map(|v| format!("{}", to_poly(&words, v))).collect();
        let lyndon = primitive_basis(&ctx, d).map(|b| b.len());
        report.check(
            format!("primitive_rank{tag}"),
            lyndon.as_ref().ok() == Some(&kernel.len()),
            json!({"rank": kernel.len(), "lyndon_rank": lyndon.ok(), "words": words.len(), "basis": basis}),
        );
        let total: i64 = d.iter().sum();
        let order = bound / total as usize;
        for (i, v) in kernel.iter().enumerate() {
            let p = to_poly(&words, v);
            let id = format!("lift{tag}#{i}");
            match solve_integral_lift(&p, order, &ctx) {
                Ok(c) => {
                    let integral = c.coeffs().iter().all(|x| x.is_integral());
                    let grouplike = c.is_grouplike(&ctx).unwrap_or(false);
                    report.check(id, integral && grouplike, json!({"order": order, "integral": integral, "grouplike": grouplike}));
                    lifts.push((d.clone(), c));
                }
                Err(e) => report.check(id, false, e.to_string()),
            }
        }
    }
    let series = euler_product_multi(&ranks, &degs, n);
    let mismatches: Vec<String> = degs
        .iter()
        .filter(|d| series.get(*d).cloned().unwrap_or_default() != BigInt::from(dims[*d]))
        .map(|d| format!("{d:?}"))
        .collect();
    report.check(
        "generating_function",
        mismatches.is_empty(),
        json!({"graded_dimensions": dims.iter().map(|(k, v)| (format!("{k:?}"), *v)).collect::<BTreeMap<_, _>>(),
               "primitive_ranks": ranks.iter().map(|(k, v)| (format!("{k:?}"), *v)).collect::<BTreeMap<_, _>>(),
               "mismatches": mismatches}),
    );
    for d in &degs {
        let id = format!("structural_basis{d:?}");
        match structural_determinant(&ctx, d, &lifts) {
            Ok((count, det)) => {
                let ok = count == dims[d] && det.abs().is_one();
                report.check(id, ok, json!({"monomials": count, "dimension": dims[d], "determinant": det.to_string()}));
            }
            Err(e) => report.check(id, false, e.to_string()),
        }
    }
    report
}

/// Ordered products `a^{i₁}_{k₁} a^{i₂}_{k₂} ⋯` (`i₁ < i₂ < ⋯`) of lift
/// coefficients in multidegree `deg`, and the determinant of their
/// expansion against the word basis.
pub fn structural_determinant(ctx: &HopfContext, deg: &[i64], lifts: &[(Vec<i64>, Curve<NCPoly<Q>>)]) -> Result<(usize, BigInt)> {
    let words = words_of_degree(ctx, deg)?;
    let mut monomials: Vec<NCPoly<Q>> = Vec::new();
    fn rec(i: usize, rest: Vec<i64>, acc: NCPoly<Q>, lifts: &[(Vec<i64>, Curve<NCPoly<Q>>)], out: &mut Vec<NCPoly<Q>>) {
        if rest.iter().all(|&r| r == 0) {
            out.push(acc);
            return;
        }
        if i == lifts.len() {
            return;
        }
        let (d, c) = &lifts[i];
        let mut k = 0usize;
        let mut r = rest.clone();
        loop {
            let coeff = if k == 0 { NCPoly::one() } else { c.coeff(k).clone() };
            rec(i + 1, r.clone(), acc.mul(&coeff), lifts, out);
            k += 1;
            r = r.iter().zip(d).map(|(x, y)| x - y).collect();
            if r.iter().any(|&x| x < 0) || k > c.order() {
                break;
            }
        }
    }
    rec(0, deg.to_vec(), NCPoly::one(), lifts, &mut monomials);
    let count = monomials.len();
    if count != words.len() {
        return Ok((count, BigInt::zero()));
    }
    let pos: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = Matrix::<BigInt>::zeros(count, count);
    for (i, p) in monomials.iter().enumerate() {
        for (w, c) in p.terms() {
            m.set(i, pos[w], c.to_integer());
        }
    }
    Ok((count, det_bareiss(&m)))
}
