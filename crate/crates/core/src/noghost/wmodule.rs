//! The module `W` spanned by `γ(1)^{j_1} γ(2)^{j_2} ⋯ e^β` for a norm 0
//! vector `γ`, with `t = (β, γ)` kept symbolic.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use crate::arith::matrix::{det_bareiss, Matrix};
use crate::arith::partition::{partitions_of, Partition};
use crate::arith::poly::{CommPoly, Monomial, UniPoly};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum WVar {
    T,
    G(u32),
}

type WPoly = CommPoly<WVar, BigInt>;
pub type TPoly = UniPoly<BigInt>;

/// `L_i` for `i > 0`: `γ(j) ↦ j γ(j−i)`, with `γ(0)e^β = t e^β` and
/// `γ(−k)` annihilating.
fn apply_l(i: u32, p: &WPoly) -> WPoly {
    let mut out = WPoly::zero();
    for (m, c) in p.terms() {
        for (v, e) in m.pairs() {
            let WVar::G(j) = *v else { continue };
            if j < i {
                continue;
            }
            let rest = m.without_one(v).expect("variable present");
            let replacement = if j == i { WVar::T } else { WVar::G(j - i) };
            let coeff = c.clone() * BigInt::from(*e) * BigInt::from(j);
            out.add_term(rest.mul(&Monomial::var(replacement)), coeff);
        }
    }
    out
}

fn w_basis(mu: &Partition) -> WPoly {
    WPoly::term(Monomial::from_pairs(mu.parts().into_iter().map(|j| (WVar::G(j as u32), 1))), BigInt::one())
}

fn as_tpoly(p: &WPoly) -> TPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (m, c) in p.terms() {
        if m.pairs().iter().any(|(v, _)| *v != WVar::T) {
            continue;
        }
        let d = m.exponent(&WVar::T) as usize;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, BigInt::zero());
        }
        coeffs[d] += c;
    }
    TPoly::new(coeffs)
}

/// Coefficient of `e^β` in `L_λ w_μ`, `L_λ = L_1^{i_1} L_2^{i_2} ⋯`.
pub fn w_action(lambda: &Partition, mu: &Partition) -> TPoly {
    if lambda.size() != mu.size() {
        return TPoly::zero();
    }
    let mut p = w_basis(mu);
    let mut parts = lambda.parts();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    for i in parts {
        p = apply_l(i as u32, &p);
        if p.is_zero() {
            break;
        }
    }
    as_tpoly(&p)
}

/// Partitions of `n`, largest first in the lexicographic order on
/// decreasing parts.
pub fn canonical_partitions(n: usize) -> Vec<Partition> {
    let mut ps = partitions_of(n);
    ps.sort_by(|a, b| {
        let mut x = a.parts();
        let mut y = b.parts();
        x.sort_unstable_by(|p, q| q.cmp(p));
        y.sort_unstable_by(|p, q| q.cmp(p));
        y.cmp(&x)
    });
    ps
}

/// Rows `L_λ`, columns `w_μ`, both in the canonical order.
pub fn m_matrix(n: usize) -> (Vec<Partition>, Vec<Vec<TPoly>>) {
    let ps = canonical_partitions(n);
    let rows = ps.iter().map(|l| ps.iter().map(|m| w_action(l, m)).collect()).collect();
    (ps, rows)
}

/// Bareiss elimination over `Z[t]`.
pub fn det_poly(m: &[Vec<TPoly>]) -> TPoly {
    let n = m.len();
    if n == 0 {
        return TPoly::one();
    }
    let mut a: Vec<Vec<TPoly>> = m.to_vec();
    let mut sign = false;
    let mut prev = TPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else { return TPoly::zero() };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

fn t_power(c: BigInt, e: usize) -> TPoly {
    TPoly::monomial(c, e)
}

fn describe(p: &TPoly) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c}t"),
            _ => format!("{c}t^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// The four certificates for degree `n`, plus a numeric
/// consistency check at a few integer values of `t`.
pub fn m_matrix_certify(n: usize) -> Report {
    let mut report = Report::new("m_matrix");
    report.param("n", n);
    let (ps, m) = m_matrix(n);
    let size = ps.len();

    let above = (0..size).flat_map(|i| (i + 1..size).map(move |j| (i, j))).find(|&(i, j)| !m[i][j].is_zero());
    report.check(
        format!("triangular[n={n}]"),
        above.is_none(),
        json!({ "first_nonzero_above_diagonal": above.map(|(i, j)| json!([ps[i].parts(), ps[j].parts()])) }),
    );

    let mut product = TPoly::one();
    let mut diag_bad = None;
    let mut f_product = BigInt::one();
    let mut total_length = 0usize;
    for (i, p) in ps.iter().enumerate() {
        let s = p.stats();
        let expected = t_power(s.product.clone() * &s.multiplicity_factorial, s.length);
        if m[i][i] != expected && diag_bad.is_none() {
            diag_bad = Some(json!({ "partition": p.parts(), "entry": describe(&m[i][i]), "expected": describe(&expected) }));
        }
        product = product.mul(&expected);
        f_product *= &s.multiplicity_factorial;
        total_length += s.length;
    }
    report.check(format!("diagonal[n={n}]"), diag_bad.is_none(), json!({ "first_mismatch": diag_bad }));

    let det = det_poly(&m);
    report.check(
        format!("determinant[n={n}]"),
        det == product,
        json!({ "determinant": describe(&det), "expected": describe(&product) }),
    );

    let quotient = det.div_exact(&TPoly::constant(f_product.clone() * &f_product));
    let target = t_power(BigInt::one(), total_length);
    report.check(
        format!("quotient[n={n}]"),
        quotient.as_ref() == Some(&target),
        json!({ "quotient": quotient.as_ref().map(describe), "expected": describe(&target) }),
    );

    let numeric_ok = [-2i64, 1, 2, 3].iter().all(|&t0| {
        let t0 = BigInt::from(t0);
        let mat = Matrix::from_rows(m.iter().map(|r| r.iter().map(|p| p.eval(&t0)).collect()).collect());
        det_bareiss(&mat) == det.eval(&t0)
    });
    report.check(format!("numeric_substitution[n={n}]"), numeric_ok, json!({ "t": [-2, 1, 2, 3] }));
    report
}
