//! Curves of operators on Laurent polynomials and their group-like lifts.

use serde::{Deserialize, Serialize};

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::hopf::{GeneratorId, HopfContext, NCPoly};
use crate::scalar::{binomial_i, q};
use crate::Q;

/// A curve `Σ a_k ε^k` whose coefficient `a_k` sends `x^n` to `a_k(n) x^{n+km}`.
pub trait HomogeneousCurve {
    fn shift(&self) -> i64;
    fn order(&self) -> usize;
    fn coeff(&self, k: usize, n: i64) -> Q;
}

/// The automorphism curve `x ↦ x − ε x^{m+1}` of `Z[x, x^{−1}]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentOpCurve {
    pub m: i64,
    pub order: usize,
    pub window: (i64, i64),
}

impl HomogeneousCurve for LaurentOpCurve {
    fn shift(&self) -> i64 {
        self.m
    }

    fn order(&self) -> usize {
        self.order
    }

    fn coeff(&self, k: usize, n: i64) -> Q {
        let c = Q::from_integer(binomial_i(n, k as u64));
        if k % 2 == 0 {
            c
        } else {
            -c
        }
    }
}

impl LaurentOpCurve {
    /// Coefficients on the window as `(n, a_k(n))` pairs.
    pub fn table(&self, k: usize) -> Vec<(i64, Q)> {
        (self.window.0..=self.window.1).map(|n| (n, self.coeff(k, n))).collect()
    }
}

pub fn witt_curve_laurent(m: i64, order: usize, window: (i64, i64)) -> Result<LaurentOpCurve> {
    if m < -1 {
        return Err(Error::Parse(format!("mode shift {m} is below -1")));
    }
    if window.0 > window.1 {
        return Err(Error::WindowOverflow(format!("empty window {window:?}")));
    }
    Ok(LaurentOpCurve { m, order, window })
}

/// A curve given by an explicit coefficient function.
pub struct FnCurve<F: Fn(usize, i64) -> Q> {
    pub m: i64,
    pub order: usize,
    pub f: F,
}

impl<F: Fn(usize, i64) -> Q> HomogeneousCurve for FnCurve<F> {
    fn shift(&self) -> i64 {
        self.m
    }

    fn order(&self) -> usize {
        self.order
    }

    fn coeff(&self, k: usize, n: i64) -> Q {
        (self.f)(k, n)
    }
}

fn compositions(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=k {
        for mut rest in compositions(k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Coefficient `k` of `log(a)` at `x^n`, computed in the operator algebra.
pub fn log_coeff<C: HomogeneousCurve>(a: &C, k: usize, n: i64) -> Q {
    let m = a.shift();
    let mut total = q(0);
    for comp in compositions(k) {
        let j = comp.len() as i64;
        let mut point = n;
        let mut value = q(1);
        for &part in comp.iter().rev() {
            value *= a.coeff(part, point);
            point += part as i64 * m;
        }
        let sign = if j % 2 == 1 { q(1) } else { q(-1) };
        total += value * sign / q(j);
    }
    total
}

/// Whether `a` is multiplicative on the window to its order.
pub fn is_multiplicative<C: HomogeneousCurve>(a: &C, window: (i64, i64)) -> Option<(usize, i64, i64)> {
    for k in 0..=a.order() {
        for s in window.0..=window.1 {
            for t in window.0..=window.1 {
                let lhs = a.coeff(k, s + t);
                let rhs: Q = (0..=k).map(|i| a.coeff(i, s) * a.coeff(k - i, t)).sum();
                if lhs != rhs {
                    return Some((k, s, t));
                }
            }
        }
    }
    None
}

pub fn witt_letter(j: i64) -> GeneratorId {
    GeneratorId::single('L', j)
}

pub fn witt_context() -> HopfContext {
    HopfContext::primitives(&['L'])
}

/// `G_a = exp(log a)` in the enveloping algebra of the Witt
/// algebra, with `L_j = −x^{j+1} d/dx`.
pub fn grouplike_from_automorphism<C: HomogeneousCurve>(a: &C, window: (i64, i64)) -> Result<Curve<NCPoly<Q>>> {
    if (window.0..=window.1).any(|n| a.coeff(0, n) != q(1)) {
        return Err(Error::NotAutomorphism("constant coefficient is not the identity".into()));
    }
    if let Some((k, s, t)) = is_multiplicative(a, window) {
        return Err(Error::NotAutomorphism(format!("coefficient {k} is not multiplicative at x^{s}·x^{t}")));
    }
    let m = a.shift();
    let mut log = vec![NCPoly::zero()];
    for k in 1..=a.order() {
        for s in window.0..=window.1 {
            for t in window.0..=window.1 {
                if log_coeff(a, k, s + t) != log_coeff(a, k, s) + log_coeff(a, k, t) {
                    return Err(Error::NotAutomorphism(format!(
                        "log coefficient {k} fails the Leibniz rule at x^{s}·x^{t}"
                    )));
                }
            }
        }
        let lambda = log_coeff(a, k, 1);
        log.push(NCPoly::letter(witt_letter(k as i64 * m)).scale(&-lambda));
    }
    Curve::new(log).exp()
}

/// Action of an element of `U(Witt)` on `x^n`, as a map from exponents to
/// coefficients.
pub fn act_on_laurent(u: &NCPoly<Q>, n: i64) -> std::collections::BTreeMap<i64, Q> {
    let mut out = std::collections::BTreeMap::new();
    for (word, c) in u.terms() {
        let mut e = n;
        let mut v = c.clone();
        for g in word.iter().rev() {
            let j = g.index()[0];
            v *= q(-e);
            e += j;
        }
        if v != q(0) {
            *out.entry(e).or_insert_with(|| q(0)) += v;
        }
    }
    out.retain(|_, c| *c != q(0));
    out
}

/// Whether `G` acts on the window exactly as the curve `a`.
pub fn reproduces<C: HomogeneousCurve>(g: &Curve<NCPoly<Q>>, a: &C, window: (i64, i64)) -> bool {
    (0..=a.order()).all(|k| {
        (window.0..=window.1).all(|n| {
            let img = act_on_laurent(g.coeff(k), n);
            let c = a.coeff(k, n);
            let target = n + k as i64 * a.shift();
            let expected: std::collections::BTreeMap<i64, Q> =
                if c == q(0) { Default::default() } else { [(target, c)].into_iter().collect() };
            img == expected
        })
    })
}
