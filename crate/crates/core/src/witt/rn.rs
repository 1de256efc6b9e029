//! Curves on the modules `R_N` with basis `e_n`, on which `x^{m+1} d/dx`
//! acts by `e_n ↦ (Nm+n) e_{m+n}`. Their coefficient 1 is that operator.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::NCPoly;
use crate::scalar::{binomial_i, q, ExactScalar};
use crate::Q;

type Laurent = BTreeMap<i64, Q>;
/// Truncated power series in `ε` with Laurent polynomial coefficients.
type ESeries = Vec<Laurent>;

fn series_zero(order: usize) -> ESeries {
    vec![Laurent::new(); order + 1]
}

fn add_to(l: &mut Laurent, e: i64, c: Q) {
    let entry = l.entry(e).or_insert_with(|| q(0));
    *entry += c;
    if *entry == q(0) {
        l.remove(&e);
    }
}

fn series_mul(a: &ESeries, b: &ESeries) -> ESeries {
    let order = a.len() - 1;
    let mut out = series_zero(order);
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            for (ea, ca) in ai {
                for (eb, cb) in bj {
                    add_to(&mut out[i + j], ea + eb, ca.clone() * cb);
                }
            }
        }
    }
    out
}

/// The ring automorphism `x ↦ x + ε x^{m+1}` applied to a series.
fn phi(s: &ESeries, m: i64) -> ESeries {
    let order = s.len() - 1;
    let mut out = series_zero(order);
    for (i, si) in s.iter().enumerate() {
        for (e, c) in si {
            for k in 0..=(order - i) {
                let b = Q::from_integer(binomial_i(*e, k as u64));
                if b != q(0) {
                    add_to(&mut out[i + k], e + k as i64 * m, b * c);
                }
            }
        }
    }
    out
}

/// `ψ = φ^{−1}(x)`, the solution of `ψ + ε ψ^{m+1} = x`.
fn psi(m: i64, order: usize) -> ESeries {
    let mut x = series_zero(order);
    x[0].insert(1, q(1));
    let mut p = x.clone();
    for _ in 0..=order {
        let mut pow = series_zero(order);
        pow[0].insert(0, q(1));
        for _ in 0..(m + 1) {
            pow = series_mul(&pow, &p);
        }
        let mut next = x.clone();
        for k in 1..=order {
            for (e, c) in &pow[k - 1] {
                add_to(&mut next[k], *e, -c.clone());
            }
        }
        p = next;
    }
    p
}

/// `φ ∘ (x^{n+1} d/dx) ∘ φ^{−1}` applied to `x`.
fn conjugated_derivation(n: i64, m: i64, order: usize) -> ESeries {
    let p = psi(m, order);
    let d: ESeries = p
        .iter()
        .map(|l| {
            let mut out = Laurent::new();
            for (e, c) in l {
                add_to(&mut out, e + n, c.clone() * q(*e));
            }
            out
        })
        .collect();
    phi(&d, m)
}

/// Coefficients `A_0(n), ..., A_order(n)` of the curve on `R_N`, `N ≤ 0`.
fn nonpositive_coeffs(m: i64, big_n: i64, order: usize, n: i64) -> Result<Vec<Q>> {
    let series = if big_n == 0 {
        let mut s = series_zero(order);
        s[0].insert(n, q(1));
        phi(&s, m)
    } else {
        let mut s = conjugated_derivation(n, m, order);
        if big_n < -1 {
            let unit = conjugated_derivation(0, m, order);
            for _ in 0..(-big_n - 1) {
                s = series_mul(&s, &unit);
            }
        }
        s
    };
    series
        .iter()
        .enumerate()
        .map(|(k, l)| {
            let e = n - big_n + k as i64 * m;
            if l.keys().any(|x| *x != e) {
                return Err(Error::Dimension(format!("coefficient {k} of e_{n} is not homogeneous")));
            }
            Ok(l.get(&e).cloned().unwrap_or_else(|| q(0)))
        })
        .collect()
}

/// Pointwise coefficient evaluator with memoisation.
struct Evaluator {
    m: i64,
    big_n: i64,
    order: usize,
    cache: RefCell<HashMap<i64, Vec<Q>>>,
    dual: Option<Box<Evaluator>>,
}

impl Evaluator {
    fn new(m: i64, big_n: i64, order: usize) -> Self {
        let dual = (big_n > 0).then(|| Box::new(Evaluator::new(m, 1 - big_n, order)));
        Evaluator { m, big_n, order, cache: RefCell::new(HashMap::new()), dual }
    }

    fn coeffs(&self, n: i64) -> Result<Vec<Q>> {
        if let Some(v) = self.cache.borrow().get(&n) {
            return Ok(v.clone());
        }
        let v = match &self.dual {
            None => nonpositive_coeffs(self.m, self.big_n, self.order, n)?,
            Some(d) => (0..=self.order)
                .map(|k| d.inverse_coeff(k, -n - k as i64 * self.m))
                .collect::<Result<_>>()?,
        };
        self.cache.borrow_mut().insert(n, v.clone());
        Ok(v)
    }

    /// Coefficient `k` of the inverse curve at `e_n`.
    fn inverse_coeff(&self, k: usize, n: i64) -> Result<Q> {
        let mut b = vec![q(1)];
        for j in 1..=k {
            let mut s = q(0);
            for i in 1..=j {
                s += self.coeffs(n + (j - i) as i64 * self.m)?[i].clone() * &b[j - i];
            }
            b.push(-s);
        }
        Ok(b[k].clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RnCurve {
    pub m: i64,
    pub big_n: i64,
    pub order: usize,
    pub window: (i64, i64),
    /// `coeffs[k][i]` is the coefficient of `e_{n+km}` in `A_k(e_n)` for
    /// `n = window.0 + i`.
    pub coeffs: Vec<Vec<BigInt>>,
}

impl RnCurve {
    pub fn coeff(&self, k: usize, n: i64) -> &BigInt {
        &self.coeffs[k][(n - self.window.0) as usize]
    }
}

/// `N = −1` by conjugation, `N < −1` by tensor powers over the
/// Laurent ring, `N > 0` as the dual of `R_{1−N}`.
pub fn rn_curve(m: i64, big_n: i64, order: usize, window: (i64, i64)) -> Result<RnCurve> {
    if m < -1 {
        return Err(Error::Parse(format!("mode shift {m} is below -1")));
    }
    if window.0 > window.1 {
        return Err(Error::WindowOverflow(format!("empty window {window:?}")));
    }
    let ev = Evaluator::new(m, big_n, order);
    let mut coeffs = vec![Vec::new(); order + 1];
    for n in window.0..=window.1 {
        let v = ev.coeffs(n)?;
        for (k, c) in v.into_iter().enumerate() {
            if !c.is_integral() {
                return Err(Error::IntegralityViolation(format!(
                    "coefficient {k} of R_{big_n} at e_{n} is {c}"
                )));
            }
            coeffs[k].push(c.to_integer());
        }
    }
    Ok(RnCurve { m, big_n, order, window, coeffs })
}

/// `[ε^k] (1+εx^m)^{n−N} (1+(m+1)εx^m)^N`, the action on tensor densities.
pub fn rn_closed_form(m: i64, big_n: i64, k: usize, n: i64) -> BigInt {
    (0..=k)
        .map(|b| binomial_i(n - big_n, (k - b) as u64) * binomial_i(big_n, b as u64) * BigInt::from(m + 1).pow(b as u32))
        .sum()
}

/// Action of `u ∈ U(Witt)` on `e_n ∈ R_N`, with `L_j = −x^{j+1} d/dx`.
pub fn act_on_rn(u: &NCPoly<Q>, big_n: i64, n: i64) -> BTreeMap<i64, Q> {
    let mut out = BTreeMap::new();
    for (word, c) in u.terms() {
        let mut e = n;
        let mut v = c.clone();
        for g in word.iter().rev() {
            let j = g.index()[0];
            v *= q(-(big_n * j + e));
            e += j;
        }
        add_to(&mut out, e, v);
    }
    out
}
