//! The index of `U(Witt_{≥1})_n` in `U⁺(Witt_{≥1})_n`, computed on
//! Laurent polynomials in several variables.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::arith::matrix::Matrix;
use crate::arith::partition::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::scalar::{binomial_i, q};
use crate::Q;

type Vector = BTreeMap<Vec<i64>, Q>;

fn add_to(v: &mut Vector, e: Vec<i64>, c: Q) {
    let entry = v.entry(e.clone()).or_insert_with(|| q(0));
    *entry += c;
    if *entry == q(0) {
        v.remove(&e);
    }
}

/// `L_j = −Σ_i x_i^{j+1} ∂_i`.
fn apply_l(j: i64, v: &Vector) -> Vector {
    let mut out = Vector::new();
    for (e, c) in v {
        for i in 0..e.len() {
            if e[i] != 0 {
                let mut f = e.clone();
                f[i] += j;
                add_to(&mut out, f, -c.clone() * q(e[i]));
            }
        }
    }
    out
}

/// `a_{k,i}`: coefficient `i` of the lift of `L_k`, acting as the
/// automorphism `x_r ↦ x_r − ε x_r^{k+1}` of every variable.
fn apply_a(k: i64, i: usize, v: &Vector) -> Vector {
    fn rec(k: i64, e: &[i64], var: usize, left: usize, cur: &mut Vec<i64>, c: Q, out: &mut Vector) {
        if var == e.len() {
            if left == 0 {
                add_to(out, cur.clone(), c);
            }
            return;
        }
        for t in 0..=left {
            let b = binomial_i(e[var], t as u64);
            if b == BigInt::from(0) {
                continue;
            }
            let sign = if t % 2 == 0 { q(1) } else { q(-1) };
            cur.push(e[var] + t as i64 * k);
            rec(k, e, var + 1, left - t, cur, c.clone() * Q::from_integer(b) * sign, out);
            cur.pop();
        }
    }
    let mut out = Vector::new();
    for (e, c) in v {
        rec(k, e, 0, i, &mut Vec::new(), c.clone(), &mut out);
    }
    out
}

/// Multiplicities `(k, i_k)` of a partition, smallest part first.
fn multiplicities(p: &Partition) -> Vec<(i64, usize)> {
    let mut m: BTreeMap<i64, usize> = BTreeMap::new();
    for part in p.parts() {
        *m.entry(part as i64).or_insert(0) += 1;
    }
    m.into_iter().collect()
}

/// `∏_{|λ|=n} F(λ)` with `F(λ) = ∏ i_k!`.
pub fn expected_index(n: usize) -> BigInt {
    partitions_of(n).iter().map(|p| p.stats().multiplicity_factorial).product()
}

#[derive(Clone, Debug)]
pub struct UPlusIndex {
    pub index: BigInt,
    pub variables: usize,
    pub rank: usize,
}

fn apply_word(word: &[(i64, usize)], lift: bool, v: &Vector) -> Vector {
    let mut w = v.clone();
    for &(k, i) in word.iter().rev() {
        if lift {
            w = apply_a(k, i, &w);
        } else {
            for _ in 0..i {
                w = apply_l(k, &w);
            }
        }
    }
    w
}

/// The index for degree `n`, enlarging the number of variables until
/// the degree `n` part acts faithfully.
pub fn uplus_index(n: usize) -> Result<UPlusIndex> {
    let parts = partitions_of(n);
    let words: Vec<Vec<(i64, usize)>> = parts.iter().map(multiplicities).collect();
    for r in 1..=(n + 2) {
        let source: Vector = [((0..r).map(|i| 2 * i as i64 + 3).collect::<Vec<_>>(), q(1))].into_iter().collect();
        let mut keys: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        let l_img: Vec<Vector> = words.iter().map(|w| apply_word(w, false, &source)).collect();
        let a_img: Vec<Vector> = words.iter().map(|w| apply_word(w, true, &source)).collect();
        for v in l_img.iter().chain(a_img.iter()) {
            for e in v.keys() {
                let len = keys.len();
                keys.entry(e.clone()).or_insert(len);
            }
        }
        let to_matrix = |imgs: &[Vector]| {
            let mut m = Matrix::zeros(imgs.len(), keys.len());
            for (i, v) in imgs.iter().enumerate() {
                for (e, c) in v {
                    m.set(i, keys[e], c.clone());
                }
            }
            m
        };
        let lm = to_matrix(&l_img);
        let am = to_matrix(&a_img);
        if lm.rank() < parts.len() {
            continue;
        }
        let (_, pivots) = lm.rref();
        let pick = |m: &Matrix<Q>| {
            let mut s = Matrix::zeros(parts.len(), parts.len());
            for i in 0..parts.len() {
                for (j, &c) in pivots.iter().enumerate() {
                    s.set(i, j, m.get(i, c).clone());
                }
            }
            s
        };
        let dl = pick(&lm).determinant();
        let da = pick(&am).determinant();
        let ratio = dl / da;
        if !ratio.is_integer() {
            return Err(Error::IntegralityViolation(format!("index ratio {ratio} is not an integer")));
        }
        return Ok(UPlusIndex { index: ratio.to_integer().abs(), variables: r, rank: parts.len() });
    }
    Err(Error::SingularRepresentation(format!("degree {n} does not act faithfully on up to {} variables", n + 2)))
}
