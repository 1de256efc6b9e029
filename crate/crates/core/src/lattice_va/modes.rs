//! Mode operators acting on single-sector Fock vectors.

use std::collections::BTreeMap;

use super::fock::{max_mode, osc_weight, FockPoly, FockVector, OscMonomial, OscVar, Space};
use super::lattice::add;
use crate::arith::poly::Monomial;
use crate::scalar::{binomial_i, q, qr};
use crate::Q;

fn mul_var(p: &FockPoly, v: OscVar) -> FockPoly {
    p.mul(&FockPoly::var(v))
}

/// Physics mode `(b_i)_m`, which is `b_i(−m)` in the raising convention.
pub fn basis_mode(space: &Space, i: usize, m: i64, v: &FockVector) -> FockVector {
    let g = space.lattice.gram();
    let poly = if m < 0 {
        mul_var(&v.poly, OscVar { dir: i, mode: (-m) as u32 })
    } else if m == 0 {
        let c: i64 = (0..space.rank()).map(|j| g[i][j] * v.sector[j]).sum();
        v.poly.scale(&q(c))
    } else {
        let mut out = FockPoly::zero();
        for (l, row) in g[i].iter().enumerate() {
            if *row != 0 {
                let d = v.poly.derivative(&OscVar { dir: l, mode: m as u32 });
                out.add_assign(&d.scale(&q(row * m)));
            }
        }
        out
    };
    FockVector { sector: v.sector.clone(), poly }
}

/// `γ(k)` for `γ = Σ γ_i b_i` with rational coordinates.
pub fn heisenberg(space: &Space, gamma: &[Q], k: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.sector.clone());
    for (i, c) in gamma.iter().enumerate() {
        if *c != q(0) {
            out = out.add(&basis_mode(space, i, -k, v).scale(c));
        }
    }
    out
}

/// `S_0(α), ..., S_n(α)`, the coefficients of `exp(Σ α(k) t^k / k)`.
pub fn schur_polys(alpha: &[i64], n: usize) -> Vec<FockPoly> {
    let p = |k: usize| {
        let mut out = FockPoly::zero();
        for (i, a) in alpha.iter().enumerate() {
            if *a != 0 {
                out.add_term(Monomial::var(OscVar { dir: i, mode: k as u32 }), q(*a));
            }
        }
        out
    };
    let mut s = vec![FockPoly::one()];
    for m in 1..=n {
        let mut acc = FockPoly::zero();
        for k in 1..=m {
            acc.add_assign(&p(k).mul(&s[m - k]));
        }
        s.push(acc.scale(&qr(1, m as i64)));
    }
    s
}

/// Expansion of `M(b_j(k) − c_j z^{−k})` by powers of `z^{−1}`.
fn shifted(m: &OscMonomial, coeff: &Q, c: &[i64]) -> BTreeMap<u32, FockPoly> {
    let mut acc: BTreeMap<u32, FockPoly> = BTreeMap::new();
    acc.insert(0, FockPoly::constant(coeff.clone()));
    for (var, e) in m.pairs() {
        let cj = c[var.dir];
        let mut factor: Vec<(u32, FockPoly)> = Vec::new();
        for t in 0..=*e {
            if t > 0 && cj == 0 {
                break;
            }
            let coef = Q::from_integer(binomial_i(*e as i64, t as u64)) * q((-cj).pow(t));
            factor.push((var.mode * t, FockPoly::term(Monomial::var_pow(*var, e - t), coef)));
        }
        let mut next: BTreeMap<u32, FockPoly> = BTreeMap::new();
        for (d, p) in &acc {
            for (d2, f) in &factor {
                next.entry(d + d2).or_insert_with(FockPoly::zero).add_assign(&p.mul(f));
            }
        }
        acc = next;
    }
    acc
}

/// Vertex operator mode `e^α_n`, from `e^α(z) = Σ e^α_n z^{−n−1}`.
pub fn vertex(space: &Space, alpha: &[i64], n: i64, v: &FockVector) -> FockVector {
    let lat = &space.lattice;
    let target = add(alpha, &v.sector);
    if v.is_zero() {
        return FockVector::zero(target);
    }
    let ab = lat.inner(alpha, &v.sector);
    let eps = lat.cocycle(alpha, &v.sector);
    let c = lat.pairings(alpha);
    let base = -n - 1 - ab;
    let max_d = v.poly.terms().map(|(m, _)| osc_weight(m)).max().unwrap_or(0) as i64;
    let top = max_d + base;
    if top < 0 {
        return FockVector::zero(target);
    }
    let s = schur_polys(alpha, top as usize);
    let mut out = FockPoly::zero();
    for (m, coeff) in v.poly.terms() {
        for (d, p) in shifted(m, coeff, &c) {
            let j = d as i64 + base;
            if j >= 0 {
                out.add_assign(&s[j as usize].mul(&p));
            }
        }
    }
    FockVector { sector: target, poly: out.scale(&q(eps)) }
}

/// Virasoro `L_n` with central charge the rank.
pub fn virasoro(space: &Space, ginv: &[Vec<Q>], n: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.sector.clone());
    if v.is_zero() {
        return out;
    }
    let top = (max_mode(&v.poly) as i64).max(0);
    let r = space.rank();
    let start = n.div_euclid(2);
    for m2 in start..=top.max(start) {
        let m1 = n - m2;
        if m1 > m2 {
            continue;
        }
        let weight = if m1 == m2 { qr(1, 2) } else { q(1) };
        for j in 0..r {
            let inner = basis_mode(space, j, m2, v);
            if inner.is_zero() {
                continue;
            }
            for i in 0..r {
                if ginv[i][j] == q(0) {
                    continue;
                }
                let t = basis_mode(space, i, m1, &inner);
                out = out.add(&t.scale(&(ginv[i][j].clone() * weight.clone())));
            }
        }
    }
    out
}

/// `D^{(n)} = L_{−1}^n / n!`.
pub fn divided_derivative(space: &Space, ginv: &[Vec<Q>], n: u32, v: &FockVector) -> FockVector {
    let mut w = v.clone();
    for k in 1..=n {
        w = virasoro(space, ginv, -1, &w).scale(&qr(1, k as i64));
    }
    w
}

/// Multiplication by `h_n(b_i) = e^{−b_i} D^{(n)} e^{b_i}`.
pub fn h_gen(i: usize, n: usize, rank: usize, v: &FockVector) -> FockVector {
    let mut alpha = vec![0; rank];
    alpha[i] = 1;
    let s = schur_polys(&alpha, n);
    FockVector { sector: v.sector.clone(), poly: s[n].mul(&v.poly) }
}

/// Mode `u_n` of an arbitrary state `u`, built from the modes of `e^γ` by
/// the normal ordered product formula for Heisenberg creation operators.
pub fn state_mode(space: &Space, u: &FockVector, n: i64, v: &FockVector) -> FockVector {
    let target = add(&u.sector, &v.sector);
    let mut out = FockVector::zero(target);
    for (m, c) in u.poly.terms() {
        let t = monomial_mode(space, &u.sector, m, n, v);
        out = out.add(&t.scale(c));
    }
    out
}

fn monomial_mode(space: &Space, gamma: &[i64], m: &OscMonomial, n: i64, v: &FockVector) -> FockVector {
    let target = add(gamma, &v.sector);
    if v.is_zero() {
        return FockVector::zero(target);
    }
    let Some(&(var, _)) = m.pairs().first() else {
        return vertex(space, gamma, n, v);
    };
    let rest = m.without_one(&var).expect("variable present");
    let k = var.mode as i64;
    let j = var.dir;
    let wv = match space.weight_of(v) {
        Some(w) => w,
        None => return FockVector::zero(target),
    };
    let wu = space.min_weight(gamma) + osc_weight(&rest) as i64;
    let floor = space.min_weight(&target);
    let mut out = FockVector::zero(target.clone());
    let first_top = wv + wu - n - 1 - floor;
    for i in 0..=first_top.max(-1) {
        let inner = monomial_mode(space, gamma, &rest, n + i, v);
        if inner.is_zero() {
            continue;
        }
        let c = Q::from_integer(binomial_i(k + i - 1, i as u64));
        out = out.add(&basis_mode(space, j, -k - i, &inner).scale(&c));
    }
    let sign = if k % 2 == 0 { q(-1) } else { q(1) };
    for i in 0..=(max_mode(&v.poly) as i64) {
        let inner = basis_mode(space, j, i, v);
        if inner.is_zero() {
            continue;
        }
        let c = Q::from_integer(binomial_i(k + i - 1, i as u64)) * sign.clone();
        out = out.add(&monomial_mode(space, gamma, &rest, n - k - i, &inner).scale(&c));
    }
    out
}
