//! Exact operator identities and integrality checks on bounded windows.

use serde_json::{json, Value};

use super::fock::{FockPoly, FockVector, PieceKey, Space};
use super::integral::IntegralForm;
use super::lattice::{add, scale};
use super::modes::{basis_mode, heisenberg, state_mode, vertex, virasoro};
use crate::arith::partition::colored_partition_count;
use crate::error::Result;
use crate::report::Report;
use crate::scalar::{binomial_i, factorial, q, qr};
use crate::Q;

/// Counts compared vectors and keeps the first mismatch.
#[derive(Default)]
struct Tally {
    vectors: usize,
    mismatch: Option<Value>,
}

impl Tally {
    fn compare(&mut self, key: &PieceKey, i: usize, lhs: &FockVector, rhs: &FockVector) {
        self.vectors += 1;
        if self.mismatch.is_none() && lhs.sub(rhs).poly != FockPoly::zero() {
            self.mismatch = Some(json!({
                "sector": key.sector, "weight": key.weight, "basis_index": i,
                "lhs": format!("{:?}", lhs.poly), "rhs": format!("{:?}", rhs.poly),
            }));
        }
    }

    fn record(self, report: &mut Report, id: impl Into<String>) {
        let ok = self.mismatch.is_none();
        let w = match self.mismatch {
            None => json!({ "vectors": self.vectors }),
            Some(m) => json!({ "vectors": self.vectors, "mismatch": m }),
        };
        report.check(id, ok, w);
    }
}

fn for_each_basis(space: &Space, keys: &[PieceKey], mut f: impl FnMut(&PieceKey, usize, &FockVector)) {
    for key in keys {
        let piece = space.piece(&key.sector, key.weight);
        for i in 0..piece.dim() {
            f(key, i, &piece.vector(i));
        }
    }
}

fn sub(a: &FockVector, b: &FockVector) -> FockVector {
    a.sub(b)
}

/// `a^0 = 1`, `a^{k+1} = a_{−1} a^k` for `a = e^α`.
pub fn power_state(space: &Space, alpha: &[i64], k: u32) -> FockVector {
    let mut s = FockVector::ground(space.lattice.zero());
    for _ in 0..k {
        s = vertex(space, alpha, -1, &s);
    }
    if s.is_zero() {
        FockVector::zero(scale(alpha, k as i64))
    } else {
        s
    }
}

/// `Σ_j C(k,j) Σ a_{i_1}⋯a_{i_k} v` with `i_1..i_j < 0 ≤ i_{j+1}..i_k` and
/// `Σ i = n − k + 1`.
pub fn power_mode_expansion(space: &Space, alpha: &[i64], k: u32, n: i64, v: &FockVector) -> FockVector {
    let target = add(&scale(alpha, k as i64), &v.sector);
    let mut out = FockVector::zero(target);
    for j in 0..=k {
        let c = Q::from_integer(binomial_i(k as i64, j as u64));
        let t = rhs_rec(space, alpha, k as usize, j as usize, n - k as i64 + 1, v);
        out = out.add(&t.scale(&c));
    }
    out
}

fn rhs_rec(space: &Space, alpha: &[i64], pos: usize, j: usize, rest: i64, v: &FockVector) -> FockVector {
    let target = add(&scale(alpha, pos as i64), &v.sector);
    if v.is_zero() {
        return FockVector::zero(target);
    }
    if pos == 0 {
        return if rest == 0 { v.clone() } else { FockVector::zero(target) };
    }
    let mut out = FockVector::zero(target);
    if pos > j {
        let ab = space.lattice.inner(alpha, &v.sector);
        let max_d = v.poly.terms().map(|(m, _)| super::fock::osc_weight(m) as i64).max().unwrap_or(0);
        for i in 0..=(max_d - 1 - ab) {
            let w = vertex(space, alpha, i, v);
            out = out.add(&rhs_rec(space, alpha, pos - 1, j, rest - i, &w));
        }
    } else if pos == 1 {
        if rest < 0 {
            out = vertex(space, alpha, rest, v);
        }
    } else {
        for i in (rest + pos as i64 - 1)..=-1 {
            let w = vertex(space, alpha, i, v);
            out = out.add(&rhs_rec(space, alpha, pos - 1, j, rest - i, &w));
        }
    }
    out
}

/// Compares the modes of `a^k` against the closed formula on every basis
/// vector of weight at most `max_weight`.
pub fn check_power_modes(space: &Space, alpha: &[i64], k: u32, n: i64, max_weight: i64) -> Report {
    let mut report = Report::new("power_modes");
    let u = power_state(space, alpha, k);
    let mut t = Tally::default();
    for_each_basis(space, &space.piece_keys(max_weight), |key, i, v| {
        let lhs = state_mode(space, &u, n, v);
        let rhs = power_mode_expansion(space, alpha, k, n, v);
        t.compare(key, i, &lhs, &rhs);
    });
    t.record(&mut report, format!("power_modes[alpha={alpha:?},k={k},n={n}]"));
    report
}

fn membership_check(
    report: &mut Report,
    id: String,
    space: &Space,
    form: &IntegralForm,
    max_weight: i64,
    image: impl Fn(&PieceKey, &FockVector) -> (PieceKey, FockVector),
) -> Result<()> {
    let mut vectors = 0usize;
    let mut violation = None;
    for key in space.piece_keys(max_weight) {
        let lat = form.lattice(space, &key)?;
        for v in super::integral::lattice_vectors(space, &key, &lat) {
            let (tkey, w) = image(&key, &v);
            vectors += 1;
            if violation.is_none() && !form.contains(space, &tkey, &w)? {
                violation = Some(json!({
                    "source": { "sector": key.sector, "weight": key.weight },
                    "target": { "sector": tkey.sector, "weight": tkey.weight },
                    "image": format!("{:?}", w.poly),
                    "reason": "not in Λ",
                }));
            }
        }
    }
    let ok = violation.is_none();
    let w = match violation {
        None => json!({ "lattice_vectors": vectors }),
        Some(v) => json!({ "lattice_vectors": vectors, "integrality_violation": v }),
    };
    report.check(id, ok, w);
    Ok(())
}

/// `a_0^k v / k!` for `a = e^α`.
pub fn exp_xa0_coefficient(space: &Space, alpha: &[i64], k: u32, v: &FockVector) -> FockVector {
    let mut w = v.clone();
    for _ in 0..k {
        w = vertex(space, alpha, 0, &w);
    }
    w.scale(&Q::new(1.into(), factorial(k as u64)))
}

/// Every `a_0^k/k!` maps Λ into Λ, and the
/// coefficients form a one-parameter group.
pub fn check_exp_xa0(space: &Space, form: &IntegralForm, alpha: &[i64], order: u32, max_weight: i64) -> Result<Report> {
    let mut report = Report::new("exp_xa0");
    report.param("alpha", json!(alpha)).param("order", order);
    for k in 0..=order {
        membership_check(&mut report, format!("exp_xa0[k={k}]"), space, form, max_weight, |key, v| {
            let t = PieceKey { sector: add(&key.sector, &scale(alpha, k as i64)), weight: key.weight };
            (t, exp_xa0_coefficient(space, alpha, k, v))
        })?;
    }
    let mut t = Tally::default();
    for_each_basis(space, &space.piece_keys(max_weight.min(2)), |key, idx, v| {
        for i in 0..=order {
            for j in 0..=(order - i) {
                let lhs = exp_xa0_coefficient(space, alpha, i, &exp_xa0_coefficient(space, alpha, j, v));
                let c = Q::from_integer(binomial_i((i + j) as i64, i as u64));
                let rhs = exp_xa0_coefficient(space, alpha, i + j, v).scale(&c);
                t.compare(key, idx, &lhs, &rhs);
            }
        }
    });
    t.record(&mut report, "exp_xa0_one_parameter_group");
    Ok(report)
}

/// The state `α(1) e^{iγ}` normalised by `ε(γ,γ)^{i(i−1)/2}`.
pub fn null_curve_state(space: &Space, alpha: &[i64], gamma: &[i64], i: u32) -> FockVector {
    let mut poly = FockPoly::zero();
    for (d, a) in alpha.iter().enumerate() {
        if *a != 0 {
            poly.add_term(
                crate::arith::poly::Monomial::var(super::fock::OscVar { dir: d, mode: 1 }),
                q(*a),
            );
        }
    }
    let eps = space.lattice.cocycle(gamma, gamma);
    let c = if eps == -1 && (i * i.saturating_sub(1) / 2) % 2 == 1 { q(-1) } else { q(1) };
    FockVector { sector: scale(gamma, i as i64), poly: poly.scale(&c) }
}

/// `τ_i = (α(1) e^{iγ})_0`.
pub fn null_curve_tau(space: &Space, alpha: &[i64], gamma: &[i64], i: u32, v: &FockVector) -> FockVector {
    state_mode(space, &null_curve_state(space, alpha, gamma, i), 0, v)
}

fn compositions(k: u32) -> Vec<Vec<u32>> {
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

/// Coefficient of `x^k` in `exp(Σ_{i>0} x^i τ_i / i)` applied to `v`.
pub fn null_curve_coefficient(space: &Space, alpha: &[i64], gamma: &[i64], k: u32, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(add(&v.sector, &scale(gamma, k as i64)));
    for comp in compositions(k) {
        let mut w = v.clone();
        let mut denom = factorial(comp.len() as u64);
        for &i in comp.iter().rev() {
            w = null_curve_tau(space, alpha, gamma, i, &w);
            denom *= i;
            if w.is_zero() {
                break;
            }
        }
        if !w.is_zero() {
            out = out.add(&w.scale(&Q::new(1.into(), denom)));
        }
    }
    out
}

/// The coefficients of the curve map Λ into Λ.
pub fn check_null_curve(
    space: &Space,
    form: &IntegralForm,
    alpha: &[i64],
    gamma: &[i64],
    order: u32,
    max_weight: i64,
) -> Result<Report> {
    let mut report = Report::new("null_curve");
    report.param("alpha", json!(alpha)).param("gamma", json!(gamma)).param("order", order);
    let lat = &space.lattice;
    report.check(
        "null_curve_hypotheses",
        lat.norm(gamma) == 0 && lat.inner(alpha, gamma) == 0,
        json!({ "gamma_norm": lat.norm(gamma), "alpha_gamma": lat.inner(alpha, gamma) }),
    );
    for k in 0..=order {
        membership_check(&mut report, format!("null_curve[k={k}]"), space, form, max_weight, |key, v| {
            let t = PieceKey { sector: add(&key.sector, &scale(gamma, k as i64)), weight: key.weight };
            (t, null_curve_coefficient(space, alpha, gamma, k, v))
        })?;
    }
    Ok(report)
}

/// Heisenberg, Virasoro, primary-field and vertex-operator commutators on
/// all basis vectors of weight at most `max_weight`, for modes `|i|, |j| ≤ bound`.
pub fn verify_commutators(space: &Space, max_weight: i64, bound: i64) -> Result<Report> {
    let keys = space.piece_keys(max_weight);
    let small = space.piece_keys(max_weight.min(1));
    commutators_on(space, &keys, Some(&small), bound)
}

/// The Virasoro relations alone, on the pieces `keys`.
pub fn verify_virasoro_brackets(space: &Space, keys: &[PieceKey], bound: i64) -> Result<Report> {
    commutators_on(space, keys, None, bound)
}

/// The commutator checks on `keys`; vertex-vertex commutators run on
/// `vertex_keys` when given.
fn commutators_on(space: &Space, keys: &[PieceKey], vertex_keys: Option<&[PieceKey]>, bound: i64) -> Result<Report> {
    let mut report = Report::new("commutators");
    let ginv = space.inverse_gram_rows()?;
    let lat = &space.lattice;
    let r = space.rank();
    let c = q(r as i64);
    let basis: Vec<Vec<i64>> = (0..r).map(|i| lat.basis_vector(i)).collect();
    let qv = |a: &[i64]| a.iter().map(|x| q(*x)).collect::<Vec<Q>>();

    let mut t = Tally::default();
    for_each_basis(space, keys, |key, idx, v| {
        for g in &basis {
            for d in &basis {
                for i in -bound..=bound {
                    for j in -bound..=bound {
                        let lhs = sub(
                            &heisenberg(space, &qv(g), i, &heisenberg(space, &qv(d), j, v)),
                            &heisenberg(space, &qv(d), j, &heisenberg(space, &qv(g), i, v)),
                        );
                        let rhs = if i + j == 0 { v.scale(&q(j * lat.inner(g, d))) } else { FockVector::zero(v.sector.clone()) };
                        t.compare(key, idx, &lhs, &rhs);
                    }
                }
            }
        }
    });
    t.record(&mut report, "heisenberg");

    let mut t = Tally::default();
    for_each_basis(space, keys, |key, idx, v| {
        for m in -bound..=bound {
            for n in -bound..=bound {
                let lhs = sub(
                    &virasoro(space, &ginv, m, &virasoro(space, &ginv, n, v)),
                    &virasoro(space, &ginv, n, &virasoro(space, &ginv, m, v)),
                );
                let mut rhs = virasoro(space, &ginv, m + n, v).scale(&q(m - n));
                if m + n == 0 {
                    let central = Q::from_integer(binomial_i(m + 1, 3)) * c.clone() * qr(1, 2);
                    rhs = rhs.add(&v.scale(&central));
                }
                t.compare(key, idx, &lhs, &rhs);
            }
        }
    });
    t.record(&mut report, "virasoro");

    let mut t = Tally::default();
    for_each_basis(space, keys, |key, idx, v| {
        let lhs = sub(
            &virasoro(space, &ginv, 2, &virasoro(space, &ginv, -2, v)),
            &virasoro(space, &ginv, -2, &virasoro(space, &ginv, 2, v)),
        );
        let rhs = virasoro(space, &ginv, 0, v).scale(&q(4)).add(&v.scale(&(c.clone() * qr(1, 2))));
        t.compare(key, idx, &lhs, &rhs);
    });
    t.record(&mut report, "L2_Lm2_central");

    let mut t = Tally::default();
    for_each_basis(space, keys, |key, idx, v| {
        for g in &basis {
            for i in -bound..=bound {
                for j in -bound..=bound {
                    let lhs = sub(
                        &virasoro(space, &ginv, i, &heisenberg(space, &qv(g), j, v)),
                        &heisenberg(space, &qv(g), j, &virasoro(space, &ginv, i, v)),
                    );
                    let rhs = heisenberg(space, &qv(g), j - i, v).scale(&q(j));
                    t.compare(key, idx, &lhs, &rhs);
                }
            }
        }
    });
    t.record(&mut report, "L_gamma");

    let alphas = small_vectors(space);
    let mut t = Tally::default();
    for_each_basis(space, keys, |key, idx, v| {
        for a in &alphas {
            let h = lat.norm(a) / 2;
            for i in -bound..=bound {
                for j in -bound..=bound {
                    let lhs = sub(
                        &virasoro(space, &ginv, i, &vertex(space, a, j, v)),
                        &vertex(space, a, j, &virasoro(space, &ginv, i, v)),
                    );
                    let rhs = vertex(space, a, i + j, v).scale(&q((i + 1) * (h - 1) - j));
                    t.compare(key, idx, &lhs, &rhs);
                }
            }
        }
    });
    t.record(&mut report, "L_vertex");

    let mut t = Tally::default();
    let vb = bound.min(1);
    for_each_basis(space, vertex_keys.unwrap_or(&[]), |key, idx, v| {
        for a in &alphas {
            for b in &alphas {
                let eb = FockVector::ground(b.clone());
                let top = -lat.inner(a, b);
                for i in -vb..=vb {
                    for j in -vb..=vb {
                        let lhs = sub(&vertex(space, a, i, &vertex(space, b, j, v)), &vertex(space, b, j, &vertex(space, a, i, v)));
                        let mut rhs = FockVector::zero(lhs.sector.clone());
                        for k in 0..top.max(0) {
                            let akb = vertex(space, a, k, &eb);
                            let coef = Q::from_integer(binomial_i(i, k as u64));
                            rhs = rhs.add(&state_mode(space, &akb, i + j - k, v).scale(&coef));
                        }
                        t.compare(key, idx, &lhs, &rhs);
                    }
                }
            }
        }
    });
    if vertex_keys.is_some() {
        t.record(&mut report, "vertex_vertex");
    }
    Ok(report)
}

/// Nonzero vectors with entries in `{−1, 0, 1}` and norm at most 2.
pub fn small_vectors(space: &Space) -> Vec<Vec<i64>> {
    let lat = &space.lattice;
    let mut out = vec![Vec::new()];
    for _ in 0..space.rank() {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                [-1, 0, 1].into_iter().map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.into_iter().filter(|a| a.iter().any(|x| *x != 0) && lat.norm(a) <= 2).collect()
}

/// Basic structure: dimensions, cocycle, ground-state identities.
pub fn check_structure(space: &Space) -> Result<Report> {
    let mut report = Report::new("structure");
    let lat = &space.lattice;
    let ginv = space.inverse_gram_rows()?;
    let keys = space.piece_keys(space.weight_bound);
    let bad_dim = keys.iter().find(|k| {
        let n = (k.weight - space.min_weight(&k.sector)) as usize;
        colored_partition_count(space.rank(), n) != space.piece(&k.sector, k.weight).dim().into()
    });
    report.check("dimension_formula", bad_dim.is_none(), json!({ "pieces": keys.len(), "first_bad": bad_dim }));

    let sectors = space.sectors();
    let mut cocycle_ok = true;
    for a in &sectors {
        for b in &sectors {
            let sign = if lat.inner(a, b).rem_euclid(2) == 0 { 1 } else { -1 };
            cocycle_ok &= lat.cocycle(a, b) * lat.cocycle(b, a) == sign;
        }
    }
    report.check("cocycle_commutation", cocycle_ok, json!({ "pairs": sectors.len() * sectors.len() }));

    let mut ground_ok = true;
    let mut vanish_ok = true;
    let mut lead_ok = true;
    let mut l0_ok = true;
    let alphas = small_vectors(space);
    for b in &sectors {
        let eb = FockVector::ground(b.clone());
        for g in 0..space.rank() {
            let gv: Vec<Q> = lat.basis_vector(g).iter().map(|x| q(*x)).collect();
            ground_ok &= heisenberg(space, &gv, 0, &eb) == eb.scale(&q(lat.inner(&lat.basis_vector(g), b)));
            ground_ok &= basis_mode(space, g, 1, &eb).is_zero();
        }
        l0_ok &= virasoro(space, &ginv, 0, &eb) == eb.scale(&q(lat.norm(b) / 2));
        for a in &alphas {
            let ab = lat.inner(a, b);
            for i in -ab..(-ab + 3) {
                vanish_ok &= vertex(space, a, i, &eb).is_zero();
            }
            let lead = vertex(space, a, -1 - ab, &eb);
            lead_ok &= lead == FockVector::ground(add(a, b)).scale(&q(lat.cocycle(a, b)));
        }
    }
    report.check("gamma0_ground", ground_ok, json!({ "sectors": sectors.len() }));
    report.check("vertex_vanishing", vanish_ok, json!({ "alphas": alphas.len() }));
    report.check("vertex_leading", lead_ok, json!({ "alphas": alphas.len() }));
    report.check("L0_ground", l0_ok, json!({ "sectors": sectors.len() }));
    let vac = FockVector::ground(lat.zero());
    let ln_ok = (-1..=3).all(|n| virasoro(space, &ginv, n, &vac).is_zero());
    report.check("Ln_vacuum", ln_ok, json!({ "n": [-1, 3] }));
    Ok(report)
}
