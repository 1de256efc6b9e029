//! Transverse spaces `T_β` inside the weight 1 piece of sector `β`, their
//! integral points in Λ, and the contravariant Gram determinant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::arith::lattice::{integer_kernel, IntLatticeBasis};
use crate::arith::matrix::{det_bareiss, Matrix};
use crate::error::{Error, Result};
use crate::lattice_va::fock::{FockVector, PieceKey, Space};
use crate::lattice_va::integral::IntegralForm;
use crate::lattice_va::modes::{basis_mode, heisenberg, virasoro};
use crate::report::Report;
use crate::scalar::q;
use crate::Q;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TransverseLattice {
    pub sector: Vec<i64>,
    pub gamma: Vec<i64>,
    /// Basis vectors in the coordinates of the weight 1 piece.
    pub basis: Vec<Vec<Q>>,
    pub gram: Matrix<BigInt>,
}

impl TransverseLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn determinant(&self) -> BigInt {
        det_bareiss(&self.gram)
    }
}

/// `⟨u, v⟩` with mode `k` adjoint to mode `−k` and `⟨e^β, e^β⟩ = 1`.
pub fn contravariant(space: &Space, u: &FockVector, v: &FockVector) -> Q {
    let mut total = q(0);
    if u.sector != v.sector {
        return total;
    }
    for (m, c) in u.poly.terms() {
        let mut w = v.clone();
        for (var, e) in m.pairs() {
            for _ in 0..*e {
                w = basis_mode(space, var.dir, var.mode as i64, &w);
            }
        }
        let constant = w.poly.terms().find(|(mm, _)| mm.is_one()).map(|(_, x)| x.clone()).unwrap_or_else(|| q(0));
        total += c.clone() * constant;
    }
    total
}

fn clear(rows: &[Vec<Q>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

/// `T_β ∩ Λ`: vectors of weight 1 with `L_i v = 0` for `i > 0` and
/// `γ(i) v = 0` for `i < 0`.
pub fn transverse_lattice(space: &Space, form: &IntegralForm, beta: &[i64], gamma: &[i64]) -> Result<TransverseLattice> {
    let lat = &space.lattice;
    if lat.norm(gamma) != 0 {
        return Err(Error::Degenerate(format!("γ = {gamma:?} does not have norm 0")));
    }
    if lat.inner(beta, gamma) == 0 {
        return Err(Error::Degenerate(format!("(β, γ) = 0 for β = {beta:?}, γ = {gamma:?}")));
    }
    let lo = space.min_weight(beta);
    if lo > 1 {
        return Err(Error::EmptyWindow(format!("β²/2 = {lo} exceeds 1")));
    }
    let key = PieceKey { sector: beta.to_vec(), weight: 1 };
    let piece = space.piece(beta, 1);
    let ginv = space.inverse_gram_rows()?;
    let gq: Vec<Q> = gamma.iter().map(|x| q(*x)).collect();
    let lambda = form.lattice(space, &key)?;
    let lbasis = lambda.basis();

    // Constraint rows applied to Λ basis vectors: column j is the image of
    // the j-th Λ basis vector under every constraint.
    let vecs: Vec<FockVector> = lbasis.iter().map(|c| piece.from_coordinates(c)).collect();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut push_images = |images: Vec<FockVector>, target: PieceKey| -> Result<()> {
        let tp = space.piece(&target.sector, target.weight);
        let coords: Vec<Vec<Q>> = images.iter().map(|w| tp.coordinates(w)).collect::<Result<_>>()?;
        for r in 0..tp.dim() {
            rows.push(coords.iter().map(|c| c[r].clone()).collect());
        }
        Ok(())
    };
    for i in 1..=(1 - lo) {
        let images = vecs.iter().map(|v| virasoro(space, &ginv, i, v)).collect();
        push_images(images, PieceKey { sector: beta.to_vec(), weight: 1 - i })?;
    }
    for i in 1..=(1 - lo) {
        let images = vecs.iter().map(|v| heisenberg(space, &gq, -i, v)).collect();
        push_images(images, PieceKey { sector: beta.to_vec(), weight: 1 - i })?;
    }
    let int_rows = clear(&rows);
    let kernel = if int_rows.is_empty() {
        (0..lbasis.len()).map(|i| (0..lbasis.len()).map(|j| BigInt::from(i64::from(i == j))).collect()).collect()
    } else {
        integer_kernel(&int_rows, lbasis.len())
    };
    let basis: Vec<Vec<Q>> = kernel
        .iter()
        .map(|y| {
            (0..piece.dim())
                .map(|r| lbasis.iter().zip(y).map(|(b, c)| b[r].clone() * Q::from_integer(c.clone())).sum())
                .collect()
        })
        .collect();
    let tvecs: Vec<FockVector> = basis.iter().map(|c| piece.from_coordinates(c)).collect();
    let mut gram = Matrix::zeros(tvecs.len(), tvecs.len());
    for i in 0..tvecs.len() {
        for j in 0..tvecs.len() {
            let g = contravariant(space, &tvecs[i], &tvecs[j]);
            if !g.is_integer() {
                return Err(Error::IntegralityViolation(format!("Gram entry ({i},{j}) is {g}")));
            }
            gram.set(i, j, g.to_integer());
        }
    }
    let _ = IntLatticeBasis::from_rational_generators(&basis, piece.dim())?;
    Ok(TransverseLattice { sector: beta.to_vec(), gamma: gamma.to_vec(), basis, gram })
}

/// Removes from `d` every prime factor shared with `t`; the result is 1
/// exactly when `d` divides a power of `t`.
pub fn coprime_part(d: &BigInt, t: &BigInt) -> BigInt {
    let mut d = d.abs();
    if d.is_zero() {
        return d;
    }
    loop {
        let g = d.gcd(t);
        if g.is_one() {
            return d;
        }
        d /= g;
    }
}

/// Determinant divisibility and the gcd flag for one `β` and a set of `γ`.
pub fn discriminant_report(space: &Space, form: &IntegralForm, beta: &[i64], gammas: &[Vec<i64>]) -> Result<Report> {
    let mut report = Report::new("discriminant");
    report.param("beta", json!(beta)).param("beta_norm", space.lattice.norm(beta));
    let mut g = BigInt::zero();
    let mut all_divide = true;
    for gamma in gammas {
        let t = transverse_lattice(space, form, beta, gamma)?;
        let d = t.determinant();
        let bg = BigInt::from(space.lattice.inner(beta, gamma));
        let rest = coprime_part(&d, &bg);
        let divides = !d.is_zero() && rest.is_one();
        all_divide &= divides;
        g = g.gcd(&d);
        report.check(
            format!("divides_power[gamma={gamma:?}]"),
            divides,
            json!({ "rank": t.rank(), "determinant": d.to_string(), "beta_gamma": bg.to_string(), "coprime_part": rest.to_string() }),
        );
    }
    let unimodular = g.is_one();
    report.check(
        "unimodular",
        unimodular && all_divide,
        json!({ "gcd": g.to_string(), "flag": if unimodular { "UNIMODULAR" } else { "NOT_UNIMODULAR" } }),
    );
    Ok(report)
}

/// `w_action(λ, μ)` recomputed with lattice vertex algebra modes for an
/// embedded pair `β, γ`, where `t = (β, γ)`.
pub fn w_action_via_modes(space: &Space, beta: &[i64], gamma: &[i64], lambda: &[usize], mu: &[usize]) -> Result<Q> {
    let ginv = space.inverse_gram_rows()?;
    let gq: Vec<Q> = gamma.iter().map(|x| q(*x)).collect();
    let mut v = FockVector::ground(beta.to_vec());
    for j in mu {
        v = heisenberg(space, &gq, *j as i64, &v);
    }
    let mut parts = lambda.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    for i in parts {
        v = virasoro(space, &ginv, i as i64, &v);
    }
    let c = v.poly.terms().find(|(m, _)| m.is_one()).map(|(_, c)| c.clone()).unwrap_or_else(|| q(0));
    Ok(c)
}
