//! Which combinations `x L_0 + y c/2` act integrally on every eigenspace
//! with `L_0 = m ≥ 1` and central charge `c ∈ dims`.

use num_bigint::BigInt;

use crate::arith::lattice::IntLatticeBasis;
use crate::arith::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{q, qr};
use crate::Q;

/// The vectors `(m, n/2)` against which `(x, y)` must pair integrally.
pub fn pairing_vectors(dims: &[i64], max_m: i64) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for &n in dims {
        for m in 1..=max_m {
            out.push(vec![q(m), qr(n, 2)]);
        }
    }
    out
}

pub fn is_admissible(xy: &[Q; 2], dims: &[i64], max_m: i64) -> Option<(i64, i64)> {
    for &n in dims {
        for m in 1..=max_m {
            let v = xy[0].clone() * q(m) + xy[1].clone() * qr(n, 2);
            if !v.is_integer() {
                return Some((m, n));
            }
        }
    }
    None
}

/// The lattice of admissible `(x, y)`: the dual of the span of the pairing
/// vectors.
pub fn admissible_lattice(dims: &[i64], max_m: i64) -> Result<IntLatticeBasis> {
    let span = IntLatticeBasis::from_rational_generators(&pairing_vectors(dims, max_m), 2)?;
    if span.rank() != 2 {
        return Err(Error::Degenerate("the pairing vectors do not span the plane".into()));
    }
    let b = span.basis();
    let m = Matrix::from_rows(vec![b[0].clone(), b[1].clone()]);
    let inv = m.inverse().ok_or_else(|| Error::Degenerate("singular pairing basis".into()))?;
    let cols: Vec<Vec<Q>> = (0..2).map(|j| inv.col(j)).collect();
    IntLatticeBasis::from_rational_generators(&cols, 2)
}

pub fn is_standard(l: &IntLatticeBasis) -> bool {
    let z2 = IntLatticeBasis::standard(2);
    l.denominator() == &BigInt::from(1) && l.contains_lattice(&z2) && z2.contains_lattice(l)
}
