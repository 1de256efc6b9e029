//! Mode operators as exact matrices between graded pieces.

use serde::{Deserialize, Serialize};

use super::fock::{FockVector, PieceKey, Space};
use super::lattice::add;
use super::modes::{divided_derivative, heisenberg, schur_polys, vertex, virasoro};
use crate::arith::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::q;
use crate::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModeOp {
    /// `γ(k)`, raising the weight by `k`.
    Heisenberg { gamma: Vec<i64>, k: i64 },
    /// `e^α_n`.
    Vertex { alpha: Vec<i64>, n: i64 },
    /// `D^{(i)}`.
    DivTranslation(u32),
    /// Multiplication by `h_n(α) = e^{−α} D^{(n)} e^α`.
    HGen { alpha: Vec<i64>, n: usize },
    Virasoro(i64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OpMatrix {
    pub source: PieceKey,
    pub target: PieceKey,
    pub entries: Matrix<Q>,
}

impl Space {
    pub fn inverse_gram_rows(&self) -> Result<Vec<Vec<Q>>> {
        let m = self.lattice.inverse_gram()?;
        Ok((0..m.rows()).map(|i| m.row(i).to_vec()).collect())
    }
}

impl ModeOp {
    pub fn target(&self, space: &Space, key: &PieceKey) -> PieceKey {
        match self {
            ModeOp::Heisenberg { k, .. } => PieceKey { sector: key.sector.clone(), weight: key.weight + k },
            ModeOp::Vertex { alpha, n } => PieceKey {
                sector: add(&key.sector, alpha),
                weight: key.weight + space.lattice.norm(alpha) / 2 - n - 1,
            },
            ModeOp::DivTranslation(i) => PieceKey { sector: key.sector.clone(), weight: key.weight + *i as i64 },
            ModeOp::HGen { n, .. } => PieceKey { sector: key.sector.clone(), weight: key.weight + *n as i64 },
            ModeOp::Virasoro(n) => PieceKey { sector: key.sector.clone(), weight: key.weight - n },
        }
    }

    pub fn apply(&self, space: &Space, ginv: &[Vec<Q>], v: &FockVector) -> FockVector {
        match self {
            ModeOp::Heisenberg { gamma, k } => {
                let g: Vec<Q> = gamma.iter().map(|x| q(*x)).collect();
                heisenberg(space, &g, *k, v)
            }
            ModeOp::Vertex { alpha, n } => vertex(space, alpha, *n, v),
            ModeOp::DivTranslation(i) => divided_derivative(space, ginv, *i, v),
            ModeOp::HGen { alpha, n } => {
                let s = schur_polys(alpha, *n);
                FockVector { sector: v.sector.clone(), poly: s[*n].mul(&v.poly) }
            }
            ModeOp::Virasoro(n) => virasoro(space, ginv, *n, v),
        }
    }
}

/// Matrix of a linear map between two pieces, columns indexed by the source
/// basis.
pub fn op_matrix(
    space: &Space,
    source: &PieceKey,
    target: PieceKey,
    f: impl Fn(&FockVector) -> FockVector,
) -> Result<OpMatrix> {
    let src = space.piece(&source.sector, source.weight);
    let dst = space.piece(&target.sector, target.weight);
    let mut cols = Vec::with_capacity(src.dim());
    for i in 0..src.dim() {
        let w = f(&src.vector(i));
        cols.push(dst.coordinates(&w)?);
    }
    Ok(OpMatrix { source: source.clone(), target, entries: Matrix::from_cols(&cols, dst.dim()) })
}

pub fn mode_matrix(space: &Space, op: &ModeOp, key: &PieceKey) -> Result<OpMatrix> {
    let target = op.target(space, key);
    if !space.in_window(&target) && target.weight >= space.min_weight(&target.sector) {
        return Err(Error::OutOfWindow(format!(
            "target sector {:?} weight {} exceeds the window",
            target.sector, target.weight
        )));
    }
    let ginv = space.inverse_gram_rows()?;
    op_matrix(space, key, target, |v| op.apply(space, &ginv, v))
}
