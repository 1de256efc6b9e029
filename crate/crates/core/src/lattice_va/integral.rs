//! The integral form Λ: closure of the vacuum under integral generators,
//! and the explicit lattice spanned by `e^β ∏ h_λ(b_i)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::fock::{FockPoly, FockVector, PieceKey, Space};
use super::lattice::add;
use super::modes::{h_gen, schur_polys, vertex};
use crate::arith::lattice::IntLatticeBasis;
use crate::arith::partition::partitions_of;
use crate::error::{Error, Result};
use crate::Q;

/// Per-piece integral lattices, in the coordinates of the piece basis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntegralForm {
    pub pieces: BTreeMap<PieceKey, IntLatticeBasis>,
    pub rounds: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generator {
    Vertex { dir: usize, sign: i64, n: i64 },
    HGen { dir: usize, n: usize },
}

impl Generator {
    pub fn apply(&self, space: &Space, v: &FockVector) -> FockVector {
        match *self {
            Generator::Vertex { dir, sign, n } => {
                let mut a = space.lattice.zero();
                a[dir] = sign;
                vertex(space, &a, n, v)
            }
            Generator::HGen { dir, n } => h_gen(dir, n, space.rank(), v),
        }
    }

    /// Target grading of the generator applied to the piece `key`.
    pub fn target(&self, space: &Space, key: &PieceKey) -> PieceKey {
        match *self {
            Generator::Vertex { dir, sign, n } => {
                let mut a = space.lattice.zero();
                a[dir] = sign;
                let half = space.lattice.norm(&a) / 2;
                PieceKey { sector: add(&key.sector, &a), weight: key.weight + half - n - 1 }
            }
            Generator::HGen { n, .. } => PieceKey { sector: key.sector.clone(), weight: key.weight + n as i64 },
        }
    }
}

/// The default generators `e^{±b_i}_n` and `h_n(b_i)` whose targets stay in
/// the window.
pub fn generators_from(space: &Space, key: &PieceKey) -> Vec<Generator> {
    let mut out = Vec::new();
    for dir in 0..space.rank() {
        for sign in [1, -1] {
            let mut a = space.lattice.zero();
            a[dir] = sign;
            let sector = add(&key.sector, &a);
            let half = space.lattice.norm(&a) / 2;
            let lo = space.min_weight(&sector);
            for w in lo..=space.weight_bound {
                let n = key.weight + half - 1 - w;
                let g = Generator::Vertex { dir, sign, n };
                if space.in_window(&g.target(space, key)) {
                    out.push(g);
                }
            }
        }
        for n in 1..=(space.weight_bound - key.weight).max(0) as usize {
            out.push(Generator::HGen { dir, n });
        }
    }
    out
}

fn to_coords(space: &Space, key: &PieceKey, v: &FockVector) -> Result<Vec<Q>> {
    space.piece(&key.sector, key.weight).coordinates(v)
}

/// Vectors of a lattice as Fock vectors of the piece.
pub fn lattice_vectors(space: &Space, key: &PieceKey, l: &IntLatticeBasis) -> Vec<FockVector> {
    let piece = space.piece(&key.sector, key.weight);
    l.basis().iter().map(|c| piece.from_coordinates(c)).collect()
}

/// Closure of `Z·1` under the default generators, round by round.
pub fn integral_closure(space: &Space, max_rounds: usize) -> Result<IntegralForm> {
    let mut pieces: BTreeMap<PieceKey, IntLatticeBasis> = BTreeMap::new();
    for key in space.piece_keys(space.weight_bound) {
        let dim = space.piece(&key.sector, key.weight).dim();
        pieces.insert(key, IntLatticeBasis::zero(dim));
    }
    let vac = PieceKey { sector: space.lattice.zero(), weight: 0 };
    pieces.insert(vac.clone(), IntLatticeBasis::standard(1));
    let mut frontier: BTreeSet<PieceKey> = BTreeSet::from([vac]);
    let mut rounds = 0;
    while !frontier.is_empty() {
        if rounds == max_rounds {
            let key = frontier.iter().next().unwrap();
            return Err(Error::NotStabilized(format!(
                "piece sector {:?} weight {} still growing after {} rounds",
                key.sector, key.weight, max_rounds
            )));
        }
        rounds += 1;
        let mut images: BTreeMap<PieceKey, Vec<Vec<Q>>> = BTreeMap::new();
        for key in &frontier {
            let vecs = lattice_vectors(space, key, &pieces[key]);
            for g in generators_from(space, key) {
                let t = g.target(space, key);
                for v in &vecs {
                    let w = g.apply(space, v);
                    if !w.is_zero() {
                        images.entry(t.clone()).or_default().push(to_coords(space, &t, &w)?);
                    }
                }
            }
        }
        let mut next = BTreeSet::new();
        for (t, gens) in images {
            let old = &pieces[&t];
            let new = old.extended(&gens)?;
            if !old.contains_lattice(&new) {
                pieces.insert(t.clone(), new);
                next.insert(t);
            }
        }
        frontier = next;
    }
    Ok(IntegralForm { pieces, rounds })
}

/// `e^β ∏_i h_{λ^{(i)}}(b_i)` over tuples of partitions of total size
/// `w − β²/2`.
pub fn explicit_lattice(space: &Space, key: &PieceKey) -> Result<IntLatticeBasis> {
    let piece = space.piece(&key.sector, key.weight);
    let n = key.weight - space.min_weight(&key.sector);
    if n < 0 {
        return Ok(IntLatticeBasis::zero(0));
    }
    let n = n as usize;
    let rank = space.rank();
    let h: Vec<Vec<FockPoly>> = (0..rank)
        .map(|i| {
            let mut a = vec![0; rank];
            a[i] = 1;
            schur_polys(&a, n)
        })
        .collect();
    let mut polys = vec![(0usize, FockPoly::one())];
    for hi in &h {
        let mut next = Vec::new();
        for (used, p) in &polys {
            for m in 0..=(n - used) {
                for lam in partitions_of(m) {
                    let mut t = p.clone();
                    for part in lam.parts() {
                        t = t.mul(&hi[part]);
                    }
                    next.push((used + m, t));
                }
            }
        }
        polys = next;
    }
    let gens: Vec<Vec<Q>> = polys
        .into_iter()
        .filter(|(used, _)| *used == n)
        .map(|(_, p)| piece.coordinates(&FockVector { sector: key.sector.clone(), poly: p }))
        .collect::<Result<_>>()?;
    IntLatticeBasis::from_rational_generators(&gens, piece.dim())
}

impl IntegralForm {
    /// Λ on a piece: the closure inside the window, the explicit lattice
    /// outside it.
    pub fn lattice(&self, space: &Space, key: &PieceKey) -> Result<IntLatticeBasis> {
        match self.pieces.get(key) {
            Some(l) => Ok(l.clone()),
            None => explicit_lattice(space, key),
        }
    }

    fn membership(&self, space: &Space, v: &FockVector, key: &PieceKey) -> Result<bool> {
        let l = self.lattice(space, key)?;
        Ok(l.contains(&to_coords(space, key, v)?))
    }

    /// Whether `v`, a vector of the piece `key`, lies in Λ.
    pub fn contains(&self, space: &Space, key: &PieceKey, v: &FockVector) -> Result<bool> {
        if v.is_zero() {
            return Ok(true);
        }
        self.membership(space, v, key)
    }
}
