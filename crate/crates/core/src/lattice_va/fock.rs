//! Graded pieces of the Fock space of a lattice vertex algebra.
//!
//! A vector of sector `β` is stored as a polynomial in the commuting
//! creation operators `b_i(k)`, `k > 0`, applied to `e^β`. Modes follow the
//! convention in which `γ(k)` with `k > 0` raises the weight by `k`; in the
//! usual physics notation `γ(k)` is the mode `γ_{−k}`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use super::lattice::EvenLattice;
use crate::arith::poly::{CommPoly, Monomial};
use crate::error::{Error, Result};
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OscVar {
    pub dir: usize,
    pub mode: u32,
}

pub type FockPoly = CommPoly<OscVar, Q>;
pub type OscMonomial = Monomial<OscVar>;

/// A vector `M e^β` in a single sector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FockVector {
    pub sector: Vec<i64>,
    pub poly: FockPoly,
}

impl FockVector {
    pub fn ground(sector: Vec<i64>) -> Self {
        FockVector { sector, poly: FockPoly::one() }
    }

    pub fn zero(sector: Vec<i64>) -> Self {
        FockVector { sector, poly: FockPoly::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.sector, other.sector, "adding vectors of different sectors");
        FockVector { sector: self.sector.clone(), poly: self.poly.add(&other.poly) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Q) -> Self {
        FockVector { sector: self.sector.clone(), poly: self.poly.scale(c) }
    }
}

/// Oscillator weight `Σ k` of a monomial.
pub fn osc_weight(m: &OscMonomial) -> u32 {
    m.pairs().iter().map(|(v, e)| v.mode * e).sum()
}

/// Largest mode occurring in a polynomial.
pub fn max_mode(p: &FockPoly) -> u32 {
    p.terms().flat_map(|(m, _)| m.pairs().iter().map(|(v, _)| v.mode).collect::<Vec<_>>()).max().unwrap_or(0)
}

/// Oscillator monomials of weight `n` in `rank` directions, sorted.
pub fn oscillator_monomials(rank: usize, n: u32) -> Vec<OscMonomial> {
    let vars: Vec<OscVar> = (1..=n).flat_map(|mode| (0..rank).map(move |dir| OscVar { dir, mode })).collect();
    let mut out = Vec::new();
    fn rec(vars: &[OscVar], i: usize, rest: u32, cur: &mut Vec<(OscVar, u32)>, out: &mut Vec<OscMonomial>) {
        if rest == 0 {
            out.push(Monomial::from_pairs(cur.iter().copied()));
            return;
        }
        if i == vars.len() {
            return;
        }
        let v = vars[i];
        let mut e = 0;
        while e * v.mode <= rest {
            if e > 0 {
                cur.push((v, e));
            }
            rec(vars, i + 1, rest - e * v.mode, cur, out);
            if e > 0 {
                cur.pop();
            }
            e += 1;
        }
    }
    rec(&vars, 0, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PieceKey {
    pub sector: Vec<i64>,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FockGradedPiece {
    pub key: PieceKey,
    pub basis: Vec<OscMonomial>,
    #[serde(skip)]
    index: BTreeMap<OscMonomial, usize>,
}

impl FockGradedPiece {
    fn new(key: PieceKey, basis: Vec<OscMonomial>) -> Self {
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        FockGradedPiece { key, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, m: &OscMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn vector(&self, i: usize) -> FockVector {
        FockVector { sector: self.key.sector.clone(), poly: FockPoly::term(self.basis[i].clone(), Q::from_integer(1.into())) }
    }

    /// Coordinates of a vector of this piece.
    pub fn coordinates(&self, v: &FockVector) -> Result<Vec<Q>> {
        let mut out = vec![Q::from_integer(0.into()); self.dim()];
        if v.is_zero() {
            return Ok(out);
        }
        if v.sector != self.key.sector {
            return Err(Error::Dimension(format!("vector of sector {:?} in piece {:?}", v.sector, self.key)));
        }
        for (m, c) in v.poly.terms() {
            let i = self
                .position(m)
                .ok_or_else(|| Error::Dimension(format!("monomial {m:?} is not in piece {:?}", self.key)))?;
            out[i] = c.clone();
        }
        Ok(out)
    }

    pub fn from_coordinates(&self, c: &[Q]) -> FockVector {
        let mut p = FockPoly::zero();
        for (m, x) in self.basis.iter().zip(c) {
            p.add_term(m.clone(), x.clone());
        }
        FockVector { sector: self.key.sector.clone(), poly: p }
    }
}

/// A lattice vertex algebra truncated to a box of sectors and a weight bound.
#[derive(Debug)]
pub struct Space {
    pub lattice: EvenLattice,
    pub sector_window: i64,
    pub weight_bound: i64,
    pieces: Mutex<BTreeMap<PieceKey, Arc<FockGradedPiece>>>,
}

impl Clone for Space {
    fn clone(&self) -> Self {
        Space::new(self.lattice.clone(), self.sector_window, self.weight_bound)
    }
}

impl Space {
    pub fn new(lattice: EvenLattice, sector_window: i64, weight_bound: i64) -> Self {
        Space { lattice, sector_window, weight_bound, pieces: Mutex::new(BTreeMap::new()) }
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn min_weight(&self, sector: &[i64]) -> i64 {
        self.lattice.norm(sector) / 2
    }

    pub fn in_window(&self, key: &PieceKey) -> bool {
        key.sector.iter().all(|x| x.abs() <= self.sector_window)
            && key.weight <= self.weight_bound
            && key.weight >= self.min_weight(&key.sector)
    }

    /// The piece of any grading (empty below the sector's minimal weight);
    /// pieces are built lazily and shared.
    pub fn piece(&self, sector: &[i64], weight: i64) -> Arc<FockGradedPiece> {
        let key = PieceKey { sector: sector.to_vec(), weight };
        if let Some(p) = self.pieces.lock().unwrap().get(&key) {
            return p.clone();
        }
        let n = weight - self.min_weight(sector);
        let basis = if n < 0 { Vec::new() } else { oscillator_monomials(self.rank(), n as u32) };
        let piece = Arc::new(FockGradedPiece::new(key.clone(), basis));
        self.pieces.lock().unwrap().insert(key, piece.clone());
        piece
    }

    /// Sectors in the box `|β_i| ≤ sector_window`.
    pub fn sectors(&self) -> Vec<Vec<i64>> {
        let r = self.sector_window;
        let mut out = vec![Vec::new()];
        for _ in 0..self.rank() {
            out = out
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    (-r..=r).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Keys of all nonempty pieces inside the window with weight at most
    /// `max_weight` (clamped to the weight bound).
    pub fn piece_keys(&self, max_weight: i64) -> Vec<PieceKey> {
        let top = max_weight.min(self.weight_bound);
        let mut out = Vec::new();
        for s in self.sectors() {
            let lo = self.min_weight(&s);
            for w in lo..=top {
                out.push(PieceKey { sector: s.clone(), weight: w });
            }
        }
        out
    }

    pub fn weight_of(&self, v: &FockVector) -> Option<i64> {
        v.poly.terms().next().map(|(m, _)| self.min_weight(&v.sector) + osc_weight(m) as i64)
    }
}
