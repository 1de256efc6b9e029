//! Integer lattices inside `Q^d` in Hermite normal form.
//!
//! A lattice is stored as a positive denominator `D` together with the
//! integer lattice `D·L ⊆ Z^d`, the latter kept as a list of basis columns in
//! lower-triangular Hermite normal form: column `j` starts (reading top to
//! bottom) with a positive pivot at row `p_j`, the pivot rows increase with
//! `j`, and every earlier column has its entry in row `p_j` reduced into
//! `[0, pivot)`. `D` is the smallest possible, so equal lattices have equal
//! representations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntLatticeBasis {
    ambient_dim: usize,
    denominator: BigInt,
    columns: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Runs gcd elimination over the coordinates `0..upto`. Returns the pivot
/// columns (with their pivot rows) and the leftover vectors, which vanish on
/// those coordinates and together with the pivots span the same lattice.
fn echelon_prefix(mut vectors: Vec<Vec<BigInt>>, upto: usize) -> (Vec<(usize, Vec<BigInt>)>, Vec<Vec<BigInt>>) {
    vectors.retain(|v| v.iter().any(|x| !x.is_zero()));
    let mut pivots = Vec::new();
    for row in 0..upto {
        loop {
            let mut best: Option<usize> = None;
            for (i, v) in vectors.iter().enumerate() {
                if !v[row].is_zero() && best.map_or(true, |b| v[row].abs() < vectors[b][row].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            let pivot = vectors.swap_remove(b);
            let mut done = true;
            for v in vectors.iter_mut() {
                if v[row].is_zero() {
                    continue;
                }
                let f = v[row].div_floor(&pivot[row]);
                for (x, p) in v.iter_mut().zip(&pivot) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
                if !v[row].is_zero() {
                    done = false;
                }
            }
            if done {
                let mut pivot = pivot;
                if pivot[row].is_negative() {
                    pivot.iter_mut().for_each(|x| *x = -x.clone());
                }
                pivots.push((row, pivot));
                vectors.retain(|v| v.iter().any(|x| !x.is_zero()));
                break;
            }
            vectors.push(pivot);
        }
    }
    (pivots, vectors)
}

fn reduce_hnf(mut pivots: Vec<(usize, Vec<BigInt>)>) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    for j in 0..pivots.len() {
        let (row, piv) = (pivots[j].0, pivots[j].1.clone());
        for k in 0..j {
            let f = pivots[k].1[row].div_floor(&piv[row]);
            if !f.is_zero() {
                for (x, p) in pivots[k].1.iter_mut().zip(&piv) {
                    *x -= &f * p;
                }
            }
        }
    }
    pivots.into_iter().unzip()
}

fn lcm_denominators<'a>(vals: impl Iterator<Item = &'a BigRational>) -> BigInt {
    vals.fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

impl IntLatticeBasis {
    /// Integer span of integer vectors.
    pub fn from_generators(vectors: &[Vec<BigInt>], ambient_dim: usize) -> Result<Self> {
        Self::from_scaled(vectors.to_vec(), BigInt::one(), ambient_dim)
    }

    /// Integer span of rational vectors.
    pub fn from_rational_generators(vectors: &[Vec<BigRational>], ambient_dim: usize) -> Result<Self> {
        let d = lcm_denominators(vectors.iter().flatten());
        let ints = vectors
            .iter()
            .map(|v| v.iter().map(|x| (x * BigRational::from_integer(d.clone())).to_integer()).collect())
            .collect();
        Self::from_scaled(ints, d, ambient_dim)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        IntLatticeBasis { ambient_dim, denominator: BigInt::one(), columns: Vec::new(), pivots: Vec::new() }
    }

    /// The standard lattice `Z^d`.
    pub fn standard(ambient_dim: usize) -> Self {
        let cols = (0..ambient_dim)
            .map(|i| (0..ambient_dim).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        IntLatticeBasis { ambient_dim, denominator: BigInt::one(), columns: cols, pivots: (0..ambient_dim).collect() }
    }

    fn from_scaled(vectors: Vec<Vec<BigInt>>, denominator: BigInt, ambient_dim: usize) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::Dimension(format!("vector of length {} in ambient dimension {}", v.len(), ambient_dim)));
        }
        let (pivots, rest) = echelon_prefix(vectors, ambient_dim);
        debug_assert!(rest.is_empty());
        let (pivot_rows, mut columns) = reduce_hnf(pivots);
        let mut g = denominator.clone();
        for x in columns.iter().flatten() {
            g = g.gcd(x);
        }
        let mut denominator = denominator;
        if !g.is_one() && !g.is_zero() {
            denominator /= &g;
            columns.iter_mut().flatten().for_each(|x| *x /= &g);
        }
        if columns.is_empty() {
            denominator = BigInt::one();
        }
        Ok(IntLatticeBasis { ambient_dim, denominator, columns, pivots: pivot_rows })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// Integer HNF columns of `D·L`.
    pub fn scaled_columns(&self) -> &[Vec<BigInt>] {
        &self.columns
    }

    pub fn pivot_rows(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis columns of `L` itself.
    pub fn basis(&self) -> Vec<Vec<BigRational>> {
        self.columns
            .iter()
            .map(|c| c.iter().map(|x| BigRational::new(x.clone(), self.denominator.clone())).collect())
            .collect()
    }

    /// Coordinates of `D·v` against the scaled basis, if `D·v` is an integer
    /// combination of it.
    fn scaled_coords(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut r = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        let mut next = 0;
        for (j, col) in self.columns.iter().enumerate() {
            let p = self.pivots[j];
            if r[next..p].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (f, rem) = r[p].div_rem(&col[p]);
            if !rem.is_zero() {
                return None;
            }
            if !f.is_zero() {
                for (x, c) in r.iter_mut().zip(col) {
                    *x -= &f * c;
                }
            }
            coords.push(f);
            next = p + 1;
        }
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(coords)
    }

    /// Coordinates of `v` in the HNF basis, or `None` if `v ∉ L`.
    pub fn coordinates(&self, v: &[BigRational]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient_dim);
        let d = BigRational::from_integer(self.denominator.clone());
        let mut scaled = Vec::with_capacity(v.len());
        for x in v {
            let y = x * &d;
            if !y.is_integer() {
                return None;
            }
            scaled.push(y.to_integer());
        }
        self.scaled_coords(&scaled)
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Exact membership of an integer vector.
    pub fn membership(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let scaled: Vec<BigInt> = v.iter().map(|x| x * &self.denominator).collect();
        self.scaled_coords(&scaled).is_some()
    }

    pub fn contains_lattice(&self, other: &Self) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// `[super : self]`. Fails with `NotFinite` when the ranks differ and
    /// with `Degenerate` when `self` is not contained in `sup`.
    pub fn index_in(&self, sup: &Self) -> Result<BigInt> {
        if self.ambient_dim != sup.ambient_dim {
            return Err(Error::Dimension("ambient dimensions differ".into()));
        }
        if self.rank() != sup.rank() {
            return Err(Error::NotFinite(format!("ranks {} and {} differ", self.rank(), sup.rank())));
        }
        if !sup.contains_lattice(self) {
            return Err(Error::Degenerate("sublattice is not contained in the superlattice".into()));
        }
        let r = self.rank() as u32;
        let covol = |l: &Self| {
            l.columns.iter().zip(&l.pivots).fold(BigInt::one(), |acc, (c, &p)| acc * &c[p])
        };
        let num = covol(self) * sup.denominator.pow(r);
        let den = covol(sup) * self.denominator.pow(r);
        let (q, rem) = num.div_rem(&den);
        debug_assert!(rem.is_zero());
        Ok(q)
    }

    /// Lattice sum `self + other`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        let mut gens = self.basis();
        gens.extend(other.basis());
        Self::from_rational_generators(&gens, self.ambient_dim)
    }

    /// Adds generators; returns the enlarged lattice.
    pub fn extended(&self, extra: &[Vec<BigRational>]) -> Result<Self> {
        let mut gens = self.basis();
        gens.extend_from_slice(extra);
        Self::from_rational_generators(&gens, self.ambient_dim)
    }

    /// Reduces an integer vector into the canonical fundamental domain of the
    /// lattice (each pivot coordinate brought into `[0, pivot)`).
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert!(self.denominator.is_one(), "reduction needs an integral lattice");
        let mut r = v.to_vec();
        for (col, &p) in self.columns.iter().zip(&self.pivots) {
            let f = r[p].div_floor(&col[p]);
            if !f.is_zero() {
                for (x, c) in r.iter_mut().zip(col) {
                    *x -= &f * c;
                }
            }
        }
        r
    }
}

impl fmt::Display for IntLatticeBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1/{})·<", self.denominator)?;
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        write!(f, ">")
    }
}

/// Basis of `{z ∈ Z^n : A z = 0}` for an integer matrix given by rows.
pub fn integer_kernel(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let m = rows.len();
    let vectors: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut v: Vec<BigInt> = rows.iter().map(|r| r[j].clone()).collect();
            v.extend((0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }));
            v
        })
        .collect();
    let (_, rest) = echelon_prefix(vectors, m);
    let kernel: Vec<Vec<BigInt>> = rest.into_iter().map(|v| v[m..].to_vec()).collect();
    IntLatticeBasis::from_generators(&kernel, n).map(|l| l.columns).unwrap_or_default()
}

/// Integer solutions of `A z = b`: a particular solution reduced modulo the
/// solution lattice, plus an HNF basis of that lattice. `None` if there is
/// no integer solution.
pub fn solve_integer_system(rows: &[Vec<BigInt>], rhs: &[BigInt], n: usize) -> Option<(Vec<BigInt>, Vec<Vec<BigInt>>)> {
    assert_eq!(rows.len(), rhs.len());
    // Unknowns (s, z) with A z - s b = 0; put s first so the HNF exposes it.
    let aug: Vec<Vec<BigInt>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| std::iter::once(-b.clone()).chain(r.iter().cloned()).collect())
        .collect();
    let k = integer_kernel(&aug, n + 1);
    let lat = IntLatticeBasis::from_generators(&k, n + 1).ok()?;
    let cols = lat.scaled_columns();
    let first = cols.first()?;
    if lat.pivot_rows()[0] != 0 || !first[0].is_one() {
        return None;
    }
    let homogeneous: Vec<Vec<BigInt>> = cols[1..].iter().map(|c| c[1..].to_vec()).collect();
    let particular = first[1..].to_vec();
    let hl = IntLatticeBasis::from_generators(&homogeneous, n).ok()?;
    let particular = hl.reduce(&particular);
    Some((particular, hl.columns))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, z};

    fn zv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| z(x)).collect()
    }

    #[test]
    fn identity_lattice() {
        let l = IntLatticeBasis::from_generators(&[zv(&[1, 0]), zv(&[0, 1])], 2).unwrap();
        assert_eq!(l, IntLatticeBasis::standard(2));
        assert_eq!(l.index_in(&l).unwrap(), z(1));
    }

    #[test]
    fn index_six() {
        let a = IntLatticeBasis::from_generators(&[zv(&[2, 0]), zv(&[0, 3])], 2).unwrap();
        assert_eq!(a.index_in(&IntLatticeBasis::standard(2)).unwrap(), z(6));
    }

    #[test]
    fn parity_membership() {
        let a = IntLatticeBasis::from_generators(&[zv(&[2, 0]), zv(&[0, 1])], 2).unwrap();
        assert!(!a.membership(&zv(&[1, 1])));
        assert!(a.membership(&zv(&[4, -3])));
    }

    #[test]
    fn rational_lattice_canonical() {
        let a = IntLatticeBasis::from_rational_generators(&[vec![q(1) / q(2), q(0)], vec![q(0), q(1)]], 2).unwrap();
        let b = IntLatticeBasis::from_rational_generators(&[vec![q(1) / q(2), q(1)], vec![q(1), q(1)]], 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(IntLatticeBasis::standard(2).index_in(&a).unwrap(), z(2));
    }

    #[test]
    fn rank_mismatch_not_finite() {
        let a = IntLatticeBasis::from_generators(&[zv(&[1, 0])], 2).unwrap();
        assert!(matches!(a.index_in(&IntLatticeBasis::standard(2)), Err(Error::NotFinite(_))));
    }

    #[test]
    fn kernel_and_affine_solve() {
        let rows = vec![zv(&[2, 4, 6])];
        let k = integer_kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!((&v[0] * z(2) + &v[1] * z(4) + &v[2] * z(6)).is_zero());
        }
        assert!(solve_integer_system(&rows, &[z(3)], 3).is_none());
        let (p, hom) = solve_integer_system(&rows, &[z(8)], 3).unwrap();
        assert_eq!(&p[0] * z(2) + &p[1] * z(4) + &p[2] * z(6), z(8));
        assert_eq!(hom.len(), 2);
    }
}
