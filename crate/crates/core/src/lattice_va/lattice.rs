//! Even lattices given by Gram matrices, with the standard cocycle.

use serde::{Deserialize, Serialize};

use crate::arith::matrix::Matrix;
use crate::error::{Error, Result};
use crate::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenLattice {
    pub name: String,
    gram: Vec<Vec<i64>>,
}

impl EvenLattice {
    pub fn new(name: &str, gram: Vec<Vec<i64>>) -> Result<Self> {
        let r = gram.len();
        if r == 0 || gram.iter().any(|row| row.len() != r) {
            return Err(Error::Parse(format!("gram matrix of {name} is not square")));
        }
        for i in 0..r {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Parse(format!("gram matrix of {name} is not symmetric at ({i},{j})")));
                }
            }
            if gram[i][i] % 2 != 0 {
                return Err(Error::OddLattice(gram[i][i]));
            }
        }
        Ok(EvenLattice { name: name.to_string(), gram })
    }

    /// The hyperbolic plane `II_{1,1}`.
    pub fn ii11() -> Self {
        Self::new("II11", vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    /// `II_{1,1} ⊕ II_{1,1}`.
    pub fn ii11_squared() -> Self {
        Self::new(
            "II11+II11",
            vec![vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]],
        )
        .unwrap()
    }

    pub fn a1() -> Self {
        Self::new("A1", vec![vec![2]]).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                s += x * self.gram[i][j] * y;
            }
        }
        s
    }

    pub fn norm(&self, a: &[i64]) -> i64 {
        self.inner(a, a)
    }

    /// `(a, b_j)` for every basis vector.
    pub fn pairings(&self, a: &[i64]) -> Vec<i64> {
        (0..self.rank()).map(|j| (0..self.rank()).map(|i| a[i] * self.gram[i][j]).sum()).collect()
    }

    /// `ε(a, b) = (−1)^{Σ_{i>j} a_i b_j G_ij}`.
    pub fn cocycle(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.rank() {
            for j in 0..i {
                s += a[i] * b[j] * self.gram[i][j];
            }
        }
        if s.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    pub fn gram_matrix(&self) -> Matrix<Q> {
        Matrix::from_rows(self.gram.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect())
    }

    pub fn inverse_gram(&self) -> Result<Matrix<Q>> {
        self.gram_matrix()
            .inverse()
            .ok_or_else(|| Error::Degenerate(format!("gram matrix of {} is singular", self.name)))
    }

    pub fn basis_vector(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|j| i64::from(i == j)).collect()
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.rank()]
    }
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Vec<i64> {
    a.iter().map(|x| x * k).collect()
}
