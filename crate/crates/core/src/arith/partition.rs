//! Integer partitions in exponent (multiplicity) form and their statistics.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::factorial;

/// Partition `1^{i_1} 2^{i_2} ...`; `exponents[k - 1]` is the multiplicity of
/// the part `k`. Trailing zero multiplicities are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    exponents: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// Product of the parts.
    pub product: BigInt,
    /// Product of the factorials of the multiplicities.
    pub multiplicity_factorial: BigInt,
    pub length: usize,
    pub size: usize,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { exponents: Vec::new() }
    }

    pub fn from_exponents(mut exponents: Vec<usize>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Partition { exponents }
    }

    /// Builds a partition from its parts in any order. Zero parts are ignored.
    pub fn from_parts(parts: &[usize]) -> Self {
        let max = parts.iter().copied().max().unwrap_or(0);
        let mut exponents = vec![0; max];
        for &p in parts.iter().filter(|&&p| p > 0) {
            exponents[p - 1] += 1;
        }
        Partition::from_exponents(exponents)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        if part == 0 {
            return 0;
        }
        self.exponents.get(part - 1).copied().unwrap_or(0)
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length());
        for (k, &m) in self.exponents.iter().enumerate().rev() {
            out.extend(std::iter::repeat(k + 1).take(m));
        }
        out
    }

    pub fn size(&self) -> usize {
        self.exponents.iter().enumerate().map(|(k, &m)| (k + 1) * m).sum()
    }

    pub fn length(&self) -> usize {
        self.exponents.iter().sum()
    }

    pub fn largest_part(&self) -> usize {
        self.exponents.len()
    }

    pub fn stats(&self) -> PartitionStats {
        let mut product = BigInt::one();
        let mut mf = BigInt::one();
        for (k, &m) in self.exponents.iter().enumerate() {
            product *= BigInt::from(k + 1).pow(m as u32);
            mf *= factorial(m as u64);
        }
        PartitionStats {
            product,
            multiplicity_factorial: mf,
            length: self.length(),
            size: self.size(),
        }
    }

    /// `λ > μ` in the order used for the m-matrix: compare sorted parts
    /// lexicographically, larger first part wins.
    pub fn dominates_lex(&self, other: &Partition) -> bool {
        self.parts() > other.parts()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.parts();
        if parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, reverse-lexicographic by sorted parts:
/// `4, 3+1, 2+2, 2+1+1, 1+1+1+1`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts(current));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// `p(k)` for `k = 0..=n`.
pub fn partition_counts(n: usize) -> Vec<BigInt> {
    colored_partition_counts(1, n)
}

/// Coefficients of `prod_{k>0} (1 - x^k)^{-colors}` up to `x^n`.
pub fn colored_partition_counts(colors: usize, n: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); n + 1];
    series[0] = BigInt::one();
    // Each colour multiplies by prod_k 1/(1 - x^k); dividing by (1 - x^k) is a
    // running sum with stride k.
    for _ in 0..colors {
        for k in 1..=n {
            for i in k..=n {
                let prev = series[i - k].clone();
                series[i] += prev;
            }
        }
    }
    series
}

pub fn colored_partition_count(colors: usize, n: usize) -> BigInt {
    colored_partition_counts(colors, n)[n].clone()
}

pub fn partition_stats(p: &Partition) -> PartitionStats {
    p.stats()
}

/// `(prod P(λ), prod F(λ), prod_i i^{sum_j p(n - ij)})` over partitions of `n`.
pub fn lemma61_check(n: usize) -> (BigInt, BigInt, BigInt) {
    let mut lhs = BigInt::one();
    let mut rhs = BigInt::one();
    for p in partitions_of(n) {
        let s = p.stats();
        lhs *= s.product;
        rhs *= s.multiplicity_factorial;
    }
    let counts = partition_counts(n);
    let mut closed = BigInt::one();
    for i in 1..=n.max(1) {
        let mut exponent = BigInt::zero();
        let mut j = 1;
        while i * j <= n {
            exponent += &counts[n - i * j];
            j += 1;
        }
        let e: u32 = exponent.try_into().expect("exponent fits in u32 at desk scale");
        closed *= BigInt::from(i).pow(e);
    }
    (lhs, rhs, closed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_count(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| brute_force_count(n - k, k)).sum()
    }

    #[test]
    fn partitions_of_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let four: Vec<Vec<usize>> = partitions_of(4).iter().map(|p| p.parts()).collect();
        assert_eq!(
            four,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(partitions_of(5).len(), 7);
        for n in 0..15 {
            assert_eq!(partitions_of(n).len(), brute_force_count(n, n));
        }
    }

    #[test]
    fn canonical_order_is_strictly_decreasing() {
        let ps = partitions_of(7);
        for w in ps.windows(2) {
            assert!(w[0].dominates_lex(&w[1]));
        }
    }

    #[test]
    fn colored_counts() {
        assert_eq!(colored_partition_count(24, 0), BigInt::from(1));
        assert_eq!(colored_partition_count(24, 1), BigInt::from(24));
        // one part of size 2 (24 ways) or two parts of size 1 (multisets of
        // 2 colours out of 24: 24*25/2 = 300)
        assert_eq!(colored_partition_count(24, 2), BigInt::from(324));
        assert_eq!(colored_partition_count(2, 1), BigInt::from(2));
        for n in 0..=30 {
            assert_eq!(colored_partition_count(1, n), BigInt::from(brute_force_count(n, n)));
        }
    }

    #[test]
    fn stats_examples() {
        let s = Partition::from_parts(&[2, 1, 1]).stats();
        assert_eq!((s.product, s.multiplicity_factorial, s.length, s.size), (2.into(), 2.into(), 3, 4));
        let s = Partition::from_parts(&[3]).stats();
        assert_eq!((s.product, s.multiplicity_factorial, s.length, s.size), (3.into(), 1.into(), 1, 3));
        let s = Partition::from_parts(&[1, 1, 1]).stats();
        assert_eq!((s.product, s.multiplicity_factorial, s.length, s.size), (1.into(), 6.into(), 3, 3));
    }

    #[test]
    fn factorial_products_small() {
        assert_eq!(lemma61_check(1), (1.into(), 1.into(), 1.into()));
        assert_eq!(lemma61_check(3), (6.into(), 6.into(), 6.into()));
        assert_eq!(lemma61_check(4), (96.into(), 96.into(), 96.into()));
        for n in 1..=12 {
            let (a, b, c) = lemma61_check(n);
            assert_eq!(a, b);
            assert_eq!(b, c);
        }
    }
}
