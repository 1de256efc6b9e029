use num_bigint::BigInt;
use proptest::prelude::*;
use smoothhopf::arith::lattice::IntLatticeBasis;
use smoothhopf::arith::partition::{colored_partition_count, lemma61_check, partition_counts, partitions_of, Partition};

fn brute_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in (1..=max.min(n)).rev() {
        for mut rest in brute_partitions(n - k, k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

/// Coloured partitions as multisets of (part, colour) pairs.
fn brute_coloured(colors: usize, n: usize) -> usize {
    fn rec(n: usize, max: (usize, usize), colors: usize) -> usize {
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for part in 1..=n.min(max.0) {
            for c in 0..colors {
                if (part, c) <= max {
                    total += rec(n - part, (part, c), colors);
                }
            }
        }
        total
    }
    rec(n, (n, colors), colors)
}

#[test]
fn partitions_match_enumeration() {
    assert_eq!(partitions_of(0).len(), 1);
    let four: Vec<Vec<usize>> = {
        let mut v: Vec<Vec<usize>> = partitions_of(4).iter().map(|p| p.parts()).collect();
        v.sort();
        v
    };
    let mut want = brute_partitions(4, 4);
    want.sort();
    assert_eq!(four, want);
    assert_eq!(partitions_of(5).len(), 7);
    for n in 0..=12 {
        assert_eq!(partitions_of(n).len(), brute_partitions(n, n).len());
    }
}

#[test]
fn coloured_counts() {
    assert_eq!(colored_partition_count(24, 0), BigInt::from(1));
    assert_eq!(colored_partition_count(24, 1), BigInt::from(24));
    assert_eq!(colored_partition_count(24, 2), BigInt::from(324));
    for colors in 1..=3 {
        for n in 0..=6 {
            assert_eq!(colored_partition_count(colors, n), BigInt::from(brute_coloured(colors, n)));
        }
    }
    let p = partition_counts(30);
    for n in 0..=30 {
        assert_eq!(colored_partition_count(1, n), p[n]);
    }
}

#[test]
fn partition_statistics() {
    let s = Partition::from_parts(&[2, 1, 1]).stats();
    assert_eq!((s.product, s.multiplicity_factorial, s.length, s.size), (2.into(), 2.into(), 3, 4));
    let s = Partition::from_parts(&[3]).stats();
    assert_eq!((s.product, s.multiplicity_factorial, s.length, s.size), (3.into(), 1.into(), 1, 3));
    let s = Partition::from_parts(&[1, 1, 1]).stats();
    assert_eq!((s.product, s.multiplicity_factorial, s.length, s.size), (1.into(), 6.into(), 3, 3));
}

#[test]
fn factorial_products() {
    assert_eq!(lemma61_check(1), (1.into(), 1.into(), 1.into()));
    assert_eq!(lemma61_check(3), (6.into(), 6.into(), 6.into()));
    assert_eq!(lemma61_check(4), (96.into(), 96.into(), 96.into()));
    for n in 0..=14 {
        let (a, b, c) = lemma61_check(n);
        assert!(a == b && b == c, "n = {n}");
    }
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

#[test]
fn lattice_examples() {
    let id = IntLatticeBasis::from_generators(&[big(&[1, 0]), big(&[0, 1])], 2).unwrap();
    assert_eq!(id.index_in(&id).unwrap(), BigInt::from(1));
    let sub = IntLatticeBasis::from_generators(&[big(&[2, 0]), big(&[0, 3])], 2).unwrap();
    assert_eq!(sub.index_in(&id).unwrap(), BigInt::from(6));
    let l = IntLatticeBasis::from_generators(&[big(&[2, 0]), big(&[0, 1])], 2).unwrap();
    assert!(!l.membership(&big(&[1, 1])));
    assert!(l.membership(&big(&[4, -3])));
}

proptest! {
    #[test]
    fn hnf_is_canonical(a in proptest::collection::vec(-6i64..7, 3), b in proptest::collection::vec(-6i64..7, 3), c in proptest::collection::vec(-6i64..7, 3)) {
        let l = IntLatticeBasis::from_generators(&[big(&a), big(&b), big(&c)], 3).unwrap();
        let again = IntLatticeBasis::from_generators(&l.scaled_columns().to_vec(), 3).unwrap();
        prop_assert_eq!(&l, &again);
        let shuffled = IntLatticeBasis::from_generators(&[big(&c), big(&a), big(&b)], 3).unwrap();
        prop_assert_eq!(&l, &shuffled);
    }

    #[test]
    fn index_is_multiplicative(d in proptest::collection::vec(1i64..5, 2), e in proptest::collection::vec(1i64..5, 2)) {
        let c = IntLatticeBasis::standard(2);
        let b = IntLatticeBasis::from_generators(&[big(&[d[0], 0]), big(&[0, d[1]])], 2).unwrap();
        let a = IntLatticeBasis::from_generators(&[big(&[d[0] * e[0], 0]), big(&[d[0], d[1] * e[1]])], 2).unwrap();
        prop_assume!(b.contains_lattice(&a));
        prop_assert_eq!(a.index_in(&c).unwrap(), a.index_in(&b).unwrap() * b.index_in(&c).unwrap());
    }
}
