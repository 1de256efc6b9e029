use std::collections::BTreeMap;

use smoothhopf::necklace::series::{exponent, gamma_monomial, symmetric_window};
use smoothhopf::necklace::{expand_e_direct, expand_e_product, necklace_classes, GammaPoly};
use smoothhopf::Q;

fn sequences(window: &[i64], len: usize) -> Vec<Vec<i64>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.iter().flat_map(|s| window.iter().map(move |&i| [s.clone(), vec![i]].concat())).collect()
    })
}

/// The exponent of `E` by enumerating every pair of sequences.
fn brute_exponent(window: &[i64], bound: usize) -> BTreeMap<Vec<i64>, Q> {
    let mut out: BTreeMap<Vec<i64>, Q> = BTreeMap::new();
    for m in 1..bound {
        for n in 1..=(bound - m) {
            for i in sequences(window, m) {
                let s: i64 = i.iter().sum();
                if s <= 0 {
                    continue;
                }
                for j in sequences(window, n) {
                    if j.iter().sum::<i64>() != -s {
                        continue;
                    }
                    let mut key = [i.clone(), j].concat();
                    key.sort();
                    *out.entry(key).or_insert_with(|| Q::from_integer(0.into())) += Q::new(s.into(), ((m * n) as i64).into());
                }
            }
        }
    }
    out.retain(|_, c| *c != Q::from_integer(0.into()));
    out
}

fn as_map(p: &GammaPoly) -> BTreeMap<Vec<i64>, Q> {
    p.terms()
        .map(|(m, c)| {
            let mut idx = Vec::new();
            for (v, e) in m.pairs() {
                if let smoothhopf::necklace::GammaVar::Gamma(i) = v {
                    idx.extend(std::iter::repeat_n(*i, *e as usize));
                }
            }
            idx.sort();
            (idx, c.clone())
        })
        .collect()
}

#[test]
fn exponent_matches_enumeration() {
    for (k, bound) in [(1, 6), (2, 5), (3, 4)] {
        let w = symmetric_window(k);
        assert_eq!(as_map(&exponent(&w, bound)), brute_exponent(&w, bound), "window {k} bound {bound}");
    }
}

#[test]
fn low_coefficients() {
    let e = expand_e_direct(&symmetric_window(2), 4);
    let q1 = Q::from_integer(1.into());
    assert_eq!(e.coeff(&gamma_monomial(&[])), q1);
    assert_eq!(e.coeff(&gamma_monomial(&[1, -1])), q1);
    // 1/2 from the square of Γ₁Γ₋₁, 1/2 from (m, n) = (2, 2), and 1 each
    // from (3, 1) and (1, 3).
    assert_eq!(e.coeff(&gamma_monomial(&[1, 1, -1, -1])), Q::from_integer(3.into()));
}

#[test]
fn class_examples() {
    let classes = necklace_classes(&symmetric_window(2), 3).unwrap();
    let find = |i: &[i64], j: &[i64]| classes.iter().find(|c| c.rep_i == i && c.rep_j == j).cloned();
    let c = find(&[1], &[-1]).unwrap();
    assert_eq!((c.m, c.n, c.m_orbit, c.n_orbit, c.exponent), (1, 1, 1, 1, 1));
    let c = find(&[1, 1], &[-2]).unwrap();
    assert_eq!((c.m, c.n, c.m_orbit, c.n_orbit, c.exponent), (2, 1, 1, 1, 1));
    let all = necklace_classes(&symmetric_window(1), 4).unwrap();
    assert!(!all.iter().any(|c| c.rep_i == [1, 1] && c.rep_j == [-1, -1]));
}

#[test]
fn single_class_geometric_series() {
    let classes: Vec<_> = necklace_classes(&[1, -1], 2).unwrap();
    assert_eq!(classes.len(), 1);
    let e = expand_e_product(&classes, 6);
    for k in 0..=3usize {
        let mono: Vec<i64> = std::iter::repeat_n([1, -1], k).flatten().collect();
        assert_eq!(e.coeff(&gamma_monomial(&mono)), Q::from_integer(1.into()));
    }
}

#[test]
fn direct_equals_product_and_integral() {
    let w = symmetric_window(2);
    let direct = expand_e_direct(&w, 6);
    let product = expand_e_product(&necklace_classes(&w, 6).unwrap(), 6);
    assert_eq!(direct, product);
    assert!(direct.terms().all(|(_, c)| c.is_integer()));
}

#[test]
fn symmetric_tables_roundtrip() {
    assert!(smoothhopf::necklace::symmetric::roundtrip_is_identity(6));
}

#[test]
fn suite_passes() {
    let r = smoothhopf::necklace::necklace_suite(2, 5);
    assert!(r.passed(), "{:?}", r.failures());
}
