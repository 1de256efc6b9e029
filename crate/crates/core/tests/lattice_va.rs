use smoothhopf::arith::partition::colored_partition_count;
use smoothhopf::lattice_va::checks::{check_exp_xa0, check_power_modes, null_curve_tau, power_state};
use smoothhopf::lattice_va::integral::{explicit_lattice, integral_closure};
use smoothhopf::lattice_va::modes::{heisenberg, vertex, virasoro};
use smoothhopf::lattice_va::{lattice_va_suite, EvenLattice, FockVector, Space};
use smoothhopf::{Error, Q};

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn qv(v: &[i64]) -> Vec<Q> {
    v.iter().map(|x| q(*x)).collect()
}

#[test]
fn lattice_validation() {
    assert!(matches!(EvenLattice::new("odd", vec![vec![1]]), Err(Error::OddLattice(1))));
    assert!(matches!(EvenLattice::new("asym", vec![vec![0, 1], vec![2, 0]]), Err(Error::Parse(_))));
    assert_eq!(EvenLattice::ii11().rank(), 2);
}

#[test]
fn piece_dimensions_are_coloured_partitions() {
    let space = Space::new(EvenLattice::ii11_squared(), 1, 3);
    assert_eq!(Space::new(EvenLattice::ii11(), 1, 1).piece(&[0, 0], 1).dim(), 2);
    for sector in [vec![0, 0, 0, 0], vec![1, 1, 0, 0], vec![1, -1, 1, 0]] {
        let lo = space.min_weight(&sector);
        for w in lo..=lo + 3 {
            let expected = colored_partition_count(4, (w - lo) as usize);
            assert_eq!(space.piece(&sector, w).dim(), usize::try_from(expected).unwrap());
        }
    }
}

#[test]
fn vertex_on_vacuum() {
    let space = Space::new(EvenLattice::ii11(), 2, 3);
    let vac = FockVector::ground(vec![0, 0]);
    for a in [vec![1, 1], vec![1, 0], vec![1, -1]] {
        assert_eq!(vertex(&space, &a, -1, &vac), FockVector::ground(a.clone()));
        for n in 0..3 {
            assert!(vertex(&space, &a, n, &vac).is_zero());
        }
    }
    assert_eq!(power_state(&space, &[1, 0], 2).sector, vec![2, 0]);
}

#[test]
fn virasoro_on_ground_states() {
    let lat = EvenLattice::ii11();
    let space = Space::new(lat.clone(), 2, 3);
    let ginv = space.inverse_gram_rows().unwrap();
    for b in [vec![1, 1], vec![1, -1], vec![2, 1], vec![0, 0]] {
        let e = FockVector::ground(b.clone());
        assert_eq!(virasoro(&space, &ginv, 0, &e), e.scale(&q(lat.norm(&b) / 2)));
        for n in 1..3 {
            assert!(virasoro(&space, &ginv, n, &e).is_zero());
        }
    }
    assert!(virasoro(&space, &ginv, -1, &FockVector::ground(vec![0, 0])).is_zero());
}

/// `α(1)e^γ` at mode 0 is `Σ_{i≥0} α_{−1−i} e^γ_i + e^γ_{−1−i} α_i`.
#[test]
fn first_null_curve_operator_by_hand() {
    let space = Space::new(EvenLattice::ii11(), 2, 3);
    let (alpha, gamma) = ([1i64, 0], [1i64, 0]);
    for sector in [vec![0, 0], vec![0, 1], vec![1, 1], vec![-1, 1]] {
        let lo = space.min_weight(&sector);
        for w in lo..=lo + 2 {
            let piece = space.piece(&sector, w);
            for idx in 0..piece.dim() {
                let v = piece.vector(idx);
                let got = null_curve_tau(&space, &alpha, &gamma, 1, &v);
                let mut want = FockVector::zero(got.sector.clone());
                for i in 0..8 {
                    let a = heisenberg(&space, &qv(&alpha), 1 + i, &vertex(&space, &gamma, i, &v));
                    let b = vertex(&space, &gamma, -1 - i, &heisenberg(&space, &qv(&alpha), -i, &v));
                    want = want.add(&a).add(&b);
                }
                assert_eq!(got, want, "sector {sector:?} weight {w} basis {idx}");
            }
        }
    }
}

#[test]
fn closure_is_the_schur_lattice() {
    let space = Space::new(EvenLattice::ii11(), 1, 3);
    let form = integral_closure(&space, 64).unwrap();
    for (key, l) in &form.pieces {
        let e = explicit_lattice(&space, key).unwrap();
        assert!(e.contains_lattice(l) && l.contains_lattice(&e), "{key:?}");
    }
}

#[test]
fn zero_mode_exponential_small() {
    let space = Space::new(EvenLattice::ii11(), 1, 3);
    let form = integral_closure(&space, 64).unwrap();
    let r = check_exp_xa0(&space, &form, &[1, 1], 3, 3).unwrap();
    assert!(r.passed(), "{:?}", r.failures());
}

#[test]
fn power_modes_on_a1() {
    let space = Space::new(EvenLattice::a1(), 2, 3);
    for k in 0..=2 {
        for n in -2..=1 {
            let r = check_power_modes(&space, &[1], k, n, 2);
            assert!(r.passed(), "k={k} n={n}: {:?}", r.failures());
        }
    }
}

#[test]
fn suite_on_a1() {
    let space = Space::new(EvenLattice::a1(), 2, 2);
    let r = lattice_va_suite(&space, 2).unwrap();
    assert!(r.passed(), "{:?}", r.failures());
}
