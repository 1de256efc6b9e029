use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use smoothhopf::arith::partition::Partition;
use smoothhopf::lattice_va::integral::IntegralForm;
use smoothhopf::lattice_va::{EvenLattice, Space};
use smoothhopf::noghost::wmodule::TPoly;
use smoothhopf::noghost::{cross_check, desk_cases, m_matrix, m_matrix_certify, noghost_suite, transverse_lattice, w_action};
use smoothhopf::Error;

fn t(coeffs: &[i64]) -> TPoly {
    TPoly::new(coeffs.iter().map(|c| BigInt::from(*c)).collect())
}

fn p(parts: &[usize]) -> Partition {
    Partition::from_parts(parts)
}

fn empty_form() -> IntegralForm {
    IntegralForm { pieces: BTreeMap::new(), rounds: 0 }
}

#[test]
fn w_action_examples() {
    assert_eq!(w_action(&p(&[1]), &p(&[1])), t(&[0, 1]));
    assert_eq!(w_action(&p(&[2]), &p(&[2])), t(&[0, 2]));
    assert_eq!(w_action(&p(&[2]), &p(&[1, 1])), t(&[]));
    assert_eq!(w_action(&p(&[1, 1]), &p(&[1, 1])), t(&[0, 0, 2]));
    assert_eq!(w_action(&p(&[1]), &p(&[2])), t(&[]));
}

#[test]
fn m_matrix_small() {
    let (parts, m) = m_matrix(2);
    assert_eq!(parts.len(), 2);
    assert_eq!(m.len(), 2);
    let r = m_matrix_certify(2);
    assert!(r.passed(), "{:?}", r.failures());
    for n in 1..=5 {
        assert!(m_matrix_certify(n).passed(), "n={n}");
    }
}

#[test]
fn transverse_ranks_and_units() {
    let space = Space::new(EvenLattice::ii11_squared(), 1, 1);
    let form = empty_form();
    let ranks = [1usize, 2, 5];
    for ((beta, gammas), rank) in desk_cases().into_iter().zip(ranks) {
        for gamma in gammas {
            let tl = transverse_lattice(&space, &form, &beta, &gamma).unwrap();
            assert_eq!(tl.rank(), rank, "beta={beta:?} gamma={gamma:?}");
        }
    }
    let tl = transverse_lattice(&space, &form, &[1, 1, 0, 0], &[1, 0, 0, 0]).unwrap();
    assert!(tl.determinant().abs() == BigInt::from(1));
}

#[test]
fn transverse_errors() {
    let space = Space::new(EvenLattice::ii11_squared(), 2, 1);
    let form = empty_form();
    assert!(matches!(transverse_lattice(&space, &form, &[2, 1, 0, 0], &[1, 0, 0, 0]), Err(Error::EmptyWindow(_))));
    assert!(matches!(transverse_lattice(&space, &form, &[1, 0, 0, 0], &[1, 0, 0, 0]), Err(Error::Degenerate(_))));
    assert!(matches!(transverse_lattice(&space, &form, &[1, 0, 0, 0], &[1, 1, 0, 0]), Err(Error::Degenerate(_))));
}

#[test]
fn symbolic_action_matches_modes() {
    let r = cross_check(3).unwrap();
    assert!(r.passed(), "{:?}", r.failures());
}

#[test]
fn suite_passes() {
    let r = noghost_suite(4).unwrap();
    assert!(r.passed(), "{:?}", r.failures());
}
