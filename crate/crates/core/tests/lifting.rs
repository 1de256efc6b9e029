use num_bigint::BigInt;
use smoothhopf::curve::Curve;
use smoothhopf::hopf::{coproduct, DividedPowerElement, GeneratorId, HopfContext, MultiIndex, NCPoly, TensorElement};
use smoothhopf::lifting::{
    check_fn_structural, divided_primitive, extend_lifting, seed_lifting, solve_integral_lift, DividedPowerOracle,
};
use smoothhopf::Q;

fn letter(s: char, k: i64) -> NCPoly<Q> {
    NCPoly::letter(GeneratorId::single(s, k))
}

fn qn(n: i64) -> Q {
    Q::from_integer(n.into())
}

#[test]
fn seed_coefficients() {
    let ctx = HopfContext::curves(&['a', 'b']);
    let a = letter('a', 1);
    let s1 = seed_lifting(&a, 1, &ctx).unwrap();
    assert_eq!(s1.coeffs(), &[NCPoly::one(), a.clone()]);
    let s2 = seed_lifting(&a, 2, &ctx).unwrap();
    assert_eq!(*s2.coeff(1), a.scale(&qn(2)));
    assert_eq!(*s2.coeff(2), a.mul(&a).scale(&qn(2)));
    assert!(s2.is_grouplike(&ctx).unwrap());
    let s3 = seed_lifting(&a, 3, &ctx).unwrap();
    let want: Vec<NCPoly<Q>> = [1, 6, 18, 36].iter().enumerate().map(|(i, c)| a.pow(i as u32).scale(&qn(*c))).collect();
    assert_eq!(s3.coeffs(), want.as_slice());
}

#[test]
fn extend_divided_curve() {
    let alg = smoothhopf::lifting::extend::divided_algebra(1);
    let z = |k| DividedPowerElement::<Q>::basis(MultiIndex::unit(1, 0, k));
    let c = Curve::new(vec![z(0), z(1)]);
    let ext = extend_lifting(&c, &DividedPowerOracle { rank: 1 }, &alg).unwrap();
    assert_eq!(ext.coeffs(), &[z(0), z(1), z(2)]);
    let p = divided_primitive::<Q>(1, &[3]);
    assert_eq!(p, z(1).scale(&qn(3)));
}

#[test]
fn commutator_second_coefficient() {
    let ctx = HopfContext::curves(&['a', 'b']);
    let p = letter('a', 1).commutator(&letter('b', 1));
    let c = solve_integral_lift(&p, 2, &ctx).unwrap();
    let c2 = c.coeff(2).clone();
    assert!(c2.is_integral());
    let want = TensorElement::simple(&c2, &NCPoly::one())
        .add(&TensorElement::simple(&p, &p))
        .add(&TensorElement::simple(&NCPoly::one(), &c2));
    assert_eq!(coproduct(&c2, &ctx).unwrap(), want);
}

#[test]
fn zero_and_letter_lifts() {
    let ctx = HopfContext::curves(&['a', 'b']);
    let z = solve_integral_lift(&NCPoly::zero(), 3, &ctx).unwrap();
    assert!(z.coeffs()[1..].iter().all(|x| x.is_zero()));
    let a = solve_integral_lift(&letter('a', 1), 3, &ctx).unwrap();
    assert!(a.is_grouplike(&ctx).unwrap());
    let declared = Curve::new((0..=3).map(|k| if k == 0 { NCPoly::one() } else { letter('a', k) }).collect());
    let right = declared.inverse().unwrap().mul(&a).unwrap();
    assert!(right.is_grouplike(&ctx).unwrap());
    assert!(right.coeff(1).is_zero());
}

#[test]
fn integer_combinations_lift() {
    let ctx = HopfContext::curves(&['a', 'b']);
    let p = letter('a', 1).commutator(&letter('b', 1));
    for r in [-2, 3] {
        let c = solve_integral_lift(&p.scale(&qn(r)), 3, &ctx).unwrap();
        assert!(c.is_grouplike(&ctx).unwrap() && c.coeffs().iter().all(|x| x.is_integral()));
    }
}

#[test]
fn non_primitive_rejected() {
    let ctx = HopfContext::curves(&['a', 'b']);
    assert!(solve_integral_lift(&letter('a', 2), 2, &ctx).is_err());
    assert!(solve_integral_lift(&letter('a', 1).scale(&Q::new(1.into(), 2.into())), 2, &ctx).is_err());
}

#[test]
fn structural_basis_f1_and_f2() {
    let r = check_fn_structural(1, 4);
    assert!(r.passed(), "{:?}", r.failures());
    let r = check_fn_structural(2, 3);
    assert!(r.passed(), "{:?}", r.failures());
}

#[test]
fn height_is_reported() {
    let ctx = HopfContext::curves(&['a', 'b']);
    let c = solve_integral_lift(&letter('a', 1).commutator(&letter('b', 1)), 2, &ctx).unwrap();
    assert!(smoothhopf::lifting::height(&c) >= BigInt::from(1));
}
