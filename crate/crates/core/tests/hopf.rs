use num_bigint::BigInt;
use proptest::prelude::*;
use smoothhopf::curve::{CombineMode, Curve};
use smoothhopf::hopf::{
    classify, coproduct, divided_power_product, Classification, DividedPowerElement, GeneratorId, HopfContext, MultiIndex, NCPoly,
    TensorElement,
};
use smoothhopf::Q;

fn ctx() -> HopfContext {
    HopfContext::curves(&['a', 'b'])
}

fn letter(s: char, k: i64) -> NCPoly<Q> {
    NCPoly::letter(GeneratorId::single(s, k))
}

fn one() -> NCPoly<Q> {
    NCPoly::one()
}

#[test]
fn coproduct_of_a2() {
    let got = coproduct(&letter('a', 2), &ctx()).unwrap();
    let want = TensorElement::simple(&letter('a', 2), &one())
        .add(&TensorElement::simple(&letter('a', 1), &letter('a', 1)))
        .add(&TensorElement::simple(&one(), &letter('a', 2)));
    assert_eq!(got, want);
}

#[test]
fn coproduct_of_unit_and_product() {
    assert_eq!(coproduct(&one(), &ctx()).unwrap(), TensorElement::simple(&one(), &one()));
    let ab = letter('a', 1).mul(&letter('b', 1));
    assert_eq!(coproduct(&ab, &ctx()).unwrap().len(), 4);
}

#[test]
fn classification_examples() {
    let c = ctx();
    assert_eq!(classify(&letter('a', 1), &c).unwrap(), Classification::Primitive);
    assert_eq!(classify(&one(), &c).unwrap(), Classification::Grouplike);
    assert_eq!(classify(&letter('a', 1).mul(&letter('a', 1)), &c).unwrap(), Classification::Neither);
    let comm = letter('a', 1).commutator(&letter('b', 1));
    assert_eq!(classify(&comm, &c).unwrap(), Classification::Primitive);
}

#[test]
fn divided_products() {
    let e = |k| MultiIndex::unit(1, 0, k);
    let z = |k, c: i64| DividedPowerElement::<BigInt>::term(e(k), BigInt::from(c));
    assert_eq!(divided_power_product::<BigInt>(&e(1), &e(1)), z(2, 2));
    assert_eq!(divided_power_product::<BigInt>(&e(0), &e(3)), z(3, 1));
    assert_eq!(divided_power_product::<BigInt>(&e(2), &e(3)), z(5, 10));
}

#[test]
fn verschiebung_examples() {
    let e = |k| DividedPowerElement::<BigInt>::basis(MultiIndex::unit(1, 0, k));
    assert_eq!(e(2).verschiebung(2).unwrap(), e(1));
    assert!(e(1).verschiebung(2).unwrap().is_zero());
    let a2 = NCPoly::<BigInt>::letter(GeneratorId::single('a', 2));
    let v = smoothhopf::hopf::verschiebung_ncpoly(&a2, 2, &ctx()).unwrap();
    assert_eq!(v, NCPoly::letter(GeneratorId::single('a', 1)));
}

#[test]
fn antipode_and_combine() {
    let c = Curve::new(vec![one(), letter('a', 1), NCPoly::zero()]);
    let inv = c.inverse().unwrap();
    assert_eq!(inv.coeffs(), &[one(), letter('a', 1).neg(), letter('a', 1).mul(&letter('a', 1))]);
    let scaled = c.combine(None, CombineMode::Scale(0)).unwrap();
    assert_eq!(scaled, Curve::one(&one(), 2));
    let sub = Curve::new(vec![one(), letter('a', 1)]).pad(2).combine(None, CombineMode::SubstitutePower(2)).unwrap();
    assert_eq!(sub.coeffs(), &[one(), NCPoly::zero(), letter('a', 1)]);
}

#[test]
fn inverse_of_divided_curve_alternates() {
    let z = |k: u32| DividedPowerElement::<Q>::basis(MultiIndex::unit(1, 0, k));
    let c = Curve::new((0..5).map(z).collect());
    let inv = c.inverse().unwrap();
    for k in 0..5u32 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        assert_eq!(*inv.coeff(k as usize), z(k).scale(&Q::from_integer(sign.into())));
    }
}

fn binom(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

proptest! {
    #[test]
    fn divided_product_is_binomial(a in proptest::collection::vec(0u32..5, 3), b in proptest::collection::vec(0u32..5, 3)) {
        let (ma, mb) = (MultiIndex(a.clone()), MultiIndex(b.clone()));
        let expected: BigInt = a.iter().zip(&b).map(|(x, y)| binom(x + y, *x)).product();
        let sum = ma.add(&mb);
        let got = divided_power_product::<BigInt>(&ma, &mb);
        prop_assert_eq!(got, DividedPowerElement::term(sum, expected));
    }

    #[test]
    fn divided_coproduct_multiplicative(a in proptest::collection::vec(0u32..4, 2), b in proptest::collection::vec(0u32..4, 2)) {
        let za = DividedPowerElement::<BigInt>::basis(MultiIndex(a));
        let zb = DividedPowerElement::<BigInt>::basis(MultiIndex(b));
        prop_assert!(za.coproduct_is_multiplicative_with(&zb));
        prop_assert!(za.satisfies_counit());
    }

    #[test]
    fn verschiebung_divides_or_vanishes(a in proptest::collection::vec(0u32..9, 2), p in prop::sample::select(vec![2u32, 3, 5])) {
        let z = DividedPowerElement::<BigInt>::basis(MultiIndex(a.clone()));
        let v = z.verschiebung(p).unwrap();
        if a.iter().all(|x| x % p == 0) {
            prop_assert_eq!(v, DividedPowerElement::basis(MultiIndex(a.iter().map(|x| x / p).collect())));
        } else {
            prop_assert!(v.is_zero());
        }
    }

    #[test]
    fn free_coproduct_is_multiplicative(w1 in proptest::collection::vec((0usize..2, 1i64..3), 0..3), w2 in proptest::collection::vec((0usize..2, 1i64..3), 0..3)) {
        let c = ctx();
        let word = |w: &[(usize, i64)]| w.iter().fold(one(), |acc, (f, k)| acc.mul(&letter(['a', 'b'][*f], *k)));
        let (x, y) = (word(&w1), word(&w2));
        let lhs = coproduct(&x.mul(&y), &c).unwrap();
        let rhs = coproduct(&x, &c).unwrap().mul(&coproduct(&y, &c).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn product_of_grouplike_curves() {
    let c = ctx();
    let curve = |s| Curve::new((0..4).map(|k| if k == 0 { one() } else { letter(s, k) }).collect());
    let prod = curve('a').mul(&curve('b')).unwrap();
    assert!(prod.is_grouplike(&c).unwrap());
    assert_eq!(*prod.coeff(1), letter('a', 1).add(&letter('b', 1)));
}

#[test]
fn suite_passes() {
    let r = smoothhopf::hopf::hopf_suite(2, 5, &[2, 3]).unwrap();
    assert!(r.passed(), "{:?}", r.failures());
}
