use num_bigint::BigInt;
use smoothhopf::witt::laurent::{is_multiplicative, HomogeneousCurve};
use smoothhopf::witt::{expected_index, rn_closed_form, rn_curve, uplus_index, witt_curve_laurent, witt_suite};
use smoothhopf::Q;

/// `[ε^0..=ε^order] (1 + cε)^e` by repeated multiplication, inverting first for `e < 0`.
fn binomial_series(c: i64, e: i64, order: usize) -> Vec<Q> {
    let mul = |a: &[Q], b: &[Q]| {
        let mut out = vec![Q::from_integer(0.into()); order + 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate().take(order + 1 - i) {
                out[i + j] += x * y;
            }
        }
        out
    };
    let base: Vec<Q> = if e >= 0 {
        (0..=order).map(|k| Q::from_integer(BigInt::from(if k == 0 { 1 } else if k == 1 { c } else { 0 }))).collect()
    } else {
        (0..=order).map(|k| Q::from_integer(BigInt::from(-c).pow(k as u32))).collect()
    };
    let mut out: Vec<Q> = (0..=order).map(|k| Q::from_integer(BigInt::from((k == 0) as i64))).collect();
    for _ in 0..e.unsigned_abs() {
        out = mul(&out, &base);
    }
    out
}

#[test]
fn rn_matches_series_expansion() {
    let order = 4;
    for m in [-1i64, 0, 1, 2] {
        for big_n in [-2i64, -1, 0, 1, 2] {
            for n in -4..=4 {
                let a = binomial_series(1, n - big_n, order);
                let b = binomial_series(m + 1, big_n, order);
                for k in 0..=order {
                    let want: Q = (0..=k).map(|i| &a[i] * &b[k - i]).sum();
                    assert_eq!(Q::from_integer(rn_closed_form(m, big_n, k, n)), want, "m={m} N={big_n} n={n} k={k}");
                }
            }
        }
    }
}

#[test]
fn rn_curve_agrees_with_closed_form() {
    for m in [1i64, 2] {
        for big_n in [-2i64, -1, 1, 2] {
            let c = rn_curve(m, big_n, 3, (-4, 4)).unwrap();
            for k in 0..=3 {
                for n in -4..=4 {
                    assert_eq!(c.coeff(k, n), &rn_closed_form(m, big_n, k, n), "m={m} N={big_n} k={k} n={n}");
                }
            }
            for n in -4..=4 {
                assert_eq!(c.coeff(1, n), &BigInt::from(big_n * m + n));
            }
        }
    }
}

#[test]
fn laurent_curve_coefficients() {
    let c = witt_curve_laurent(1, 4, (-3, 3)).unwrap();
    assert_eq!(c.coeff(0, 5), Q::from_integer(1.into()));
    assert_eq!(c.coeff(1, 5), Q::from_integer((-5).into()));
    assert_eq!(c.coeff(2, 5), Q::from_integer(10.into()));
    assert_eq!(c.coeff(3, -1), Q::from_integer(1.into()));
    assert_eq!(c.table(2)[0], (-3, Q::from_integer(6.into())));
    assert!(is_multiplicative(&c, (-3, 3)).is_none());
    assert!(witt_curve_laurent(-2, 2, (0, 1)).is_err());
}

#[test]
fn uplus_index_small_degrees() {
    let expected = [1u32, 2, 6, 96, 2880];
    for (n, e) in (1..=5).zip(expected) {
        assert_eq!(expected_index(n), BigInt::from(e));
    }
    for n in 1..=4 {
        assert_eq!(uplus_index(n).unwrap().index, expected_index(n), "n={n}");
    }
}

#[test]
fn suite_passes() {
    let r = witt_suite(3, 3, 3).unwrap();
    assert!(r.passed(), "{:?}", r.failures());
}
