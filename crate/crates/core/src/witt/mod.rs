//! The Witt and Virasoro algebras: automorphism curves of Laurent
//! polynomials, the modules `R_N`, the index of `U(Witt_{≥1})` in
//! `U⁺(Witt_{≥1})`, and the integrality of `x L_0 + y c/2`.

pub mod laurent;
pub mod pinning;
pub mod rn;
pub mod uplus;

pub use laurent::{grouplike_from_automorphism, witt_curve_laurent, HomogeneousCurve, LaurentOpCurve};
pub use rn::{rn_closed_form, rn_curve, RnCurve};
pub use uplus::{expected_index, uplus_index};

use serde_json::json;

use crate::arith::partition::{lemma61_check, partition_counts};
use crate::error::Result;
use crate::hopf::NCPoly;
use crate::report::Report;
use crate::scalar::{binomial_i, q, qr};
use laurent::{act_on_laurent, reproduces, witt_context, witt_letter, FnCurve};

/// Every Witt-algebra check at the given order and window half-width.
pub fn witt_suite(order: usize, half_width: i64, max_index_degree: usize) -> Result<Report> {
    let mut report = Report::new("witt");
    report.param("order", order).param("window", half_width).param("index_degree", max_index_degree);
    let window = (-half_width, half_width);
    let ctx = witt_context();

    for m in [-1i64, 0, 1, 2] {
        let a = witt_curve_laurent(m, order, window)?;
        let ok0 = (window.0..=window.1).all(|n| a.coeff(0, n) == q(1));
        let ok1 = (window.0..=window.1).all(|n| a.coeff(1, n) == q(-n));
        report.check(format!("laurent[m={m}]/identity_and_L_m"), ok0 && ok1, json!({ "window": [window.0, window.1] }));
        if m == 1 && order >= 2 {
            let ok2 = (window.0..=window.1).all(|n| a.coeff(2, n) == Q::from_integer(binomial_i(n, 2)));
            report.check("laurent[m=1]/second_coefficient", ok2, json!("C(n,2)"));
        }
        report.check_result(format!("laurent[m={m}]/grouplike_lift"), grouplike_from_automorphism(&a, window), |g| {
            let grouplike = g.is_grouplike(&ctx).unwrap_or(false);
            let first = g.coeff(1) == &NCPoly::letter(witt_letter(m));
            let same = reproduces(&g, &a, window);
            (grouplike && first && same, json!({ "grouplike": grouplike, "first_is_L_m": first, "reproduces": same }))
        });
        let twin = FnCurve { m, order, f: |k: usize, n: i64| a.coeff(k, n) };
        let unique = match (grouplike_from_automorphism(&a, window), grouplike_from_automorphism(&twin, window)) {
            (Ok(g), Ok(h)) => g == h,
            _ => false,
        };
        report.check(format!("laurent[m={m}]/uniqueness"), unique, json!({}));
    }
    let identity = FnCurve { m: 1, order, f: |k: usize, _n: i64| if k == 0 { q(1) } else { q(0) } };
    report.check_result("identity_curve", grouplike_from_automorphism(&identity, window), |g| {
        let ok = g.coeff(0) == &NCPoly::one() && (1..=order).all(|k| g.coeff(k).is_zero());
        (ok, json!({}))
    });
    let bad = FnCurve { m: 1, order, f: |k: usize, n: i64| if k == 1 { q(n * n) } else { q(i64::from(k == 0)) } };
    report.check(
        "non_automorphism_rejected",
        grouplike_from_automorphism(&bad, window).is_err(),
        json!("x^n ↦ x^n + ε n² x^{n+1}"),
    );

    let laurent_bracket = (-2..=2).all(|a: i64| {
        (-2..=2).all(|b: i64| {
            (window.0..=window.1).all(|n| {
                let la = NCPoly::letter(witt_letter(a));
                let lb = NCPoly::letter(witt_letter(b));
                let lhs = la.mul(&lb).sub(&lb.mul(&la));
                let rhs = NCPoly::letter(witt_letter(a + b)).scale(&q(a - b));
                act_on_laurent(&lhs, n) == act_on_laurent(&rhs, n)
            })
        })
    });
    report.check("witt_bracket/laurent", laurent_bracket, json!({ "modes": [-2, 2] }));

    for big_n in [-2i64, -1, 0, 1, 2] {
        let bracket = (-2..=2).all(|a: i64| {
            (-2..=2).all(|b: i64| {
                (window.0..=window.1).all(|n| {
                    let la = NCPoly::letter(witt_letter(a));
                    let lb = NCPoly::letter(witt_letter(b));
                    let lhs = la.mul(&lb).sub(&lb.mul(&la));
                    let rhs = NCPoly::letter(witt_letter(a + b)).scale(&q(a - b));
                    rn::act_on_rn(&lhs, big_n, n) == rn::act_on_rn(&rhs, big_n, n)
                })
            })
        });
        report.check(format!("witt_bracket/R[N={big_n}]"), bracket, json!({ "modes": [-2, 2] }));
        for m in [1i64, 2] {
            let id = format!("rn_curve[N={big_n},m={m}]");
            report.check_result(id, rn_curve(m, big_n, order, window), |c| {
                let first = (window.0..=window.1).all(|n| *c.coeff(1, n) == (big_n * m + n).into());
                let closed = (0..=order).all(|k| (window.0..=window.1).all(|n| *c.coeff(k, n) == rn_closed_form(m, big_n, k, n)));
                let plus = FnCurve { m, order, f: |k: usize, n: i64| Q::from_integer(binomial_i(n, k as u64)) };
                let pushed = grouplike_from_automorphism(&plus, window).map(|g| {
                    (0..=order).all(|k| {
                        (window.0..=window.1).all(|n| {
                            let img = rn::act_on_rn(g.coeff(k), big_n, n);
                            let c = Q::from_integer(c.coeff(k, n).clone());
                            let mut expected = std::collections::BTreeMap::new();
                            if c != q(0) {
                                expected.insert(n + k as i64 * m, c);
                            }
                            img == expected
                        })
                    })
                });
                let pushed = pushed.unwrap_or(false);
                (first && closed && pushed, json!({ "integral": true, "first_coefficient": first, "closed_form": closed, "grouplike_pushforward": pushed }))
            });
        }
    }

    let counts = partition_counts(max_index_degree);
    for n in 1..=max_index_degree {
        report.check_result(format!("uplus_index[n={n}]"), uplus_index(n), |r| {
            let expected = expected_index(n);
            let (_, products, _) = lemma61_check(n);
            let ok = r.index == expected && r.index == products && BigInt::from(r.rank) == counts[n];
            (ok, json!({ "index": r.index.to_string(), "expected": expected.to_string(), "variables": r.variables, "dimension": r.rank }))
        });
    }

    let dims = [2, 4];
    report.check_result("degree0_pinning", pinning::admissible_lattice(&dims, 4), |l| {
        let unit = pinning::is_admissible(&[q(1), q(0)], &dims, 4).is_none();
        let half = [qr(1, 2), qr(1, 2)];
        let passes_two = pinning::is_admissible(&half, &[2], 1).is_none();
        let fails_four = pinning::is_admissible(&half, &[4], 1) == Some((1, 4));
        let ok = pinning::is_standard(&l) && unit && passes_two && fails_four;
        (ok, json!({ "admissible": l.to_string(), "half_half_passes_c2_m1": passes_two, "half_half_fails_c4_m1": fails_four }))
    });
    Ok(report)
}

use crate::Q;
use num_bigint::BigInt;
