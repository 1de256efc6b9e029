//! The W-module of a norm 0 vector, the `m_{λ,μ}` matrix and transverse
//! space determinants.

pub mod transverse;
pub mod wmodule;

pub use transverse::{discriminant_report, transverse_lattice, w_action_via_modes, TransverseLattice};
pub use wmodule::{m_matrix, m_matrix_certify, w_action};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::json;

use crate::arith::partition::{colored_partition_count, lemma61_check};
use crate::error::Result;
use crate::lattice_va::fock::Space;
use crate::lattice_va::integral::IntegralForm;
use crate::lattice_va::EvenLattice;
use crate::report::Report;
use crate::Q;

/// Test vectors on `II_{1,1} ⊕ II_{1,1}`: `β` of norm 2, 0 and −2, each with
/// two norm 0 vectors `γ` with `|(β,γ)|` equal to 1 and 2.
pub fn desk_cases() -> Vec<(Vec<i64>, Vec<Vec<i64>>)> {
    vec![
        (vec![1, 1, 0, 0], vec![vec![1, 0, 0, 0], vec![1, 1, 1, -1]]),
        (vec![1, 0, 0, 0], vec![vec![0, 1, 0, 0], vec![1, 2, 1, -2]]),
        (vec![1, -1, 0, 0], vec![vec![1, 0, 0, 0], vec![1, -1, 1, 1]]),
    ]
}

pub fn noghost_suite(max_n: usize) -> Result<Report> {
    let mut report = Report::new("noghost");
    report.param("n", max_n);
    for n in 1..=max_n {
        report.merge(m_matrix_certify(n));
    }
    let space = Space::new(EvenLattice::ii11_squared(), 1, 1);
    let form = IntegralForm { pieces: BTreeMap::new(), rounds: 0 };
    for (beta, gammas) in desk_cases() {
        let mut sub = discriminant_report(&space, &form, &beta, &gammas)?;
        sub.suite = format!("discriminant[beta={beta:?}]");
        report.merge(sub);
    }
    report.param("transverse_integral_form", json!("schur lattice e^β ∏ h_λ(b_i)"));
    report.merge(cross_check(3)?);
    report.merge(partition_identities(12));
    Ok(report)
}

/// `∏P(λ) = ∏F(λ) = ∏ i^{Σ_j p(n−ij)}` for `n ≤ max_n`, and the 24-coloured
/// partition counts behind root multiplicities `p_24(1 − α²/2)`.
pub fn partition_identities(max_n: usize) -> Report {
    let mut report = Report::new("partitions");
    for n in 0..=max_n {
        let (a, b, c) = lemma61_check(n);
        report.check(format!("factorial_products[n={n}]"), a == b && b == c, json!([a.to_string(), b.to_string(), c.to_string()]));
    }
    let counts: Vec<String> = (0..=2).map(|n| colored_partition_count(24, n).to_string()).collect();
    report.check("coloured_partitions_24", counts == ["1", "24", "324"], json!(counts));
    report
}

/// `w_action` against the Virasoro and Heisenberg modes of `II_{1,1} ⊕ II_{1,1}`.
pub fn cross_check(max_n: usize) -> Result<Report> {
    let mut report = Report::new("w_action_modes");
    let space = Space::new(EvenLattice::ii11_squared(), 1, max_n as i64 + 1);
    let pairs = [(vec![1, 0, 0, 0], vec![0, 1, 0, 0]), (vec![1, 0, 0, 0], vec![1, 2, 1, -2]), (vec![1, 1, 0, 0], vec![1, 1, 1, -1])];
    for (beta, gamma) in pairs {
        let t = BigInt::from(space.lattice.inner(&beta, &gamma));
        let mut compared = 0usize;
        let mut first_bad = None;
        for n in 1..=max_n {
            let ps = wmodule::canonical_partitions(n);
            for l in &ps {
                for m in &ps {
                    let symbolic = Q::from_integer(w_action(l, m).eval(&t));
                    let direct = w_action_via_modes(&space, &beta, &gamma, &l.parts(), &m.parts())?;
                    compared += 1;
                    if symbolic != direct && first_bad.is_none() {
                        first_bad = Some(json!({ "lambda": l.parts(), "mu": m.parts(), "symbolic": symbolic.to_string(), "modes": direct.to_string() }));
                    }
                }
            }
        }
        report.check(format!("agree[beta={beta:?},gamma={gamma:?}]"), first_bad.is_none(), json!({ "t": t.to_string(), "compared": compared, "first_bad": first_bad }));
    }
    Ok(report)
}
