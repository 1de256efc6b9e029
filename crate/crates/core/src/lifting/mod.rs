//! Group-like liftings: seeds, extension, and integral lifting by exact
//! linear solving.

pub mod extend;
pub mod primitives;
pub mod solver;
pub mod structural;

pub use extend::{divided_primitive, extend_lifting, seed_lifting, DividedPowerOracle, LiftingOracle, SolverOracle};
pub use solver::solve_integral_lift;
pub use structural::check_fn_structural;
pub use solver::height;

use serde_json::json;

use crate::curve::Curve;
use crate::error::Result;
use crate::hopf::{GeneratorId, HopfContext, NCPoly};
use crate::report::Report;
use crate::Q;

fn letter(s: char, k: i64) -> NCPoly<Q> {
    NCPoly::letter(GeneratorId::single(s, k))
}

fn certify(report: &mut Report, id: String, c: Result<Curve<NCPoly<Q>>>, ctx: &HopfContext) {
    match c {
        Ok(c) => {
            let integral = c.coeffs().iter().all(|x| x.is_integral());
            let grouplike = c.is_grouplike(ctx).unwrap_or(false);
            report.check(
                id,
                integral && grouplike,
                json!({ "order": c.order(), "integral": integral, "grouplike": grouplike, "height": solver::height(&c).to_string() }),
            );
        }
        Err(e) => report.check(id, false, e.to_string()),
    }
}

/// Integral liftings in the two-family universal example, closure under
/// integer combinations, extension, and the structural basis of `F_n`.
pub fn lifting_suite(order: usize, structural_bound: usize) -> Result<Report> {
    let mut report = Report::new("lifting");
    report.param("order", order).param("structural_bound", structural_bound);
    let ctx = HopfContext::curves(&['a', 'b']);
    let c1 = letter('a', 1).commutator(&letter('b', 1));
    for k in 1..=order {
        certify(&mut report, format!("commutator_lift[order={k}]"), solve_integral_lift(&c1, k, &ctx), &ctx);
    }

    let p = letter('a', 1).commutator(&c1);
    let q = letter('a', 1).mul(&letter('a', 1)).sub(&letter('a', 2).scale(&Q::from_integer(2.into()))).commutator(&letter('b', 1));
    let combos = [
        ("p", p.clone()),
        ("q", q.clone()),
        ("p+q", p.add(&q)),
        ("3p-2q", p.scale(&Q::from_integer(3.into())).sub(&q.scale(&Q::from_integer(2.into())))),
    ];
    for (name, x) in combos {
        certify(&mut report, format!("combination_lift[{name}]"), solve_integral_lift(&x, 2, &ctx), &ctx);
    }

    let short = solve_integral_lift(&c1, 2, &ctx)?;
    match extend_lifting(&short, &SolverOracle { ctx: &ctx }, &ctx) {
        Ok(ext) => {
            let restricts = ext.truncate(2) == short;
            let grouplike = ext.is_grouplike(&ctx)?;
            report.check("extend_restriction", restricts && grouplike, json!({ "from": 2, "to": ext.order(), "restricts": restricts, "grouplike": grouplike }));
        }
        Err(e) => report.check("extend_restriction", false, e.to_string()),
    }
    let alg = extend::divided_algebra(2);
    let seed = seed_lifting(&divided_primitive::<Q>(2, &[1, -1]), 2, &alg)?;
    match extend_lifting(&seed, &DividedPowerOracle { rank: 2 }, &alg) {
        Ok(ext) => {
            let restricts = ext.truncate(2) == seed;
            let grouplike = ext.is_grouplike(&alg)?;
            report.check("extend_divided", restricts && grouplike, json!({ "restricts": restricts, "grouplike": grouplike }));
        }
        Err(e) => report.check("extend_divided", false, e.to_string()),
    }
    report.merge(check_fn_structural(1, structural_bound));
    Ok(report)
}
