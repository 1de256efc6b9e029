//! Lattice vertex algebras over the rationals with their integral forms.

pub mod checks;
pub mod fock;
pub mod integral;
pub mod lattice;
pub mod modes;
pub mod ops;

pub use fock::{FockGradedPiece, FockPoly, FockVector, OscVar, PieceKey, Space};
pub use lattice::EvenLattice;
pub use ops::{mode_matrix, ModeOp, OpMatrix};

use serde_json::json;

use crate::error::Result;
use crate::report::{Report, Status};

/// The full lattice vertex algebra suite on one space.
pub fn lattice_va_suite(space: &Space, order: u32) -> Result<Report> {
    lattice_va_suite_with(space, order, integral::integral_closure(space, 64))
}

/// As [`lattice_va_suite`], with the closure supplied by the caller.
pub fn lattice_va_suite_with(space: &Space, order: u32, form: Result<integral::IntegralForm>) -> Result<Report> {
    let mut report = Report::new("lattice-va");
    report
        .param("lattice", space.lattice.name.clone())
        .param("sector_window", space.sector_window)
        .param("weight_bound", space.weight_bound)
        .param("order", order);
    report.merge(checks::check_structure(space)?);

    let form = match form {
        Ok(f) => {
            report.check("closure_stabilized", true, json!({ "rounds": f.rounds, "pieces": f.pieces.len() }));
            f
        }
        Err(e) => {
            report.push("closure_stabilized", Status::Fail, json!(e.to_string()));
            return Ok(report);
        }
    };
    let mut mismatch = None;
    for (k, l) in &form.pieces {
        let e = integral::explicit_lattice(space, k)?;
        if !(e.contains_lattice(l) && l.contains_lattice(&e)) {
            mismatch = Some(json!({ "sector": k.sector, "weight": k.weight }));
            break;
        }
    }
    report.check("closure_equals_schur_lattice", mismatch.is_none(), json!({ "first_mismatch": mismatch }));

    let smalls = checks::small_vectors(space);
    let lat = &space.lattice;
    let norm2 = smalls.iter().find(|a| lat.norm(a) == 2).cloned();
    let null = smalls.iter().find(|a| lat.norm(a) == 0).cloned();
    let top = space.weight_bound.min(3);
    for a in norm2.iter().chain(null.iter()) {
        for k in 0..=order.min(3) {
            for n in -2..=1 {
                report.merge(checks::check_power_modes(space, a, k, n, top.min(2)));
            }
        }
    }
    match &norm2 {
        Some(a) => report.merge(checks::check_exp_xa0(space, &form, a, order, space.weight_bound)?),
        None => report.push("exp_xa0", Status::Skip, json!("no norm 2 vector in the window")),
    }
    match &null {
        Some(g) => report.merge(checks::check_null_curve(space, &form, g, g, order, top)?),
        None => report.push("null_curve", Status::Skip, json!("no nonzero norm 0 vector in the window")),
    }
    report.merge(checks::verify_commutators(space, space.weight_bound.min(2), 2)?);
    Ok(report)
}
