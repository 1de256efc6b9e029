//! Integrality of the necklace exponential series and the symmetric
//! functions behind its factorisation.

pub mod classes;
pub mod series;
pub mod symmetric;

pub use classes::{expand_e_product, necklace_classes, NecklaceClass};
pub use series::{expand_e_direct, GammaPoly, GammaVar};
pub use symmetric::{h_from_p, p_from_h};

use serde_json::json;

use crate::report::Report;

/// The necklace suite: direct and product expansions of `E`, integrality,
/// window locality and the symmetric-function tables.
pub fn necklace_suite(window_k: i64, degree_bound: usize) -> Report {
    let mut report = Report::new("necklace");
    report.param("window", window_k).param("degree_bound", degree_bound);
    let window = series::symmetric_window(window_k);
    let direct = expand_e_direct(&window, degree_bound);
    let integral = series::all_integral(&direct);
    report.check(
        "E_integral",
        integral,
        json!({"terms": direct.len(), "non_integral": direct.terms().filter(|(_, c)| !c.is_integer()).count()}),
    );
    match necklace_classes(&window, degree_bound) {
        Ok(classes) => {
            report.check("class_exponents_integral", true, json!({"classes": classes.len()}));
            let product = expand_e_product(&classes, degree_bound);
            let diff = direct.sub(&product);
            report.check("E_direct_equals_product", diff.is_zero(), json!({"differing_terms": diff.len()}));
        }
        Err(e) => report.check("class_exponents_integral", false, e.to_string()),
    }
    let small = series::symmetric_window(window_k.max(1));
    let wide = series::symmetric_window(2 * window_k.max(1));
    let spot = degree_bound.min(4);
    let locality = series::restrict_support(&expand_e_direct(&wide, spot), &small) == expand_e_direct(&small, spot);
    report.check("window_locality", locality, json!({"window": window_k, "doubled": 2 * window_k, "degree": spot}));
    let roundtrip = symmetric::roundtrip_is_identity(degree_bound.max(1));
    report.check("h_p_roundtrip", roundtrip, json!({"max_n": degree_bound.max(1)}));
    report
}
