//! Free bialgebras on group-like curves and primitive letters, and
//! divided-power algebras.

pub mod context;
pub mod coproduct;
pub mod divided;
pub mod ncpoly;
pub mod tensor;

pub use context::{Family, FamilyKind, GeneratorId, HopfContext};
pub use coproduct::{classify, coproduct, verschiebung_ncpoly, Classification};
pub use divided::{divided_power_product, DividedPowerElement, MultiIndex};
pub use ncpoly::{NCPoly, Word};
pub use tensor::TensorElement;

use num_bigint::BigInt;
use serde_json::json;

use crate::curve::{Curve, DividedPowerAlgebra};
use crate::error::Result;
use crate::report::Report;
use crate::Q;

/// Words in the curve families `a`, `b` of total degree at most `bound`.
pub fn curve_words(ctx: &HopfContext, bound: i64) -> Vec<Word> {
    let mut out: Vec<Word> = vec![Vec::new()];
    let mut frontier: Vec<(Word, i64)> = vec![(Vec::new(), 0)];
    while let Some((w, d)) = frontier.pop() {
        for f in ctx.families() {
            for k in 1..=(bound - d) {
                let mut next = w.clone();
                next.push(GeneratorId::single(f.symbol, k));
                out.push(next.clone());
                frontier.push((next, d + k));
            }
        }
    }
    out.sort();
    out
}

/// Axioms of the divided-power algebra on `Z^rank` multi-indices of size at
/// most `bound`, and of the free bialgebra on two curve families.
pub fn hopf_suite(rank: usize, bound: u32, primes: &[u32]) -> Result<Report> {
    let mut report = Report::new("hopf");
    report.param("rank", rank).param("size_bound", bound).param("primes", json!(primes));
    let indices = MultiIndex::all_up_to(rank, bound);
    let bad = indices.iter().filter(|a| !divided::coassociative_on(a)).count();
    report.check("divided_coassociative", bad == 0, json!({ "indices": indices.len(), "failures": bad }));
    let bad = indices.iter().filter(|a| !DividedPowerElement::<BigInt>::basis((*a).clone()).satisfies_counit()).count();
    report.check("divided_counit", bad == 0, json!({ "indices": indices.len(), "failures": bad }));
    let mut pairs = 0usize;
    let mut bad = Vec::new();
    let mut assoc_bad = 0usize;
    for a in &indices {
        for b in &indices {
            if a.size() + b.size() > bound {
                continue;
            }
            pairs += 1;
            let za = DividedPowerElement::<BigInt>::basis(a.clone());
            let zb = DividedPowerElement::<BigInt>::basis(b.clone());
            if !za.coproduct_is_multiplicative_with(&zb) && bad.len() < 3 {
                bad.push(json!([format!("{a:?}"), format!("{b:?}")]));
            }
            for c in indices.iter().filter(|c| c.size() + a.size() + b.size() <= bound && c.size() <= 2) {
                let zc = DividedPowerElement::<BigInt>::basis(c.clone());
                if za.mul(&zb).mul(&zc) != za.mul(&zb.mul(&zc)) {
                    assoc_bad += 1;
                }
            }
        }
    }
    report.check("divided_homomorphism", bad.is_empty(), json!({ "pairs": pairs, "failures": bad }));
    report.check("divided_associative", assoc_bad == 0, json!({ "failures": assoc_bad }));
    for &p in primes {
        let mut failures = 0usize;
        for a in &indices {
            let v = DividedPowerElement::<BigInt>::basis(a.clone()).verschiebung(p)?;
            let expected = match a.divide(p) {
                Some(b) => DividedPowerElement::basis(b),
                None => DividedPowerElement::zero(rank),
            };
            failures += usize::from(v != expected);
        }
        report.check(format!("verschiebung[p={p}]"), failures == 0, json!({ "indices": indices.len(), "failures": failures }));
    }
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i..] {
            let mut failures = 0usize;
            for a in indices.iter().filter(|a| a.size() * p * q <= 3 * bound) {
                let big = (0..p * q).fold(MultiIndex::zero(rank), |acc, _| acc.add(a));
                let once = DividedPowerElement::<BigInt>::basis(big).verschiebung(q)?;
                failures += usize::from(once.verschiebung(p)? != DividedPowerElement::basis(a.clone()));
            }
            report.check(format!("verschiebung_composite[p={p},q={q}]"), failures == 0, json!({ "failures": failures }));
        }
    }

    let ctx = HopfContext::curves(&['a', 'b']);
    let words = curve_words(&ctx, 4);
    let mut coassoc = 0usize;
    let mut counit = 0usize;
    for w in &words {
        let x = NCPoly::<Q>::monomial(w.clone(), Q::from_integer(1.into()));
        coassoc += usize::from(!coproduct::is_coassociative_on(&x, &ctx)?);
        counit += usize::from(!coproduct::satisfies_counit(&x, &ctx)?);
    }
    report.check("free_coassociative", coassoc == 0, json!({ "words": words.len(), "failures": coassoc }));
    report.check("free_counit", counit == 0, json!({ "words": words.len(), "failures": counit }));
    let short: Vec<&Word> = words.iter().filter(|w| w.len() <= 2 && w.iter().map(|g| g.total_index()).sum::<i64>() <= 2).collect();
    let mut hom = 0usize;
    for u in &short {
        for v in &short {
            let x = NCPoly::<Q>::monomial((*u).clone(), Q::from_integer(1.into()));
            let y = NCPoly::<Q>::monomial((*v).clone(), Q::from_integer(1.into()));
            hom += usize::from(coproduct(&x.mul(&y), &ctx)? != coproduct(&x, &ctx)?.mul(&coproduct(&y, &ctx)?));
        }
    }
    report.check("free_homomorphism", hom == 0, json!({ "pairs": short.len() * short.len(), "failures": hom }));
    for &p in primes {
        let mut failures = 0usize;
        for w in &words {
            let x = NCPoly::<BigInt>::monomial(w.clone(), BigInt::from(1));
            failures += usize::from(!coproduct::verschiebung_is_comultiplicative(&x, p as u64, &ctx)?);
        }
        report.check(format!("free_verschiebung[p={p}]"), failures == 0, json!({ "words": words.len(), "failures": failures }));
    }
    let order = 4;
    let curve = |s: char| {
        let mut c = vec![NCPoly::<Q>::one()];
        c.extend((1..=order as i64).map(|k| NCPoly::letter(GeneratorId::single(s, k))));
        Curve::new(c)
    };
    let (a, b) = (curve('a'), curve('b'));
    let ab = a.mul(&b)?;
    let gl = a.is_grouplike(&ctx)? && b.is_grouplike(&ctx)? && ab.is_grouplike(&ctx)?;
    report.check("grouplike_product", gl, json!({ "order": order }));
    let alg = DividedPowerAlgebra(rank.max(1));
    let z = |i: usize| {
        Curve::new((0..=order as u32).map(|k| DividedPowerElement::<Q>::basis(MultiIndex::unit(rank.max(1), i, k))).collect())
    };
    let zz = z(0).mul(&z(rank.max(1) - 1))?;
    report.check("grouplike_product_divided", zz.is_grouplike(&alg)?, json!({ "order": order }));
    Ok(report)
}
