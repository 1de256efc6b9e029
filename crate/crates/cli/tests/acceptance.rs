//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use smoothhopf::arith::partition::{colored_partition_count, lemma61_check};
use smoothhopf::hopf::{hopf_suite, GeneratorId, HopfContext, NCPoly};
use smoothhopf::lattice_va::checks::{check_exp_xa0, check_power_modes, check_null_curve, verify_virasoro_brackets};
use smoothhopf::lattice_va::integral::integral_closure;
use smoothhopf::lattice_va::{EvenLattice, PieceKey, Space};
use smoothhopf::lifting::{check_fn_structural, solve_integral_lift};
use smoothhopf::necklace::necklace_suite;
use smoothhopf::noghost::{desk_cases, discriminant_report, m_matrix_certify};
use smoothhopf::report::{Report, Status};
use smoothhopf::witt::{rn_curve, uplus_index, witt_suite};
use smoothhopf::{Q, Z as BigInt};

type Outcome = Result<String, String>;

fn all_pass(r: &Report, filter: impl Fn(&str) -> bool) -> Outcome {
    let selected: Vec<_> = r.checks.iter().filter(|c| filter(&c.id)).collect();
    if selected.is_empty() {
        return Err("no checks selected".into());
    }
    match selected.iter().find(|c| c.status != Status::Pass) {
        Some(c) => Err(format!("{} {:?}: {}", c.id, c.status, c.witness)),
        None => Ok(format!("{} checks", selected.len())),
    }
}

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c1() -> Outcome {
    for n in 0..=12 {
        let (a, b, c) = lemma61_check(n);
        if a != b || b != c {
            return Err(format!("n={n}: {a} {b} {c}"));
        }
    }
    Ok("n <= 12".into())
}

fn c2() -> Outcome {
    let r = necklace_suite(3, 6);
    all_pass(&r, |id| id == "E_integral" || id == "E_direct_equals_product" || id == "class_exponents_integral")
}

fn c3() -> Outcome {
    let r = hopf_suite(2, 8, &[2, 3]).map_err(|e| e.to_string())?;
    all_pass(&r, |id| id.starts_with("divided_") || id.starts_with("verschiebung"))
}

fn c4() -> Outcome {
    let ctx = HopfContext::curves(&['a', 'b']);
    let a = NCPoly::<Q>::letter(GeneratorId::single('a', 1));
    let b = NCPoly::<Q>::letter(GeneratorId::single('b', 1));
    let c = solve_integral_lift(&a.commutator(&b), 4, &ctx).map_err(|e| e.to_string())?;
    let integral = c.coeffs().iter().all(|x| x.is_integral());
    let grouplike = c.is_grouplike(&ctx).map_err(|e| e.to_string())?;
    ensure(integral && grouplike && c.order() == 4, format!("integral={integral} grouplike={grouplike}"))
}

fn c5() -> Outcome {
    all_pass(&check_fn_structural(1, 4), |_| true)
}

fn ii11(window: i64, weight: i64) -> Space {
    Space::new(EvenLattice::ii11(), window, weight)
}

fn c6() -> Outcome {
    let space = ii11(1, 4);
    let form = integral_closure(&space, 64).map_err(|e| e.to_string())?;
    let r = check_exp_xa0(&space, &form, &[1, 1], 4, 4).map_err(|e| e.to_string())?;
    all_pass(&r, |id| id.starts_with("exp_xa0[k="))
}

fn c7() -> Outcome {
    let space = ii11(1, 3);
    let mut count = 0;
    for alpha in [[1i64, 1], [1, 0]] {
        for k in 0..=2 {
            for n in -2..=1 {
                let r = check_power_modes(&space, &alpha, k, n, 3);
                all_pass(&r, |_| true)?;
                count += r.checks.len();
            }
        }
    }
    Ok(format!("{count} checks"))
}

fn c8() -> Outcome {
    let space = ii11(1, 3);
    let form = integral_closure(&space, 64).map_err(|e| e.to_string())?;
    let r = check_null_curve(&space, &form, &[1, 0], &[1, 0], 3, 3).map_err(|e| e.to_string())?;
    all_pass(&r, |_| true)
}

fn c9() -> Outcome {
    for big_n in [-2, -1, 1] {
        for m in [1, 2] {
            rn_curve(m, big_n, 3, (-5, 5)).map_err(|e| format!("N={big_n} m={m}: {e}"))?;
        }
    }
    let w = witt_suite(3, 5, 5).map_err(|e| e.to_string())?;
    all_pass(&w, |id| {
        id.starts_with("witt_bracket") || ["N=-2", "N=-1", "N=1,"].iter().any(|t| id.starts_with(&format!("rn_curve[{t}")))
    })?;
    let sectors: [&[i64]; 4] = [&[0, 0, 0, 0], &[1, 1, 0, 0], &[1, 0, 0, 0], &[1, -1, 0, 0]];
    let lattices = [
        (EvenLattice::ii11(), 1, 2, 2, None),
        (EvenLattice::ii11_squared(), 1, 1, 1, Some(sectors)),
        (EvenLattice::a1(), 2, 2, 2, None),
    ];
    let mut pieces = 0;
    for (lat, win, wt, bound, only) in lattices {
        let space = Space::new(lat, win, wt);
        let keys: Vec<PieceKey> = space
            .piece_keys(wt)
            .into_iter()
            .filter(|k| only.is_none_or(|s| s.contains(&k.sector.as_slice())))
            .collect();
        pieces += keys.len();
        let r = verify_virasoro_brackets(&space, &keys, bound).map_err(|e| e.to_string())?;
        all_pass(&r, |_| true)?;
    }
    Ok(format!("integral R_N matrices, brackets on {pieces} pieces of 3 lattices"))
}

fn c10() -> Outcome {
    let expected = [1u32, 2, 6, 96, 2880];
    for (i, e) in expected.iter().enumerate() {
        let got = uplus_index(i + 1).map_err(|e| e.to_string())?.index;
        if got != BigInt::from(*e) {
            return Err(format!("n={}: {got} != {e}", i + 1));
        }
    }
    Ok("1 2 6 96 2880".into())
}

fn c11() -> Outcome {
    let mut n_checks = 0;
    for n in 1..=6 {
        let r = m_matrix_certify(n);
        all_pass(&r, |_| true)?;
        n_checks += r.checks.len();
    }
    Ok(format!("{n_checks} certificates"))
}

fn c12() -> Outcome {
    let space = Space::new(EvenLattice::ii11_squared(), 1, 1);
    let form = integral_closure(&space, 64).map_err(|e| e.to_string())?;
    let mut dets = Vec::new();
    for (beta, gammas) in desk_cases() {
        let r = discriminant_report(&space, &form, &beta, &gammas).map_err(|e| e.to_string())?;
        all_pass(&r, |_| true)?;
        dets.extend(r.checks.iter().filter_map(|c| c.witness.get("determinant").map(|d| d.to_string())));
    }
    Ok(format!("determinants {}", dets.join(" ")))
}

fn c13() -> Outcome {
    let got: Vec<BigInt> = (0..=2).map(|n| colored_partition_count(24, n)).collect();
    ensure(got == [1, 24, 324].map(BigInt::from), format!("{got:?}"))
}

fn c14() -> Outcome {
    let configs = concat!(env!("CARGO_MANIFEST_DIR"), "/configs");
    let runs: [&[&str]; 3] = [
        &["noghost", "--n", "4"],
        &["necklace", "--window", "2", "--degree", "4"],
        &["lattice-va", "--lattice", &format!("{configs}/A1.cfg"), "--weight", "2", "--order", "2"],
    ];
    let mut n = 0;
    for args in runs {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let cache = dir.path();
        let run = |with_cache: bool| {
            let mut cmd = Command::new(env!("CARGO_BIN_EXE_verify"));
            cmd.args(args).arg("--json");
            if with_cache {
                cmd.arg("--cache-dir").arg(cache);
            }
            cmd.output().map_err(|e| e.to_string())
        };
        let outs = [run(false)?, run(true)?, run(true)?];
        if outs.iter().any(|o| o.status.code() != Some(0)) {
            return Err(format!("{args:?}: nonzero exit"));
        }
        if outs.iter().any(|o| o.stdout != outs[0].stdout) {
            return Err(format!("{args:?}: reports differ"));
        }
        n += 1;
    }
    Ok(format!("{n} configs, 3 runs each"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("partition products and the closed form agree for n <= 12", c1),
        ("necklace series integral, direct equals product", c2),
        ("divided-power bialgebra axioms and Verschiebung", c3),
        ("integral group-like lift of [a1, b1] to order 4", c4),
        ("structural basis of F_1 to degree 4", c5),
        ("a0^k/k! preserves the integral form on II11", c6),
        ("power-state mode identity on II11", c7),
        ("null-vector curve preserves the integral form on II11", c8),
        ("R_N curves integral; Virasoro brackets on shipped lattices", c9),
        ("uplus index for n <= 5", c10),
        ("m matrix certificates for n <= 6", c11),
        ("transverse discriminants on II11+II11", c12),
        ("24-coloured partition counts", c13),
        ("CLI reports byte-identical across runs", c14),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = f();
        let dt: Duration = t.elapsed();
        match out {
            Ok(d) => println!("criterion {:>2} PASS  {name} ({d}; {:.2?})", i + 1, dt),
            Err(d) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({d}; {:.2?})", i + 1, dt);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
