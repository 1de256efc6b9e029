//! Dispatch from a configuration to the module suites.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use smoothhopf::lattice_va::integral::{integral_closure, IntegralForm};
use smoothhopf::lattice_va::{lattice_va_suite_with, EvenLattice, PieceKey, Space};
use smoothhopf::arith::lattice::IntLatticeBasis;
use smoothhopf::report::{Check, Report, Status};

use crate::cache::{sha256_hex, Cache};
use crate::config::{load_lattice_config, Suite, SuiteConfig};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Versions {
    pub module_version: String,
    pub config_hash: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VersionedReport {
    pub suite: String,
    pub params: Map<String, Value>,
    pub checks: Vec<Check>,
    pub versions: Versions,
}

impl VersionedReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }

    /// Canonical body: pretty JSON with sorted object keys.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[derive(Serialize, Deserialize)]
struct CachedForm {
    rounds: usize,
    pieces: Vec<(PieceKey, IntLatticeBasis)>,
}

struct Plan {
    suite: Suite,
    settings: Map<String, Value>,
    lattice: Option<(EvenLattice, i64, i64)>,
}

fn plan(cfg: &SuiteConfig, suite: Suite) -> Result<Plan> {
    let mut s = Map::new();
    let mut lattice = None;
    match suite {
        Suite::Hopf => {
            s.insert("size_bound".into(), json!(cfg.n.unwrap_or(8)));
            s.insert("primes".into(), json!(cfg.primes.clone().unwrap_or_else(|| vec![2, 3])));
        }
        Suite::Lifting => {
            s.insert("order".into(), json!(cfg.order.unwrap_or(4)));
            s.insert("structural_bound".into(), json!(cfg.degree.unwrap_or(4)));
        }
        Suite::Necklace => {
            s.insert("window".into(), json!(cfg.window.unwrap_or(3)));
            s.insert("degree".into(), json!(cfg.degree.unwrap_or(6)));
        }
        Suite::LatticeVa => {
            let (lat, win, wt) = match &cfg.lattice {
                Some(p) => {
                    let c = load_lattice_config(p)?;
                    (c.lattice, c.sector_window, c.weight_bound)
                }
                None => (EvenLattice::ii11(), None, None),
            };
            let win = cfg.window.or(win).unwrap_or(1);
            let wt = cfg.weight.or(wt).unwrap_or(3);
            s.insert("gram".into(), json!(lat.gram()));
            s.insert("sector_window".into(), json!(win));
            s.insert("weight_bound".into(), json!(wt));
            s.insert("order".into(), json!(cfg.order.unwrap_or(3)));
            lattice = Some((lat, win, wt));
        }
        Suite::Witt => {
            s.insert("order".into(), json!(cfg.order.unwrap_or(3)));
            s.insert("window".into(), json!(cfg.window.unwrap_or(5)));
            s.insert("index_degree".into(), json!(cfg.n.unwrap_or(5)));
        }
        Suite::Noghost => {
            s.insert("n".into(), json!(cfg.n.unwrap_or(6)));
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
    Ok(Plan { suite, settings: s, lattice })
}

fn closure(space: &Space, cache: Option<&Cache>) -> smoothhopf::Result<IntegralForm> {
    let Some(cache) = cache else { return integral_closure(space, 64) };
    let key = sha256_hex(
        json!({
            "kind": "integral_closure",
            "gram": space.lattice.gram(),
            "sector_window": space.sector_window,
            "weight_bound": space.weight_bound,
            "version": smoothhopf::VERSION,
        })
        .to_string()
        .as_bytes(),
    );
    let compute = || -> std::result::Result<CachedForm, crate::CliError> {
        let f = integral_closure(space, 64)?;
        Ok(CachedForm { rounds: f.rounds, pieces: f.pieces.into_iter().collect() })
    };
    match cache.get_or_compute(&key, compute) {
        Ok(c) => Ok(IntegralForm { rounds: c.rounds, pieces: c.pieces.into_iter().collect() }),
        Err(crate::CliError::Core(e)) => Err(e),
        Err(e) => {
            eprintln!("warning: {e}; computing without the cache");
            integral_closure(space, 64)
        }
    }
}

fn get<T: serde::de::DeserializeOwned>(s: &Map<String, Value>, k: &str) -> T {
    serde_json::from_value(s[k].clone()).expect("settings are written by plan")
}

fn execute(p: &Plan, cache: Option<&Cache>) -> Report {
    let s = &p.settings;
    let out = match p.suite {
        Suite::Hopf => smoothhopf::hopf::hopf_suite(2, get(s, "size_bound"), &get::<Vec<u32>>(s, "primes")),
        Suite::Lifting => smoothhopf::lifting::lifting_suite(get(s, "order"), get(s, "structural_bound")),
        Suite::Necklace => Ok(smoothhopf::necklace::necklace_suite(get(s, "window"), get(s, "degree"))),
        Suite::LatticeVa => {
            let (lat, win, wt) = p.lattice.clone().expect("lattice planned");
            let space = Space::new(lat, win, wt);
            let form = closure(&space, cache);
            lattice_va_suite_with(&space, get(s, "order"), form)
        }
        Suite::Witt => smoothhopf::witt::witt_suite(get(s, "order"), get(s, "window"), get(s, "index_degree")),
        Suite::Noghost => smoothhopf::noghost::noghost_suite(get(s, "n")),
        Suite::All => unreachable!(),
    };
    out.unwrap_or_else(|e| {
        let mut r = Report::new(p.suite.name());
        r.push("suite_error", Status::Fail, json!(e.to_string()));
        r
    })
}

/// Runs the configured suite. Configuration problems are errors; failed
/// checks are reported in the result.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VersionedReport> {
    let suite = cfg.validate()?;
    let cache = cfg.cache_dir.as_deref().map(Cache::open).transpose()?;
    let plans = if suite == Suite::All {
        Suite::ALL.iter().map(|&s| plan(cfg, s)).collect::<Result<Vec<_>>>()?
    } else {
        vec![plan(cfg, suite)?]
    };
    let mut settings = Map::new();
    for p in &plans {
        settings.insert(p.suite.name().into(), Value::Object(p.settings.clone()));
    }
    let config_hash = sha256_hex(
        serde_json::to_vec(&json!({ "suite": suite.name(), "settings": settings, "module_version": smoothhopf::VERSION }))
            .expect("settings serialize")
            .as_slice(),
    );
    let mut params = Map::new();
    let mut checks = Vec::new();
    for p in &plans {
        let r = execute(p, cache.as_ref());
        let mut echoed = p.settings.clone();
        echoed.extend(r.params.clone());
        params.insert(p.suite.name().into(), Value::Object(echoed));
        let prefix = if suite == Suite::All { format!("{}/", p.suite.name()) } else { String::new() };
        checks.extend(r.checks.into_iter().map(|c| Check { id: format!("{prefix}{}", c.id), ..c }));
    }
    let params = if suite == Suite::All {
        params
    } else {
        match params.into_iter().next() {
            Some((_, Value::Object(m))) => m,
            _ => Map::new(),
        }
    };
    Ok(VersionedReport {
        suite: suite.name().into(),
        params,
        checks,
        versions: Versions { module_version: smoothhopf::VERSION.into(), config_hash },
    })
}
