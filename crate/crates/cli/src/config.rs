//! Suite configurations and lattice config files.
//!
//! A lattice file holds `key = value` lines; `#` starts a comment. The
//! `gram` value lists rows separated by `/`:
//!
//! ```text
//! name = II11
//! gram = 0 1 / 1 0
//! sector_window = 1
//! weight_bound = 4
//! ```

use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smoothhopf::lattice_va::EvenLattice;

use crate::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeConfig {
    pub lattice: EvenLattice,
    pub sector_window: Option<i64>,
    pub weight_bound: Option<i64>,
}

fn parse_int(key: &str, s: &str) -> Result<i64> {
    s.trim().parse().map_err(|_| smoothhopf::Error::Parse(format!("{key}: `{s}` is not an integer")).into())
}

pub fn parse_lattice_config(text: &str) -> Result<LatticeConfig> {
    let mut name = None;
    let mut gram: Option<Vec<Vec<i64>>> = None;
    let mut sector_window = None;
    let mut weight_bound = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| smoothhopf::Error::Parse(format!("line {}: expected `key = value`", lineno + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "name" => name = Some(value.to_string()),
            "gram" => {
                let rows = value
                    .split('/')
                    .map(|row| row.split_whitespace().map(|x| parse_int("gram", x)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                gram = Some(rows);
            }
            "sector_window" => sector_window = Some(parse_int(key, value)?),
            "weight_bound" => weight_bound = Some(parse_int(key, value)?),
            other => return Err(smoothhopf::Error::Parse(format!("line {}: unknown key `{other}`", lineno + 1)).into()),
        }
    }
    let name = name.ok_or_else(|| smoothhopf::Error::Parse("missing `name`".into()))?;
    let gram = gram.ok_or_else(|| smoothhopf::Error::Parse("missing `gram`".into()))?;
    let lattice = EvenLattice::new(&name, gram)?;
    for (k, v) in [("sector_window", sector_window), ("weight_bound", weight_bound)] {
        if matches!(v, Some(x) if x < 1) {
            return Err(CliError::ConfigInvalid(format!("{k} must be positive")));
        }
    }
    Ok(LatticeConfig { lattice, sector_window, weight_bound })
}

pub fn load_lattice_config(path: &Path) -> Result<LatticeConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
    parse_lattice_config(&text)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Hopf,
    Lifting,
    Necklace,
    LatticeVa,
    Witt,
    Noghost,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Hopf, Suite::Lifting, Suite::Necklace, Suite::LatticeVa, Suite::Witt, Suite::Noghost];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Lifting => "lifting",
            Suite::Necklace => "necklace",
            Suite::LatticeVa => "lattice-va",
            Suite::Witt => "witt",
            Suite::Noghost => "noghost",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| CliError::ConfigInvalid(format!("unknown suite `{s}`")))
    }
}

/// Everything a suite run depends on. Unset bounds take suite defaults.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: Option<Suite>,
    pub order: Option<u32>,
    pub weight: Option<i64>,
    pub window: Option<i64>,
    pub n: Option<usize>,
    pub degree: Option<usize>,
    pub primes: Option<Vec<u32>>,
    pub lattice: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig { suite: Some(suite), ..Default::default() }
    }

    pub fn validate(&self) -> Result<Suite> {
        let suite = self.suite.ok_or_else(|| CliError::ConfigInvalid("no suite given".into()))?;
        let positive = [
            ("order", self.order.map(i64::from)),
            ("weight", self.weight),
            ("window", self.window),
            ("n", self.n.map(|x| x as i64)),
            ("degree", self.degree.map(|x| x as i64)),
        ];
        for (k, v) in positive {
            if matches!(v, Some(x) if x < 1) {
                return Err(CliError::ConfigInvalid(format!("--{k} must be positive")));
            }
        }
        if let Some(ps) = &self.primes {
            if ps.is_empty() {
                return Err(CliError::ConfigInvalid("--primes is empty".into()));
            }
            if let Some(p) = ps.iter().find(|p| !is_prime(**p)) {
                return Err(CliError::ConfigInvalid(format!("{p} is not prime")));
            }
        }
        Ok(suite)
    }
}
