use std::process::Command;

use smoothhopf::lattice_va::EvenLattice;
use smoothhopf_cli::cache::{Cache, Lookup};
use smoothhopf_cli::{parse_lattice_config, run_suite, CliError, Suite, SuiteConfig};

fn verify(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("verify runs")
}

#[test]
fn parses_lattice_file() {
    let cfg = parse_lattice_config("# plane\nname = II11\ngram = 0 1 / 1 0\nsector_window = 2\n").unwrap();
    assert_eq!(cfg.lattice, EvenLattice::ii11());
    assert_eq!(cfg.sector_window, Some(2));
    assert_eq!(cfg.weight_bound, None);
}

#[test]
fn rejects_bad_lattice_files() {
    let cases = [
        "name = X\ngram = 0 1 / 2 0\n",
        "name = X\ngram = 1\n",
        "name = X\ngram = 0 1 / 1 0\ncolour = red\n",
        "gram = 2\n",
        "name = X\ngram = 2 x\n",
    ];
    for text in cases {
        let err = parse_lattice_config(text).unwrap_err();
        assert_eq!(err.exit_code(), 2, "{text:?}: {err}");
    }
    assert!(matches!(
        parse_lattice_config("name = X\ngram = 3\n"),
        Err(CliError::Core(smoothhopf::Error::OddLattice(3)))
    ));
}

#[test]
fn validates_suite_config() {
    let mut cfg = SuiteConfig::new(Suite::Hopf);
    cfg.primes = Some(vec![2, 4]);
    assert_eq!(cfg.validate().unwrap_err().exit_code(), 2);
    let mut cfg = SuiteConfig::new(Suite::Witt);
    cfg.order = Some(0);
    assert!(cfg.validate().is_err());
    assert!(SuiteConfig::default().validate().is_err());
    assert_eq!("lattice-va".parse::<Suite>().unwrap(), Suite::LatticeVa);
    assert!("bogus".parse::<Suite>().is_err());
}

#[test]
fn cache_roundtrip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    assert_eq!(cache.load::<Vec<i64>>("k"), Lookup::Miss);
    cache.store("k", &vec![1i64, 2, 3]).unwrap();
    assert_eq!(cache.load::<Vec<i64>>("k"), Lookup::Hit(vec![1, 2, 3]));

    let text = std::fs::read_to_string(cache.path("k")).unwrap().replace("3]", "4]");
    std::fs::write(cache.path("k"), text).unwrap();
    assert!(matches!(cache.load::<Vec<i64>>("k"), Lookup::Corrupt(_)));
    let mut calls = 0;
    let v: Vec<i64> = cache
        .get_or_compute("k", || {
            calls += 1;
            Ok::<_, CliError>(vec![1, 2, 3])
        })
        .unwrap();
    assert_eq!((v, calls), (vec![1, 2, 3], 1));
    assert_eq!(cache.load::<Vec<i64>>("k"), Lookup::Hit(vec![1, 2, 3]));

    std::fs::write(cache.path("k"), b"not json").unwrap();
    assert!(matches!(cache.load::<Vec<i64>>("k"), Lookup::Corrupt(_)));
}

#[test]
fn report_is_deterministic() {
    let mut cfg = SuiteConfig::new(Suite::Necklace);
    cfg.window = Some(2);
    cfg.degree = Some(4);
    let a = run_suite(&cfg).unwrap();
    let b = run_suite(&cfg).unwrap();
    assert!(a.passed());
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.versions.module_version, smoothhopf::VERSION);
    assert_eq!(a.versions.config_hash.len(), 64);
}

#[test]
fn binary_exit_codes() {
    let ok = verify(&["noghost", "--n", "3"]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("PASS"));

    assert_eq!(verify(&["hopf", "--primes", "2,4"]).status.code(), Some(2));
    assert_eq!(verify(&["nonsense"]).status.code(), Some(2));
    assert_eq!(verify(&["lattice-va", "--lattice", "does/not/exist.cfg"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("odd.cfg");
    std::fs::write(&bad, "name = odd\ngram = 1\n").unwrap();
    assert_eq!(verify(&["lattice-va", "--lattice", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn json_output_is_cache_independent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["lattice-va", "--lattice", "configs/A1.cfg", "--weight", "2", "--order", "2", "--json"];
    let cold = verify(&args);
    let mut with_cache = args.to_vec();
    with_cache.extend(["--cache-dir", cache]);
    let first = verify(&with_cache);
    let second = verify(&with_cache);
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(cold.stdout, first.stdout);
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&cold.stdout).unwrap();
    assert_eq!(v["suite"], "lattice-va");
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 1);
}
