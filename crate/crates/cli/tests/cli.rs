use std::fs;
use std::process::{Command, Output};

use hasse5_cli::cache::{artifact_version, Cache, CachedRecord, Payload, SCHEMA_VERSION};
use hasse5_cli::{Output as Records, RunOutput, Status};

fn hasse5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hasse5")).args(args).env_remove("HASSE5_CACHE").output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(o: &Output) -> RunOutput {
    serde_json::from_str(&stdout(o)).expect("valid JSON")
}

fn primes(r: &RunOutput) -> &[hasse5_cli::PrimeRecord] {
    match &r.records {
        Records::Primes(p) => p,
        _ => panic!("expected per-prime records"),
    }
}

#[test]
fn census_single_prime() {
    let o = hasse5(&["census", "13"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS l=13 N=2"), "{}", stdout(&o));
}

#[test]
fn argument_errors() {
    for args in [&["census", "6"][..], &["fricke", "20..10"], &["tables", "5"], &["k5p", "373"]] {
        let o = hasse5(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn fricke_tsv_reproduces_the_table() {
    let o = hasse5(&["fricke", "7..97", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(!s.contains('\r'));
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "p\tdegree\tlinear\tdegree_formula\tlinear_formula\tstatus");
    assert_eq!(lines.len(), 23);
    assert_eq!(lines[1], "7\t2\t2\t2\t2\tPASS");
    assert_eq!(lines[22], "97\t25\t5\t25\t5\tPASS");
}

#[test]
fn table_6_has_fourteen_rows() {
    let o = hasse5(&["tables", "6", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 15);
    assert!(s.lines().skip(1).all(|l| l.starts_with("6\t") && l.ends_with("\tPASS")));
}

#[test]
fn all_tables_pass() {
    let r = json(&hasse5(&["tables", "--format", "json"]));
    assert!(r.all_match);
    match r.records {
        Records::Tables(t) => assert_eq!(t.len(), 72),
        _ => panic!("expected table rows"),
    }
}

#[test]
fn k5p_in_s_and_forced_379() {
    let r = json(&hasse5(&["k5p", "101..367", "--only-in-S", "--format", "json"]));
    assert_eq!(primes(&r).len(), 22);
    assert!(r.all_match);

    let o = hasse5(&["k5p", "379", "--force"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("INFO p=379"));
    assert!(s.contains("x^2+114x+51") && s.contains("power 6"));
}

#[test]
fn charzero_fast_reports_only_the_disc_q51_row() {
    let o = hasse5(&["charzero", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(1));
    let fails: Vec<String> = stdout(&o).lines().filter(|l| l.contains("\tFAIL\t")).map(String::from).collect();
    assert_eq!(fails.len(), 1, "{fails:?}");
    assert!(fails[0].starts_with("disc(Q51)\t"));
}

#[test]
fn cache_round_trip_and_coherence() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let fresh = json(&hasse5(&["fricke", "7..31", "--format", "json", "--cache", d]));
    assert!(primes(&fresh).iter().all(|r| !r.cached));

    let cache = Cache::new(dir.path());
    for r in primes(&fresh) {
        assert!(cache.path("fricke", r.prime).is_file());
        assert_eq!(cache.load("fricke", r.prime).as_ref(), r.report.as_ref());
    }

    let replay = json(&hasse5(&["fricke", "7..31", "--format", "json", "--cache", d]));
    assert!(primes(&replay).iter().all(|r| r.cached));
    for (a, b) in primes(&fresh).iter().zip(primes(&replay)) {
        assert_eq!(a.report, b.report);
    }

    for cmd in ["census", "k5p"] {
        let a = json(&hasse5(&[cmd, "101..113", "--format", "json", "--cache", d]));
        let b = json(&hasse5(&[cmd, "101..113", "--format", "json", "--cache", d]));
        assert!(primes(&b).iter().all(|r| r.cached), "{cmd}");
        for (x, y) in primes(&a).iter().zip(primes(&b)) {
            assert_eq!(x.report, y.report, "{cmd}");
        }
    }

    // The environment variable supplies the default directory.
    let o = Command::new(env!("CARGO_BIN_EXE_hasse5"))
        .args(["fricke", "7", "--format", "json"])
        .env("HASSE5_CACHE", d)
        .output()
        .unwrap();
    assert!(primes(&json(&o))[0].cached);
}

#[test]
fn stale_cache_records_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let real = match hasse5_core::fricke::verify_fricke(13) {
        Ok(r) => r,
        Err(e) => panic!("{e}"),
    };
    let mut bogus = real.clone();
    bogus.degree_found = 99;
    let rec = CachedRecord {
        schema_version: SCHEMA_VERSION,
        prime: 13,
        artifact_version: "0000000000000000".into(),
        payload: Payload::Fricke(bogus.clone()),
    };
    fs::create_dir_all(dir.path().join("fricke")).unwrap();
    fs::write(cache.path("fricke", 13), serde_json::to_string(&rec).unwrap()).unwrap();
    assert_eq!(cache.load("fricke", 13), None);

    let r = json(&hasse5(&["fricke", "13", "--format", "json", "--cache", dir.path().to_str().unwrap()]));
    assert!(!primes(&r)[0].cached);
    assert_eq!(primes(&r)[0].report, Some(Payload::Fricke(real)));

    // A record with the current version is trusted as written.
    let rec = CachedRecord { artifact_version: artifact_version("fricke"), ..rec };
    fs::write(cache.path("fricke", 13), serde_json::to_string(&rec).unwrap()).unwrap();
    assert_eq!(cache.load("fricke", 13), Some(Payload::Fricke(bogus)));
}

#[test]
fn runs_are_deterministic() {
    let args = ["census", "300..500", "--sample", "5", "--seed", "11", "--format", "json"];
    let a = hasse5(&args);
    let b = hasse5(&args);
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(primes(&r).len(), 5);
    assert!(primes(&r).iter().all(|p| p.status == Status::Pass));
    let other = json(&hasse5(&["census", "300..500", "--sample", "5", "--seed", "12", "--format", "json"]));
    let ps = |r: &RunOutput| primes(r).iter().map(|p| p.prime).collect::<Vec<_>>();
    assert_ne!(ps(&r), ps(&other));
}
