use std::path::Path;
use std::process::{Command, Output};

use cubknot::quotients::{build_a0, dims_tsv};
use serde_json::Value;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubknot"))
        .args(args)
        .env("CUBKNOT_CACHE_DIR", cache)
        .output()
        .expect("spawn cubknot")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

const TREFOIL: &str = "O1+ U2+ O3+ U1+ O2+ U3+";

#[test]
fn dims_aw_killed_in_degrees_two_and_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["dims", "--flavor", "aw", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows[2][4], "0");
    assert_eq!(rows[3][4], "0");
    assert_eq!(text, include_str!("golden/dims_aw_3.tsv"));
}

#[test]
fn dims_single_row_in_degree_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["dims", "--flavor", "a", "--max-degree", "0"]);
    assert_eq!(stdout(&o), "flavor\tdegree\tambient_dim\trank\tquotient_dim\nA\t0\t1\t0\t1\n");
}

#[test]
fn dims_a0_matches_library_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let rows: Vec<_> = (0..=4).map(|n| build_a0(n, false, 6).unwrap().row()).collect();
    let want = dims_tsv(&rows);
    let cold = run(dir.path(), &["dims", "--flavor", "a0", "--max-degree", "4"]);
    let warm = run(dir.path(), &["dims", "--flavor", "a0", "--max-degree", "4"]);
    assert_eq!(stdout(&cold), want);
    assert_eq!(stdout(&warm), want);
    // corrupt entries are recomputed
    for e in std::fs::read_dir(dir.path().join("quotients")).unwrap() {
        std::fs::write(e.unwrap().path(), b"{not json").unwrap();
    }
    assert_eq!(stdout(&run(dir.path(), &["dims", "--flavor", "a0", "--max-degree", "4"])), want);
    let uncached = run(dir.path(), &["dims", "--flavor", "a0", "--max-degree", "4", "--no-cache"]);
    assert_eq!(stdout(&uncached), want);
}

#[test]
fn dims_over_cap_is_resource_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["dims", "--flavor", "a", "--max-degree", "7"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("resource cap"));
}

#[test]
fn axioms_pass_and_vacuous() {
    let dir = tempfile::tempdir().unwrap();
    for deg in ["3", "0"] {
        let o = run(dir.path(), &["axioms", "--max-degree", deg]);
        assert_eq!(o.status.code(), Some(0));
        let v = json(&o);
        assert_eq!(v["schema"], "cubknot.axioms/1");
        assert_eq!(v["report"]["passed"], true);
    }
}

#[test]
fn injected_fault_reports_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    for fault in ["boundary-sign", "shuffle-sign"] {
        let o = run(dir.path(), &["axioms", "--max-degree", "3", "--inject-fault", fault]);
        assert_eq!(o.status.code(), Some(1), "{fault}");
        let v = json(&o);
        let failed: Vec<&Value> =
            v["report"]["identities"].as_array().unwrap().iter().filter(|i| i["passed"] == false).collect();
        assert!(!failed.is_empty(), "{fault}");
        assert!(failed.iter().all(|i| i["counterexample"].is_array()));
    }
}

#[test]
fn eval_examples() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(stdout(&run(dir.path(), &["eval", "--invariant", "v2", "--knot", TREFOIL])), "1\n");
    assert_eq!(stdout(&run(dir.path(), &["eval", "--invariant", "conway", "--knot", ""])), "1\n");
    assert_eq!(stdout(&run(dir.path(), &["eval", "--invariant", "conway", "--knot", TREFOIL])), "1 + z^2\n");
    // v2(K+) - v2(K-) with K+ the trefoil and K- the unknot
    let singular = "X1a+ U2+ O3+ X1b+ O2+ U3+";
    assert_eq!(stdout(&run(dir.path(), &["eval", "--invariant", "v2", "--knot", singular])), "1\n");
    let file = dir.path().join("k.txt");
    std::fs::write(&file, format!("{TREFOIL}\n")).unwrap();
    let o = run(dir.path(), &["eval", "--invariant", "const:1/2*v2", "--knot", file.to_str().unwrap()]);
    assert_eq!(stdout(&o), "1/2\n");
}

#[test]
fn eval_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["eval", "--invariant", "v2", "--knot", "O1+ U2+"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["eval", "--invariant", "w7", "--knot", TREFOIL]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["eval", "--invariant", "conway", "--knot", "X1a X1b"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["eval", "--knot", TREFOIL]).status.code(), Some(2));
}

#[test]
fn certify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["certify", "--family", "v2power", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/certify_v2power_1.json"));
    let c = &json(&o)["certificates"][0];
    assert_eq!(c["boundary_zero"], true);
    assert_eq!(c["values"][0]["value"], "1");

    let o = run(dir.path(), &["certify", "--family", "yasuhara", "--n", "2", "--pattern", "xx"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let certs = v["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 2);
    for c in certs {
        assert_eq!(c["boundary_zero"], true);
        let wc = c["values"].as_array().unwrap().iter().find(|x| x["invariant"] == "W_C(D')").unwrap();
        assert_eq!(wc["value"], "1");
    }

    let o = run(dir.path(), &["certify", "--family", "v2power", "--n", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(dir.path(), &["certify", "--family", "nope", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn manifest_is_written_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a");
    let out2 = dir.path().join("b");
    let args = |out: &Path| {
        vec![
            "dims".to_string(),
            "--flavor".into(),
            "ab0".into(),
            "--max-degree".into(),
            "3".into(),
            "--out".into(),
            out.display().to_string(),
        ]
    };
    let a: Vec<String> = args(&out1);
    let b: Vec<String> = args(&out2);
    let oa = run(dir.path(), &a.iter().map(String::as_str).collect::<Vec<_>>());
    let ob = run(dir.path(), &b.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(oa.stdout, ob.stdout);
    let ma = std::fs::read_to_string(out1.join("manifest.json")).unwrap();
    let mb = std::fs::read_to_string(out2.join("manifest.json")).unwrap();
    let va: Value = serde_json::from_str(&ma).unwrap();
    let vb: Value = serde_json::from_str(&mb).unwrap();
    assert_eq!(va["outputs"], vb["outputs"]);
    assert_eq!(va["command"], "dims");
    assert_eq!(std::fs::read(out1.join("dims.tsv")).unwrap(), oa.stdout);
    let digest = va["outputs"][0]["sha256"].as_str().unwrap();
    assert_eq!(digest.len(), 64);

    // without --out the manifest lands in the cache directory
    run(dir.path(), &["eval", "--invariant", "v2", "--knot", TREFOIL]);
    assert!(std::fs::read_dir(dir.path().join("manifests")).unwrap().count() >= 1);
}
