use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn superquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superquad"))
        .args(args)
        .env_remove("SUPERQUAD_FORMAT")
        .env_remove("SUPERQUAD_TOL")
        .env_remove("SUPERQUAD_NO_TIMESTAMP")
        .output()
        .expect("spawn superquad")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn shipped(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../algebras")
        .join(name)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn shipped_files_verify() {
    for name in [
        "g4.alg",
        "tstar_h3.alg",
        "go6_0.alg",
        "go6_3.alg",
        "go6_7.alg",
    ] {
        let o = superquad(&["verify", shipped(name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(stdout(&o).contains("0 failed"));
    }
}

#[test]
fn verify_json_is_machine_readable() {
    let o = superquad(&[
        "--format",
        "json",
        "verify",
        shipped("g4.alg").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v.as_array().expect("array of checks");
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert!(checks.iter().all(|c| c["paper_ref"].is_string()));
}

#[test]
fn emitted_entry_reparses_to_the_same_text() {
    let dir = tempfile::tempdir().unwrap();
    let first = stdout(&superquad(&[
        "catalog", "emit", "g6_3", "--param", "mu=1/2",
    ]));
    assert!(first.contains("param mu = 1/2"));
    let path = write(dir.path(), "g.alg", &first);
    let o = superquad(&["verify", &path]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn decompose_finds_the_heisenberg_witness() {
    let o = superquad(&["decompose", shipped("tstar_h3.alg").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("central witness: Z - Z*"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn decompose_is_inconclusive_on_the_diamond() {
    let o = superquad(&["decompose", shipped("g4.alg").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no central witness"));
}

#[test]
fn tstar_from_files_matches_the_shipped_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.alg");
    let o = superquad(&[
        "extend",
        "tstar",
        shipped("h3.alg").to_str().unwrap(),
        shipped("h3_theta.txt").to_str().unwrap(),
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let built = fs::read_to_string(&out).unwrap();
    let shipped = fs::read_to_string(shipped("tstar_h3.alg")).unwrap();
    let body = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("algebra"))
            .map(str::to_string)
            .collect::<Vec<_>>()
    };
    assert_eq!(body(&built), body(&shipped));
}

#[test]
fn non_cyclic_cocycle_is_downgraded_and_fails() {
    let dir = tempfile::tempdir().unwrap();
    let theta = write(dir.path(), "theta.txt", "theta X Y Z = 1\n");
    let o = superquad(&[
        "extend",
        "tstar",
        shipped("h3.alg").to_str().unwrap(),
        &theta,
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("bracket X Y = 1 Z + 1 Z*"));
    assert!(text.contains("# [FAIL] quadratic"));
}

#[test]
fn double_extension_by_a_skew_derivation() {
    let dir = tempfile::tempdir().unwrap();
    let plane = write(
        dir.path(),
        "plane.alg",
        "algebra plane\ndim_even 2\ndim_odd 0\nbasis P Q\nform P Q = 1\n",
    );
    let d = write(dir.path(), "d.txt", "map P = 1 P\nmap Q = -1 Q\n");
    let out = dir.path().join("diamond.alg");
    let o = superquad(&[
        "extend",
        "-o",
        out.to_str().unwrap(),
        "double1d",
        &plane,
        &d,
        "--e",
        "X",
        "--f",
        "Z",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let map = write(
        dir.path(),
        "id.txt",
        "map X = X\nmap P = P\nmap Q = Q\nmap Z = Z\n",
    );
    let o = superquad(&[
        "check-iso",
        out.to_str().unwrap(),
        shipped("g4.alg").to_str().unwrap(),
        &map,
        "--isometric",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn check_iso_rejects_a_non_homomorphism() {
    let dir = tempfile::tempdir().unwrap();
    let g4 = shipped("g4.alg");
    let map = write(
        dir.path(),
        "swap.txt",
        "map X = Z\nmap P = P\nmap Q = Q\nmap Z = X\n",
    );
    let o = superquad(&[
        "check-iso",
        g4.to_str().unwrap(),
        g4.to_str().unwrap(),
        &map,
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
}

#[test]
fn complex_files_dispatch_to_the_complex_backend() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "c.alg",
        "algebra c\ndim_even 1\ndim_odd 1\nbackend complex\nbasis X0 X1\nbracket X1 X1 = 2+1i X0\nform X0 X1 = 1\n",
    );
    let o = superquad(&["verify", &a]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = superquad(&["--tol", "-1", "verify", &a]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn odd_solver_lists_cyclic_pairings() {
    let o = superquad(&[
        "extend",
        "tsstar",
        shipped("h3.alg").to_str().unwrap(),
        "--solve",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1 cyclic pairings"));
}

#[test]
fn parse_errors_carry_positions_and_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.alg",
        "algebra b\ndim_even 1\ndim_odd 0\nbasis X\nbracket X W = 1 X\n",
    );
    let o = superquad(&["verify", &bad]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 5"), "{err}");
}

#[test]
fn catalog_listing_and_bad_parameters() {
    let o = superquad(&["catalog", "list"]);
    assert!(stdout(&o).contains("28 entries"));
    let o = superquad(&["catalog", "emit", "g6_3", "--param", "mu=2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = superquad(&["catalog", "emit", "g4", "--param", "mu=1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_verify_subset() {
    let o = superquad(&["catalog", "verify", "--id", "go2", "--id", "osp12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[PASS] go2"));
    assert!(text.contains("[PASS] osp12"));
    assert!(text.contains("2 entries"));
}

#[test]
fn full_report_has_exactly_the_known_red() {
    let o = superquad(&["--no-timestamp", "report", "--all"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(!text.starts_with("# generated"));
    let fails: Vec<&str> = text.lines().filter(|l| l.starts_with("[FAIL]")).collect();
    assert_eq!(fails.len(), 2, "{fails:#?}");
    assert!(fails.iter().all(|l| l.contains("span{X1, Z1}")));
}
