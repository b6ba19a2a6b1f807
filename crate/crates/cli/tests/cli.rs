use std::path::{Path, PathBuf};
use std::process::Command;

use gdesign_cli::{run, EXIT_BUDGET, EXIT_FALSE, EXIT_TRUE, EXIT_USAGE};
use tempfile::TempDir;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn cube(dir: &TempDir) -> PathBuf {
    let g = dir.path().join("h32.graph");
    let (code, _, err) = call(&["gen", "--family", "hamming", "--n", "3", "--q", "2", "--out", s(&g)]);
    assert_eq!(code, EXIT_TRUE, "{err}");
    g
}

#[test]
fn verify_cube_designs() {
    let dir = TempDir::new().unwrap();
    let g = cube(&dir);
    assert!(std::fs::read_to_string(&g).unwrap().starts_with("c family hamming 3 2\np 8 12\n"));
    // 000 and 111 are vertices 1 and 8.
    let d1 = file(&dir, "d1", "# D1\n1\n8\n");
    let (code, out, _) = call(&["verify", "--graph", s(&g), "--design", s(&d1), "--order", "laplacian", "--upto", "1"]);
    assert_eq!(code, EXIT_TRUE, "{out}");
    let (code, out, _) = call(&["verify", "--graph", s(&g), "--design", s(&d1), "--upto", "2"]);
    assert_eq!(code, EXIT_FALSE);
    assert!(out.contains("verdict: false"), "{out}");
    assert!(out.contains("counterexample:"), "{out}");
    let d2 = file(&dir, "d2", "1\n4\n6\n7\n");
    let (code, out, _) = call(&["verify", "--graph", s(&g), "--design", s(&d2), "--upto", "2"]);
    assert_eq!(code, EXIT_TRUE, "{out}");
    let (code, _, _) = call(&["verify", "--graph", s(&g), "--design", s(&d2), "--order", "reverse", "--upto", "1"]);
    assert_eq!(code, EXIT_FALSE);
    let (code, _, err) = call(&["verify", "--graph", s(&g), "--design", s(&d2), "--upto", "4"]);
    assert_eq!(code, EXIT_USAGE, "{err}");
    let (code, _, _) = call(&["verify", "--graph", s(&g), "--design", s(&d2), "--order", "first-part", "--upto", "1"]);
    assert_eq!(code, EXIT_USAGE);
    let bad = file(&dir, "bad", "1\n9\n");
    let (code, _, err) = call(&["verify", "--graph", s(&g), "--design", s(&bad), "--upto", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn verify_other_families() {
    let dir = TempDir::new().unwrap();
    let j = dir.path().join("j42");
    call(&["gen", "--family", "johnson", "--n", "4", "--k", "2", "--out", s(&j)]);
    // Colex order: 12, 13, 23, 14, 24, 34. The star of 1 is {12, 13, 14}.
    let star = file(&dir, "star", "1\n2\n4\n");
    assert_eq!(
        call(&["verify", "--graph", s(&j), "--design", s(&star), "--order", "reverse", "--upto", "1"]).0,
        EXIT_TRUE
    );
    assert_eq!(call(&["verify", "--graph", s(&j), "--design", s(&star), "--upto", "1"]).0, EXIT_FALSE);

    let c = dir.path().join("s3");
    let (code, _, err) = call(&["gen", "--family", "cayley", "--n", "3", "--classes", "2,1", "--out", s(&c)]);
    assert_eq!(code, EXIT_TRUE, "{err}");
    // A_3 = {123, 231, 312} in one-line notation, lexicographic ranks 0, 3, 4.
    let a3 = file(&dir, "a3", "1\n4\n5\n");
    assert_eq!(
        call(&["verify", "--graph", s(&c), "--design", s(&a3), "--order", "first-part", "--upto", "1"]).0,
        EXIT_TRUE
    );
    assert_eq!(
        call(&["verify", "--graph", s(&c), "--design", s(&a3), "--order", "first-part", "--upto", "2"]).0,
        EXIT_FALSE
    );
    let (code, out, _) = call(&["verify", "--graph", s(&c), "--design", s(&a3), "--upto", "1"]);
    assert_eq!(code, EXIT_TRUE, "{out}");

    let c6 = dir.path().join("c6");
    call(&["gen", "--family", "cycle", "--n", "6", "--out", s(&c6)]);
    let antipodal = file(&dir, "anti", "1\n4\n");
    let (code, out, _) = call(&["verify", "--graph", s(&c6), "--design", s(&antipodal), "--upto", "1"]);
    assert_eq!(code, EXIT_TRUE, "{out}");
    assert!(out.contains("(float)"), "{out}");
    assert_eq!(call(&["verify", "--graph", s(&c6), "--design", s(&antipodal), "--upto", "2"]).0, EXIT_FALSE);
}

#[test]
fn spectra() {
    let dir = TempDir::new().unwrap();
    let g = cube(&dir);
    let (code, out, _) = call(&["spectrum", "--graph", s(&g)]);
    assert_eq!(code, EXIT_TRUE);
    assert!(out.contains("method: exact\neigenvalue: 0 multiplicity: 1\neigenvalue: 2 multiplicity: 3\n"), "{out}");
    let p = dir.path().join("p");
    call(&["gen", "--family", "petersen", "--out", s(&p)]);
    let (_, out, _) = call(&["spectrum", "--graph", s(&p)]);
    assert!(out.contains("eigenvalue: 5 multiplicity: 4"), "{out}");
    let c = dir.path().join("c");
    call(&["gen", "--family", "cayley", "--n", "4", "--classes", "2,1,1", "--out", s(&c)]);
    let (_, out, _) = call(&["spectrum", "--graph", s(&c)]);
    assert!(out.contains("eigenvalue: 4 multiplicity: 9\n"), "{out}");
    let c7 = dir.path().join("c7");
    call(&["gen", "--family", "cycle", "--n", "7", "--out", s(&c7)]);
    let (_, out, _) = call(&["spectrum", "--graph", s(&c7)]);
    assert!(out.contains("method: float"), "{out}");
}

#[test]
fn combinatorial_verbs() {
    let dir = TempDir::new().unwrap();
    let d2 = file(&dir, "d2", "000\n011\n101\n110\n");
    let (code, out, _) = call(&["oa", "--n", "3", "--q", "2", "--t", "2", "--design", s(&d2)]);
    assert_eq!(code, EXIT_TRUE);
    assert!(out.contains("index: 1"), "{out}");
    assert_eq!(call(&["oa", "--n", "3", "--q", "2", "--t", "3", "--design", s(&d2)]).0, EXIT_FALSE);
    assert_eq!(call(&["oa", "--n", "3", "--q", "2", "--t", "4", "--design", s(&d2)]).0, EXIT_USAGE);
    let wrong = file(&dir, "wrong", "000\n0112\n");
    assert_eq!(call(&["oa", "--n", "3", "--q", "2", "--t", "1", "--design", s(&wrong)]).0, EXIT_USAGE);

    let fano = file(&dir, "fano", "124\n235\n346\n457\n1,5,6\n267\n137\n");
    let (code, out, _) = call(&["blockdesign", "--n", "7", "--k", "3", "--t", "2", "--design", s(&fano)]);
    assert_eq!(code, EXIT_TRUE);
    assert!(out.contains("lambda: 1"), "{out}");
    let short = file(&dir, "short", "124\n235\n");
    assert_eq!(call(&["blockdesign", "--n", "7", "--k", "3", "--t", "2", "--design", s(&short)]).0, EXIT_FALSE);

    let c = file(&dir, "c", "e\n(1234)\n(13)(24)\n(1432)\n");
    assert_eq!(call(&["twise", "--n", "4", "--t", "1", "--design", s(&c)]).0, EXIT_TRUE);
    assert_eq!(call(&["twise", "--n", "4", "--t", "2", "--design", s(&c)]).0, EXIT_FALSE);
    let a4 =
        file(&dir, "a4", "e\n(123)\n(132)\n(124)\n(142)\n(134)\n(143)\n(234)\n(243)\n(12)(34)\n(13)(24)\n(14)(23)\n");
    assert_eq!(call(&["twise", "--n", "4", "--t", "2", "--design", s(&a4)]).0, EXIT_TRUE);
}

#[test]
fn hadamard_round_trip() {
    let dir = TempDir::new().unwrap();
    let d2 = file(&dir, "d2", "000\n011\n101\n110\n");
    let (code, h, _) = call(&["hadamard", "--from-design", s(&d2)]);
    assert_eq!(code, EXIT_TRUE);
    assert_eq!(h.lines().count(), 4);
    let hf = file(&dir, "h", &h);
    let (code, out, _) = call(&["hadamard", "--to-design", s(&hf)]);
    assert_eq!(code, EXIT_TRUE, "{out}");
    let words: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(words.len(), 4);
    assert!(words.iter().all(|w| w.len() == 3));
    let not_h = file(&dir, "nh", "1 1\n1 1\n");
    assert_eq!(call(&["hadamard", "--to-design", s(&not_h)]).0, EXIT_USAGE);
    assert_eq!(call(&["hadamard"]).0, EXIT_USAGE);
}

#[test]
fn mycielskify_and_search() {
    let dir = TempDir::new().unwrap();
    let c5 = dir.path().join("c5");
    call(&["gen", "--family", "cycle", "--n", "5", "--out", s(&c5)]);
    let (code, out, _) = call(&["mycielskify", "--graph", s(&c5)]);
    assert_eq!(code, EXIT_TRUE);
    assert!(out.starts_with("c family mycielskian 5\np 11 20\n"), "{out}");
    let (code, out, _) = call(&["mycielskify", "--graph", s(&c5), "--spectrum"]);
    assert_eq!(code, EXIT_TRUE);
    assert!(out.starts_with("mycielski_spectrum"), "{out}");

    let g = cube(&dir);
    let (code, out, _) =
        call(&["search", "--graph", s(&g), "--upto", "2", "--max-size", "8", "--modulus", "4", "--greater-than", "3"]);
    assert_eq!(code, EXIT_TRUE, "{out}");
    assert!(out.contains("design: 1 4 6 7\n"), "{out}");
    assert!(out.contains("smallest_size: 4\n") && out.contains("found: 2\n"), "{out}");
    let (code, out, _) = call(&["search", "--graph", s(&g), "--upto", "3", "--max-size", "7"]);
    assert_eq!(code, EXIT_FALSE, "{out}");
    assert!(out.contains("exhausted: true"), "{out}");
    let (code, out, _) = call(&["search", "--graph", s(&g), "--upto", "2", "--max-size", "4", "--budget", "5"]);
    assert_eq!(code, EXIT_BUDGET, "{out}");
    let (code, out, _) = call(&["search", "--graph", s(&g), "--upto", "2", "--max-size", "4", "--symmetry"]);
    assert_eq!(code, EXIT_TRUE, "{out}");
    // D2 and its complement are translates of each other.
    assert!(out.contains("found: 1\n"), "{out}");
}

#[test]
fn budget_from_environment() {
    let dir = TempDir::new().unwrap();
    let g = cube(&dir);
    let bin = env!("CARGO_BIN_EXE_gdesign");
    let status = Command::new(bin)
        .args(["search", "--graph", s(&g), "--upto", "2", "--max-size", "4"])
        .env("GDESIGN_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_BUDGET));
    let status = Command::new(bin)
        .args(["search", "--graph", s(&g), "--upto", "2", "--max-size", "4"])
        .env("GDESIGN_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_USAGE));
}

#[test]
fn repro_and_usage() {
    let (code, out, _) = call(&["repro", "--case", "cube-d2"]);
    assert_eq!(code, EXIT_TRUE);
    assert!(out.contains("index=Some(1)"), "{out}");
    assert!(out.ends_with("passed: true\nend\n"), "{out}");
    let (_, again, _) = call(&["repro", "--case", "cube-d2", "--workers", "1"]);
    assert_eq!(out, again);
    let (code, out, _) = call(&["repro", "--list"]);
    assert_eq!(code, EXIT_TRUE);
    assert_eq!(out.lines().count(), gdesign::repro::CASES.len());
    assert_eq!(call(&["repro", "--case", "nope"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify"]).0, EXIT_USAGE);
    assert_eq!(call(&["gen", "--family", "hamming", "--n", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_TRUE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gdesign");
    let out = Command::new(bin).args(["repro", "--case", "cube-d1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_TRUE));
    assert!(String::from_utf8_lossy(&out.stdout).contains("case: cube-d1"));
    let out = Command::new(bin).arg("unknown").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
