use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        status.code().expect("exited"),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

#[test]
fn analyze_nilpotent_example() {
    let (code, out, _) = run(&["analyze", &fixture("nilpotent_cyclic_q.alg")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("== analyze ==\n"));
    assert!(out.contains("leibniz identity: holds\n"));
    assert!(out.contains("nilpotency class: 2\n"));
    assert!(out.contains("lower central series dims: [2, 1, 0]\n"), "{out}");
}

#[test]
fn analyze_lattice_frattini() {
    let (code, out, _) = run(&["analyze", "--lattice", &fixture("nilpotent_cyclic_gf2.alg")]);
    assert_eq!(code, 0);
    assert!(out.contains("frattini: span{e2}\n"), "{out}");
    let (code, out, _) = run(&["analyze", "--lattice", &fixture("idempotent_cyclic_gf2.alg")]);
    assert_eq!(code, 0);
    assert!(out.contains("nilpotency class: non-nilpotent\n"));
    assert!(out.contains("maximal subalgebras (2):\n"));
    assert!(out.contains("frattini: 0\n"));
}

#[test]
fn analyze_abelian_line() {
    let dir = std::env::temp_dir().join(format!("leibniz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("line.alg");
    std::fs::write(&path, "field GF 5\ndim 1\n").unwrap();
    let (code, out, _) = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("nilpotency class: 1\n"));
    assert!(out.contains("center: span{e1}\n"));
    assert!(out.contains("left center: span{e1}\n"));
    assert!(out.contains("right center: span{e1}\n"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn analyze_rejects_invalid_files() {
    for name in ["gf4.alg", "not_leibniz.alg", "syntax.alg"] {
        let (code, out, err) = run(&["analyze", &fixture(&format!("invalid/{name}"))]);
        assert_eq!(code, 2, "{name}");
        assert!(out.is_empty());
        assert!(err.contains("error:"), "{err}");
    }
    let (_, _, err) = run(&["analyze", &fixture("invalid/syntax.alg")]);
    assert!(err.contains("line 4, column"), "{err}");
    let (_, _, err) = run(&["analyze", &fixture("invalid/not_leibniz.alg")]);
    assert!(err.contains("(e1, e1, e1)"), "{err}");
}

#[test]
fn analyze_unchecked_reports_the_violation() {
    let (code, out, _) = run(&["analyze", "--unchecked", &fixture("invalid/not_leibniz.alg")]);
    assert_eq!(code, 0);
    assert!(out.contains("leibniz identity: fails on (e1, e1, e1)\n"), "{out}");
}

#[test]
fn cyclic_examples() {
    let (code, out, _) = run(&["cyclic", "--field", "Q", "--alphas", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("== cyclic ==\n"));
    assert!(out.contains("p(x) = x^2 - x\n"));
    assert!(out.contains("frattini: 0\n"));

    let (_, out, _) = run(&["cyclic", "--field", "Q", "--alphas", "0"]);
    assert!(out.contains("p(x) = x^2\n"));
    assert!(out.contains("frattini: span{a^2}\n"));

    let (_, out, _) = run(&["cyclic", "--field", "GF3", "--alphas", "1,0"]);
    assert!(out.contains("factorization: x * (x + 1) * (x + 2)\n"), "{out}");
    assert!(out.contains("maximal subalgebras (3):\n"));

    let (_, out, _) = run(&["cyclic", "--field", "Q", "--alphas", "-1/2,3/2"]);
    assert!(out.contains("alphas (-1/2, 3/2)\n"), "{out}");
}

#[test]
fn cyclic_rejects_bad_scalars() {
    let (code, _, _) = run(&["cyclic", "--field", "GF3", "--alphas", "1/3"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["cyclic", "--field", "GF4", "--alphas", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn sweep_dim2_all_checks() {
    let (code, out, err) = run(&["sweep", "--field", "GF2", "--dim", "2", "--checks", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("== sweep ==\n"));
    assert!(out.contains("census: GF(2) dim 2: all 256 tables, 13 Leibniz\n"));
    assert_eq!(out.matches("counterexamples: 0\n").count(), 5);
    assert!(err.contains("runtime:"));
}

#[test]
fn sweep_dim3_sstar() {
    let (code, out, _) = run(&["sweep", "--field", "GF2", "--dim", "3", "--checks", "sstar"]);
    assert_eq!(code, 0);
    assert!(out.contains("806 Leibniz"));
    assert!(out.contains("checked: 806\n"));
}

#[test]
fn sweep_gf3_frattini() {
    let (code, out, _) = run(&["sweep", "--field", "GF3", "--dim", "2", "--checks", "frattini"]);
    assert_eq!(code, 0);
    assert!(out.contains("counterexamples: 0\n"));
}

#[test]
fn sweep_sampled_is_deterministic() {
    let args = [
        "sweep",
        "--field",
        "GF2",
        "--dim",
        "3",
        "--checks",
        "conditionk,thm31",
        "--sample",
        "20000",
        "--seed",
        "7",
    ];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    assert!(first.contains("coverage: partial\n"));
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
}

#[test]
fn sweep_budget_exit_code() {
    let (code, out, err) = run(&["sweep", "--field", "GF3", "--dim", "3", "--checks", "sstar"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.contains("budget exceeded"), "{err}");
}

#[test]
fn isocheck_cases() {
    let (code, out, _) = run(&[
        "isocheck",
        &fixture("heisenberg_gf2.alg"),
        &fixture("heisenberg_gf2.alg"),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("== isocheck ==\nisomorphic\n"));

    let (code, out, _) = run(&[
        "isocheck",
        &fixture("nilpotent_cyclic_gf2.alg"),
        &fixture("nilpotent_cyclic_swapped_gf2.alg"),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("isomorphic\n"));
    assert!(out.contains("[0, 1]\n[1, 0]\n"), "{out}");

    let (code, out, _) = run(&[
        "isocheck",
        &fixture("idempotent_cyclic_gf2.alg"),
        &fixture("nilpotent_cyclic_gf2.alg"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "== isocheck ==\nnot isomorphic\n");
}

#[test]
fn isocheck_mismatches() {
    let (code, _, err) = run(&[
        "isocheck",
        &fixture("heisenberg_gf2.alg"),
        &fixture("nilpotent_cyclic_gf2.alg"),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("dimension mismatch"));
    let (code, _, _) = run(&[
        "isocheck",
        &fixture("nilpotent_cyclic_q.alg"),
        &fixture("nilpotent_cyclic_q.alg"),
    ]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors() {
    let (code, _, _) = run(&["sweep", "--field", "GF2", "--dim", "2", "--checks", "bogus"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["analyze", "/nonexistent/file.alg"]);
    assert_eq!(code, 2);
}
