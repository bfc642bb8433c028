//! End-to-end tests of the command-line interface: exit codes, report
//! shapes, file handling, and the documented worked examples.

use std::path::PathBuf;
use std::process::{Command, Output};

fn trilie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trilie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("trilie-cli-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writable");
    path
}

#[test]
fn check_passing_catalog_entries() {
    let out = trilie(&["check", "--kind", "bialgebra", "catalog:ex3.2"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("result: pass"));

    let out = trilie(&["check", "--kind", "algebra", "catalog:L_e"]);
    assert_eq!(exit_code(&out), 0);

    let out = trilie(&["check", "--kind", "coalgebra", "--alpha", "-1/2", "catalog:C_c2"]);
    assert_eq!(exit_code(&out), 0);

    // records format emits the machine-readable status line
    let out = trilie(&[
        "check",
        "--kind",
        "bialgebra",
        "--format",
        "records",
        "catalog:ex3.2",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("check kind=bialgebra source=catalog:ex3.2 status=pass"));
}

#[test]
fn check_reports_violations_with_exit_1() {
    // an algebra violating the bracket identity
    let path = temp_file(
        "bad-algebra.txt",
        "dim 4\nbracket 2 3 4 = 1*e1\nbracket 1 3 4 = 1*e2\nbracket 1 2 3 = 1*e1\n",
    );
    let out = trilie(&["check", "--kind", "algebra", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("fundamental identity: fail"));
    assert!(text.contains("result: fail"));
    std::fs::remove_file(path).ok();
}

#[test]
fn parse_errors_exit_2_with_line_number() {
    let path = temp_file(
        "repeated-index.txt",
        "dim 4\nbracket 1 1 2 = 1*e3\n",
    );
    let out = trilie(&["check", "--kind", "algebra", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("line 2"), "stderr: {}", stderr(&out));
    std::fs::remove_file(path).ok();

    let out = trilie(&["check", "--kind", "algebra", "catalog:no_such_name"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unknown catalog name"));

    // parametric entries demand their parameter
    let out = trilie(&["check", "--kind", "algebra", "catalog:L_c2"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("alpha"));

    let out = trilie(&["check", "--kind", "algebra", "catalog:L_c2(alpha=0)"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn dualize_catalog_entries() {
    let out = trilie(&["dualize", "catalog:L_b"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "dim 3\ncobracket 1 = 1*e1^e2^e3\n");

    // the dual of the worked bialgebra example
    let out = trilie(&["dualize", "catalog:ex3.2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "dim 4\nbracket 1 2 4 = 1*e3\nbracket 2 3 4 = -1*e1\n\
         cobracket 1 = 1*e1^e3^e4\ncobracket 2 = 1*e2^e3^e4\n"
    );
}

#[test]
fn dualize_twice_reproduces_canonical_form() {
    // a deliberately non-canonical input file
    let original = "dim 4\nbracket 3 2 4 = 1*e1\ncobracket 2 = 2*e4^e1^e3\n";
    let canonical = "dim 4\nbracket 2 3 4 = -1*e1\ncobracket 2 = 2*e1^e3^e4\n";
    let path = temp_file("roundtrip.txt", original);
    let once = trilie(&["dualize", path.to_str().unwrap()]);
    assert_eq!(exit_code(&once), 0, "stderr: {}", stderr(&once));
    let mid = temp_file("roundtrip-dual.txt", &stdout(&once));
    let twice = trilie(&["dualize", mid.to_str().unwrap()]);
    assert_eq!(exit_code(&twice), 0);
    assert_eq!(stdout(&twice), canonical);
    std::fs::remove_file(path).ok();
    std::fs::remove_file(mid).ok();
}

#[test]
fn dualize_rejects_unverified_bialgebra() {
    let path = temp_file(
        "incompatible.txt",
        "dim 4\nbracket 2 3 4 = 1*e1\nbracket 1 3 4 = 1*e2\ncobracket 1 = 1*e1^e2^e3\n",
    );
    let out = trilie(&["dualize", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("fails verification"));
    std::fs::remove_file(path).ok();
}

#[test]
fn equiv_with_supplied_map() {
    // the stored dim-4 example map carries the first bialgebra onto the third
    let map = temp_file(
        "ex37-map.txt",
        "dim 4\nmap e1 -> 1*e2\nmap e2 -> -1*e1\nmap e3 -> 1*e4\nmap e4 -> 1*e3\n",
    );
    let out = trilie(&[
        "equiv",
        "--map",
        map.to_str().unwrap(),
        "catalog:ex3.7.B1",
        "catalog:ex3.7.B3",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("equivalent\n"));
    assert!(text.contains("map e1 -> 1*e2"));
    std::fs::remove_file(map).ok();
}

#[test]
fn equiv_fingerprint_mismatch_is_inequivalent() {
    let out = trilie(&[
        "equiv",
        "--search",
        "grid1",
        "catalog:B_thm43_0_delta1",
        "catalog:B_thm43_mu_b_delta1",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("inequivalent (derived_dim 0 != 1)"));
}

#[test]
fn equiv_search_unknown_on_separated_dim3_pair() {
    let out = trilie(&[
        "equiv",
        "--search",
        "grid1",
        "catalog:B_thm43_mu_b_delta1",
        "catalog:B_thm43_mu_b_delta2",
    ]);
    assert_eq!(exit_code(&out), 3);
    assert!(stdout(&out).starts_with("unknown"));

    let out = trilie(&[
        "equiv",
        "--format",
        "records",
        "--search",
        "grid1",
        "catalog:B_thm43_mu_b_delta1",
        "catalog:B_thm43_mu_b_delta3",
    ]);
    assert_eq!(exit_code(&out), 3);
    assert!(stdout(&out).contains("equiv verdict=unknown"));
}

#[test]
fn equiv_search_finds_dim4_sign_witness() {
    // the two dim-4 bialgebras differing by the sign of the cobracket are
    // equivalent; the exhaustive small-grid search finds a witness
    let out = trilie(&[
        "equiv",
        "--search",
        "grid1",
        "catalog:ex3.7.B1",
        "catalog:ex3.7.B2",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("equivalent\n"), "stdout: {text}");

    // replay the printed witness through the verifier
    let witness_file = temp_file(
        "found-witness.txt",
        text.strip_prefix("equivalent\n").unwrap(),
    );
    let replay = trilie(&[
        "equiv",
        "--map",
        witness_file.to_str().unwrap(),
        "catalog:ex3.7.B1",
        "catalog:ex3.7.B2",
    ]);
    assert_eq!(exit_code(&replay), 0);
    std::fs::remove_file(witness_file).ok();
}

#[test]
fn search_witness_is_deterministic_across_job_counts() {
    // a dim-3 pair whose witness is not among the first candidates: the
    // lexicographically first witness must win regardless of parallelism
    let survivor = temp_file(
        "survivor.txt",
        "dim 3\ncobracket 2 = 1*e1^e2^e3\ncobracket 3 = 1*e1^e2^e3\n",
    );
    let run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_trilie"))
            .env("TRILIE_JOBS", jobs)
            .args([
                "equiv",
                "--kind",
                "bialgebra",
                "--search",
                "grid1",
                survivor.to_str().unwrap(),
                "catalog:B_thm43_0_delta1",
            ])
            .output()
            .expect("binary runs");
        (exit_code(&out), stdout(&out))
    };
    let serial = run("1");
    let parallel = run("7");
    assert_eq!(serial.0, 0, "witness must exist: {}", serial.1);
    assert_eq!(serial, parallel, "witness must not depend on the job count");
    std::fs::remove_file(survivor).ok();
}

#[test]
fn equiv_usage_errors() {
    // neither --map nor --search
    let out = trilie(&["equiv", "catalog:ex3.7.B1", "catalog:ex3.7.B2"]);
    assert_eq!(exit_code(&out), 2);

    // kind mismatch
    let out = trilie(&["equiv", "--search", "grid1", "catalog:L_b", "catalog:C_b"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("kind mismatch"));

    // dimension mismatch
    let out = trilie(&["equiv", "--search", "grid1", "catalog:L_b", "catalog:L_b1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("dimension mismatch"));
}

#[test]
fn enumerate_reproduces_classification() {
    let out = trilie(&["enumerate", "--dim", "3", "--grid", "-1,0,1", "--mu", "L_b"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("survivors: 27"));
    assert!(text.contains("class (L,mu_b,0): 1"));
    assert!(text.contains("class (L,mu_b,Delta1): 9"));
    assert!(text.contains("class (L,mu_b,Delta2): 8"));
    assert!(text.contains("class (L,mu_b,Delta3): 9"));

    let out = trilie(&[
        "enumerate", "--format", "records", "--dim", "3", "--grid", "-1,0,1", "--mu",
        "abelian",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("survivors=27"));
    assert!(text.contains("unclassified=0"));
    assert!(text.contains("class label=(L,0,0) count=1"));
    assert!(text.contains("class label=(L,0,Delta1) count=26"));
}

#[test]
fn enumerate_trivial_grid_and_bad_dim() {
    let out = trilie(&["enumerate", "--dim", "3", "--grid", "0", "--mu", "abelian"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("survivors: 1"));
    assert!(text.contains("class (L,0,0): 1"));

    let out = trilie(&["enumerate", "--dim", "4", "--grid", "0", "--mu", "L_b1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unsupported"));
}
