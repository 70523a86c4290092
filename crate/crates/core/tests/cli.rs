//! The `mldsurf` binary end to end.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(stem: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{stem}.germ"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mldsurf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn discrepancy_rows() {
    let o = run(&["discrepancies", path(&fixture("d4_duval"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "F1 1/1\nF2 1/1\nF3 1/1\nF4 1/1\n");
    let o = run(&["discrepancies", path(&fixture("bd12_d4"))]);
    assert_eq!(stdout(&o), "F1 1/2\nF2 1/2\nF3 3/4\nF4 3/4\n");
    let o = run(&["discrepancies", path(&fixture("a1_weight3"))]);
    assert_eq!(stdout(&o), "F1 2/3\n");
}

#[test]
fn golden_reports() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (stem, depth) in [("e8_duval", "6"), ("bd12_d4", "6"), ("h5", "6"), ("a1_weight3", "6"), ("kawakita", "4")] {
        let o = run(&["classify", "--depth", depth, path(&fixture(stem))]);
        assert_eq!(o.status.code(), Some(0), "{stem}");
        let want = fs::read_to_string(golden.join(format!("{stem}.txt"))).unwrap();
        assert_eq!(stdout(&o), want, "{stem}");
    }
}

#[test]
fn classify_picks_the_fork() {
    let o = run(&["classify", path(&fixture("e8_duval"))]);
    let text = stdout(&o);
    assert!(text.starts_with("case: 1.b.iv\n"));
    assert!(text.contains("kollar_set: F2\n") && text.contains("plc_set: F2\n"));
    assert!(text.ends_with("consistent: true\n"));
}

#[test]
fn invalid_input_reports_the_line() {
    let dir = scratch("invalid");
    let bad = dir.join("bad.germ");
    let text = fs::read_to_string(fixture("a3_duval")).unwrap().replace("F2 weight=2", "F2 weight=1");
    fs::write(&bad, text).unwrap();
    let o = run(&["classify", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line"), "{err}");
    let o = run(&["discrepancies", path(&dir.join("missing.germ"))]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["classify", "--depth", "0", path(&fixture("a1_duval"))]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn not_lc_is_rejected() {
    let dir = scratch("not_lc");
    let f = dir.join("cusp.germ");
    fs::write(&f, "mldsurf-spec v1\n[germ]\nkind = smooth\n[boundary]\nC coeff=1 at=origin cluster=2,1,1^0\n").unwrap();
    let o = run(&["classify", path(&f)]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["discrepancies", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_lemmas() {
    let o = run(&["verify", "--suite", "lemmas", "--seed", "1", "--cases", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("lemmas/ledger: 20 cases, pass"), "{text}");
    assert!(text.ends_with("summary: 6 properties, 120 cases, 0 failures\n"), "{text}");
}

#[test]
fn graph_listing_and_dot() {
    let o = run(&["graph", "--dot", path(&fixture("d4_duval"))]);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph dual {"));
    assert_eq!(dot.matches("[label=").count(), 4);
    assert_eq!(dot.matches(" -- ").count(), 3);
    let o = run(&["graph", path(&fixture("h5"))]);
    let text = stdout(&o);
    assert!(text.starts_with("class: H5\n"), "{text}");
    assert_eq!(text.matches("edge F1 ").count(), 4);
}

#[test]
fn graph_after_blow_ups() {
    let dir = scratch("script");
    let script = dir.join("two.txt");
    fs::write(&script, "origin\nbranch D  # follow the cusp\n").unwrap();
    let o = run(&["graph", "--blow-up", path(&script), path(&fixture("kawakita"))]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("vertex E1 weight=2"), "{text}");
    assert!(text.contains("vertex E2 weight=1"), "{text}");
    assert!(text.contains("strict D"), "{text}");
    fs::write(&script, "origin\nmeet E1 E9\n").unwrap();
    let o = run(&["graph", "--blow-up", path(&script), path(&fixture("kawakita"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn batch_runs_in_name_order() {
    let dir = scratch("batch");
    for stem in ["d4_duval", "a1_weight3", "bd12_d4"] {
        fs::copy(fixture(stem), dir.join(format!("{stem}.germ"))).unwrap();
    }
    fs::write(dir.join("notes.txt"), "ignored").unwrap();
    let o = run(&["discrepancies", path(&dir)]);
    assert_eq!(o.status.code(), Some(0));
    let headers: Vec<String> = stdout(&o).lines().filter(|l| l.starts_with("== ")).map(String::from).collect();
    let names: Vec<&str> = headers.iter().map(|h| h.rsplit('/').next().unwrap()).collect();
    assert_eq!(names, ["a1_weight3.germ ==", "bd12_d4.germ ==", "d4_duval.germ =="]);
    fs::write(dir.join("zz.germ"), "not a germ").unwrap();
    let o = run(&["discrepancies", path(&dir)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("F4 3/4"));
}
