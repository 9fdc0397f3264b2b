//! End-to-end runs of the `sldendro` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn sldendro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sldendro"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn generate(dir: &TempDir, extra: &[&str]) -> PathBuf {
    let out = dir.path().join("input.edges");
    let mut args = vec!["gen", "--output", path_str(&out)];
    args.extend_from_slice(extra);
    let o = sldendro(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn build(input: &Path, out: &Path, algo: &str, threads: &str) {
    let o = sldendro(&[
        "build",
        "--input",
        path_str(input),
        "--algo",
        algo,
        "--threads",
        threads,
        "--output",
        path_str(out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.contains("mpoints_per_sec="), "{stdout}");
}

fn verify(a: &Path, b: &Path) -> Output {
    sldendro(&["verify", "--a", path_str(a), "--b", path_str(b)])
}

#[test]
fn pandora_matches_bottom_up_through_files() {
    let dir = TempDir::new().unwrap();
    let input = generate(
        &dir,
        &[
            "--dist", "uniform", "--n", "3000", "--dim", "3", "--seed", "11",
        ],
    );
    let (p, b, t) = (
        dir.path().join("p.d"),
        dir.path().join("b.d"),
        dir.path().join("t.d"),
    );
    build(&input, &p, "pandora", "4");
    build(&input, &b, "bottomup", "1");
    build(&input, &t, "topdown", "1");
    assert_eq!(verify(&p, &b).status.code(), Some(0));
    assert_eq!(verify(&p, &t).status.code(), Some(0));
}

#[test]
fn output_bytes_do_not_depend_on_threads() {
    let dir = TempDir::new().unwrap();
    let input = generate(
        &dir,
        &["--topology", "random", "--n", "50000", "--seed", "2"],
    );
    let one = dir.path().join("one.d");
    let eight = dir.path().join("eight.d");
    build(&input, &one, "pandora", "1");
    build(&input, &eight, "pandora", "8");
    assert_eq!(fs::read(&one).unwrap(), fs::read(&eight).unwrap());
}

#[test]
fn gen_is_deterministic() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    let args = [
        "--dist", "normal", "--n", "5000", "--seed", "9", "--minpts", "4",
    ];
    let fa = generate(&a, &args);
    let fb = generate(&b, &args);
    assert_eq!(fs::read(fa).unwrap(), fs::read(fb).unwrap());
}

#[test]
fn star_matches_golden_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("star.d");
    build(&data("star.edges"), &out, "pandora", "2");
    let o = verify(&out, &data("star.dendrogram"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "identical\n");
}

#[test]
fn verify_reports_first_divergence() {
    let dir = TempDir::new().unwrap();
    let other = dir.path().join("other.d");
    fs::write(
        &other,
        "#dendrogram v1 n=3 nv=4\nE 0 -1\nE 1 0\nE 2 0\nV 0 2\nV 1 0\nV 2 2\nV 3 1\n",
    )
    .unwrap();
    let o = verify(&data("star.dendrogram"), &other);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        String::from_utf8(o.stdout).unwrap(),
        "differ at edge 2: parent 1 vs 0\n"
    );
}

#[test]
fn stats_of_star() {
    let o = sldendro(&["stats", "--input", path_str(&data("star.edges"))]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    for line in [
        "edges=3",
        "vertices=4",
        "levels=1",
        "height=3",
        "chains=1",
        "level.0.alpha=0",
        "level.0.leaf=1",
        "level.0.chain=2",
        "level.1.survivors=0",
    ] {
        assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
    }
    let o = sldendro(&[
        "stats",
        "--input",
        path_str(&data("star.edges")),
        "--dendrogram",
        path_str(&data("star.dendrogram")),
        "--json",
    ]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["height"], 3);
    assert_eq!(json["levels"], 1);
}

#[test]
fn bench_prints_one_row_per_thread_count() {
    let o = sldendro(&[
        "bench",
        "--input",
        path_str(&data("star.edges")),
        "--threads-list",
        "1,2,8",
        "--repeat",
        "3",
    ]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.starts_with("algo=pandora threads=")));
}

#[test]
fn usage_and_io_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("x");
    let star = data("star.edges");
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "build",
            "--input",
            path_str(&star),
            "--algo",
            "quick",
            "--output",
            path_str(&out),
        ],
        vec![
            "build",
            "--input",
            path_str(&star),
            "--threads",
            "0",
            "--output",
            path_str(&out),
        ],
        vec![
            "build",
            "--input",
            "/nonexistent/tree",
            "--output",
            path_str(&out),
        ],
        vec!["bench", "--input", path_str(&star), "--threads-list", "1,0"],
        vec!["verify", "--a", path_str(&star), "--b", path_str(&star)],
        vec!["gen", "--n", "1", "--output", path_str(&out)],
        vec![
            "gen",
            "--n",
            "10",
            "--minpts",
            "11",
            "--output",
            path_str(&out),
        ],
        vec!["gen", "--n", "10", "--dim", "9", "--output", path_str(&out)],
    ];
    for args in cases {
        assert_eq!(sldendro(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_edge_list_names_the_line() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.edges");
    fs::write(&bad, "0 1 1.0\n1 2 oops\n").unwrap();
    let o = sldendro(&["stats", "--input", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}
