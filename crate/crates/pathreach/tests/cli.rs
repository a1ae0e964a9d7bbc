use std::fs;
use std::path::{Path, PathBuf};

use pathreach::{parse_graph, run, write_graph, ExitStatus};
use pathreach_core::testkit::gen_random_dag;
use proptest::prelude::*;
use tempfile::TempDir;

const OVERLAPPING: &str =
    "# two walks, shared steps 2->3 and 3->4\n1 6 7 2 3 4 5 10 9 8\n1 2 3 4 9 3 8\n";

struct Outcome {
    status: ExitStatus,
    stdout: String,
    stderr: String,
}

fn pathreach(args: &[&str], stdin: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pathreach").chain(args.iter().copied());
    let status = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome {
        status,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn reach_on_overlapping_walks() {
    let dir = TempDir::new().unwrap();
    let walks = write(&dir, "overlap.walks", OVERLAPPING);

    let o = pathreach(
        &["reach", "--decomp", s(&walks), "--from", "5", "--to", "3"],
        "",
    );
    assert_eq!(o.status, ExitStatus::SUCCESS);
    assert!(
        o.stdout
            .starts_with("REACHABLE switches=1 iterations=1 peak_words="),
        "{}",
        o.stdout
    );
    assert_eq!(o.stdout.lines().count(), 1);

    let o = pathreach(
        &["reach", "--decomp", s(&walks), "--from", "8", "--to", "1"],
        "",
    );
    assert_eq!(o.status, ExitStatus::NEGATIVE);
    assert!(
        o.stdout.starts_with("UNREACHABLE iterations="),
        "{}",
        o.stdout
    );

    let o = pathreach(
        &[
            "min-switches",
            "--decomp",
            s(&walks),
            "--from",
            "5",
            "--to",
            "3",
        ],
        "",
    );
    assert_eq!((o.status, o.stdout.as_str()), (ExitStatus::SUCCESS, "1\n"));

    let o = pathreach(
        &["oracle", "--decomp", s(&walks), "--from", "5", "--to", "3"],
        "",
    );
    assert_eq!(
        (o.status, o.stdout.as_str()),
        (ExitStatus::SUCCESS, "REACHABLE switches=1\n")
    );
}

#[test]
fn reach_line_format_is_stable() {
    let dir = TempDir::new().unwrap();
    let walks = write(&dir, "overlap.walks", OVERLAPPING);
    for (from, to) in [(1, 8), (8, 1), (6, 6), (0, 3)] {
        let (from, to) = (from.to_string(), to.to_string());
        let o = pathreach(
            &["reach", "--decomp", s(&walks), "--from", &from, "--to", &to],
            "",
        );
        let line = o.stdout.trim_end();
        let fields: Vec<&str> = line.split(' ').collect();
        match fields[0] {
            "REACHABLE" => {
                assert_eq!(fields.len(), 4);
                assert!(fields[1]
                    .strip_prefix("switches=")
                    .unwrap()
                    .parse::<usize>()
                    .is_ok());
                assert!(fields[2]
                    .strip_prefix("iterations=")
                    .unwrap()
                    .parse::<usize>()
                    .is_ok());
                assert!(fields[3]
                    .strip_prefix("peak_words=")
                    .unwrap()
                    .parse::<usize>()
                    .is_ok());
            }
            "UNREACHABLE" => {
                assert_eq!(fields.len(), 3);
                assert!(fields[1]
                    .strip_prefix("iterations=")
                    .unwrap()
                    .parse::<usize>()
                    .is_ok());
                assert!(fields[2]
                    .strip_prefix("peak_words=")
                    .unwrap()
                    .parse::<usize>()
                    .is_ok());
            }
            other => panic!("unexpected verdict {other}"),
        }
    }
}

#[test]
fn reach_with_graph_validates_first() {
    let dir = TempDir::new().unwrap();
    let walks = write(&dir, "w", "0 1 2\n");
    let good = write(&dir, "good.g", "n 4\ne 0 1\ne 1 2\n");
    let bad = write(&dir, "bad.g", "n 4\ne 0 1\ne 1 2\ne 2 3\n");

    // Vertex 3 exists only in the graph file.
    let o = pathreach(
        &[
            "reach",
            "--decomp",
            s(&walks),
            "--graph",
            s(&good),
            "--from",
            "3",
            "--to",
            "3",
        ],
        "",
    );
    assert_eq!(o.status, ExitStatus::SUCCESS);

    let o = pathreach(
        &[
            "reach",
            "--decomp",
            s(&walks),
            "--graph",
            s(&bad),
            "--from",
            "0",
            "--to",
            "2",
        ],
        "",
    );
    assert_eq!(o.status, ExitStatus::ERROR);
    assert!(
        o.stderr.starts_with("error: decomposition does not match"),
        "{}",
        o.stderr
    );
}

#[test]
fn decompose_rejects_cycles() {
    let dir = TempDir::new().unwrap();
    let cycle = write(&dir, "cycle2.g", "n 2\ne 0 1\ne 1 0\n");
    let o = pathreach(&["decompose", "--graph", s(&cycle)], "");
    assert_eq!(o.status, ExitStatus::ERROR);
    assert_eq!(o.stderr, "error: graph is not acyclic\n");
    assert!(o.stdout.is_empty());
}

#[test]
fn decompose_validate_and_lower_bound() {
    let dir = TempDir::new().unwrap();
    let diamond = write(&dir, "diamond.g", "n 4\ne 0 1\ne 0 2\ne 1 3\ne 2 3\n");
    let o = pathreach(&["decompose", "--graph", s(&diamond)], "");
    assert_eq!(
        (o.status, o.stdout.as_str()),
        (ExitStatus::SUCCESS, "0 1 3\n0 2 3\n")
    );

    let v = pathreach(
        &["validate", "--graph", s(&diamond), "--decomp", "-"],
        &o.stdout,
    );
    assert_eq!((v.status, v.stdout.as_str()), (ExitStatus::SUCCESS, "OK\n"));

    let lb = pathreach(&["pathnum-lb", "--graph", s(&diamond)], "");
    assert_eq!(lb.stdout, "2\n");
}

#[test]
fn validate_reports_every_violation() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g", "n 3\ne 0 1\ne 1 2\n");
    let w = write(&dir, "w", "0 1\n0 1\n");
    let o = pathreach(
        &["validate", "--graph", s(&g), "--decomp", s(&w), "--paths"],
        "",
    );
    assert_eq!(o.status, ExitStatus::NEGATIVE);
    assert_eq!(
        o.stdout,
        "INVALID violations=2\nEDGE_REPEATED walk=1 edge=0 1\nEDGE_UNCOVERED edge=1 2\n"
    );
    let o = pathreach(
        &["validate", "--graph", s(&g), "--decomp", s(&w), "--walks"],
        "",
    );
    assert_eq!(o.stdout, "INVALID violations=1\nEDGE_UNCOVERED edge=1 2\n");

    let overlap = write(&dir, "overlap", OVERLAPPING);
    let o = pathreach(&["gen", "dag", "--n", "3", "--p", "0"], "");
    assert_eq!(o.stdout, "n 3\n");
    let union =
        pathreach_core::union_graph(&pathreach::parse_decomposition(OVERLAPPING).unwrap(), 11)
            .unwrap();
    let u = write(&dir, "union", &write_graph(&union));
    let o = pathreach(
        &[
            "validate",
            "--graph",
            s(&u),
            "--decomp",
            s(&overlap),
            "--walks",
        ],
        "",
    );
    assert_eq!(o.stdout, "OK\n");
}

#[test]
fn input_errors_exit_with_two() {
    let o = pathreach(&["frobnicate"], "");
    assert_eq!(o.status, ExitStatus::ERROR);
    assert!(!o.stderr.is_empty());

    let o = pathreach(&["decompose", "--graph", "/nonexistent/graph"], "");
    assert_eq!(o.status, ExitStatus::ERROR);
    assert!(o
        .stderr
        .starts_with("error: cannot read /nonexistent/graph"));
    assert_eq!(o.stderr.lines().count(), 1);

    let o = pathreach(&["pathnum-lb", "--graph", "-"], "n 2\ne 0 0\n");
    assert_eq!(o.status, ExitStatus::ERROR);
    assert_eq!(o.stderr, "error: -: line 2: loop edge (0, 0)\n");

    let o = pathreach(
        &["reach", "--decomp", "-", "--from", "0", "--to", "9"],
        "0 1\n",
    );
    assert_eq!(o.status, ExitStatus::ERROR);

    let o = pathreach(&["gen", "dag", "--n", "3", "--p", "2"], "");
    assert_eq!(o.status, ExitStatus::ERROR);

    let o = pathreach(&["--help"], "");
    assert_eq!(o.status, ExitStatus::SUCCESS);
    assert!(o.stdout.contains("decompose"));
}

#[test]
fn gen_is_reproducible() {
    let args = [
        "gen",
        "walks",
        "--n",
        "20",
        "--k",
        "4",
        "--max-len",
        "10",
        "--seed",
        "42",
    ];
    let a = pathreach(&args, "");
    let b = pathreach(&args, "");
    assert_eq!(a.status, ExitStatus::SUCCESS);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout.lines().count(), 4);

    let o = pathreach(&["gen", "chain", "--n", "7", "--k", "3"], "");
    assert_eq!(o.stdout, "0 1 2\n2 3 4\n4 5 6\n");
}

#[test]
fn bench_emits_csv() {
    let o = pathreach(
        &[
            "bench",
            "--family",
            "chain",
            "--n",
            "50,100",
            "--k",
            "2,4",
            "--queries",
            "3",
        ],
        "",
    );
    assert_eq!(o.status, ExitStatus::SUCCESS);
    let mut lines = o.stdout.lines();
    assert_eq!(
        lines.next(),
        Some("n,k,total_len,query,reachable,switches,iterations,peak_words,nanos")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 2 * 2 * 3);
    assert!(rows.iter().all(|r| r.len() == 9));

    let o = pathreach(
        &[
            "bench",
            "--family",
            "random",
            "--n",
            "30",
            "--k",
            "3",
            "--queries",
            "5",
            "--seed",
            "1",
        ],
        "",
    );
    assert_eq!(o.stdout.lines().count(), 6);
}

proptest! {
    #[test]
    fn graph_text_round_trips(n in 0usize..15, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gen_random_dag(n, p, seed).unwrap();
        let text = write_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed, &g);
        prop_assert_eq!(write_graph(&parsed), text);
    }

    #[test]
    fn decomposition_text_round_trips(n in 1usize..15, k in 0usize..6, max_len in 1usize..10, seed in any::<u64>()) {
        use pathreach::{parse_decomposition, write_decomposition};
        use pathreach_core::testkit::{gen_decomposed_instance, InstanceSeed};
        let w = gen_decomposed_instance(&InstanceSeed::new(n, k, max_len, seed).unwrap());
        let text = write_decomposition(&w);
        prop_assert_eq!(parse_decomposition(&text).unwrap(), w);
    }
}
