use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

use tcover_cli::{compare, compare_graph, CSV_HEADER};
use tcover_core::instances::{enumerate_graphs, figure1};

fn tcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcover"))
        .args(args)
        .output()
        .expect("run tcover")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K2: &str = "p edge 2 1\ne 1 2\n";
const K3: &str = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";

fn gen_figure1(dir: &TempDir, n: usize) -> PathBuf {
    let path = dir.path().join(format!("figure1-{n}.gr"));
    let o = tcover(&["gen", "figure1", "--n", &n.to_string(), "-o", s(&path)]);
    assert!(o.status.success(), "{o:?}");
    path
}

#[test]
fn solve_reports_certificate() {
    let dir = TempDir::new().unwrap();
    let fig = gen_figure1(&dir, 4);
    let o = tcover(&["solve", s(&fig)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "size=4 m=4 k=0 t=0 lb=2 ratio=2.0000\n");

    let k2 = write(&dir, "k2.gr", K2);
    let o = tcover(&["solve", s(&k2)]);
    assert_eq!(stdout(&o), "size=1 m=1 k=0 t=0 lb=1 ratio=1.0000\n");

    let empty = write(&dir, "empty.gr", "p edge 0 0\n");
    assert!(stdout(&tcover(&["solve", s(&empty)])).starts_with("size=0 "));
}

#[test]
fn solve_trace_and_output_file() {
    let dir = TempDir::new().unwrap();
    let k3 = write(&dir, "k3.gr", K3);
    let cover = dir.path().join("k3.cover");
    let o = tcover(&["solve", s(&k3), "--trace", "--output", s(&cover)]);
    assert_eq!(
        stdout(&o),
        "size=2 m=1 k=1 t=0 lb=1 ratio=2.0000\n2 bad-vertex v 3\n2 bad-edge e 1 2\n"
    );
    let o = tcover(&["verify", s(&k3), "--cover", s(&cover)]);
    assert_eq!(stdout(&o), "VALID size=2\n");
}

#[test]
fn parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.gr", "p edge 2 1\ne 1 x\n");
    let o = tcover(&["solve", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = tcover(&["solve", s(&dir.path().join("missing.gr"))]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exact_command() {
    let dir = TempDir::new().unwrap();
    let fig = gen_figure1(&dir, 4);
    let o = tcover(&["exact", s(&fig)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("size=3 "));
    let o = tcover(&["exact", s(&fig), "--start-at-lower-bound"]);
    assert!(stdout(&o).starts_with("size=3 "));

    let k3 = write(&dir, "k3.gr", K3);
    assert!(stdout(&tcover(&["exact", s(&k3)])).starts_with("size=2 "));

    let k20 = dir.path().join("k20.gr");
    tcover(&["gen", "complete", "--n", "20", "-o", s(&k20)]);
    assert_eq!(tcover(&["exact", s(&k20)]).status.code(), Some(4));
    assert_eq!(
        tcover(&["exact", s(&fig), "--max-candidates", "5"])
            .status
            .code(),
        Some(5)
    );
}

#[test]
fn baseline_command() {
    let dir = TempDir::new().unwrap();
    let fig = gen_figure1(&dir, 100);
    let o = tcover(&[
        "baseline",
        s(&fig),
        "--method",
        "matched-vertices",
        "--matching",
        "maximum",
    ]);
    assert_eq!(
        stdout(&o),
        "method=matched-vertices matching=maximum size=200 valid=true\n"
    );

    let star = dir.path().join("star.gr");
    tcover(&["gen", "star", "--n", "10", "-o", s(&star)]);
    let o = tcover(&["baseline", s(&star), "--method", "greedy-domination"]);
    let size: usize = stdout(&o)
        .split_whitespace()
        .find_map(|t| t.strip_prefix("size="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(size <= 2);

    let empty3 = write(&dir, "e3.gr", "p edge 3 0\n");
    let o = tcover(&["baseline", s(&empty3)]);
    assert!(stdout(&o).contains("size=3 "));
}

#[test]
fn verify_command() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.gr", K2);
    let k3 = write(&dir, "k3.gr", K3);
    let c = write(&dir, "a.cover", "e 1 2\n");
    let o = tcover(&["verify", s(&k2), "--cover", s(&c)]);
    assert_eq!(
        (o.status.code(), stdout(&o)),
        (Some(0), "VALID size=1\n".into())
    );

    let c = write(&dir, "b.cover", "v 1\n");
    let o = tcover(&["verify", s(&k3), "--cover", s(&c)]);
    assert_eq!(
        (o.status.code(), stdout(&o)),
        (Some(1), "INVALID witness=edge (2,3)\n".into())
    );

    let c = write(&dir, "c.cover", "v 1\ne 2 3\n");
    let o = tcover(&["verify", s(&k3), "--cover", s(&c)]);
    assert_eq!(stdout(&o), "VALID size=2\n");

    let c = write(&dir, "d.cover", "e 1 3\n");
    assert_eq!(
        tcover(&["verify", s(&k2), "--cover", s(&c)]).status.code(),
        Some(2)
    );
}

#[test]
fn gen_command() {
    let dir = TempDir::new().unwrap();
    let fig = gen_figure1(&dir, 4);
    let text = std::fs::read_to_string(&fig).unwrap();
    assert!(text.starts_with("p edge 9 10\n"));

    let a = tcover(&["gen", "gnp", "--n", "10", "--p", "0.3", "--seed", "42"]);
    let b = tcover(&["gen", "gnp", "--n", "10", "--p", "0.3", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    assert_eq!(
        tcover(&["gen", "figure1", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(tcover(&["gen", "gnp", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        tcover(&["gen", "gnp", "--n", "3", "--p", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(tcover(&["gen", "wheel", "--n", "3"]).status.code(), Some(2));

    let o = tcover(&["gen", "complete", "--n", "2", "--isolated", "2"]);
    assert_eq!(stdout(&o), "p edge 4 1\ne 1 2\n");
}

#[test]
fn compare_figure1_rows() {
    let dir = TempDir::new().unwrap();
    let files: Vec<PathBuf> = (4..=12).step_by(2).map(|n| gen_figure1(&dir, n)).collect();
    let csv = compare(&files, 0).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
    for (line, n) in lines.zip((4..=12).step_by(2)) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[0], format!("figure1-{n}.gr"));
        assert_eq!(cols[6], n.to_string());
        assert_eq!(cols[11], "2.0000");
        assert_eq!(cols[8], "");
        assert_eq!(cols[13], "");
    }

    let row = compare_graph("fig4", &figure1(4).unwrap(), 32);
    assert_eq!(row.exact_size, Some(3));
    assert_eq!(row.record()[12], "1.3333");
}

#[test]
fn compare_cli_with_dir_and_errors() {
    let dir = TempDir::new().unwrap();
    write(&dir, "a.gr", K3);
    write(&dir, "b.gr", "p edge 2 1\ne 1 1\n");
    write(&dir, "c.gr", K2);
    let out = dir.path().join("table.csv");
    let sub = dir.path().join("in");
    std::fs::create_dir(&sub).unwrap();
    for name in ["a.gr", "b.gr", "c.gr"] {
        std::fs::rename(dir.path().join(name), sub.join(name)).unwrap();
    }
    let o = tcover(&["compare", "--dir", s(&sub), "--csv", s(&out)]);
    assert!(o.status.success(), "{o:?}");
    let text = std::fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[1].starts_with("a.gr,3,3,1,1,0,2,1,2,"));
    assert!(rows[2].starts_with("b.gr,,,,"));
    assert!(rows[2].contains("self-loop"));
    assert!(rows[3].starts_with("c.gr,2,1,1,0,0,1,1,1,2,1,1.0000,1.0000,"));
}

#[test]
fn compare_corpus_respects_factor_two() {
    for (i, g) in enumerate_graphs(4).unwrap().enumerate() {
        let row = compare_graph(&format!("g{i}"), &g, 32);
        assert_eq!(row.error, None);
        let (alg, exact) = (row.alg_size.unwrap(), row.exact_size.unwrap());
        assert!(alg <= 2 * exact);
        assert_eq!(alg, row.m.unwrap() + row.k.unwrap() + row.t.unwrap());
    }
}
