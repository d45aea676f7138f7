use std::io::Write;
use std::process::{Command, Stdio};

use asymcolor::cli::{self, EXIT_HYPOTHESIS, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_WITNESS};
use asymcolor::io::{encode_graph6, families, ColoringDocument};
use asymcolor::perm;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["asymcolor"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("asymcolor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn gen_then_color_then_verify() {
    let (code, g6, _) = run(&["gen", "complete", "4"], "");
    assert_eq!((code, g6.as_str()), (EXIT_OK, "C~\n"));
    let (code, json, _) = run(&["color", "-", "--out", "json", "--paranoid"], &g6);
    assert_eq!(code, EXIT_OK);
    let doc = ColoringDocument::from_json(&json).unwrap();
    assert_eq!(doc.edges.len(), 6);
    assert!(doc.meta.verified);

    let gpath = temp_file("k4.g6", &g6);
    let cpath = temp_file("k4.json", &json);
    let (code, out, _) = run(&["verify", &gpath, &cpath], "");
    assert_eq!((code, out.as_str()), (EXIT_OK, "asymmetric\n"));
}

#[test]
fn tampered_coloring_has_witness() {
    let g = families::cycle(6);
    let (_, json, _) = run(&["color", "-"], &encode_graph6(&g));
    let doc = ColoringDocument::from_json(&json).unwrap();
    let mut c = doc.coloring_for(&g).unwrap();
    // make the coloring invariant under the reflection v -> 5 - v
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let j = g.edge_index(5 - u, 5 - v).unwrap();
        if i < j {
            c.set(j, c.get(i).unwrap());
        }
    }
    assert!(!perm::is_asymmetric(&g, &c));
    let tampered = ColoringDocument::new(&g, &c, None, false).unwrap().to_json();
    let gpath = temp_file("c6.g6", &encode_graph6(&g));
    let cpath = temp_file("c6-tampered.json", &tampered);
    let (code, out, _) = run(&["verify", &gpath, &cpath], "");
    assert_eq!(code, EXIT_WITNESS);
    assert!(out.starts_with("witness ["));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["color", "-"], "0 1\n").0, EXIT_HYPOTHESIS);
    assert_eq!(run(&["color", "-"], "0 1\n1 2\n2 3\n3 0\n0 4\n").0, EXIT_HYPOTHESIS);
    assert_eq!(run(&["color", "/definitely/not/here"], "").0, EXIT_IO);
    assert_eq!(run(&["color", "-"], "0 x\n").0, EXIT_IO);
    assert_eq!(run(&["frobnicate"], "").0, EXIT_USAGE);
    assert_eq!(run(&["gen", "wheel", "5"], "").0, EXIT_USAGE);
    assert_eq!(run(&["gen", "cycle", "2"], "").0, EXIT_USAGE);
    assert_eq!(run(&["census", "--n", "9"], "").0, EXIT_USAGE);
    assert_eq!(run(&["--help"], "").0, EXIT_OK);
}

#[test]
fn dprime_and_census() {
    let (code, out, _) = run(&["dprime", "-"], "0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n");
    assert_eq!((code, out.as_str()), (EXIT_OK, "3\n"));
    let (_, out, _) = run(&["dprime", "-", "--max-colors", "3"], "A_");
    assert_eq!(out, "none ≤ 3\n");
    let (code, out, _) = run(&["census", "--n", "4", "--hypothesis-only"], "");
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.contains(&"C~ 3 3 true 3"));
    let (_, again, _) = run(&["census", "--n", "4", "--hypothesis-only"], "");
    assert_eq!(out, again);
}

#[test]
fn dot_output_and_edgelist_input() {
    let (code, out, _) = run(&["color", "-", "--format", "edgelist", "--out", "dot"], "# triangle\n0 1\n1 2\n0 2\n");
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("graph G {"));
    assert_eq!(out.matches("color=").count(), 3);
}

#[test]
fn selftest_passes() {
    let (code, out, _) = run(&["selftest"], "");
    assert_eq!(code, EXIT_OK);
    assert!(!out.contains("FAIL"));
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_asymcolor"))
        .args(["color", "-", "--out", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(encode_graph6(&families::petersen()).as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let doc = ColoringDocument::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let g = families::petersen();
    assert!(perm::is_asymmetric(&g, &doc.coloring_for(&g).unwrap()));

    let status = Command::new(env!("CARGO_BIN_EXE_asymcolor")).args(["gen", "complete", "2"]).output().unwrap();
    assert_eq!(String::from_utf8(status.stdout).unwrap(), "A_\n");
}
