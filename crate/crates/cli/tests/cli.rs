use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("regflow").chain(args.iter().copied());
    let code = regflow_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn gtest_reports_class_and_table() {
    let (code, out, _) = run(&["gtest", &data("eg1.gram")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("G-POSITIVE\nk = 8\n"));
    let (_, out, _) = run(&["--porcelain", "gtest", &data("eg1.gram")]);
    assert!(out.lines().any(|l| l == "set=1,2,3,4 f=1 g=1"));
    assert!(out.lines().any(|l| l == "set= f=0 g=-8"));
}

#[test]
fn porcelain_matrices_feed_the_next_command() {
    let (code, x, _) = run(&["--porcelain", "xmatrix", &data("eg1.gram")]);
    assert_eq!(code, 0);
    let dir = std::env::temp_dir().join(format!("regflow-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let xfile = dir.join("eg1.x");
    std::fs::write(&xfile, &x).unwrap();
    let (code, out, _) = run(&["signing", xfile.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (1, "NO-TU-SIGNING\n"));

    let (_, gram, _) = run(&["--porcelain", "flows", &data("k4.graph"), "--gram"]);
    let gfile = dir.join("k4.gram");
    std::fs::write(&gfile, &gram).unwrap();
    let (code, out, _) = run(&["--porcelain", "reconstruct", gfile.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("verdict=RECONSTRUCTED\n"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn unimodularity_witnesses_are_one_based() {
    let (code, out, _) = run(&["--porcelain", "tu-check", &data("q2.mat")]);
    assert_eq!(code, 1);
    assert_eq!(out, "tu=no rows=1 cols=1 det=2\nwu=no rows=1 cols=1 det=2\n");
}

#[test]
fn reconstruction_of_a_single_entry() {
    let (code, out, _) = run(&["--porcelain", "reconstruct", &data("eg3.gram")]);
    assert_eq!(code, 0);
    assert!(out.contains("certificate=4x1 1;1;1;1\n"));
    assert!(out.contains("standard=3x4 1,0,0,-1;0,1,0,-1;0,0,1,-1\n"));
}

#[test]
fn infeasible_reconstruction_exits_one() {
    let (code, out, _) = run(&["reconstruct", &data("eg2.gram")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("VERDICT\nNOT-G-FEASIBLE NO-MATCHING-SIGNING\n"));
}

#[test]
fn pendant_edge_reconstruction_counts_zero_rows() {
    let (code, out, _) = run(&["--porcelain", "reconstruct", &data("triangle-pendant.graph")]);
    assert_eq!(code, 0);
    assert!(out.ends_with("zero_rows=1\n"));
}

#[test]
fn isometry_witness() {
    let (code, out, _) = run(&["isometric", &data("triangle.graph"), &data("triangle-pendant.graph"), "--mode", "flow"]);
    assert_eq!(code, 0);
    assert_eq!(out, "ISOMETRIC\ne1 -> e1\ne2 -> e2\ne3 -> e3\n");
    let (code, out, _) = run(&["isometric", &data("triangle.graph"), &data("k4.graph")]);
    assert_eq!((code, out.as_str()), (1, "NOT-ISOMETRIC\n"));
    let (code, _, _) = run(&["isometric", &data("triangle.graph"), &data("triangle.graph"), "--mode", "mixed"]);
    assert_eq!(code, 1);
}

#[test]
fn circuits_and_coloops() {
    let (_, out, _) = run(&["--porcelain", "circuits", &data("triangle-pendant.graph")]);
    assert_eq!(out, "e1 e2 e3\n");
    let (_, out, _) = run(&["--porcelain", "coloops", &data("triangle-pendant.graph")]);
    assert_eq!(out, "loops=\ncoloops=e4\n");
}

#[test]
fn decomposition_and_simplicity() {
    // K4 edges 01 02 03 12 13 23; the 4-cycle 0-1-3-2-0 is 01 + 13 - 23 - 02
    let (code, out, _) = run(&["--porcelain", "decompose", &data("k4.graph"), "2,-2,0,0,2,-2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 -1 0 0 1 -1\n1 -1 0 0 1 -1\n");
    let (code, out, _) = run(&["simple", &data("k4.graph"), "1,-1,0,0,1,-1"]);
    assert_eq!((code, out.as_str()), (0, "SIMPLE\n"));
    let (code, out, _) = run(&["--porcelain", "simple", &data("k4.graph"), "2,-2,0,0,2,-2"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("simple=no\n"));
}

#[test]
fn base_selection() {
    let (code, out, _) = run(&["--porcelain", "cuts", &data("triangle.graph"), "--base", "e2,3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# base=e2,e3\n3 2\n"));
    let (code, _, err) = run(&["flows", &data("triangle.graph"), "--base", "e9"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("ERROR E-USAGE:"));
}

#[test]
fn errors_carry_codes() {
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("ERROR E-USAGE:"));
    let (code, _, err) = run(&["gtest", "/definitely/not/here"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("ERROR E-IO:"));
    let (code, _, err) = run(&["gtest", &data("q2.mat")]);
    assert_eq!(code, 2);
    assert!(err.starts_with("ERROR E-PARSE:"));
    let (code, _, err) = run(&["--gram-order", "3", "gtest", &data("eg1.gram")]);
    assert_eq!(code, 2);
    assert!(err.starts_with("ERROR E-BOUND:"));
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn binary_honours_environment_bounds() {
    let bin = env!("CARGO_BIN_EXE_regflow");
    let out = Command::new(bin)
        .args(["gtest", &data("eg1.gram")])
        .env("REGFLOW_GRAM_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("ERROR E-BOUND:"));
    let out = Command::new(bin).args(["gtest", &data("eg1.gram")]).env_remove("REGFLOW_GRAM_ORDER").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["--porcelain", "reconstruct", &data("k4.graph")]);
    let b = run(&["--porcelain", "reconstruct", &data("k4.graph")]);
    assert_eq!(a, b);
}
