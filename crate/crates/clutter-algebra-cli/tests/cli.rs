use std::io::Write;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clutter-algebra")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_clutter-algebra"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn certificate(o: &Output) -> String {
    let s = stdout(o);
    let mut lines = s.lines().skip_while(|l| *l != "# certificate").skip(1);
    let mut out = String::new();
    for l in lines.by_ref() {
        if l.starts_with("# cross-check") {
            break;
        }
        out.push_str(l);
        out.push('\n');
    }
    out
}

#[test]
fn mfmc_example_exits_zero() {
    let o = run(&["mfmc", &data("nonuniform_mfmc.clt")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("max-flow-min-cut: true"));
}

#[test]
fn matrix_input_is_accepted() {
    let o = run(&["mfmc", &data("nonuniform_mfmc.mat")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn koenig_failure_has_numbers() {
    let o = run(&["koenig", &data("two_partitionable.clt")]);
    assert_eq!(o.status.code(), Some(1));
    let cert = certificate(&o);
    assert!(cert.contains("alpha0 2") && cert.contains("beta1 1"), "{cert}");
}

#[test]
fn empty_edge_list_is_a_usage_error() {
    let o = run_stdin(&["covers", "-"], "vertices: x1 x2\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let o = run(&["covers", "--frobnicate", &data("two_triangles.clt")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = run(&["covers", "/nonexistent/clutter.clt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn over_cap_exits_three() {
    let o = run(&["symbolic-gens", "--max-vertices", "3", &data("pentagon_cone.clt")]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn normality_witness_is_a_monomial() {
    let o = run(&["normal", &data("two_triangles.clt")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(certificate(&o).trim(), "x1*x2*x3*x4*x5*x6*t^3");
}

#[test]
fn packing_certificate_reproduces_the_failure() {
    let tri = "vertices: a b c\na b\nb c\na c\n";
    let o = run_stdin(&["packing", "-"], tri);
    assert_eq!(o.status.code(), Some(1));
    let minor = certificate(&o);
    assert!(minor.starts_with("vertices:"), "{minor}");
    let again = run_stdin(&["koenig", "-"], &minor);
    assert_eq!(again.status.code(), Some(1));
}

#[test]
fn balanced_certificate_is_a_matrix() {
    let o = run_stdin(&["balanced", "-"], "3 3\n1 0 1\n1 1 0\n0 1 1\n");
    assert_eq!(o.status.code(), Some(1));
    let sub = certificate(&o);
    assert!(sub.starts_with("3 3\n"), "{sub}");
    let again = run_stdin(&["balanced", "-"], &sub);
    assert_eq!(again.status.code(), Some(1));
}

#[test]
fn rounding_violation_is_a_matrix_row() {
    let o = run(&["irp", "--system", "ge", &data("uniform_rounding_gap.clt")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(certificate(&o).starts_with("1 8\n"));
}

#[test]
fn json_mirrors_the_report() {
    let o = run(&["--json", "duality", &data("two_triangles.clt")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.get("cross_checks").is_some());
    let d = &v["duality"];
    assert_eq!(d["verdict"], serde_json::json!(false));
    assert!(d["certificate"]["rees-algebra-normal"].is_object());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["--json", "irp", "--system", "le", &data("uniform_rounding_gap.clt")]);
    let b = run(&["--json", "irp", "--system", "le", &data("uniform_rounding_gap.clt")]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn generators_round_trip() {
    let o = run(&["symbolic-gens", &data("pentagon_cone.clt")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.lines().any(|l| l == "x1*x2*x3*x4*x5*x6^2*t^5"), "{s}");
}

#[test]
fn gorenstein_on_a_path() {
    let o = run_stdin(&["gorenstein", "-"], "vertices: a b c\na b\nb c\n");
    assert_eq!(o.status.code(), Some(1));
    let o = run_stdin(&["gorenstein", "-"], "vertices: a b\na b\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn cone_lift_emits_a_graph() {
    let c5 = "vertices: x1 x2 x3 x4 x5\nx1 x2\nx2 x3\nx3 x4\nx4 x5\nx1 x5\n";
    let o = run_stdin(&["cone-lift", "-", "--cover", "x1*x2*x3*x4*x5*t^3"], c5);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let g = certificate(&o);
    let again = run_stdin(&["alpha-beta", "-"], &g);
    assert_eq!(again.status.code(), Some(0));
}

#[test]
fn poset_decompositions() {
    let o = run_stdin(&["poset", "-"], "a < b\nb < c\na < d\n");
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("width 2") && s.contains("height 3"), "{s}");
}

#[test]
fn sweep_writes_a_report() {
    let dir = std::env::temp_dir().join(format!("clutter-sweep-{}", std::process::id()));
    let out = dir.join("report.json");
    let o = run(&[
        "sweep",
        "--conjecture",
        "packing-mfmc",
        "--max-vertices",
        "4",
        "--max-edges",
        "4",
        "--out",
        out.to_str().unwrap(),
        "--violators-dir",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["conjecture"], "packing-mfmc");
    assert!(v["instances"].as_u64().unwrap() > 0);
    assert!(v["violators"].is_array());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn gorenstein_sweep_logs_pairs() {
    let o = run(&["sweep", "--conjecture", "gorenstein-vertex-equality", "--max-vertices", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!v["log"].as_array().unwrap().is_empty());
}
