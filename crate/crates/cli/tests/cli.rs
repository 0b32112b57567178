use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use trop_core::cycles::read_json;

fn trop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trop")).args(args).env_remove("TROP_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name).to_string_lossy().into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const LINE_JSON: &str = r#"{"ambient_dim":2,"convention":"min","dim":1,"lineality":[],"maximal_cones":[[0],[1],[2]],"multiplicities":[1,1,1],"pure":true,"rays":[[-1,-1],[0,1],[1,0]]}"#;

#[test]
fn variety_of_the_line_as_text() {
    let o = trop(&["variety", &corpus("line.ideal")]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "rays:\n| -1 0 1 |\n| -1 1 0 |\nlineality:\n0\nmaxCones: {{0}, {1}, {2}}\n\
         multiplicities: {1, 1, 1}\ndim: 1\npure: true\nbalanced: true\n"
    );
}

#[test]
fn variety_of_the_line_as_json() {
    let o = trop(&["variety", &corpus("line.ideal"), "--format", "json"]);
    assert_eq!(stdout(&o), format!("{LINE_JSON}\n"));
    let back = read_json(stdout(&o).trim()).unwrap();
    assert_eq!(back.multiplicities(), &[1, 1, 1]);
    let not_prime = trop(&["variety", &corpus("line.ideal"), "--format", "json", "--not-prime"]);
    assert_eq!(stdout(&not_prime), stdout(&o));
}

#[test]
fn hypersurface_and_eval() {
    let o = trop(&["hypersurface", "x+y+1", "--vars", "x,y", "--format", "json"]);
    assert_eq!(stdout(&o), format!("{LINE_JSON}\n"));
    let e = trop(&["eval", "x+y+1", "--vars", "x,y", "--point", "-1,-4"]);
    assert_eq!(stdout(&e), "-4\n");
    let e = trop(&["eval", "x+y+1", "--vars", "x,y", "--point", "2,3", "--max"]);
    assert_eq!(stdout(&e), "3\n");
    let e = trop(&["eval", "x", "--vars", "x", "--point", "3/2", "--format", "json"]);
    assert_eq!(stdout(&e), "\"3/2\"\n");
}

#[test]
fn balancing_from_files() {
    let dir = TempDir::new().unwrap();
    let good = write(dir.path(), "good.json", LINE_JSON);
    let bad = write(dir.path(), "bad.json", &LINE_JSON.replace("[1,1,1]", "[2,1,1]"));
    let o = trop(&["is-balanced", &good]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("true\n", Some(0)));
    let o = trop(&["is-balanced", &bad]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("false\n", Some(0)));
}

#[test]
fn prevariety_and_basis() {
    let o = trop(&["prevariety", &corpus("line_conic.ideal")]);
    assert!(stdout(&o).contains("dim: 2\n"));
    assert!(!stdout(&o).contains("multiplicities"));
    let o = trop(&["prevariety", &corpus("line_conic.ideal"), "--format", "json"]);
    assert!(read_json(stdout(&o).trim()).is_ok());
    assert_eq!(stdout(&trop(&["is-tropical-basis", &corpus("line_conic.ideal")])), "false\n");
    assert_eq!(stdout(&trop(&["is-tropical-basis", &corpus("line.ideal")])), "true\n");
    let o = trop(&["variety", &corpus("line_conic.ideal")]);
    assert!(stdout(&o).contains("dim: 1\n"));
    assert!(stdout(&o).contains("multiplicities: {2}\n"));
}

#[test]
fn stable_intersection_of_stored_cycles() {
    let dir = TempDir::new().unwrap();
    let line = dir.path().join("line.json");
    let conic = dir.path().join("conic.json");
    let vars = ["--vars", "x,y,z", "--format", "json", "--out"];
    let o = trop(&[&["hypersurface", "x+2*y-3*z"][..], &vars, &[line.to_str().unwrap()]].concat());
    assert!(o.status.success() && o.stdout.is_empty());
    trop(&[&["hypersurface", "5*x^2-7*y^2+11*z^2"][..], &vars, &[conic.to_str().unwrap()]].concat());
    let o = trop(&["stable-intersection", line.to_str().unwrap(), conic.to_str().unwrap(), "--format", "json"]);
    assert_eq!(
        stdout(&o),
        "{\"ambient_dim\":3,\"convention\":\"min\",\"dim\":1,\"lineality\":[[1,1,1]],\"maximal_cones\":[[]],\
         \"multiplicities\":[2],\"pure\":true,\"rays\":[]}\n"
    );
    let t = trop(&["stable-intersection", line.to_str().unwrap(), conic.to_str().unwrap()]);
    assert!(stdout(&t).starts_with("rays:\n0\nlineality:\n| 1 |\n| 1 |\n| 1 |\nmaxCones: {{}}\nmultiplicities: {2}\n"));
}

#[test]
fn seeds_from_flag_and_environment() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", LINE_JSON);
    let run = |seed: Option<&str>, env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_trop"));
        cmd.args(["stable-intersection", &a, &a, "--format", "json"]).env_remove("TROP_SEED");
        if let Some(s) = seed {
            cmd.args(["--seed", s]);
        }
        if let Some(e) = env {
            cmd.env("TROP_SEED", e);
        }
        cmd.output().unwrap()
    };
    let base = run(None, None);
    assert!(base.status.success());
    assert_eq!(run(Some("9"), None).stdout, base.stdout);
    assert_eq!(run(None, Some("12")).stdout, base.stdout);
    assert_eq!(run(Some("9"), Some("12")).stdout, base.stdout);
    assert_eq!(run(None, Some("not a number")).status.code(), Some(2));
}

#[test]
fn max_is_the_swapped_min() {
    let min = trop(&["variety", &corpus("plane_cubic.ideal"), "--format", "json"]);
    let max = trop(&["variety", &corpus("plane_cubic.ideal"), "--format", "json", "--max"]);
    let min = read_json(stdout(&min).trim()).unwrap();
    let max = read_json(stdout(&max).trim()).unwrap();
    assert_eq!(min.swap_convention(), max);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    // usage
    assert_eq!(trop(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(trop(&["hypersurface", "x+"]).status.code(), Some(2));
    // parse errors
    assert_eq!(trop(&["hypersurface", "x+", "--vars", "x"]).status.code(), Some(2));
    let bad = write(dir.path(), "bad.ideal", "vars: x,y\nx+q\n");
    let o = trop(&["variety", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(trop(&["variety", "/nonexistent/file.ideal"]).status.code(), Some(2));
    // schema errors name the field
    let short = write(dir.path(), "short.json", &LINE_JSON.replace("[1,1,1]", "[1,1]"));
    let o = trop(&["is-balanced", &short]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("multiplicities"));
    // domain errors
    let unit = write(dir.path(), "unit.ideal", "vars: x\nx\nx+1\n");
    assert_eq!(trop(&["variety", &unit]).status.code(), Some(1));
    assert_eq!(trop(&["hypersurface", "x*y", "--vars", "x,y"]).status.code(), Some(1));
    let good = write(dir.path(), "line.json", LINE_JSON);
    let o = trop(&["is-balanced", &good, "--max"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("different conventions"));
    let max = write(dir.path(), "max.json", &LINE_JSON.replace("\"min\"", "\"max\""));
    assert_eq!(trop(&["is-balanced", &max]).status.code(), Some(1));
    assert_eq!(trop(&["is-balanced", &max, "--max"]).status.code(), Some(0));
}

#[test]
fn timing_goes_to_stderr() {
    let o = trop(&["variety", &corpus("line.ideal"), "--format", "json", "--time"]);
    assert_eq!(stdout(&o), format!("{LINE_JSON}\n"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("seconds"));
}
