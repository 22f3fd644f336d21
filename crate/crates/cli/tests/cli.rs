use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn segre(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_segre"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn segre");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const DIAG_123: &str = r#"{"n":3,"A":[["1","0","0"],["0","2","0"],["0","0","3"]],
    "B":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#;

/// Spanned by the quadrics xy and xz: they share the factor x.
const XY_XZ: &str = r#"{"n":3,"A":[["0","1/2","0"],["1/2","0","0"],["0","0","0"]],
    "B":[["0","0","1/2"],["0","0","0"],["1/2","0","0"]]}"#;

fn example_pencil() -> String {
    let out = segre(&["canonical", "[(2,1),2]", "--eigenvalues", "1,2", "--text"], None);
    assert!(out.status.success());
    stdout(&out)
}

#[test]
fn example_pair_classifies_with_degrees() {
    let out = segre(&["classify", "-"], Some(&example_pencil()));
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], "classify");
    assert_eq!(r["status"], "ok");
    let o = &r["outputs"];
    assert_eq!(o["symbol"], "[(2,1),2]");
    assert_eq!((o["degrees"]["deg"].as_u64(), o["degrees"]["mld"].as_u64(), o["degrees"]["rmld"].as_u64()), (Some(3), Some(1), Some(3)));
    assert_eq!(o["invariant_factors"][1], "lambda - 1");
    assert_eq!(o["r"], 2);
}

#[test]
fn diagonal_pencil_is_generic() {
    let out = segre(&["classify", "-"], Some(DIAG_123));
    assert_eq!(out.status.code(), Some(0));
    let o = &report(&out)["outputs"];
    assert_eq!(o["symbol"], "[1,1,1]");
    assert_eq!(o["degrees"], serde_json::json!({"deg": 2, "mld": 2, "rmld": 3}));
}

#[test]
fn singular_pencil_exits_two() {
    let out = segre(&["classify", "-"], Some(XY_XZ));
    assert_eq!(out.status.code(), Some(2));
    let r = report(&out);
    assert_eq!(r["status"]["error"]["kind"], "SingularPencil");
}

#[test]
fn batch_preserves_order_and_reports_failures() {
    let batch = format!("[{DIAG_123},{XY_XZ},{}]", example_pencil());
    let out = segre(&["classify", "-"], Some(&batch));
    assert_eq!(out.status.code(), Some(2));
    let items = report(&out)["outputs"].as_array().unwrap().clone();
    assert_eq!(items.len(), 3);
    assert_eq!(items[0]["result"]["symbol"], "[1,1,1]");
    assert_eq!(items[1]["status"]["error"]["kind"], "SingularPencil");
    assert_eq!(items[2]["result"]["symbol"], "[(2,1),2]");
}

#[test]
fn canonical_pipeline_round_trips() {
    for symbol in ["[1,1]", "[2]", "[3,1]", "[(1,1),2]", "[(2,1,1)]", "[4]"] {
        let printed = report(&segre(&["canonical", symbol], None))["inputs"]["symbol"].clone();
        let pencil = segre(&["canonical", symbol, "--text"], None);
        assert!(pencil.status.success(), "{symbol}");
        let out = segre(&["classify", "-"], Some(&stdout(&pencil)));
        assert_eq!(report(&out)["outputs"]["symbol"], printed, "{symbol}");
    }
}

#[test]
fn output_is_byte_stable() {
    let runs: Vec<Vec<u8>> = (0..2).map(|_| segre(&["poset", "--n", "3"], None).stdout).collect();
    assert_eq!(runs[0], runs[1]);
    let runs: Vec<Vec<u8>> =
        (0..2).map(|_| segre(&["classify", "-"], Some(DIAG_123)).stdout).collect();
    assert_eq!(runs[0], runs[1]);
}

#[test]
fn table_and_count() {
    let out = segre(&["table", "--n", "2", "--text"], None);
    assert_eq!(
        stdout(&out),
        "[1,1]: codims 0,0,0; degrees (1,1,1); mingens (1,0)\n[2]: codims 1,1,1; degrees (1,0,0); mingens (1,0)\n"
    );
    let out = segre(&["count", "--n", "7"], None);
    let o = &report(&out)["outputs"];
    assert_eq!(o["cayley"], "110");
    assert_eq!(o["enumerated"], 110);
}

#[test]
fn poset_writes_dot() {
    let dir = std::env::temp_dir().join(format!("segre-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p3.dot");
    let out = segre(&["poset", "--n", "3", "--dot", path.to_str().unwrap()], None);
    assert!(out.status.success());
    let o = &report(&out)["outputs"];
    assert_eq!(o["nodes"].as_array().unwrap().len(), 5);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn reciprocal_and_mldeg() {
    let out = segre(&["reciprocal", "--symbol", "[1,1,1]"], None);
    assert_eq!(report(&out)["outputs"]["degree"], 2);
    let out = segre(&["mldeg", "[(2,1),2]"], None);
    let o = &report(&out)["outputs"];
    assert_eq!((o["mld"].as_u64(), o["rmld"].as_u64(), o["deg"].as_u64()), (Some(1), Some(3), Some(3)));
}

#[test]
fn usage_and_parse_errors_exit_one() {
    assert_eq!(segre(&["classify", "-"], Some("{not json")).status.code(), Some(1));
    assert_eq!(segre(&["canonical", "[2,"], None).status.code(), Some(1));
    assert_eq!(segre(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(segre(&["--help"], None).status.code(), Some(0));
    let out = segre(&["canonical", "[1,1]", "--json", "--text"], None);
    assert_eq!(out.status.code(), Some(1));
}
