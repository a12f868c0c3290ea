use std::path::PathBuf;
use std::process::{Command, Output};

fn srtriple(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srtriple")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = srtriple(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    srtriple(args).status.code().expect("exit code")
}

/// Compare with `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites the file.
fn golden(name: &str, args: &[&str], exit: i32) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let out = srtriple(args);
    assert_eq!(out.status.code(), Some(exit), "{args:?}");
    let got = String::from_utf8(out.stdout).unwrap();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "output of {args:?} differs from {name}");
}

#[test]
fn golden_outputs() {
    golden("basis.txt", &["basis"], 0);
    golden("basis.csv", &["basis", "--format", "csv"], 0);
    golden("table_so14.json", &["table", "so14", "--format", "json"], 0);
    golden("table_im4.csv", &["table", "im4", "--format", "csv"], 0);
    golden("table_gl4.txt", &["table", "gl4"], 0);
    golden("verify_iso13.txt", &["verify", "iso13"], 0);
    golden("verify_killing_ds.txt", &["verify", "killing_ds", "--samples", "10", "--l", "5"], 0);
    golden("verify_gl4.csv", &["verify", "gl4_closure", "--format", "csv"], 1);
    golden("killing_ads.txt", &["killing", "ads", "--samples", "10"], 0);
    golden("bracket_cross.json", &["bracket", "P-0", "P+1", "--format", "json"], 0);
}

#[test]
fn bracket_examples() {
    assert_eq!(stdout(&["bracket", "P-0", "P+0"]), "2λ·M0\n");
    assert_eq!(stdout(&["bracket", "P0", "P1"]), "0\n");
    assert_eq!(stdout(&["bracket", "L01", "L01"]), "0\n");
    assert_eq!(stdout(&["bracket", "P+0", "P+1"]), "λ·L01\n");
    assert_eq!(stdout(&["bracket", "L10", "L01"]), "0\n");
    assert_eq!(stdout(&["bracket", "P-0", "P+1", "--format", "csv"]), "a,b,gen,coeff\nP-0,P+1,R01,-λ\n");
}

#[test]
fn first_basis_line_is_p_plus_0() {
    let out = stdout(&["basis"]);
    let first = out.lines().next().unwrap();
    assert_eq!(first, "P+0 = (1 - λ*x0*x0)∂0 + (-λ*x0*x1)∂1 + (-λ*x0*x2)∂2 + (-λ*x0*x3)∂3");
    assert_eq!(out.lines().count(), 24);
}

#[test]
fn basis_json_shape() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["basis", "--format", "json"])).unwrap();
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 24);
    let names: Vec<&str> = list.iter().map(|e| e["gen"].as_str().unwrap()).collect();
    assert_eq!(&names[..4], ["P+0", "P+1", "P+2", "P+3"]);
    assert_eq!(names[23], "M3");
    assert!(list.iter().all(|e| e["components"].as_array().unwrap().len() == 4));
}

#[test]
fn table_json_schema() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["table", "im4", "--format", "json"])).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 24);
    let brackets = v["brackets"].as_array().unwrap();
    assert_eq!(brackets.len(), 276);
    let entry = brackets.iter().find(|b| b["a"] == "P+1" && b["b"] == "P-1").unwrap();
    assert_eq!(entry["result"], serde_json::json!([{"gen": "M1", "coeff": {"num": [["2", 1]], "den": [["1", 0]]}}]));
}

#[test]
fn geometry_examples() {
    assert_eq!(stdout(&["classify", "mink", "0,0,0,0", "1,1,0,0"]), "null\n");
    assert_eq!(stdout(&["classify", "mink", "0,0,0,0", "1,0,0,0"]), "timelike\n");
    assert_eq!(stdout(&["classify", "ds", "3,0,0,0", "0,4,0,0", "--l", "5"]), "spacelike\n");
    assert_eq!(stdout(&["transform", "ds", "--l", "5", "--a", "3,0,0,0", "--point", "3,0,0,0"]), "0,0,0,0\n");
    assert_eq!(stdout(&["transform", "ds", "--l", "5", "--a", "3,0,0,0", "--point", "0,4,0,0"]), "-3,16/5,0,0\n");
    assert_eq!(stdout(&["transform", "ads", "--lambda", "1/25", "--a", "0,0,0,0", "--point", "-1/2,2,0,1"]), "-1/2,2,0,1\n");
    assert_eq!(stdout(&["embed", "ds", "--l", "5", "3,0,0,0"]), "15/4,0,0,0;25/4\n");
    assert_eq!(stdout(&["embed", "ads", "--lambda", "1/4", "0,0,0,0"]), "0,0,0,0;2\n");
}

#[test]
fn float_mode_is_labelled() {
    let out = stdout(&["transform", "ds", "--l", "5", "--a", "1,0,0,0", "--point", "0,4,0,0", "--mode", "float"]);
    assert!(out.trim_end().ends_with(" [f64]"), "{out}");
    let coords: Vec<f64> = out.split(' ').next().unwrap().split(',').map(|c| c.parse().unwrap()).collect();
    assert!((coords[0] + 1.0).abs() < 1e-12);
    let out = stdout(&["embed", "ds", "--l", "5", "1,0,0,0", "--mode", "float"]);
    assert!(out.trim_end().ends_with(" [f64]"), "{out}");
}

#[test]
fn act_with_matrix_file() {
    let dir = std::env::temp_dir().join(format!("srtriple-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let shift = dir.join("shift.json");
    std::fs::write(
        &shift,
        r#"[["1","0","0","0","2"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","1"]]"#,
    )
    .unwrap();
    let p = shift.to_str().unwrap();
    assert_eq!(stdout(&["act", "1,0,0,0", "--matrix-file", p]), "3,0,0,0\n");
    assert_eq!(stdout(&["act", "1,0,0,0", "--matrix-file", p, "--l", "1/2"]), "2,0,0,0\n");
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"[["2","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","1"]]"#).unwrap();
    assert_eq!(code(&["act", "1,0,0,0", "--matrix-file", bad.to_str().unwrap()]), 3);
    let horizon = dir.join("horizon.json");
    std::fs::write(&horizon, r#"[["0","0","0","0","-1"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["1","0","0","0","0"]]"#).unwrap();
    assert_eq!(code(&["act", "0,1,0,0", "--matrix-file", horizon.to_str().unwrap()]), 3);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_code_contract() {
    // 0: success
    assert_eq!(code(&["verify", "im4_cross"]), 0);
    assert_eq!(code(&["killing", "mink", "--samples", "5"]), 0);
    // 1: verification failure
    assert_eq!(code(&["verify", "gl4_closure"]), 1);
    assert_eq!(code(&["killing", "ds", "M0", "--samples", "5"]), 1);
    // 2: usage
    for args in [
        &["--bogus"][..],
        &["bracket", "X1", "P0"],
        &["bracket", "R11", "P0"],
        &["table", "so99"],
        &["verify", "nonsense"],
        &["classify", "flat", "0,0,0,0", "1,0,0,0"],
        &["classify", "mink", "0,0,0", "1,0,0,0"],
        &["transform", "mink", "--a", "0,0,0,0", "--point", "0,0,0,0"],
        &["act", "0,0,0,0"],
        &["basis", "--l", "2", "--lambda", "1"],
        &["basis", "--format", "xml"],
        &["basis", "--l", "0"],
    ] {
        assert_eq!(code(args), 2, "{args:?}");
    }
    // 3: domain
    for args in [
        &["transform", "ds", "--l", "5", "--a", "5,0,0,0", "--point", "0,0,0,0"][..],
        &["transform", "ds", "--l", "5", "--a", "1,0,0,0", "--point", "0,0,0,0"],
        &["embed", "ds", "--l", "5", "5,0,0,0"],
        &["embed", "ds", "--lambda", "2", "1/2,0,0,0"],
        &["classify", "ds", "0,0,0,0", "2,0,0,0"],
    ] {
        assert_eq!(code(args), 3, "{args:?}");
    }
}

#[test]
fn domain_errors_name_the_condition() {
    let out = srtriple(&["transform", "ds", "--l", "5", "--a", "1,0,0,0", "--point", "0,0,0,0"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("σ(a) = 24/25") && err.contains("not the square of a rational"), "{err}");
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify", "beltrami_invariance", "--samples", "3", "--seed", "9"];
    assert_eq!(stdout(&args), stdout(&args));
}
