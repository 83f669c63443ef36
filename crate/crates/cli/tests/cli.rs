use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binform")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

const TENSOR_1248: &str = r#"{"order":3,"entries":{"a":1,"b":2,"c":4,"d":8}}"#;

#[test]
fn classify_tensor_text() {
    let o = run(&["classify", TENSOR_1248]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("complex: Type 2, real: Type 2, signature: (2 classes, 1 zero)"));
}

#[test]
fn classify_from_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{TENSOR_1248}").unwrap();
    let o = run(&["--mode", "exact", "classify", file.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("complex: Type 2, real: Type 2"));
}

#[test]
fn classify_pde_text() {
    let o = run(&["classify", "U_xxxx + U_yyyy = Phi"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "Type 3, canonical: ∂x⁴U+6μ∂x²∂y²U+∂y⁴U = Φ with μ=0");
    let o = run(&["classify", "U_xxx - 3*U_xyy = Phi"]);
    assert_eq!(stdout(&o), "Type 4, canonical: ∂x³U−3∂x∂y²U = Φ");
}

#[test]
fn classify_json_schema() {
    let o = run(&["--json", "--mode", "exact", "classify", "quartic:0,0,6,0,0"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["complexType"], 5);
    assert_eq!(v["realType"], 8);
    assert_eq!(v["signature"]["classes"], 4);
    assert_eq!(v["signature"]["zeros"], 2);
    assert_eq!(v["mu"], Value::Null);
    assert_eq!(v["method"], "spectral");
    assert_eq!(v["rootPattern"].as_array().unwrap().len(), 2);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&run(&["classify", r#"{"order":3,"#])), 2);
    assert_eq!(code(&run(&["classify", "U_xxx + x*U_yyy"])), 2);
    assert_eq!(code(&run(&["classify", "cubic:1,2"])), 2);
    assert_eq!(code(&run(&["classify", "quartic:0,0,0,0,0"])), 0);
    assert_eq!(code(&run(&["canonical", "--order", "4", "--type", "99"])), 2);
    assert_eq!(code(&run(&["transform", "cubic:1,0,0,0", "--p", "1,2;2,4"])), 2);
    assert_eq!(code(&run(&["--trials", "0", "orbit-check", "cubic:1,0,0,0"])), 2);
}

#[test]
fn error_message_names_module() {
    let o = run(&["classify", "U_xx"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("pde:"), "{err}");
}

#[test]
fn boundary_ambiguity_exits_3() {
    // μ within 1e-8 of −1/3, next to the degenerate (x² − y²)²
    let o = run(&["classify", "quartic:1,0,-1.99999997,0,1"]);
    assert_eq!(code(&o), 3, "{}", stdout(&o));
    let o = run(&["--mode", "exact", "classify", "quartic:1,0,-1.99999997,0,1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn eigenpairs_listing() {
    let o = run(&["eigenpairs", "cubic:9,18,18,9"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("3 classes"));
    assert!(text.contains("(27, (1, 1))"));
    assert_eq!(stdout(&run(&["eigenpairs", "quartic:1,0,2,0,1"])), "infinite (degenerate: Q ≡ 0)");
    assert_eq!(stdout(&run(&["eigenpairs", "cubic:0,0,0,0"])), "infinite");
    let v: Value = serde_json::from_str(&stdout(&run(&["--json", "eigenpairs", "cubic:9,18,18,9"]))).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
}

#[test]
fn canonical_and_transform() {
    let o = run(&["canonical", "--order", "4", "--domain", "real", "--type", "9"]);
    assert!(stdout(&o).starts_with("(1, 0, 2, 0, 1)"));
    let o = run(&["canonical", "--order", "4", "--domain", "complex", "--type", "3", "--mu", "-1/2"]);
    assert!(stdout(&o).starts_with("(1, 0, -3, 0, 1)"), "{}", stdout(&o));
    let o = run(&["transform", "cubic:1,0,0,0", "--p", "1,1;0,1"]);
    assert!(stdout(&o).starts_with("(1, 3, 3, 1)"));
    let o = run(&["transform", "U_xxx", "--p", "1,1;0,1"]);
    assert_eq!(stdout(&o), "U_xxx + 3*U_xxy + 3*U_xyy + U_yyy = Phi");
    let o = run(&["transform", TENSOR_1248, "--p", r#"{"p":[["1","0"],["0","2"]]}"#]);
    assert_eq!(stdout(&o), "(1, 4, 16, 64)");
    assert_eq!(code(&run(&["transform", "U_xxx", "--p", "i,0;0,1"])), 2);
}

#[test]
fn orbit_check_reports_agreement() {
    let o = run(&["orbit-check", "cubic:1,0,-3,0"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("real batch: 100/100 real Type 4"), "{text}");
    assert!(text.contains("complex batch: 100/100 complex Type 3"), "{text}");
    let o = run(&["orbit-check", "quartic:0,0,6,0,0"]);
    assert!(stdout(&o).contains("complex batch: 100/100 complex Type 5"));
    let o = run(&["orbit-check", "quartic:1,0,0,0,0"]);
    assert!(stdout(&o).contains("100/100 signature (2 classes, 1 zero)"));
}

#[test]
fn orbit_check_is_deterministic() {
    let args = ["--json", "--seed", "42", "--trials", "30", "orbit-check", "quartic:1,0,-6,0,1"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["batches"][0]["trials"], 30);
}

#[test]
fn orbit_check_exact_mode() {
    let o = run(&["--mode", "exact", "--trials", "10", "orbit-check", "cubic:1,0,0,1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn orbit_check_disagreement_exits_4() {
    // a loose realness threshold makes the real type depend on root scaling
    let o = run(&["--eps-real", "0.3", "--trials", "20", "orbit-check", "cubic:1,0,0,1"]);
    assert_eq!(code(&o), 4, "{}", stdout(&o));
    assert!(stdout(&o).contains("counterexample"));
}
