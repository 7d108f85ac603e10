use serde_json::{json, Value};
use std::path::PathBuf;
use tempfile::TempDir;
use zeropatterns::cli::{run_from, Outcome, EXIT_CERTIFY_FAILED, EXIT_INPUT, EXIT_OK, EXIT_UNREALIZABLE, EXIT_VERIFY_FAILED};
use zeropatterns::codec::{matrix_from_json, matrix_to_json, monic_from_json, xparams_from_json};
use zeropatterns::exactalg::BigRational;
use zeropatterns::pattern_s::witness_all_ones_spectrum;

fn run(args: &[&str]) -> Outcome {
    run_from(std::iter::once("zeropatterns").chain(args.iter().copied()))
}

fn write(dir: &TempDir, name: &str, v: &Value) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p.to_str().unwrap().to_string()
}

fn stdout_json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", o.stdout))
}

#[test]
fn certify_passes_and_injection_fails() {
    let o = run(&["certify", "--json"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v = stdout_json(&o);
    assert_eq!(v["pass"], json!(true));
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);

    let bad = run(&["certify", "--inject-x1", "0"]);
    assert_eq!(bad.code, EXIT_CERTIFY_FAILED);
    assert!(bad.stdout.contains("FAIL"));
    assert!(bad.stdout.contains("pattern violation"));

    let shifted = run(&["certify", "--inject-x1", "3/2"]);
    assert_eq!(shifted.code, EXIT_CERTIFY_FAILED);
}

#[test]
fn degree_reports_both_weightings() {
    assert_eq!(run(&["degree"]).stdout.trim(), "94");
    let u = stdout_json(&run(&["degree", "--weights", "uniform", "--json"]));
    assert_eq!(u["degree"], json!(37));
    assert_eq!(u["weights"], json!([1, 1, 1, 1, 1, 1, 1, 1]));
}

#[test]
fn solve_emits_trace_and_solution() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("solve.json");
    let o = run(&["solve", "--out", out.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("back-substitution"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["trace"].as_array().unwrap().len(), 8);
    assert_eq!(v["pi"]["vieta_degree"], json!(94));
    for i in 1..=8 {
        assert!(v["solution"][format!("x{i}")]["denominator"].is_array());
    }
}

#[test]
fn realize_round_trips_through_json() {
    let dir = TempDir::new().unwrap();
    let ones = write(&dir, "ones.json", &json!({"values": vec!["1"; 8]}));
    let o = run(&["realize", "--spectrum", &ones, "--json"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v = stdout_json(&o);
    let params = xparams_from_json::<BigRational>(&v["params"]).unwrap();
    assert_eq!(params, witness_all_ones_spectrum());
    let m = matrix_from_json::<BigRational>(&v["matrix"]).unwrap();
    assert_eq!(matrix_to_json(&m), v["matrix"]);
    let p = monic_from_json::<BigRational>(&v["char_poly"]).unwrap();
    assert_eq!(p.degree(), 8);

    // the emitted matrix verifies against the same spectrum
    let mpath = write(&dir, "m.json", &v["matrix"]);
    let pattern = write(&dir, "s.json", &json!({"n": 8, "support": m.nonzero_positions().iter().map(|&(r, c)| [r + 1, c + 1]).collect::<Vec<_>>()}));
    let ok = run(&["verify", "--matrix", &mpath, "--pattern", &pattern, "--spectrum", &ones]);
    assert_eq!(ok.code, EXIT_OK, "{}{}", ok.stdout, ok.stderr);

    let coeffs = write(&dir, "c.json", &v["char_poly"]);
    assert_eq!(run(&["realize", "--coeffs", &coeffs]).code, EXIT_OK);
}

#[test]
fn conjugate_pairs_are_unrealizable() {
    let dir = TempDir::new().unwrap();
    let i = json!({"re": "0", "im": "1"});
    let mi = json!({"re": "0", "im": "-1"});
    let s = write(&dir, "imi.json", &json!({"values": [i, mi, i, mi, i, mi, i, mi]}));
    let o = run(&["realize", "--spectrum", &s]);
    assert_eq!(o.code, EXIT_UNREALIZABLE);
    assert!(o.stderr.contains("x1"), "{}", o.stderr);
    let f = run(&["realize", "--spectrum", &s, "--float"]);
    assert_eq!(f.code, EXIT_UNREALIZABLE);
}

#[test]
fn assemble_then_verify_with_negative_controls() {
    let dir = TempDir::new().unwrap();
    let values: Vec<String> = (0..40).map(|k| format!("{}/{}", k % 13 - 6, k % 5 + 1)).collect();
    let spectrum_file = write(&dir, "u.json", &json!({ "values": values }));
    let out = dir.path().join("m.json");
    let o = run(&["assemble", "--spectrum", &spectrum_file, "--json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v = stdout_json(&o);
    assert_eq!(v["nonzero_count"], json!(79));
    let mpath = out.to_str().unwrap().to_string();
    assert_eq!(run(&["verify", "--matrix", &mpath, "--spectrum", &spectrum_file]).code, EXIT_OK);

    let mut m: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    // drop one stored entry: the pattern check must fail
    let mut dropped = m.clone();
    dropped["entries"].as_array_mut().unwrap().pop();
    let d = write(&dir, "dropped.json", &dropped);
    let o = run(&["verify", "--matrix", &d, "--spectrum", &spectrum_file, "--json"]);
    assert_eq!(o.code, EXIT_VERIFY_FAILED);
    assert_eq!(stdout_json(&o)["pattern_ok"], json!(false));

    // perturb one value in place: pattern intact, polynomial wrong
    let e = &mut m["entries"].as_array_mut().unwrap()[0];
    e[2] = json!("12345/7");
    let p = write(&dir, "perturbed.json", &m);
    let o = run(&["verify", "--matrix", &p, "--spectrum", &spectrum_file, "--json"]);
    assert_eq!(o.code, EXIT_VERIFY_FAILED);
    let r = stdout_json(&o);
    assert_eq!(r["pattern_ok"], json!(true));
    assert!(r["failures"].as_array().unwrap().iter().any(|f| f.as_str().unwrap().contains("polynomial")));
}

#[test]
fn input_errors_exit_four() {
    let dir = TempDir::new().unwrap();
    let odd = write(&dir, "odd.json", &json!({"values": ["1", "2", "3"]}));
    assert_eq!(run(&["assemble", "--spectrum", &odd]).code, EXIT_INPUT);
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();
    assert_eq!(run(&["realize", "--spectrum", garbage.to_str().unwrap()]).code, EXIT_INPUT);
    assert_eq!(run(&["realize", "--spectrum", "/nonexistent/x.json"]).code, EXIT_INPUT);
    assert_eq!(run(&["frobnicate"]).code, EXIT_INPUT);
    assert_eq!(run(&["certify", "--float"]).code, EXIT_INPUT);
    assert_eq!(run(&["--help"]).code, EXIT_OK);
}
