use mpl_cli::{run, EXIT_USAGE, EXIT_VERIFY};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = vec![];
    let mut err = vec![];
    let mut full = vec!["mpl"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn stuffle_product_has_three_terms() {
    let v = json(&["product", "--type", "stuffle", "Li(1;1)@3", "Li(1;2)@3"]);
    assert_eq!(v["result"]["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["result"]["text"], "Li(1,1;1,2)@3 + Li(1,1;2,1)@3 + Li(2;0)@3");
    assert_eq!(v["tool"], "mpl");
}

#[test]
fn depth_graded_dimension_at_seven() {
    let v = json(&["dims", "--level", "7", "--weight", "2", "--depth", "2", "--depth-graded"]);
    assert_eq!(v["result"]["dim"], 1);
    assert_eq!(v["config"]["level"], 7);
}

#[test]
fn zeta_two_digits() {
    let v = json(&["eval", "Li(2;0)@1", "--digits", "30"]);
    assert!(v["result"]["re"].as_str().unwrap().starts_with("1.64493406684822643647241516664"));
}

#[test]
fn regularize_double_ones() {
    let (code, out, _) = call(&["--format", "text", "regularize", "Li(1,1;0,0)@1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(-1/2*Li(2;0)@1) + 1/2*L^2");
}

#[test]
fn verification_failure_exits_two() {
    let (code, _, err) = call(&["verify", "Li(2;1)@6 + Li(2;5)@6", "1/3*Li(2;0)@6"]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = call(&["verify", "Li(2;1)@6", "Li(2;5)@6"]);
    assert_eq!(code, EXIT_VERIFY);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ok"], false);
}

#[test]
fn usage_errors_exit_one() {
    let (code, _, err) = call(&["eval", "Li(2;0@1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("position 6"), "{err}");
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["--digits", "3", "eval", "Li(2;0)@1"]).0, EXIT_USAGE);
}

#[test]
fn output_independent_of_threads() {
    let args = |t: &'static str| ["--threads", t, "--level", "5", "dims", "--weight", "3", "--table"];
    let (c1, a, _) = call(&args("1"));
    let (c2, b, _) = call(&args("4"));
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn config_file_and_overrides() {
    let dir = std::env::temp_dir().join(format!("mpl-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.conf");
    std::fs::write(&path, "# prime level\nlevel = 11\n").unwrap();
    let p = path.to_str().unwrap();
    let dg = ["dims", "--weight", "2", "--depth", "2", "--depth-graded"];
    let v = json(&[&["--config", p][..], &dg].concat());
    assert_eq!(v["result"]["dim"], 5);
    let v = json(&[&["--config", p, "--level", "7"][..], &dg].concat());
    assert_eq!(v["result"]["dim"], 1);
    std::fs::write(&path, "level = seven\n").unwrap();
    assert_eq!(call(&["--config", p, "dims", "--weight", "1"]).0, EXIT_USAGE);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn csv_table() {
    let (code, out, _) = call(&["--format", "csv", "--level", "1", "dims", "--weight", "4", "--table"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "level,weight,depth,mode,basis,relations,rank,dim");
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[4], "1,4,,exact,4,4,3,1");
}
