//! End-to-end runs of the `enrkit` binary: outputs, structured documents and
//! the exit-status contract.

use std::io::Write;
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn enrkit(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_enrkit")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit status"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn structured(args: &[&str]) -> Value {
    let mut all = vec!["--format", "structured"];
    all.extend_from_slice(args);
    let r = enrkit(&all);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    serde_json::from_str(&r.stdout).expect("structured output is JSON")
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn disc_of_4a2() {
    let r = enrkit(&["lattice", "disc", "4A2.json"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("determinant   81"));
    assert!(r.stdout.contains("(Z/3)^4"));
    let v = structured(&["lattice", "disc", "4A2"]);
    assert_eq!(v["determinant"], 81);
    assert_eq!(v["invariant_factors"], serde_json::json!([3, 3, 3, 3]));
    assert_eq!(v["signature"], serde_json::json!([0, 8]));
}

#[test]
fn disc_of_u() {
    let v = structured(&["lattice", "disc", "U.json"]);
    assert_eq!(v["determinant"], -1);
    assert_eq!(v["group"], "trivial");
    assert_eq!(v["invariant_factors"], serde_json::json!([]));
}

#[test]
fn iso_verdicts() {
    let r = enrkit(&["lattice", "iso", "U6E8E8.json", "U2A2E6E8.json"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("isometric"), "{}", r.stdout);
    let v = structured(&["lattice", "iso", "U6E8E8", "U2A2E6E8"]);
    assert_eq!(v["verdict"], "isometric");
    assert_eq!(v["order"], 36);
    let v = structured(&["lattice", "iso", "4A2", "A2E6"]);
    assert_eq!(v["verdict"], "not isometric");
}

#[test]
fn iso_beyond_the_search_bound_exits_4() {
    let cfg = temp_file("[enumeration_bounds]\niso_search = 10\n");
    let r = enrkit(&["--config", path(&cfg), "lattice", "iso", "U6E8E8", "U2A2E6E8"]);
    assert_eq!(r.code, 4, "{}", r.stderr);
    assert!(r.stderr.contains("undecided"));
}

#[test]
fn qform_values_are_fractions() {
    let v = structured(&["lattice", "qform", "A2E6"]);
    assert_eq!(v["invariant_factors"], serde_json::json!([3, 3]));
    let q: Vec<&str> = v["q_values"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    let mut sorted = q.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, ["2/3", "4/3"]);
}

#[test]
fn complement_of_e8_squared_is_u6() {
    // U(6)+E8²: the complement of the E8² coordinates is the U(6) summand
    let rows: Vec<String> =
        (2..18).map(|i| (0..18).map(|j| if i == j { "1" } else { "0" }).collect::<Vec<_>>().join(",")).collect();
    let basis = rows.join(";");
    let v = structured(&["lattice", "complement", "U6E8E8", "--basis", &basis]);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["determinant"], -36);
    assert_eq!(v["gram"], serde_json::json!([[0, 6], [6, 0]]));
}

#[test]
fn lattice_input_errors() {
    let odd = temp_file(r#"{"rank": 2, "gram": [[1, 0], [0, 2]]}"#);
    assert_eq!(enrkit(&["lattice", "disc", path(&odd)]).code, 3);
    let bad = temp_file(r#"{"rank": 2, "gram": [[2, 1]]}"#);
    assert_eq!(enrkit(&["lattice", "disc", path(&bad)]).code, 2);
    let junk = temp_file("not json");
    assert_eq!(enrkit(&["lattice", "disc", path(&junk)]).code, 2);
    let extra = temp_file(r#"{"rank": 1, "gram": [[2]], "colour": "red"}"#);
    assert_eq!(enrkit(&["lattice", "disc", path(&extra)]).code, 2);
    assert_eq!(enrkit(&["lattice", "disc", "no-such-lattice.json"]).code, 2);
    let degenerate = temp_file(r#"{"rank": 2, "gram": [[2, 2], [2, 2]]}"#);
    assert_eq!(enrkit(&["lattice", "disc", path(&degenerate)]).code, 3);
    assert_eq!(enrkit(&["lattice", "complement", "U6E8E8", "--basis", "1,2"]).code, 3);
}

#[test]
fn griesmer() {
    let r = enrkit(&["code", "griesmer", "8", "6"]);
    assert_eq!((r.code, r.stdout.trim()), (0, "2"));
    assert_eq!(enrkit(&["code", "griesmer", "3", "5"]).code, 3);
    assert_eq!(enrkit(&["code", "griesmer", "8", "0"]).code, 3);
}

#[test]
fn exhaustive_search_certificates() {
    let v = structured(&["code", "search", "8", "3", "--weights", "6"]);
    assert_eq!(v["certificate"], "none exists");
    assert_eq!(v["subspaces_examined"], v["subspaces_total"]);
    assert_eq!(v["subspaces_examined"], ternary_codes_subspaces(8, 3));
    let v = structured(&["code", "search", "8", "2", "--weights", "6"]);
    assert_eq!(v["certificate"], "witness");
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
}

/// Gaussian binomial [8 choose 3]_3 from the product formula.
fn ternary_codes_subspaces(n: u32, k: u32) -> u64 {
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num *= 3u64.pow(n - i) - 1;
        den *= 3u64.pow(i + 1) - 1;
    }
    num / den
}

#[test]
fn search_bounds_exit_4() {
    let cfg = temp_file("[enumeration_bounds]\nsearch_max_dim = 2\n");
    let r = enrkit(&["--config", path(&cfg), "code", "search", "8", "3", "--weights", "6"]);
    assert_eq!(r.code, 4, "{}", r.stderr);
    assert_eq!(enrkit(&["code", "search", "40", "2", "--weights", "6"]).code, 4);
}

#[test]
fn kernel_and_weights() {
    let v = structured(&["code", "kernel", "id4.txt"]);
    assert_eq!(v["dim"], 0);
    assert_eq!(v["lines"], 0);
    // the tetracode: [4,2,3], all eight nonzero words of weight 3
    let tetra = temp_file("1011\n0112\n");
    let v = structured(&["code", "weights", path(&tetra)]);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["lines"], 4);
    assert_eq!(v["weights"], serde_json::json!([3, 3, 3, 3, 3, 3, 3, 3]));
    let k = temp_file("1011\n0112\n");
    let v = structured(&["code", "kernel", path(&k)]);
    assert_eq!(v["dim"], 2);
    let bad = temp_file("10x1\n");
    assert_eq!(enrkit(&["code", "kernel", path(&bad)]).code, 2);
    let cfg = temp_file("[enumeration_bounds]\nmax_codewords = 3\n");
    assert_eq!(enrkit(&["--config", path(&cfg), "code", "weights", path(&tetra)]).code, 4);
}

#[test]
fn fibers_of_x431_and_x44() {
    let r = enrkit(&["ellsurf", "fibers", "X431.json"]);
    assert_eq!(r.code, 0);
    let v = structured(&["ellsurf", "fibers", "X431.json"]);
    let fibers: Vec<(String, String)> = v["fibers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| (f["place"].as_str().unwrap().to_string(), f["type"].as_str().unwrap().to_string()))
        .collect();
    let want = [("t=1/27", "I1"), ("t=0", "I3"), ("t=∞", "IV*")];
    assert_eq!(fibers, want.map(|(a, b)| (a.to_string(), b.to_string())));
    assert_eq!(v["chi"], 1);
    let v = structured(&["ellsurf", "fibers", "X44"]);
    assert_eq!(v["discriminant"], "-27*t^4");
    let types: Vec<&str> = v["fibers"].as_array().unwrap().iter().map(|f| f["type"].as_str().unwrap()).collect();
    assert_eq!(types, ["IV", "IV*"]);
}

#[test]
fn heights() {
    let args = ["ellsurf", "height", "--chi", "2", "--fibers", "I0*,I3,I3,I3,I3*", "--contacts", "1,1,0,0,2"];
    let r = enrkit(&args);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("height 7/12"));
    let mut s = vec!["--format", "structured"];
    s.extend_from_slice(&args);
    let v: Value = serde_json::from_str(&enrkit(&s).stdout).unwrap();
    assert_eq!(v["height"], "7/12");
    // the same section read off the twisted model's places (the I3 pair is one place)
    let v = structured(&["ellsurf", "height", "--chi", "2", "--model", "X3333", "--contacts", "0,0,0"]);
    assert_eq!(v["height"], 4);
    // an I3 has no component 3
    assert_eq!(enrkit(&["ellsurf", "height", "--chi", "1", "--fibers", "I3", "--contacts", "3"]).code, 3);
    assert_eq!(enrkit(&["ellsurf", "height", "--chi", "1", "--fibers", "I3,I1", "--contacts", "0"]).code, 3);
    assert_eq!(enrkit(&["ellsurf", "height", "--chi", "1", "--fibers", "J3", "--contacts", "0"]).code, 2);
    assert_eq!(enrkit(&["ellsurf", "height", "--chi", "1", "--contacts", "0"]).code, 2);
}

#[test]
fn twist_and_base_change() {
    let v = structured(&["ellsurf", "twist", "X3333", "--by", "t-1"]);
    let types: Vec<&str> = v["fibers"].as_array().unwrap().iter().map(|f| f["type"].as_str().unwrap()).collect();
    assert_eq!(types, ["I0*", "I3", "I3", "I3*"]);
    assert_eq!(v["chi"], 2);
    let v = structured(&["ellsurf", "basechange", "X3333", "--by", "1+1/t^2"]);
    assert_eq!(v["euler"], 24);
    assert_eq!(enrkit(&["ellsurf", "twist", "X3333", "--by", "(t-1)^2"]).code, 3);
    assert_eq!(enrkit(&["ellsurf", "twist", "X3333", "--by", "t-"]).code, 2);
    assert_eq!(enrkit(&["ellsurf", "basechange", "X3333", "--by", "5"]).code, 3);
}

#[test]
fn family_member() {
    let r = enrkit(&["ellsurf", "family", "--b", "2"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("a = 8/3") && r.stdout.contains("c = 10/27") && r.stdout.contains("membership verified"));
    let v = structured(&["ellsurf", "family", "--b", "2"]);
    assert_eq!((v["a"].as_str(), v["c"].as_str(), v["verified"].as_bool()), (Some("8/3"), Some("10/27"), Some(true)));
    for b in ["-8", "-2", "0", "1", "10"] {
        assert_eq!(enrkit(&["ellsurf", "family", "--b", b]).code, 3, "b = {b}");
    }
    assert_eq!(enrkit(&["ellsurf", "family", "--b", "t"]).code, 2);
}

#[test]
fn verify_subsets() {
    let r = enrkit(&["verify", "--id", "f3-system-no-solution"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("f3-system-no-solution") && r.stdout.contains("pass"));
    let v = structured(&["verify", "--tag", "codes"]);
    let claims = v["claims"].as_array().unwrap();
    assert!(!claims.is_empty());
    assert!(claims.iter().all(|c| c["tag"] == "codes" && c["status"] == "pass"));
    let v = structured(&["verify", "--tag", "nonsense"]);
    assert_eq!(v["claims"], serde_json::json!([]));
    assert_eq!(v["summary"]["total"], 0);
    assert_eq!(enrkit(&["verify", "--id", "no-such-claim"]).code, 2);
}

#[test]
fn verify_full_run_exits_0() {
    let v = structured(&["verify"]);
    assert_eq!(v["summary"]["fail"], 0);
    for c in v["claims"].as_array().unwrap() {
        for key in ["id", "status", "expected", "computed", "location"] {
            assert!(c.get(key).is_some(), "{key} missing");
        }
    }
}

#[test]
fn config_file() {
    let cfg = temp_file("output_format = \"structured\"\nverbosity = 1\n");
    let r = enrkit(&["--config", path(&cfg), "code", "griesmer", "8", "6"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["max_dim"], 2);
    // flags override the file
    let r = enrkit(&["--config", path(&cfg), "--format", "text", "code", "griesmer", "8", "6"]);
    assert_eq!(r.stdout.trim(), "2");
    for bad in [
        "colour = 1",
        "[enumeration_bounds]\niso_search = 0",
        "[enumeration_bounds]\nmax_codewords = -5",
        "output_format = \"yaml\"",
    ] {
        let cfg = temp_file(bad);
        assert_eq!(enrkit(&["--config", path(&cfg), "code", "griesmer", "8", "6"]).code, 2, "{bad}");
    }
    assert_eq!(enrkit(&["--config", "/no/such/config.toml", "code", "griesmer", "8", "6"]).code, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(enrkit(&["lattice"]).code, 2);
    assert_eq!(enrkit(&["code", "search", "8", "3"]).code, 2);
    assert_eq!(enrkit(&["frobnicate"]).code, 2);
}
