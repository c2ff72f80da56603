use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn semitop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semitop"))
        .args(args)
        .env_remove("SEMITOP_OPENS_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_doc(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_tl3() {
    let out = semitop(&["analyze", "fixture:TL3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["maximal_topens"], serde_json::json!([["0"], ["2"]]));
    assert_eq!(v["points"][1]["grade"], "weakly-regular");
    assert_eq!(v["points"][1]["conflicted"], true);
}

#[test]
fn check_sober_tri3_fails_with_top_filter() {
    let out = semitop(&["check-sober", "fixture:TRI3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["sober"], false);
    assert_eq!(v["witness"]["unmatched"]["members"].as_array().unwrap().len(), 4);
}

#[test]
fn fixtures_listing() {
    let out = semitop(&["fixtures"]);
    assert_eq!(out.status.code(), Some(0));
    let names: Vec<String> = json(&out)
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["name"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(
        names,
        ["SIERP", "TL3", "TR3", "STAR4", "TRI3", "SQ4", "IRR5", "CHAIN5", "MAJ6"]
    );
}

#[test]
fn every_fixture_analyzes_deterministically() {
    for name in ["SIERP", "TL3", "TR3", "STAR4", "TRI3", "SQ4", "IRR5", "CHAIN5", "MAJ6"] {
        let input = format!("fixture:{name}");
        let a = semitop(&["analyze", &input]);
        let b = semitop(&["analyze", &input]);
        assert_eq!(a.status.code(), Some(0), "{name}");
        assert_eq!(a.stdout, b.stdout, "{name}");
        assert_eq!(semitop(&["validate", &input]).status.code(), Some(0));
    }
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["check-sober", "fixture:TL3"], 0),
        (&["check-spatial", "fixture:TRI3"], 0),
        (&["check-strong-compat", "fixture:STAR4"], 1),
        (&["check-strong-compat", "fixture:MAJ6"], 0),
        (&["roundtrip", "fixture:TL3"], 0),
        (&["roundtrip", "fixture:TRI3"], 1),
        (&["soberify", "fixture:TRI3"], 0),
        (&["points", "fixture:TRI3"], 0),
        (&["st", "fixture:TRI3"], 0),
        (&["fr", "fixture:TL3"], 0),
        (&["topens", "fixture:SQ4"], 0),
        (&["intertwined", "fixture:IRR5"], 0),
        (&["community", "fixture:IRR5"], 0),
        (&["graph", "fixture:TL3", "--kind", "straddle", "--format", "json"], 0),
        (&["split", "fixture:TL3", "--set", "0,1"], 0),
        (&["split", "fixture:TL3", "--set", "0", "--values", "v,v"], 2),
        (&["analyze", "fixture:NOPE"], 2),
        (&["analyze", "/nonexistent/doc.json"], 2),
        (&["closure", "fixture:TL3", "--set", "9"], 2),
        (&["frobnicate"], 2),
    ];
    for (args, code) in cases {
        assert_eq!(semitop(args).status.code(), Some(*code), "{args:?}");
    }
}

#[test]
fn opens_cap_is_a_resource_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_semitop"))
        .args(["analyze", "fixture:MAJ6"])
        .env("SEMITOP_OPENS_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 8"));
}

#[test]
fn closure_and_interior() {
    let v = json(&semitop(&["closure", "fixture:SIERP", "--set", "1"]));
    assert_eq!(v["closure"], serde_json::json!(["0", "1"]));
    let v = json(&semitop(&["interior", "fixture:TL3", "--set", "0,1"]));
    assert_eq!(v["interior"], serde_json::json!(["0"]));
}

#[test]
fn dot_output() {
    let out = semitop(&["graph", "fixture:SIERP", "--format", "dot"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "graph intersection {\n  n0 [label=\"{1}\"];\n  n1 [label=\"{0,1}\"];\n  n0 -- n1;\n}\n"
    );
    let out = semitop(&["graph", "fixture:SIERP", "--kind", "straddle", "--format", "dot"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("digraph straddle {"));
}

#[test]
fn documents_from_files() {
    let space = temp_doc(r#"{"points":["a","b","c"],"generators":[["a"],["c"]]}"#);
    let path = space.path().to_str().unwrap();
    let v = json(&semitop(&["topens", path]));
    assert_eq!(v["maximal_topens"], serde_json::json!([["a"], ["c"]]));

    let broken = temp_doc(r#"{"points":["a"],"generators":[["a"]],"colour":1}"#);
    let out = semitop(&["analyze", broken.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));

    let missing = temp_doc(r#"{"points":["0","1","2"],"opens":[[],["0"],["2"],["0","1","2"]]}"#);
    let out = semitop(&["validate", missing.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("{0,2}"));
}

#[test]
fn fr_output_round_trips() {
    let out = semitop(&["fr", "fixture:TL3"]);
    let doc = temp_doc(std::str::from_utf8(&out.stdout).unwrap());
    let path = doc.path().to_str().unwrap();
    let v = json(&semitop(&["check-spatial", path]));
    assert_eq!(v["spatial"], true);
    let v = json(&semitop(&["roundtrip", path]));
    assert_eq!(v["input"], "semiframe");
    assert_eq!(v["succeeded"], true);
}

#[test]
fn consensus_command() {
    let f = temp_doc(r#"{"assignment":{"0":"a","1":"b","2":"c"}}"#);
    let out = semitop(&["consensus", "fixture:TL3", "--assignment", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["holds"], true);

    let partial = temp_doc(r#"{"assignment":{"0":"a"}}"#);
    let out = semitop(&["consensus", "fixture:TL3", "--assignment", partial.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn morphism_command() {
    let src = temp_doc(r#"{"points":["0","1","2"],"opens":[[],["0","1"],["1","2"],["0","1","2"]]}"#);
    let dst = temp_doc(r#"{"points":["0","2"],"generators":[["0"],["2"]]}"#);
    let map = temp_doc(r#"{"map":{"0":"0","1":"0","2":"2"}}"#);
    let out = semitop(&[
        "morphism",
        src.path().to_str().unwrap(),
        dst.path().to_str().unwrap(),
        "--map",
        map.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["witness"]["open"], serde_json::json!(["2"]));

    let id = temp_doc(r#"{"map":{"0":"0","1":"1","2":"2"}}"#);
    let out = semitop(&["morphism", "fixture:TL3", "fixture:TL3", "--map", id.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["natural"], true);
}

#[test]
fn pretty_text() {
    let out = semitop(&["split", "fixture:TL3", "--set", "0,2", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: split"));
    assert!(text.contains("open: {0}"));
}
