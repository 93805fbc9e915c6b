use std::process::Command;

use falcert::certifier::CertificateDocument;
use falcert::cli::{run, Output};
use serde_json::Value;

const L4: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/l4.json");

fn falcert(args: &[&str]) -> Output {
    run(std::iter::once("falcert").chain(args.iter().copied()))
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&out.text).unwrap_or_else(|e| panic!("{e}: {}", out.text))
}

#[test]
fn l4_certifies_at_1023() {
    let out = falcert(&[
        "certify",
        "--input",
        L4,
        "--mode",
        "l4",
        "--q",
        "1023,1023,1023,1023",
        "--format",
        "json",
    ]);
    assert_eq!(out.code, 0, "{}", out.text);
    let doc: CertificateDocument = serde_json::from_str(&out.text).unwrap();
    assert_eq!(serde_json::to_value(&doc.verdict).unwrap(), "pass");
    assert!(doc.conditions.iter().all(|c| c.satisfied));
    assert!(doc.first_violation.is_none());
}

#[test]
fn l4_fails_at_1022_and_names_the_condition() {
    let out = falcert(&["certify", "--input", L4, "--mode", "l4", "--q", "1022,1022,1022,1022"]);
    assert_eq!(out.code, 1);
    assert!(
        out.text.contains("first violated condition: total_inverse_length"),
        "{}",
        out.text
    );
    let out = falcert(&[
        "certify",
        "--input",
        L4,
        "--mode",
        "l4",
        "--q",
        "1022,1022,1022,1022",
        "--format",
        "json",
    ]);
    assert_eq!(json(&out)["first_violation"], "total_inverse_length");
}

#[test]
fn min_q_prints_1023() {
    let out = falcert(&["min-q", "--input", L4, "--mode", "l4"]);
    assert_eq!((out.code, out.text.as_str()), (0, "1023\n"));
}

#[test]
fn constants_report() {
    let out = falcert(&["constants"]);
    assert_eq!(out.code, 0);
    assert!(out.text.contains("v0"));
    assert!(out.text.contains("[ok] guard_term_below_0.0000086"));
    let v = json(&falcert(&["constants", "--format", "json"]));
    let lo: f64 = v["gate_ratio"][0].as_str().unwrap().parse().unwrap();
    let hi: f64 = v["gate_ratio"][1].as_str().unwrap().parse().unwrap();
    assert!(lo <= 0.43125 && 0.43125 <= hi);
    let v0: f64 = v["v0"][0].as_str().unwrap().parse().unwrap();
    assert!((v0 - 1.01494160640965).abs() < 1e-12);
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "certify",
        "--input",
        L4,
        "--mode",
        "purcell",
        "--q",
        "400000,-500000,600000,700000",
        "--format",
        "json",
    ];
    assert_eq!(falcert(&args), falcert(&args));
    let args = [
        "nervecheck",
        "--input",
        r#"{"faces":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]],"red_edges":[[0,1],[2,3]]}"#,
        "--format",
        "json",
    ];
    assert_eq!(falcert(&args), falcert(&args));
}

#[test]
fn certificate_round_trips_through_cli_json() {
    let out = falcert(&[
        "certify",
        "--input",
        L4,
        "--check",
        "arithmetic",
        "--q",
        "600000,600000,600000,600000",
        "--format",
        "json",
    ]);
    assert_eq!(out.code, 0, "{}", out.text);
    let doc: CertificateDocument = serde_json::from_str(&out.text).unwrap();
    let again = serde_json::to_value(&doc).unwrap();
    assert_eq!(again, json(&out));
}

#[test]
fn invalid_input_exits_2_and_names_the_field() {
    let out = falcert(&["reduce-basis", "--input", r#"{"u":["1","x"],"v":["0","1"]}"#]);
    assert_eq!(out.code, 2);
    assert!(out.text.contains("`u[1]`"), "{}", out.text);
    let out = falcert(&["certify", "--input", r#"{"volume":"-1","n":2}"#, "--q", "5,5"]);
    assert_eq!(out.code, 2, "{}", out.text);
    let out = falcert(&["certify", "--input", L4, "--q", "5,zero"]);
    assert_eq!(out.code, 2);
    assert_eq!(falcert(&["certify", "--input", "/nonexistent.json", "--q", "5"]).code, 2);
    assert_eq!(falcert(&["frobnicate"]).code, 2);
    assert_eq!(falcert(&["certify", "--input", L4, "--q", "5", "--mode", "guess"]).code, 2);
}

#[test]
fn help_exits_0() {
    assert_eq!(falcert(&["--help"]).code, 0);
}

#[test]
fn lattice_subcommands() {
    let out = falcert(&[
        "reduce-basis",
        "--input",
        r#"{"u":["3","1"],"v":["7","3"]}"#,
        "--format",
        "json",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out)["a_len_sq"], "2");
    let out = falcert(&[
        "--numeric",
        "interval",
        "reduce-basis",
        "--input",
        r#"{"u":["3","1"],"v":["7","3"]}"#,
    ]);
    assert_eq!(out.code, 0, "{}", out.text);
    let out = falcert(&[
        "sublattices",
        "--input",
        r#"{"u":["2","0"],"v":["1","5"]}"#,
        "--format",
        "json",
    ]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["sublattices"].as_array().unwrap().len(), 3);
    assert_eq!(v["forms"].as_array().unwrap().len(), 3);
}

#[test]
fn slope_length_reports_bound() {
    let shape = r#"{"r":"1","theta":"pi/2","lambda":"2"}"#;
    let v = json(&falcert(&[
        "slope-length",
        "--input",
        shape,
        "--q",
        "-3",
        "--p",
        "2",
        "--format",
        "json",
    ]));
    let lo: f64 = v["normalized_length_sq"][0].as_str().unwrap().parse().unwrap();
    assert!((lo - 20.0).abs() < 1e-9);
}

#[test]
fn commensurability_exit_codes() {
    assert_eq!(
        falcert(&["commensurability", "--twist-regions", "9", "--min-crossings", "6"]).code,
        0
    );
    let out = falcert(&["commensurability", "--twist-regions", "8", "--min-crossings", "6"]);
    assert_eq!(out.code, 1);
    assert!(out.text.contains("first violated condition: a_twist_regions"));
    let basis = r#"{"a":["2","0"],"b":["0","18"]}"#;
    assert_eq!(
        falcert(&[
            "commensurability",
            "--twist-regions",
            "9",
            "--min-crossings",
            "6",
            "--input",
            basis
        ])
        .code,
        0
    );
}

#[test]
fn nervecheck_exit_codes() {
    let k4 = r#"{"faces":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]],"red_edges":[[0,1],[2,3]]}"#;
    assert_eq!(falcert(&["nervecheck", "--input", k4]).code, 0);
    let bad = r#"{"faces":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]],"red_edges":[[0,1]]}"#;
    assert_eq!(falcert(&["nervecheck", "--input", bad]).code, 1);
}

#[test]
fn horoball_rotations() {
    let board = r#"{"lines":["0","1"],"parity":[0,1],"longitude":["2","0"]}"#;
    let v = json(&falcert(&["horoball", "--input", board, "--format", "json"]));
    assert_eq!(v["order4"]["kind"], "even");
    assert_eq!(v["order3"]["r"], "1/6");
    assert_eq!(
        falcert(&["horoball", "--input", board, "--order", "4", "--center", "1,0"]).code,
        0
    );
    assert_eq!(
        falcert(&["horoball", "--input", board, "--order", "4", "--center", "0,0"]).code,
        1
    );
    assert_eq!(
        falcert(&["horoball", "--input", board, "--order", "5", "--center", "0,0"]).code,
        2
    );
}

#[test]
fn binary_exit_codes_match() {
    let bin = env!("CARGO_BIN_EXE_falcert");
    let st = Command::new(bin)
        .args(["min-q", "--input", L4, "--mode", "l4"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&st.stdout), "1023\n");
    let st = Command::new(bin)
        .args(["certify", "--input", L4, "--q", "1022,1022,1022,1022", "--mode", "l4"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(1));
    let st = Command::new(bin).args(["reduce-basis", "--input", "{"]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
}
