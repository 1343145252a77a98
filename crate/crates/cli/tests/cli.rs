use ribboncli::{parse_angle, run, EXIT_CONSTRAINT, EXIT_IO, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE};

fn cli(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("ribboncli").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn assert_failure(args: &[&str], code: u8) -> String {
    let (got, out, err) = cli(args);
    assert_eq!(got, code, "{args:?}: {err}");
    assert!(out.is_empty(), "no primary output on failure");
    assert!(err.starts_with("error"), "{err}");
    err
}

#[test]
fn angles_in_radians_and_degrees() {
    assert_eq!(parse_angle("1.5").unwrap(), 1.5);
    assert!((parse_angle("60deg").unwrap() - std::f64::consts::PI / 3.0).abs() < 1e-15);
    assert!((parse_angle(" 90 deg ").unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    for bad in ["", "deg", "abc", "inf", "NaN", "1e999"] {
        assert!(parse_angle(bad).is_err(), "{bad}");
    }
}

#[test]
fn analyze_reports_formula_and_topology() {
    let (code, out, _) = cli(&["analyze", "--family", "moebius", "--theta", "60deg", "--d", "0.01", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let formula = v["report"]["formula_value"].as_f64().unwrap();
    assert!((formula - (3.0 * 3f64.sqrt() + 0.09)).abs() < 1e-9);
    assert_eq!(v["ribbon_linking_number"], 7);
    assert_eq!(v["band_type"], "moebius_band");
}

#[test]
fn usage_errors_exit_two() {
    let err = assert_failure(&["build", "--family", "torus2q", "--q", "4"], EXIT_USAGE);
    assert!(err.contains("odd"));
    assert_failure(&["build", "--family", "moebius", "--theta", "4"], EXIT_USAGE);
    assert_failure(&["build", "--family", "twist-odd", "--n", "1", "--theta", "1.2"], EXIT_USAGE);
    assert_failure(&["build"], EXIT_USAGE);
    assert_failure(&["optimize", "--tol", "0"], EXIT_USAGE);
    let (code, out, _) = cli(&["frobnicate"]);
    assert_eq!((code, out.is_empty()), (EXIT_USAGE, true));
}

#[test]
fn clearance_violation_exits_three() {
    assert_failure(&["build", "--family", "moebius", "--d", "0.01", "--k", "2"], EXIT_CONSTRAINT);
}

#[test]
fn tampered_document_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let (code, out, _) = cli(&["build", "--family", "moebius", "--n", "1", "--d", "0.3"]);
    assert_eq!(code, EXIT_OK);
    let mut doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    doc["diagram"]["params"]["d"] = serde_json::json!(0.4);
    std::fs::write(&path, doc.to_string()).unwrap();
    assert_failure(&["analyze", "--input", path.to_str().unwrap()], EXIT_NUMERICAL);
}

#[test]
fn out_flag_writes_file_and_input_reads_it_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("torus.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&["build", "--family", "torus2q", "--q", "5", "--d", "0.01", "--out", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let (code, out, _) = cli(&["analyze", "--input", p]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((v["report"]["formula_value"].as_f64().unwrap() - (8.0 * 3f64.sqrt() + 0.12)).abs() < 1e-12);
    let (code, rebuilt, _) = cli(&["build", "--input", p]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(rebuilt, std::fs::read_to_string(&path).unwrap());
}

#[test]
fn table_csv_shape() {
    let (code, out, _) = cli(&["table", "--q", "3,5,7"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "q,crossing_number,construction_bound,kny_bound");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("3,3,13.856406,"));
}

#[test]
fn svg_outputs() {
    let (code, svg, _) = cli(&["render", "--family", "twist-even", "--n", "2", "--labels", "off"]);
    assert_eq!(code, EXIT_OK);
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(!svg.contains("<text"));
    let (code, crease, _) = cli(&["crease", "--family", "moebius", "--theta", "90deg", "--d", "0.5", "--format", "svg"]);
    assert_eq!(code, EXIT_OK);
    assert!(crease.contains("<line"));
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, err) = cli(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("build") && err.is_empty());
}

#[test]
fn fuzz_seeds_parse_to_finite_angles_or_fail() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus/parse_angle");
    let mut accepted = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        if let Ok(theta) = parse_angle(&text) {
            assert!(theta.is_finite());
            accepted += 1;
        }
    }
    assert_eq!(accepted, 6);
}

#[test]
fn unwritable_output_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("x.json");
    assert_failure(&["build", "--family", "moebius", "--out", path.to_str().unwrap()], EXIT_IO);
    assert_failure(&["crease", "--family", "moebius", "--format", "csv"], EXIT_USAGE);
}
