use clap::Parser;
use serde_json::Value;
use weakberger_cli::{run, CommandConfig, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};

const SCHEMA: &str = include_str!("../schema/output.schema.json");

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("weakberger").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Parses JSON-lines output and validates every line against the schema.
fn json_lines(args: &[&str]) -> (i32, Vec<Value>) {
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = call(&full);
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!lines.is_empty(), "no output: {err}");
    for v in &lines {
        let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{errors:?} in {v}");
    }
    (code, lines)
}

#[test]
fn roots_b2() {
    let (code, out, _) = call(&["roots", "B", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 8);
    assert_eq!(call(&["roots", "B2"]).1, out);
    let (_, lines) = json_lines(&["roots", "B", "2"]);
    assert_eq!(lines.len(), 8);
    assert_eq!(lines.iter().filter(|l| l["simple"] == true).count(), 2);
}

#[test]
fn weights_c3_omega3() {
    let (code, out, _) = call(&["weights", "C3", "0,0,1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 14);
    let (_, lines) = json_lines(&["weights", "C3", "omega3"]);
    assert_eq!(lines.len(), 15);
    let last = lines.last().unwrap();
    assert_eq!(last["record"], "weight-count");
    assert_eq!(last["dimension"], 14);
    assert_eq!(last["bilinear_type"], "symplectic");
}

#[test]
fn weights_count_only() {
    let (code, out, _) = call(&["weights", "E7", "omega1", "--count-only"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "56");
    assert_eq!(call(&["weights", "A1", "2omega1+omega1", "--count-only"]).1.trim(), "4");
}

#[test]
fn screen_b6_spin_fails_piv() {
    let (code, out, _) = call(&["screen", "piv", "B6", "spin"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.contains("FAIL"), "{out}");
    assert!(out.contains("(1/2, 1/2, 1/2, -1/2, -1/2, -1/2)"), "{out}");
    let long = call(&["screen", "piv", "--family", "B", "--rank", "6", "--weight", "spin"]);
    assert_eq!(long.1, out);
    let (code, lines) = json_lines(&["screen", "piv", "B", "6", "spin"]);
    assert_eq!(code, EXIT_NEGATIVE);
    let v = &lines[0];
    assert_eq!(v["passed"], false);
    assert_eq!(
        v["witness"]["refutations"][0]["violators"][0],
        serde_json::json!(["1/2", "1/2", "1/2", "-1/2", "-1/2", "-1/2"])
    );
}

#[test]
fn screen_all_validates() {
    // SI fails here while SII holds, so the combined exit status is negative.
    let (code, lines) = json_lines(&["screen", "all", "C3", "omega3"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(lines.len(), 7);
    let failed: Vec<&Value> = lines.iter().filter(|l| l["passed"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["predicate"], "SI");
    let (code, lines) = json_lines(&["screen", "schwachhoefer", "A1", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(lines[0]["class"], "EXCEEDS");
}

#[test]
fn bruteforce_entries() {
    let (code, lines) = json_lines(&["bruteforce", "so4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(lines[0]["is_weak_berger"], true);
    assert_eq!(lines[1]["consistent"], true);
    let (code, _, err) = call(&["bruteforce", "sl3"]);
    assert_eq!(code, EXIT_NEGATIVE, "{err}");
    let (code, _, _) = call(&["bruteforce", "nope"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn bruteforce_custom_catalog() {
    let dir = std::env::temp_dir().join(format!("weakberger-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cat.toml");
    std::fs::write(
        &path,
        "[[entry]]\nid = \"mine\"\nconstruction = { kind = \"so\", n = 5 }\nhighest_weight = [{ type = \"B2\", labels = [1, 0] }]\n",
    )
    .unwrap();
    let (code, out, err) = call(&["bruteforce", "mine", "--catalog", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("weak-Berger: true"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn classify_small_report() {
    let args = ["classify", "--full", "--max-rank", "3", "--max-dim", "14"];
    let (code, lines) = json_lines(&args);
    assert_eq!(code, EXIT_OK);
    let admitted: Vec<&Value> = lines.iter().filter(|l| l["record"] == "admitted").collect();
    assert!(admitted.iter().all(|a| a["evidence"].is_array()));
    assert!(admitted
        .iter()
        .any(|a| a["branch"] == "sl2-partner" && a["annotation"] == "FI: F4/SU(2)·Sp(3)"));
    assert!(lines.iter().any(|l| l["record"] == "coverage" && l["entry"] == "E7 ω1"));
    let (_, again) = json_lines(&args);
    assert_eq!(lines, again);

    let (_, summary) = json_lines(&["classify", "--branch", "triple", "--max-rank", "3", "--max-dim", "14"]);
    assert!(summary.iter().all(|l| l["record"] != "rejected"));
    assert!(summary
        .iter()
        .filter(|l| l["record"] == "admitted")
        .all(|l| l["branch"] == "triple" && l.get("evidence").is_none()));
}

#[test]
fn usage_errors() {
    for args in [
        vec!["frobnicate"],
        vec!["roots"],
        vec!["roots", "Q", "3"],
        vec!["weights", "C3", "1,2"],
        vec!["weights", "C3"],
        vec!["screen", "piv", "A2", "spin"],
        vec!["screen", "piv", "--family", "B"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("classify"));
}

#[test]
fn config_round_trip() {
    for args in [
        vec!["weakberger", "roots", "B", "2"],
        vec![
            "weakberger",
            "--format",
            "json",
            "weights",
            "E7",
            "omega1",
            "--count-only",
        ],
        vec![
            "weakberger",
            "screen",
            "piv",
            "--family",
            "B",
            "--rank",
            "6",
            "--weight",
            "spin",
        ],
        vec![
            "weakberger",
            "bruteforce",
            "so5",
            "--catalog",
            "x.toml",
            "--max-dim-v",
            "20",
        ],
        vec![
            "weakberger",
            "classify",
            "--full",
            "--branch",
            "pair",
            "--branch",
            "triple",
            "--pair-max-dim",
            "30",
        ],
    ] {
        let cfg = CommandConfig::try_parse_from(&args).unwrap();
        let text = serde_json::to_string(&cfg).unwrap();
        let back: CommandConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cfg, "{text}");
    }
}
