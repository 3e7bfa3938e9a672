//! End-to-end checks of the command line binary: exit codes, JSON shape,
//! agreement between the text and JSON renderings, and database overrides.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_equiline"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should run")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("binary should not be killed by a signal")
}

/// Runs the binary with `--json` appended and parses stdout.
fn run_json(args: &[&str]) -> Value {
    let mut full: Vec<&str> = args.to_vec();
    full.push("--json");
    let out = run(&full);
    assert_eq!(
        exit_code(&out),
        0,
        "expected success for {:?}, stderr: {}",
        full,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout should be well-formed JSON")
}

fn graph_path(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("data");
    path.push("graphs");
    path.push(name);
    path.into_os_string().into_string().expect("fixture path should be UTF-8")
}

fn conclusion(verdict: &Value) -> &str {
    verdict["conclusion"].as_str().expect("conclusion should be a string")
}

fn joined_steps(verdict: &Value) -> String {
    verdict["steps"]
        .as_array()
        .expect("steps should be an array")
        .iter()
        .map(|step| step.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn joined_notes(verdict: &Value) -> String {
    verdict["notes"]
        .as_array()
        .map(|notes| {
            notes
                .iter()
                .filter_map(Value::as_str)
                .collect::<Vec<_>>()
                .join("\n")
        })
        .unwrap_or_default()
}

#[test]
fn help_and_version_exit_zero() {
    for args in [
        vec!["--help"],
        vec!["--version"],
        vec!["lines", "--help"],
        vec!["verify", "--help"],
    ] {
        let out = run(&args);
        assert_eq!(exit_code(&out), 0, "help/version should succeed for {args:?}");
    }
    let help = run(&["--help"]);
    let text = String::from_utf8_lossy(&help.stdout);
    for name in ["lines", "srg", "etf", "project", "lift", "table1", "tight5", "verify"] {
        assert!(text.contains(name), "top-level help should list `{name}`");
    }
}

#[test]
fn bad_invocations_exit_one() {
    for args in [
        vec!["frobnicate"],
        vec!["lines", "--dim", "19"],
        vec!["srg", "a", "b", "c", "d"],
        vec!["lines", "--dim", "19", "--count", "-3"],
    ] {
        let out = run(&args);
        assert_eq!(exit_code(&out), 1, "argument errors should exit 1 for {args:?}");
    }
}

#[test]
fn input_errors_exit_one_with_a_message() {
    let cycle5 = graph_path("cycle5.adj");
    let c6 = graph_path("c6.adj");
    let cases: Vec<Vec<&str>> = vec![
        vec!["lines", "--dim", "0", "--count", "5"],
        vec!["lines", "--dim", "19", "--count", "76", "--angle", "nonsense"],
        vec!["lines", "--dim", "19", "--count", "76", "--angle", "3/2"],
        vec!["etf", "--dim", "4", "--count", "5"],
        vec!["etf", "--dim", "5", "--count", "5"],
        vec!["tight5", "--m", "0"],
        vec!["project", "76", "35", "18", "14", "--eigenspace", "x"],
        vec!["lift", "--dim", "3", "--size", "6", "--a", "1/3", "--b", "1/2"],
        vec!["verify", "--adjacency", &c6, "--projection", "r"],
        vec!["verify", "--adjacency", &cycle5],
        vec![
            "verify",
            "--adjacency",
            &cycle5,
            "--projection",
            "r",
            "--seidel-angle",
            "1/3",
        ],
        vec!["verify", "--adjacency", &cycle5, "--seidel-angle", "2"],
        vec!["verify", "--adjacency", "/nonexistent/graph.adj", "--projection", "r"],
        vec!["srg", "13", "6", "2", "3", "--db", "/nonexistent/records.txt"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(exit_code(&out), 1, "input errors should exit 1 for {args:?}");
        let stderr = String::from_utf8_lossy(&out.stderr);
        assert!(stderr.contains("error"), "stderr should explain {args:?}: {stderr}");
    }
}

#[test]
fn every_conclusion_exits_zero() {
    let open = run_json(&["lines", "--dim", "19", "--count", "74"]);
    assert_eq!(conclusion(&open), "Open");

    let refuted = run_json(&["lines", "--dim", "19", "--count", "76"]);
    assert_eq!(conclusion(&refuted), "NonexistenceCertified");

    let infeasible = run_json(&["srg", "5", "7", "0", "1"]);
    assert_eq!(conclusion(&infeasible), "NonexistenceCertified");

    let undecided = run_json(&["srg", "13", "6", "2", "3"]);
    assert_eq!(conclusion(&undecided), "Open");
    assert!(joined_notes(&undecided).contains("no refutation"));
}

#[test]
fn every_subcommand_emits_well_formed_json() {
    let lines = run_json(&["lines", "--dim", "19", "--count", "76"]);
    assert!(lines["steps"].is_array());

    let srg = run_json(&["srg", "76", "30", "8", "14"]);
    assert_eq!(conclusion(&srg), "NonexistenceCertified");

    let etf = run_json(&["etf", "--dim", "19", "--count", "76"]);
    assert_eq!(etf["dimension"], 19);
    assert_eq!(etf["count"], 76);
    assert_eq!(etf["angle"], "1/5");
    assert_eq!(etf["primary"]["v"], 75);
    assert_eq!(etf["complementary_frame"]["angle"], "1/15");

    let span = run_json(&["project", "76", "30", "8", "14", "--eigenspace", "s"]);
    assert_eq!(span["dimension"], 18);
    assert_eq!(span["size"], 76);
    assert_eq!(span["inner_a"], "7/45");
    assert_eq!(span["inner_b"], "-4/15");
    assert_eq!(span["tight_frame"], true);

    let other = run_json(&["project", "76", "30", "8", "14", "--eigenspace", "r"]);
    assert_eq!(other["dimension"], 57);
    assert_eq!(other["inner_a"], "1/15");
    assert_eq!(other["inner_b"], "-1/15");

    let lift = run_json(&["lift", "--dim", "18", "--size", "76", "--a", "7/45", "--b", "-4/15"]);
    assert_eq!(lift["lifted"]["dimension"], 19);
    assert_eq!(lift["lifted"]["size"], 76);
    assert_eq!(lift["lifted"]["inner_a"], "1/5");
    assert_eq!(lift["lifted"]["inner_b"], "-1/5");
    assert_eq!(lift["lifted"]["tight_frame"], true);
    assert!(lift["scale_sq"].is_string());
    assert!(lift["height_sq"].is_string());

    let table = run_json(&["table1"]);
    let rows = table["rows"].as_array().expect("rows should be an array");
    assert!(!rows.is_empty());
    for row in rows {
        let entries = row["entries"].as_array().expect("entries should be an array");
        assert_eq!(entries.len(), 3, "each row lists three graphs");
    }

    let tight = run_json(&["tight5", "--m", "2"]);
    assert_eq!(tight["dimension"], 23);
    assert_eq!(tight["line_count"], 276);
    assert_eq!(tight["angle"], "1/5");
    assert_eq!(tight["family"].as_array().map(Vec::len), Some(6));

    let verify = run_json(&["verify", "--adjacency", &graph_path("petersen.adj"), "--projection", "r"]);
    assert!(verify["verdicts"].is_object());
}

#[test]
fn text_and_json_agree_on_the_conclusion() {
    for (args, expected) in [
        (["lines", "--dim", "19", "--count", "76"], "NonexistenceCertified"),
        (["lines", "--dim", "19", "--count", "74"], "Open"),
        (["srg", "13", "6", "2", "3"], "Open"),
    ] {
        let text_out = run(&args);
        assert_eq!(exit_code(&text_out), 0);
        let text = String::from_utf8_lossy(&text_out.stdout).into_owned();
        assert!(
            text.contains(&format!("conclusion: {expected}")),
            "text output for {args:?} should state the conclusion: {text}"
        );
        assert_eq!(conclusion(&run_json(&args)), expected);
    }
}

#[test]
fn custom_database_overrides_the_verdict() {
    let dir = tempfile::tempdir().expect("tempdir");

    let existence = dir.path().join("existence.txt");
    std::fs::File::create(&existence)
        .and_then(|mut f| writeln!(f, "# local records\n\n13 6 2 3 E paley-field-construction"))
        .expect("write db");
    let verdict = run_json(&["srg", "13", "6", "2", "3", "--db", existence.to_str().unwrap()]);
    assert_eq!(conclusion(&verdict), "ExistenceKnown");
    assert!(joined_steps(&verdict).contains("paley-field-construction"));

    let nonexistence = dir.path().join("nonexistence.txt");
    std::fs::File::create(&nonexistence)
        .and_then(|mut f| writeln!(f, "13 6 2 3 N local-refutation"))
        .expect("write db");
    let verdict = run_json(&["srg", "13", "6", "2", "3", "--db", nonexistence.to_str().unwrap()]);
    assert_eq!(conclusion(&verdict), "NonexistenceCertified");
    assert!(joined_steps(&verdict).contains("local-refutation"));

    let malformed = dir.path().join("malformed.txt");
    std::fs::File::create(&malformed)
        .and_then(|mut f| writeln!(f, "13 6 2"))
        .expect("write db");
    let out = run(&["srg", "13", "6", "2", "3", "--db", malformed.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1, "a malformed record is an input error");
}

#[test]
fn database_flag_feeds_the_line_query_too() {
    let dir = tempfile::tempdir().expect("tempdir");
    let db = dir.path().join("records.txt");
    std::fs::File::create(&db)
        .and_then(|mut f| writeln!(f, "75 32 10 16 E synthetic-witness"))
        .expect("write db");
    let verdict = run_json(&["lines", "--dim", "19", "--count", "76", "--db", db.to_str().unwrap()]);
    assert_eq!(
        conclusion(&verdict),
        "ExistenceKnown",
        "records are trusted inputs, so a witness for the matching graph short-circuits the refutation"
    );
    assert!(joined_steps(&verdict).contains("synthetic-witness"));
}

#[test]
fn monotone_flag_records_the_subsumption() {
    let monotone = run_json(&["lines", "--dim", "19", "--count", "80", "--monotone"]);
    assert_eq!(conclusion(&monotone), "NonexistenceCertified");
    let notes = joined_notes(&monotone);
    assert!(notes.contains("monotone subsumption"), "notes: {notes}");
    assert!(notes.contains("76 lines"), "notes: {notes}");

    let direct = run_json(&["lines", "--dim", "19", "--count", "80"]);
    assert_eq!(conclusion(&direct), "NonexistenceCertified");
    assert!(!joined_notes(&direct).contains("monotone subsumption"));
}

#[test]
fn angle_restriction_steers_the_derivation() {
    let fifth = run_json(&["lines", "--dim", "19", "--count", "76", "--angle", "1/5"]);
    assert_eq!(conclusion(&fifth), "NonexistenceCertified");

    let third = run_json(&["lines", "--dim", "19", "--count", "76", "--angle", "1/3"]);
    assert_eq!(conclusion(&third), "NonexistenceCertified");

    let seventh = run_json(&["lines", "--dim", "19", "--count", "76", "--angle", "1/7"]);
    assert_eq!(conclusion(&seventh), "NonexistenceCertified");
    assert!(
        joined_steps(&seventh).contains("LrsAngles"),
        "1/7 is not an admissible angle in dimension 19"
    );
}

#[test]
fn verify_reports_match_known_gram_facts() {
    let petersen = run_json(&["verify", "--adjacency", &graph_path("petersen.adj"), "--projection", "r"]);
    assert_eq!(petersen["size"], 10);
    assert_eq!(petersen["ambient"], 5);
    assert_eq!(petersen["numeric_rank"], 5);
    for key in ["psd", "two_distance", "equiangular", "tight_frame", "two_design"] {
        assert_eq!(petersen["verdicts"][key], true, "petersen verdict {key}");
    }

    let cycle5 = run_json(&[
        "verify",
        "--adjacency",
        &graph_path("cycle5.adj"),
        "--seidel-angle",
        "1/5*sqrt(5)",
    ]);
    assert_eq!(cycle5["size"], 6);
    assert_eq!(cycle5["numeric_rank"], 3);
    assert_eq!(cycle5["verdicts"]["equiangular"], true);
    assert_eq!(cycle5["verdicts"]["tight_frame"], true);
    assert_eq!(cycle5["verdicts"]["two_design"], false);
    let potential = cycle5["frame_potential"].as_f64().expect("frame potential");
    assert!((potential - 12.0).abs() < 1e-9, "six lines at rank 3: {potential}");
}
