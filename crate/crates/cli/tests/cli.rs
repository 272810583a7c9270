use std::path::PathBuf;
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_triadic");

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn triadic(args: &[&str]) -> Output {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    Output {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn golden_table() {
    let out = triadic(&["table"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, golden("table.txt"));
    assert!(out.stdout.contains("G#/Ab = <8,0,3>"));
    assert!(out.stdout.contains("<0,8,5> = f\n"));
}

#[test]
fn golden_beethoven() {
    let out = triadic(&["beethoven"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, golden("beethoven.txt"));
    assert_eq!(
        out.stdout.lines().next(),
        Some("C a F d Bb g Eb c Ab f Db bb Gb eb B g# E c# A f# D b G e C")
    );
}

#[test]
fn golden_graphs() {
    for which in ["tonnetz", "chickenwire"] {
        for format in ["dot", "json"] {
            let out = triadic(&["graph", "--which", which, "--format", format]);
            assert_eq!(out.code, 0, "{}", out.stderr);
            assert_eq!(
                out.stdout,
                golden(&format!("{which}.{format}")),
                "{which} {format}"
            );
        }
    }
}

#[test]
fn every_verb_is_deterministic() {
    let pachelbel = fixture("pachelbel.txt");
    let runs: Vec<Vec<&str>> = vec![
        vec!["table"],
        vec!["apply", "--word", "LR", "--chord", "D"],
        vec!["find", "--from", "C", "--to", "c"],
        vec!["duality"],
        vec!["hook"],
        vec!["graph", "--which", "tonnetz"],
        vec!["analyze", &pachelbel],
        vec!["beethoven"],
        vec!["parsimony"],
    ];
    for args in runs {
        for json in [false, true] {
            let mut full = args.clone();
            if json {
                full.push("--json");
            }
            let a = triadic(&full);
            let b = triadic(&full);
            assert_eq!(a.code, 0, "{full:?}: {}", a.stderr);
            assert_eq!(a.stdout, b.stdout, "{full:?}");
            if json {
                serde_json::from_str::<serde_json::Value>(&a.stdout)
                    .unwrap_or_else(|e| panic!("{full:?} is not JSON: {e}"));
            }
        }
    }
}

#[test]
fn find_prints_both_transformations() {
    assert_eq!(
        triadic(&["find", "--from", "C", "--to", "c"]).stdout,
        "T/I: I_7   PLR: s^8 t (= P)\n"
    );
    assert_eq!(
        triadic(&["find", "--from", "D", "--to", "A"]).stdout,
        "T/I: T_7   PLR: s^11\n"
    );
}

#[test]
fn apply_reads_right_to_left() {
    let out = triadic(&["apply", "--word", "LR", "--chord", "C"]);
    assert!(
        out.stdout.starts_with("LR(C) = F <5,9,0>"),
        "{}",
        out.stdout
    );
    let json: serde_json::Value =
        serde_json::from_str(&triadic(&["apply", "--word", "RL", "--chord", "C", "--json"]).stdout)
            .unwrap();
    assert_eq!(json["result"], "G");
}

#[test]
fn verification_verbs_pass() {
    for verb in ["duality", "hook"] {
        let out = triadic(&[verb]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        assert!(!out.stdout.contains("[FAIL]"));
    }
    let json: serde_json::Value =
        serde_json::from_str(&triadic(&["duality", "--json"]).stdout).unwrap();
    assert_eq!(json["passed"], true);
}

#[test]
fn analyze_fixtures() {
    let out = triadic(&["analyze", &fixture("wagner.txt")]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(
        lines[0].split_whitespace().collect::<Vec<_>>(),
        ["from", "to", "T/I", "PLR"]
    );
    assert_eq!(
        lines[1].split_whitespace().take(3).collect::<Vec<_>>(),
        ["Ab", "Db", "T_5"]
    );

    let json: serde_json::Value =
        serde_json::from_str(&triadic(&["analyze", &fixture("pachelbel.txt"), "--json"]).stdout)
            .unwrap();
    assert_eq!(
        json["steps"][0],
        serde_json::json!({"from": "D", "to": "A", "ti": "T_7", "plr": "s^11"})
    );
    assert_eq!(json["steps"].as_array().unwrap().len(), 3);
}

#[test]
fn errors_are_reported() {
    let usage = triadic(&["frobnicate"]);
    assert_ne!(usage.code, 0);
    assert!(usage.stderr.contains("Usage"));

    let missing = triadic(&["graph"]);
    assert_ne!(missing.code, 0);
    assert!(missing.stderr.contains("--which"));

    let bad_chord = triadic(&["find", "--from", "H", "--to", "C"]);
    assert_eq!(bad_chord.code, 1);
    assert!(bad_chord.stderr.contains("`H`"));

    let bad_word = triadic(&["apply", "--word", "LXR", "--chord", "C"]);
    assert_eq!(bad_word.code, 1);

    let dir = std::env::temp_dir().join(format!("triadic-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.txt");
    std::fs::write(&file, "C a\n# comment\nF  Q d\n").unwrap();
    let parse = triadic(&["analyze", file.to_str().unwrap()]);
    assert_eq!(parse.code, 1);
    assert!(
        parse.stderr.contains("line 3, column 4: `Q`"),
        "{}",
        parse.stderr
    );

    std::fs::write(&file, "C\n").unwrap();
    let short = triadic(&["analyze", file.to_str().unwrap()]);
    assert_eq!(short.code, 1);
    std::fs::remove_dir_all(&dir).unwrap();

    assert_eq!(
        triadic(&["analyze", "/nonexistent/progression.txt"]).code,
        1
    );
}

#[test]
fn run_matches_binary() {
    let direct = triadic_cli::run(["triadic", "beethoven"]);
    assert_eq!(direct.code, 0);
    assert_eq!(direct.stdout, triadic(&["beethoven"]).stdout);
}
