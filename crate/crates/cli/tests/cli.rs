use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_domino-rsk"));
    c.env_remove("DOMINO_RSK_JOBS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn map_golden_files() {
    assert_eq!(
        stdout(&["map", "-4 -3 2 1", "--rank", "inf"]),
        golden("map_ginf.txt")
    );
    assert_eq!(
        stdout(&["map", "-4 -3 2 1", "--rank", "2"]),
        golden("map_g2.txt")
    );
    assert_eq!(
        stdout(&["map", "-4 -3 2 1", "--rank", "all"]),
        golden("map_all.txt")
    );
    assert_eq!(stdout(&["map", ""]), golden("map_empty.txt"));
}

#[test]
fn cycles_golden_file() {
    let window = "5 9 -7 -11 1 6 -3 -10 2 -8 -4";
    let text = stdout(&["cycles", "--window", window, "--rank", "2"]);
    assert_eq!(text, golden("cycles_h11.txt"));
    assert!(text.ends_with("equals t_{2,3}(T): true\n"));
}

#[test]
fn classes_golden_file() {
    assert_eq!(
        stdout(&["classes", "--n", "2", "--rank", "1"]),
        golden("classes_n2_r1.json")
    );
}

#[test]
fn json_roundtrip_through_inverse() {
    for rank in ["0", "3", "inf"] {
        let image = stdout(&["map", "3 -1 -4 2", "--rank", rank, "--format", "json"]);
        let mut child = bin()
            .args(["inverse", "-", "--rank", rank])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .unwrap();
        child
            .stdin
            .take()
            .unwrap()
            .write_all(image.as_bytes())
            .unwrap();
        let out = child.wait_with_output().unwrap();
        assert!(out.status.success());
        assert_eq!(
            String::from_utf8(out.stdout).unwrap(),
            "3 -1 -4 2\n",
            "rank {rank}"
        );
    }
}

#[test]
fn stats_of_a_recording_tableau() {
    let image = stdout(&["map", "-4 -3 2 1", "--rank", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&image).unwrap();
    let q = value["q"].to_string();
    let stats: serde_json::Value = serde_json::from_str(&stdout(&["stats", &q])).unwrap();
    assert_eq!(stats["vertical"], 3);
    assert_eq!(stats["twice_spin"], 3);
    assert_eq!(stats["d"], 1);
    assert_eq!(stats["sign"], -1);
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        vec!["map", "1 1"],
        vec!["map", "0"],
        vec!["map", "1 2", "--rank", "x"],
        vec!["inverse", "{\"bad\": 1}"],
        vec!["verify", "--suite", "nope", "--n", "2"],
        vec!["verify", "--suite", "main", "--n", "2", "--shard", "0..99"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).starts_with("error: "),
            "{args:?}"
        );
    }
}

#[test]
fn budget_refusal_exits_with_three() {
    for args in [
        vec!["verify", "--suite", "main", "--n", "9"],
        vec!["verify", "--suite", "main", "--n", "2", "--rank", "9"],
        vec!["classes", "--n", "7"],
    ] {
        assert_eq!(run(&args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn verify_passes_and_reports() {
    let text = stdout(&["verify", "--suite", "main", "--n", "4", "--rank", "2"]);
    assert_eq!(
        text,
        "main n=4 r=2: 384/384 inputs pass (768 checks; domain 384)\nPASS\n"
    );
    let json = stdout(&["verify", "--suite", "typeA", "--n", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["cases_passed"], 24);
    assert_eq!(v["passed"], true);
    assert!(v.get("elapsed_ms").is_none());
    let timed = stdout(&[
        "verify", "--suite", "typeA", "--n", "4", "--json", "--timing",
    ]);
    assert!(timed.contains("\"elapsed_ms\""));
}

#[test]
fn verify_json_is_identical_across_worker_counts() {
    for suite in ["main", "relation", "plactic"] {
        let outputs: Vec<String> = ["1", "2", "8"]
            .iter()
            .map(|jobs| {
                stdout(&[
                    "verify", "--suite", suite, "--n", "4", "--rank", "0,1,2", "--jobs", jobs,
                    "--json",
                ])
            })
            .collect();
        assert_eq!(outputs[0], outputs[1], "{suite}");
        assert_eq!(outputs[0], outputs[2], "{suite}");
    }
    let env = bin()
        .args([
            "verify", "--suite", "main", "--n", "4", "--rank", "0,1,2", "--json",
        ])
        .env("DOMINO_RSK_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(env.stdout).unwrap(),
        stdout(&[
            "verify", "--suite", "main", "--n", "4", "--rank", "0,1,2", "--jobs", "1", "--json"
        ])
    );
}

#[test]
fn sharded_runs_add_up() {
    let whole: serde_json::Value = serde_json::from_str(&stdout(&[
        "verify", "--suite", "main", "--n", "4", "--json",
    ]))
    .unwrap();
    let mut cases = 0;
    for shard in ["0..100", "100..384"] {
        let part: serde_json::Value = serde_json::from_str(&stdout(&[
            "verify", "--suite", "main", "--n", "4", "--shard", shard, "--json",
        ]))
        .unwrap();
        cases += part["cases"].as_u64().unwrap();
    }
    assert_eq!(cases, whole["cases"].as_u64().unwrap());
}

#[test]
fn output_survives_a_closed_pipe() {
    let mut child = bin()
        .args(["map", "-4 -3 2 1", "--rank", "all"])
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    drop(child.stdout.take());
    let status = child.wait().unwrap();
    assert!(status.code().is_some());
}
