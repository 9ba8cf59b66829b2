use bkcolor_cli::run_from;
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> (u8, Value, String) {
    let mut full = vec!["bkcolor"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let out = run_from(full, &mut stdin.as_bytes());
    let json = if out.stdout.is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&out.stdout).unwrap()
    };
    (out.code, json, out.stderr)
}

const W6: &str = "E|fG";

#[test]
fn check_w6() {
    let (code, v, _) = run(&["check", "-g", W6], "");
    assert_eq!(code, 0);
    let p = &v["payload"];
    assert_eq!(
        (p["delta"].as_u64(), p["omega"].as_u64(), p["chi"].as_u64()),
        (Some(5), Some(3), Some(4))
    );
    assert_eq!(p["two_k2_free"], true);
    assert_eq!(p["special"], "w6");
    assert_eq!(p["verdict"], true);
    assert_eq!(v["tool"], "bkcolor");
    assert_eq!(v["command"], "check");
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn check_p5_has_witness() {
    let (code, v, _) = run(&["check", "-g", "DhC"], "");
    assert_eq!(code, 0);
    let w = &v["payload"]["witness"];
    assert_eq!(
        [&w["a"], &w["b"], &w["c"], &w["d"]],
        [0, 1, 3, 4].map(Value::from).each_ref()
    );
}

#[test]
fn check_reads_stdin_and_dimacs() {
    let (code, v, _) = run(&["check"], "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["special"], "complete");
    let (code, v, _) = run(&["check", "-", "--input-format", "graph6"], "Dhc\n");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["special"], "c5");
}

#[test]
fn check_empty_input() {
    let (code, v, err) = run(&["check"], "");
    assert_eq!(code, 2);
    assert!(v.is_null());
    assert!(err.contains("empty"));
}

#[test]
fn color_modes() {
    let (code, v, _) = run(&["color", "-g", W6], "");
    assert_eq!(code, 0);
    let p = &v["payload"];
    assert_eq!(p["colors_used"], 4);
    assert_eq!(p["proper"], true);
    assert_eq!(p["stats"]["fallback_count"], 0);

    let c7 = "FhCKG";
    let (code, v, _) = run(&["color", "-g", c7, "--mode", "brooks"], "");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["colors_used"], 3);

    let (code, _, err) = run(&["color", "-g", "DhC"], "");
    assert_eq!(code, 2);
    assert!(err.contains("{0, 1} and {3, 4}"));

    let (code, _, _) = run(&["color", "-g", c7, "--mode", "brooks", "--k", "3"], "");
    assert_eq!(code, 2);
}

#[test]
fn color_with_fallback_exits_three() {
    // Δ = 5, ω = 3: one vertex needs a two-move repair, which depth 0 forbids
    let g = "GBn^NS";
    let (code, v, _) = run(&["color", "-g", g, "--depth", "0"], "");
    assert_eq!(code, 3);
    let p = &v["payload"];
    assert_eq!(p["proper"], true);
    assert_eq!(p["colors_used"], 4);
    assert_eq!(p["stats"]["fallback_count"], 1);
    assert_eq!(p["stuck_at"].as_array().unwrap().len(), 1);

    let (code, v, _) = run(&["color", "-g", g], "");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["stats"]["bounded_multiswap"], 1);
}

#[test]
fn verify_internal_and_corpus() {
    let (code, v, err) = run(&["verify", "--n-max", "6", "--workers", "2"], "");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["graphs_seen"], 143);
    assert!(err.contains("violations 0"));

    let (code, v, _) = run(&["verify", "--corpus", "-"], "E~~w\n");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["subclass"], 1);

    let (code, v, _) = run(&["verify", "--corpus", "-"], "Dhc\nnot graph6\n");
    assert_eq!(code, 1);
    assert_eq!(v["payload"]["malformed"], 1);

    let (code, _, _) = run(&["verify", "--corpus", "/nonexistent/corpus.g6"], "");
    assert_eq!(code, 2);
    let (code, _, _) = run(&["verify", "--n-max", "11"], "");
    assert_eq!(code, 2);
    let (code, _, _) = run(&["verify", "--workers", "0", "--n-max", "3"], "");
    assert_eq!(code, 2);
}

#[test]
fn verify_without_filters_exits_one() {
    let (code, v, _) = run(
        &[
            "verify",
            "--corpus",
            "-",
            "--no-2k2-filter",
            "--min-delta",
            "0",
        ],
        "Dhc\n",
    );
    assert_eq!(code, 1);
    assert_eq!(v["payload"]["violations"][0]["chi"], 3);
}

#[test]
fn enumerate_small_bounds() {
    let (code, v, _) = run(&["enumerate", "--n-max", "5"], "");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["case1"][0]["graph6"], "DLo");
    let (code, v, _) = run(&["enumerate", "--n-max", "7"], "");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["case2"].as_array().unwrap().len(), 3);
    let (code, _, _) = run(&["enumerate", "--n-max", "0"], "");
    assert_eq!(code, 2);
}

#[test]
fn usage_errors() {
    let out = run_from(["bkcolor"], &mut "".as_bytes());
    assert_eq!(out.code, 2);
    let out = run_from(["bkcolor", "frobnicate"], &mut "".as_bytes());
    assert_eq!(out.code, 2);
    let out = run_from(["bkcolor", "--help"], &mut "".as_bytes());
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("enumerate"));
}

#[test]
fn binary_exit_codes() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_bkcolor");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["check", "-g", W6]), Some(0));
    assert_eq!(status(&["color", "-g", "DhC"]), Some(2));
    let out = Command::new(bin)
        .args(["check", "-g", W6])
        .env("BKCOLOR_WORKERS", "3")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("Δ = 5"));
}
