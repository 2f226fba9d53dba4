//! End-to-end tests of the `paucity` binary: exit codes, JSON shapes,
//! cache behavior, configuration layering, and the emitted side files.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paucity"))
        .env_remove("PAUCITY_CACHE_DIR")
        .env_remove("PAUCITY_MEM_BUDGET")
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn depress_prints_the_transform() {
    let dir = TempDir::new().unwrap();
    let out = bin(dir.path(), &["depress", "x^3+3x^2"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["g"], "y^3-27y");
    assert_eq!(doc["map"], "y=3x+3");
    assert_eq!(doc["scale"], "27");
    assert_eq!(doc["residual"], "54");
}

#[test]
fn bad_polynomials_exit_with_parse_or_precondition_codes() {
    let dir = TempDir::new().unwrap();
    let garbage = bin(dir.path(), &["depress", "x^^3!"]);
    assert_eq!(exit_code(&garbage), 2);
    let stderr: Value = serde_json::from_slice(&garbage.stderr).unwrap();
    assert_eq!(stderr["kind"], "parse");

    let constant = bin(dir.path(), &["depress", "5"]);
    assert_eq!(exit_code(&constant), 3);
    let stderr: Value = serde_json::from_slice(&constant.stderr).unwrap();
    assert_eq!(stderr["kind"], "precondition");
}

#[test]
fn unknown_flags_exit_2_from_the_argument_parser() {
    let dir = TempDir::new().unwrap();
    let out = bin(dir.path(), &["enumerate", "x^3", "--frobnicate"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn enumerate_counts_the_taxicab_box_and_replays_it_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    let args = ["enumerate", "x^3", "-s", "2", "-B", "12"];
    let first = bin(dir.path(), &args);
    assert_eq!(exit_code(&first), 0);
    let doc = stdout_json(&first);
    assert_eq!(doc["counts"]["total"], 284);
    assert_eq!(doc["counts"]["trivial"], 276);
    assert_eq!(doc["counts"]["shared"], 0);
    assert_eq!(doc["counts"]["disjoint"], 8);
    assert_eq!(doc["mode"], "box");

    let second = bin(dir.path(), &args);
    assert_eq!(exit_code(&second), 0);
    assert_eq!(
        first.stdout, second.stdout,
        "cache replay must be byte-identical, elapsed time included"
    );
}

#[test]
fn emit_writes_the_solution_csv() {
    let dir = TempDir::new().unwrap();
    let csv_path = dir.path().join("sols.csv");
    let out = bin(
        dir.path(),
        &[
            "enumerate",
            "x^3",
            "-s",
            "3",
            "-B",
            "6",
            "--emit",
            csv_path.to_str().unwrap(),
        ],
    );
    assert_eq!(exit_code(&out), 0);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x1,x2,x3,x4,x5,x6,class"));
    assert!(
        csv.contains("\n1,5,5,2,3,6,DISJOINT\n"),
        "expected the small three-summand witness in the CSV"
    );
    let doc = stdout_json(&out);
    let total = doc["counts"]["total"].as_u64().unwrap();
    assert_eq!(csv.lines().count() as u64, total + 1);
}

#[test]
fn tight_memory_budget_exits_4() {
    let dir = TempDir::new().unwrap();
    let out = bin(
        dir.path(),
        &[
            "--mem-budget",
            "1000",
            "enumerate",
            "x^3",
            "-s",
            "2",
            "-B",
            "100",
        ],
    );
    assert_eq!(exit_code(&out), 4);
    let stderr: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(stderr["kind"], "memory-budget");
    assert!(stderr["error"].as_str().unwrap().contains("budget"));
}

#[test]
fn oracle_agreement_passes_and_a_poisoned_cache_fails() {
    let dir = TempDir::new().unwrap();
    let args = ["enumerate", "x^3", "-s", "2", "-B", "12", "--oracle"];
    let clean = bin(dir.path(), &args);
    assert_eq!(exit_code(&clean), 0);

    // Corrupt the cached counts and run with --oracle again: the stored
    // document replays, disagrees with the recount, and the run must fail
    // loudly instead of echoing the tampered numbers.
    let entry = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.extension().is_some_and(|x| x == "json"))
        .expect("cache entry exists");
    let poisoned = std::fs::read_to_string(&entry)
        .unwrap()
        .replace("\"total\": 284", "\"total\": 285")
        .replace("\"trivial\": 276", "\"trivial\": 277");
    std::fs::write(&entry, poisoned).unwrap();

    let tampered = bin(dir.path(), &args);
    assert_eq!(exit_code(&tampered), 5);
    let stderr: Value = serde_json::from_slice(&tampered.stderr).unwrap();
    assert_eq!(stderr["kind"], "oracle-mismatch");
    assert!(tampered.stdout.is_empty(), "no document on a failed check");
}

#[test]
fn census_reports_the_worked_cubic_tails() {
    let dir = TempDir::new().unwrap();
    let out = bin(dir.path(), &["census", "y^3-27y", "-s", "2", "-B", "1000"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["singular_count"], 2);
    assert_eq!(doc["singular_n_sample"], serde_json::json!([3, 6]));
    assert_eq!(doc["critical_sum_poly"], "z^4-29160z^2+76527504");
    assert_eq!(doc["mode"], "box");
    assert!(doc.get("count_per_b2").is_none());
}

#[test]
fn census_on_image_skips_tails_outside_the_progression() {
    let dir = TempDir::new().unwrap();
    let out = bin(
        dir.path(),
        &["census", "x^3+3x^2", "-s", "2", "-B", "12", "--on-image"],
    );
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["g"], "y^3-27y");
    assert_eq!(doc["mode"], "image");
    assert_eq!(doc["singular_count"], 1);
    assert_eq!(doc["singular_n_sample"], serde_json::json!([6]));
}

#[test]
fn census_with_three_summands_reports_the_density() {
    let dir = TempDir::new().unwrap();
    let out = bin(dir.path(), &["census", "y^3", "-s", "3", "-B", "5"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["singular_count"], 0);
    assert_eq!(doc["count_per_b2"], 0.0);
    assert_eq!(
        doc["singular_n_sample"],
        serde_json::json!([]),
        "nested sample stays an empty list"
    );
}

#[test]
fn ladder_reports_rungs_and_writes_the_tsv() {
    let dir = TempDir::new().unwrap();
    let tsv_path = dir.path().join("rungs.tsv");
    let out = bin(
        dir.path(),
        &[
            "ladder",
            "x^7",
            "-s",
            "2",
            "50,100,200,300",
            "--tsv",
            tsv_path.to_str().unwrap(),
        ],
    );
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["fit"]["status"], "insufficient");
    assert_eq!(doc["rungs"].as_array().unwrap().len(), 4);

    let tsv = std::fs::read_to_string(&tsv_path).unwrap();
    let mut lines = tsv.lines();
    assert_eq!(lines.next(), Some("B\ttotal\ttrivial\tshared\tdisjoint"));
    assert_eq!(lines.next(), Some("50\t4950\t4950\t0\t0"));
    assert_eq!(tsv.lines().count(), 5);
}

#[test]
fn ladder_rejects_bad_bound_lists() {
    let dir = TempDir::new().unwrap();
    let decreasing = bin(dir.path(), &["ladder", "x^3", "-s", "2", "12,8"]);
    assert_eq!(exit_code(&decreasing), 3);
    let garbage = bin(dir.path(), &["ladder", "x^3", "-s", "2", "4,x"]);
    assert_eq!(exit_code(&garbage), 2);
    let empty_range = bin(dir.path(), &["ladder", "x^3", "-s", "2", "16..8"]);
    assert_eq!(exit_code(&empty_range), 3);
}

#[test]
fn ladder_doubling_range_expands_like_the_comma_list() {
    let dir = TempDir::new().unwrap();
    let range = bin(dir.path(), &["ladder", "x^3", "-s", "2", "4..16"]);
    let list = bin(dir.path(), &["ladder", "x^3", "-s", "2", "4,8,16"]);
    assert_eq!(exit_code(&range), 0);
    assert_eq!(range.stdout, list.stdout);
}

#[test]
fn config_sources_layer_in_the_documented_order() {
    let dir = TempDir::new().unwrap();
    let file_cache = dir.path().join("from-file");
    let env_cache = dir.path().join("from-env");
    let flag_cache = dir.path().join("from-flag");
    let config_path = dir.path().join("paucity.conf");
    std::fs::write(
        &config_path,
        format!(
            "# comment lines are skipped\ncache_dir = {}\nmem_budget = 123456789\n",
            file_cache.display()
        ),
    )
    .unwrap();

    // File only: the file's cache directory is used.
    let out = Command::new(env!("CARGO_BIN_EXE_paucity"))
        .env_remove("PAUCITY_CACHE_DIR")
        .env_remove("PAUCITY_MEM_BUDGET")
        .args(["--config", config_path.to_str().unwrap()])
        .args(["enumerate", "x^3", "-s", "2", "-B", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(file_cache.is_dir());

    // Environment beats the file.
    let out = Command::new(env!("CARGO_BIN_EXE_paucity"))
        .env("PAUCITY_CACHE_DIR", &env_cache)
        .env_remove("PAUCITY_MEM_BUDGET")
        .args(["--config", config_path.to_str().unwrap()])
        .args(["enumerate", "x^3", "-s", "2", "-B", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(env_cache.is_dir());

    // A flag beats both.
    let out = Command::new(env!("CARGO_BIN_EXE_paucity"))
        .env("PAUCITY_CACHE_DIR", &env_cache)
        .args(["--config", config_path.to_str().unwrap()])
        .args(["--cache-dir", flag_cache.to_str().unwrap()])
        .args(["enumerate", "x^3", "-s", "2", "-B", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(flag_cache.is_dir());
}

#[test]
fn unknown_config_keys_are_rejected() {
    let dir = TempDir::new().unwrap();
    let config_path = dir.path().join("bad.conf");
    std::fs::write(&config_path, "cache_size = 7\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_paucity"))
        .env_remove("PAUCITY_CACHE_DIR")
        .env_remove("PAUCITY_MEM_BUDGET")
        .args(["--config", config_path.to_str().unwrap()])
        .args(["enumerate", "x^3", "-s", "2", "-B", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let stderr: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(stderr["error"].as_str().unwrap().contains("cache_size"));
}

#[test]
fn no_cache_leaves_no_directory_behind() {
    let dir = TempDir::new().unwrap();
    let cache = dir.path().join("never-created");
    let out = Command::new(env!("CARGO_BIN_EXE_paucity"))
        .env_remove("PAUCITY_CACHE_DIR")
        .env_remove("PAUCITY_MEM_BUDGET")
        .args(["--cache-dir", cache.to_str().unwrap(), "--no-cache"])
        .args(["enumerate", "x^3", "-s", "2", "-B", "12"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(!cache.exists());
}

#[test]
fn selftest_reports_the_synthetic_slope() {
    let dir = TempDir::new().unwrap();
    let out = bin(dir.path(), &["selftest"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["selftest"], "ok");
    let slope = doc["slope"].as_f64().unwrap();
    assert!((slope - 4.0 / 3.0).abs() < 1e-9);
}
