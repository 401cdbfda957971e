use clap::Parser;
use csring::cli::{execute, parse_config, Cli, Format, EXIT_ERROR, EXIT_FALSE, EXIT_OK};

fn run(args: &[&str]) -> (i32, String, Format) {
    let cli = Cli::try_parse_from(std::iter::once("csring").chain(args.iter().copied())).expect("arguments parse");
    let out = execute(&cli.command);
    (out.status, out.render(cli.format), cli.format)
}

#[test]
fn check_exit_statuses() {
    let (code, text, _) = run(&["check", "zabelian([2,3])", "--property", "strongly_cs"]);
    assert_eq!(code, EXIT_FALSE);
    assert!(text.starts_with("zabelian([2, 3]): strongly_cs = false"), "{text}");
    let (code, _, _) = run(&["check", "zabelian([2,3])", "--property", "weakly_in"]);
    assert_eq!(code, EXIT_OK);
    let (code, text, _) = run(&["check", "zmod 6", "--property", "cs_ring"]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("cs_ring = true"));
    let (code, text, _) = run(&["check", "zmod", "--property", "cs_ring"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(text.contains("column 5"), "{text}");
}

#[test]
fn ring_descriptor_with_module_property_uses_regular_module() {
    let (code, _, _) = run(&["check", "zmod 8", "--property", "strongly_cs"]);
    assert_eq!(code, EXIT_OK);
    let (code, text, _) = run(&["check", "regular(zmod 4)", "--property", "clean"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(text.contains("ring property"), "{text}");
}

#[test]
fn errors_carry_the_descriptor() {
    let (code, text, _) = run(&["check", "zmod 4096", "--property", "cs_ring", "--max-ring-size", "64"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(text.contains("zmod 4096"), "{text}");
}

#[test]
fn structured_check_output() {
    let (code, text, format) = run(&["check", "zmod 6", "--property", "clean", "--format", "structured"]);
    assert_eq!((code, format), (EXIT_OK, Format::Structured));
    let v: serde_json::Value = serde_json::from_str(&text).expect("json");
    assert_eq!(v["descriptor"], "zmod 6");
    assert_eq!(v["value"], true);
}

#[test]
fn analyze_dumps_structure() {
    let (code, text, _) = run(&["analyze", "zmod 12", "--format", "structured"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&text).expect("json");
    let a = &v["analysis"];
    assert_eq!(a["size"], 12);
    assert_eq!(a["ideals"].as_array().map(Vec::len), Some(6));
    assert_eq!(a["maximal_ideals"].as_array().map(Vec::len), Some(2));
    assert_eq!(a["purified"], true);
    let (code, text, _) = run(&["analyze", "zabelian([4, 2])"]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("invariant_factors: [2,4]"), "{text}");
}

#[test]
fn verify_small_family() {
    let (code, text, _) = run(&["verify", "--theorem", "T-T55", "--max-ring-size", "16", "--max-module-size", "8"]);
    assert_eq!(code, EXIT_OK, "{text}");
    assert!(text.starts_with("T-T55: holds"), "{text}");
    assert!(!text.contains(" ms"));
    let (_, text, _) = run(&[
        "verify", "--theorem", "T-T55", "--max-ring-size", "16", "--max-module-size", "8", "--timing",
    ]);
    assert!(text.contains(" ms)"), "{text}");
}

#[test]
fn structured_verify_has_stable_fields() {
    let (_, text, _) = run(&[
        "verify", "--theorem", "t-p21", "--max-ring-size", "8", "--format", "structured",
    ]);
    let keys: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("    \""))
        .map(|l| l.trim().split('"').nth(1).expect("key"))
        .collect();
    assert_eq!(
        &keys[..7],
        ["theorem_id", "paper_ref", "instances", "agreements", "skipped", "counterexamples", "elapsed_ms"]
    );
    assert!(text.contains("\"elapsed_ms\": null"));
}

#[test]
fn unknown_theorem_is_an_error() {
    let (code, text, _) = run(&["verify", "--theorem", "T-X99", "--max-ring-size", "4"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(text.contains("T-X99"));
}

#[test]
fn config_file_and_overrides() {
    let cfg = parse_config("max_ring_size = 12\nprime_set = [2]\ninclude_trivext = false\n").expect("config");
    assert_eq!(cfg.max_ring_size, 12);
    assert_eq!(cfg.prime_set, vec![2]);
    assert_eq!(cfg.max_module_size, 16);
    assert!(parse_config("max_rings = 3").is_err());

    let dir = std::env::temp_dir().join(format!("csring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("family.cfg");
    std::fs::write(&path, "max_ring_size = 4\nmax_module_size = 4\n").expect("write");
    let p = path.to_str().expect("utf8");
    let (code, text, _) = run(&["verify", "--theorem", "T-P21", "--config", p, "--max-ring-size", "6"]);
    assert_eq!(code, EXIT_OK);
    // Z/2..Z/6, F2[x]/(x^2), Z/2 x Z/2 and Z/2 x Z/3, whose tables differ from Z/6
    assert!(text.contains("(8 instances"), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn descriptor_files() {
    let dir = std::env::temp_dir().join(format!("csring-files-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("rings.txt");
    std::fs::write(&path, "# chain rings\nzmod 4\nzmod 9  # odd\n\npolyquot(2, [0, 0, 1])\n").expect("write");
    let (code, text, _) = run(&["check", "--file", path.to_str().expect("utf8"), "--property", "chain"]);
    assert_eq!(code, EXIT_OK, "{text}");
    assert_eq!(text.matches("chain = true").count(), 3);
    std::fs::write(&path, "zmod 4\nzmod 6\n").expect("write");
    let (code, _, _) = run(&["check", "--file", path.to_str().expect("utf8"), "--property", "chain"]);
    assert_eq!(code, EXIT_FALSE);
    std::fs::write(&path, "zmod 4\nzmod x\n").expect("write");
    let (code, text, _) = run(&["check", "--file", path.to_str().expect("utf8"), "--property", "chain"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(text.contains("line 2"), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn explain_replays_report_counterexamples() {
    let (_, text, _) = run(&[
        "verify", "--theorem", "T-SEARCH-R56", "--max-ring-size", "64", "--max-module-size", "8",
        "--format", "structured",
    ]);
    let dir = std::env::temp_dir().join(format!("csring-explain-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("report.json");
    std::fs::write(&path, &text).expect("write");
    let (code, out, _) = run(&["explain", "--report", path.to_str().expect("utf8")]);
    // hits violate "extension CS implies base CS", so a replayed hit exits 1
    let hits = text.matches("\"instance\"").count();
    assert_eq!(code, if hits > 0 { EXIT_FALSE } else { EXIT_OK }, "{out}");
    assert_eq!(out.matches("reproduced: true").count(), hits);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn explain_single_instance() {
    let (code, text, _) = run(&["explain", "--theorem", "T-T55", "trivext(zmod 2, cyclic(zmod 2, [0]))"]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("extension_cs = true"));
    let (code, _, _) = run(&["explain", "--theorem", "T-T55", "zmod 4"]);
    assert_eq!(code, EXIT_ERROR);
}
