use std::io::Write;

use arrhodge::arrangement::{builtin_family, parse_arrangement_json, parse_family_spec};
use arrhodge_cli::{run, EXIT_INPUT, EXIT_OK};
use serde_json::Value;

fn cli(args: &str) -> (i32, String) {
    run(std::iter::once("arrhodge").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let (code, out) = cli(&format!("{args} --format json"));
    assert_eq!(code, EXIT_OK, "{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn poincare_of_two_lines() {
    assert_eq!(cli("poincare --family boolean:2"), (0, "1 + 2*x + 1*x^2\n".to_string()));
}

#[test]
fn charpoly_and_class() {
    assert_eq!(cli("charpoly --family concurrent_lines:3").1, "2 - 3*x + 1*x^2\n");
    assert_eq!(cli("class --family braid:3").1, "1 - 3*eta + 2*eta^2\n");
    assert_eq!(cli("poincare --family braid:3 --format latex").1, "1 + 3x + 2x^{2}\n");
}

#[test]
fn multiplier_series_of_braid() {
    let (code, out) = cli("multiplier-series --family braid:3 --jmax 5");
    assert_eq!(code, 0);
    assert_eq!(out, "H(t) = (2*t - 1*t^2) / (1-t)^3\ndims (j = 0..5): 0, 2, 5, 9, 14, 20\n");
}

#[test]
fn verification_commands_pass() {
    for args in [
        "verify-snc --n 3 --d 2 --pmax 3 --jmax 12",
        "verify-multiplier --family concurrent_lines:4",
        "verify-pipeline --family generic:3,4 --ymax 4",
        "verify-delres --family braid:3",
    ] {
        let (code, out) = cli(args);
        assert_eq!(code, 0, "{args}: {out}");
        assert!(out.ends_with("result: pass\n"), "{args}: {out}");
    }
}

#[test]
fn input_errors_exit_two() {
    let cases = [
        ("poincare", "--file PATH or --family SPEC"),
        ("poincare --family braid:0", "dimension must be positive"),
        ("poincare --family cube:3", "family"),
        ("verify-snc --n 2 --d 3", "1 <= d <= n"),
        ("hodge-series --family boolean:2 --format yaml", "yaml"),
        ("poincare --file /nonexistent/arr.txt", "cannot read"),
        ("lattice --family braid:5 --max-flats 10", "10"),
    ];
    for (args, needle) in cases {
        let (code, out) = cli(args);
        assert_eq!(code, EXIT_INPUT, "{args}: {out}");
        assert!(out.contains(needle), "{args}: {out}");
    }
}

#[test]
fn file_diagnostics_are_distinct() {
    let dir = std::env::temp_dir().join(format!("arrhodge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("central.txt", "n: 2\nhyperplanes:\n1 0\n0 1\n1 1\n", 0),
        ("affine.txt", "n: 2\nhyperplanes:\n1 0 3\n", EXIT_INPUT),
        ("dup.txt", "n: 2\nhyperplanes:\n1 1\n2 2\n", EXIT_INPUT),
        ("short.txt", "n: 3\nhyperplanes:\n1 1\n", EXIT_INPUT),
        ("junk.txt", "hyperplanes: maybe\n", EXIT_INPUT),
    ];
    let mut messages = Vec::new();
    for (name, body, want) in cases {
        let path = dir.join(name);
        std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
        let (code, out) = cli(&format!("poincare --file {}", path.display()));
        assert_eq!(code, want, "{name}: {out}");
        messages.push(out);
    }
    assert_eq!(messages[0], "1 + 3*x + 2*x^2\n");
    let errs: std::collections::BTreeSet<_> = messages[1..].iter().collect();
    assert_eq!(errs.len(), 4);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn lattice_json_schema() {
    let v = json("lattice --family concurrent_lines:3");
    assert_eq!(v["n"], 2);
    assert_eq!(v["d"], 3);
    let flats = v["flats"].as_array().unwrap();
    let mus: Vec<i64> = flats.iter().map(|f| f["mu"].as_i64().unwrap()).collect();
    assert_eq!(mus, [1, -1, -1, -1, 2]);
    assert_eq!(flats[4]["codim"], 2);
    assert_eq!(flats[4]["hyperplanes"], serde_json::json!([0, 1, 2]));
}

#[test]
fn hodge_series_json() {
    let v = json("hodge-series --family boolean:2 --ymax 2 --pmax 1 --jmax 4");
    assert_eq!(v["series"][1], "(2*t - 1*t^2) / (1-t)^2");
    assert_eq!(v["dims"], serde_json::json!([[1, 2, 3, 4, 5], [0, 2, 3, 4, 5]]));
    assert!(v["closed_form"]["latex"].as_str().unwrap().starts_with("\\frac"));
    let v = json("poincare --family braid:3");
    assert_eq!(v["poincare"], serde_json::json!([1, 3, 2]));
    let v = json("charpoly --family braid:3");
    assert_eq!(v["charpoly"], serde_json::json!([0, 2, -3, 1]));
}

#[test]
fn arrangement_block_round_trips() {
    for spec in ["boolean:3", "braid:4", "generic:3,5", "concurrent_lines:4"] {
        let v = json(&format!("poincare --family {spec}"));
        let parsed = parse_arrangement_json(&v["arrangement"].to_string()).unwrap();
        assert_eq!(parsed, builtin_family(parse_family_spec(spec).unwrap()).unwrap(), "{spec}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        "lattice --family braid:4 --format json",
        "hodge-series --family generic:3,4 --format json",
        "mc --family braid:3",
    ] {
        assert_eq!(cli(args), cli(args), "{args}");
    }
}
