//! Golden-file tests for the `koszulk` binary.
//!
//! Each case runs the real executable and compares the command line, exit
//! code, stdout and stderr against `tests/golden/<name>.txt`. Set
//! `KOSZULK_BLESS=1` to rewrite the files.

use std::path::{Path, PathBuf};
use std::process::Command;

const FIXTURES: &str = "tests/golden/fixtures";

struct Case {
    name: &'static str,
    args: &'static [&'static str],
    max_cap: Option<&'static str>,
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case {
        name,
        args,
        max_cap: None,
    }
}

const CASES: &[Case] = &[
    case("shuffle", &["shuffle", "1,2", "3"]),
    case("shuffle_sums", &["shuffle", "(1)+2*(2)", "1"]),
    case("stuffle", &["stuffle", "1", "1"]),
    case("stuffle_2_3", &["stuffle", "2", "3"]),
    case("stuffle_json", &["stuffle", "1,2", "1", "--format", "json"]),
    case("coproduct", &["coproduct", "1,2,3"]),
    case(
        "coproduct_concat",
        &["coproduct", "3", "--product", "concat"],
    ),
    case("coproduct_csv", &["coproduct", "1,2", "--format", "csv"]),
    case("antipode_shuffle", &["antipode", "1,2"]),
    case(
        "antipode_stuffle",
        &["antipode", "1,2", "--product", "stuffle"],
    ),
    case("antipode_concat", &["antipode", "3", "--product", "concat"]),
    case("pair", &["pair", "3", "(1)+(3)"]),
    case("exp", &["exp", "1,2,3"]),
    case("log", &["log", "1,2,3"]),
    case("symm_embed", &["symm-embed", "2,1,1"]),
    case(
        "bar_exterior",
        &["bar-homology", "--algebra", "E(1,3)", "--cap", "12"],
    ),
    case(
        "bar_square_zero",
        &["bar-homology", "--algebra", "Etilde(1,3)", "--cap", "12"],
    ),
    case(
        "bar_ks0",
        &["bar-homology", "--algebra", "KS0-rational", "--cap", "14"],
    ),
    case(
        "bar_bigraded",
        &[
            "bar-homology",
            "--algebra",
            "P(2)",
            "--cap",
            "8",
            "--bigraded",
        ],
    ),
    case(
        "bar_file",
        &[
            "bar-homology",
            "--algebra",
            "tests/golden/fixtures/truncated_poly.json",
        ],
    ),
    case(
        "bar_induced",
        &[
            "bar-homology",
            "--algebra",
            "Etilde(1,3)",
            "--cap",
            "12",
            "--induced-product",
            "1,2",
            "1",
        ],
    ),
    case(
        "bar_kuenneth_su_so",
        &["bar-homology", "--kuenneth", "SU/SO", "--cap", "14"],
    ),
    case(
        "bar_kuenneth_cp",
        &["bar-homology", "--kuenneth", "CP-loop", "--cap", "10"],
    ),
    case("lie_dims", &["lie-dims", "--gens", "1,1", "--cap", "10"]),
    case("lie_dims_odd", &["lie-dims", "--cap", "12"]),
    case("pbw", &["pbw", "--gens", "2,3", "--cap", "20"]),
    case("lyndon", &["lyndon", "--alphabet", "2,3", "-w", "10"]),
    case("ext1", &["ext1", "3"]),
    case("ext1_zero", &["ext1", "4"]),
    case("zeta", &["zeta", "1..6"]),
    case("bernoulli", &["zeta", "0..12", "--bernoulli"]),
    case("vsc", &["vsc", "2..12"]),
    case("imj", &["imj", "1..5"]),
    case("imj_json", &["imj", "1..3", "--format", "json"]),
    case("h1c", &["h1c", "3", "1..6"]),
    case("preset_ks0", &["preset", "KS0-rational", "--cap", "9"]),
    case("preset_kcell", &["preset", "Kcell-rational", "--cap", "12"]),
    case("preset_kqz", &["preset", "KQZ-weights", "--cap", "9"]),
    case("preset_tcgeo", &["preset", "TCgeo-rational", "--cap", "7"]),
    case(
        "preset_mt",
        &["preset", "MT-ext-pattern", "--cap", "7", "--format", "csv"],
    ),
    case("mzv_dims", &["mzv-dims", "0..12"]),
    case("motivic_check", &["motivic-check", "--cap", "12"]),
    case("verify_hopf", &["verify", "--suite", "hopf", "-w", "4"]),
    case(
        "verify_all",
        &["verify", "--suite", "all", "-w", "4", "--format", "csv"],
    ),
    case("series_tensor", &["series", "tensor", "2,4", "--cap", "12"]),
    case(
        "series_product",
        &[
            "series",
            "tensor",
            "3,5,7,9,11",
            "--times",
            "polynomial:2",
            "--cap",
            "12",
        ],
    ),
    // exit-code contract
    case("err_unknown_flag", &["shuffle", "1", "2", "--bogus"]),
    case("err_unknown_subcommand", &["tensor", "1"]),
    case("err_bad_word", &["shuffle", "1,0", "2"]),
    case(
        "err_unknown_algebra",
        &["bar-homology", "--algebra", "F(1)"],
    ),
    case(
        "err_bad_table",
        &[
            "bar-homology",
            "--algebra",
            "tests/golden/fixtures/bad_degree.json",
        ],
    ),
    case("err_unknown_preset", &["preset", "KU"]),
    case("err_cap", &["lie-dims", "--cap", "33"]),
    case("err_ext1_cap", &["ext1", "12", "--cap", "10"]),
    case(
        "err_bar_cap",
        &[
            "bar-homology",
            "--algebra",
            "tests/golden/fixtures/truncated_poly.json",
            "--cap",
            "8",
        ],
    ),
    Case {
        name: "err_env_cap",
        args: &["verify", "--suite", "hopf", "-w", "6"],
        max_cap: Some("5"),
    },
    case(
        "fail_motivic",
        &["motivic-check", "--cap", "12", "--perturb", "4"],
    ),
    case(
        "fail_pbw",
        &[
            "pbw",
            "--gens",
            "3,5,7,9,11",
            "--cap",
            "12",
            "--perturb",
            "8",
        ],
    ),
];

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn invoke(c: &Case) -> String {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_koszulk"));
    cmd.args(c.args)
        .current_dir(crate_dir())
        .env_remove("KOSZULK_MAX_CAP");
    if let Some(m) = c.max_cap {
        cmd.env("KOSZULK_MAX_CAP", m);
    }
    let out = cmd.output().expect("binary runs");
    let env = c
        .max_cap
        .map(|m| format!("KOSZULK_MAX_CAP={m} "))
        .unwrap_or_default();
    format!(
        "$ {env}koszulk {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        c.args.join(" "),
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.txt"))
}

#[test]
fn golden_files() {
    let bless = std::env::var_os("KOSZULK_BLESS").is_some();
    let mut mismatches = Vec::new();
    for c in CASES {
        let got = invoke(c);
        let path = golden_path(c.name);
        if bless {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want =
            std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        if got != want {
            mismatches.push(format!("{}:\n--- expected\n{want}--- got\n{got}", c.name));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn every_subcommand_has_a_golden_case() {
    let covered: std::collections::BTreeSet<&str> = CASES.iter().map(|c| c.args[0]).collect();
    for (_, sub, _) in koszulk_cli::COVERAGE {
        assert!(covered.contains(sub), "no golden case for {sub}");
    }
}

#[test]
fn exit_codes() {
    let code = |name: &str| {
        let c = CASES.iter().find(|c| c.name == name).unwrap();
        let text = invoke(c);
        text.lines()
            .nth(1)
            .unwrap()
            .trim_start_matches("exit: ")
            .parse::<i32>()
            .unwrap()
    };
    assert_eq!(code("shuffle"), 0);
    assert_eq!(code("verify_hopf"), 0);
    for name in [
        "err_unknown_flag",
        "err_unknown_subcommand",
        "err_bad_word",
        "err_unknown_algebra",
        "err_bad_table",
    ] {
        assert_eq!(code(name), 1, "{name}");
    }
    for name in ["err_cap", "err_ext1_cap", "err_bar_cap", "err_env_cap"] {
        assert_eq!(code(name), 2, "{name}");
    }
    assert_eq!(code("fail_motivic"), 3);
    assert_eq!(code("fail_pbw"), 3);
}

#[test]
fn errors_are_one_json_line() {
    for c in CASES.iter().filter(|c| c.name.starts_with("err_")) {
        let out = Command::new(env!("CARGO_BIN_EXE_koszulk"))
            .args(c.args)
            .current_dir(crate_dir())
            .envs(c.max_cap.map(|m| ("KOSZULK_MAX_CAP", m)))
            .output()
            .unwrap();
        let stderr = String::from_utf8(out.stderr).unwrap();
        assert_eq!(stderr.lines().count(), 1, "{}: {stderr}", c.name);
        let v: serde_json::Value = serde_json::from_str(&stderr).unwrap();
        assert!(
            v["error"]["kind"].is_string() && v["error"]["message"].is_string(),
            "{}",
            c.name
        );
        assert!(out.stdout.is_empty(), "{}", c.name);
    }
}

#[test]
fn reruns_are_byte_identical() {
    for c in CASES {
        assert_eq!(invoke(c), invoke(c), "{}", c.name);
    }
}

#[test]
fn help_exits_zero() {
    let out = Command::new(env!("CARGO_BIN_EXE_koszulk"))
        .arg("--help")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("bar-homology"));
    assert!(Path::new(&crate_dir().join(FIXTURES)).is_dir());
}
