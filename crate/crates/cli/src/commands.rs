use std::path::Path;

use serde_json::json;

use crate::args::{Cli, Command, SeriesKind};
use crate::render::{Body, Output};
use koszulk_core::bar::{build_bar_complex, kuenneth_preset_check, load_presentation};
use koszulk_core::exact::{
    format_rational, series_of_exterior_algebra, series_of_polynomial_algebra,
    series_of_tensor_algebra, series_pointwise_product, DegreeRule,
};
use koszulk_core::hopf::{
    antipode, hoffman_exp, hoffman_log, pair, product_choice, symm_to_qsymm, verify_bialgebra,
};
use koszulk_core::lie::{
    ext1_dimension, free_lie_dimensions, lyndon_words, pbw_check, pbw_check_with,
    GradedGeneratorSet,
};
use koszulk_core::suite::SuiteRegistry;
use koszulk_core::zeta::{
    bernoulli, h1c_order_at_p, image_of_j_order, ktheory_preset, motivic_consistency,
    motivic_consistency_with, mzv_dimensions, von_staudt_clausen, zeta_odd_negative,
};
use koszulk_core::{DimensionSeries, Error, FormalSum, Partition, Report, Result};

/// Library operation, the subcommand that exposes it, and an invocation
/// that exercises it.
pub const COVERAGE: &[(&str, &str, &[&str])] = &[
    (
        "series_of_tensor_algebra",
        "series",
        &["series", "tensor", "2,4", "--cap", "10"],
    ),
    (
        "series_of_polynomial_algebra",
        "series",
        &["series", "polynomial", "2,4", "--cap", "10"],
    ),
    (
        "series_of_exterior_algebra",
        "series",
        &["series", "exterior", "3,5", "--cap", "10"],
    ),
    (
        "series_pointwise_product",
        "series",
        &[
            "series",
            "tensor",
            "3,5,7,9",
            "--times",
            "polynomial:2",
            "--cap",
            "12",
        ],
    ),
    ("shuffle", "shuffle", &["shuffle", "1,2", "3"]),
    ("quasi_shuffle", "stuffle", &["stuffle", "1", "1"]),
    ("deconcatenate", "coproduct", &["coproduct", "1,2"]),
    (
        "nsymm_coproduct",
        "coproduct",
        &["coproduct", "3", "--product", "concat"],
    ),
    (
        "antipode",
        "antipode",
        &["antipode", "1,2", "--product", "stuffle"],
    ),
    ("pairing", "pair", &["pair", "3", "(1)+(3)"]),
    ("hoffman_exp", "exp", &["exp", "1,2"]),
    ("hoffman_log", "log", &["log", "1,2"]),
    ("symm_to_qsymm", "symm-embed", &["symm-embed", "2,1"]),
    (
        "verify_bialgebra",
        "verify",
        &["verify", "--suite", "hopf", "-w", "3"],
    ),
    (
        "load_presentation",
        "bar-homology",
        &["bar-homology", "--algebra", "E(1,3)", "--cap", "8"],
    ),
    (
        "build_bar_complex",
        "bar-homology",
        &["bar-homology", "--algebra", "Etilde(1,3)", "--cap", "8"],
    ),
    (
        "homology_dimensions",
        "bar-homology",
        &[
            "bar-homology",
            "--algebra",
            "P(2)",
            "--cap",
            "8",
            "--bigraded",
        ],
    ),
    (
        "induced_product",
        "bar-homology",
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
    (
        "kuenneth_preset_check",
        "bar-homology",
        &["bar-homology", "--kuenneth", "SU/SO", "--cap", "14"],
    ),
    (
        "free_lie_dimensions",
        "lie-dims",
        &["lie-dims", "--gens", "1,1", "--cap", "8"],
    ),
    ("pbw_check", "pbw", &["pbw", "--gens", "2,3", "--cap", "12"]),
    (
        "lyndon_words",
        "lyndon",
        &["lyndon", "--alphabet", "2,3", "-w", "8"],
    ),
    ("ext1_dimension", "ext1", &["ext1", "3"]),
    ("bernoulli", "zeta", &["zeta", "0..12", "--bernoulli"]),
    ("zeta_odd_negative", "zeta", &["zeta", "1..6"]),
    ("von_staudt_clausen", "vsc", &["vsc", "2..12"]),
    ("h1c_order_at_p", "h1c", &["h1c", "3", "1..6"]),
    ("image_of_j_order", "imj", &["imj", "1..5"]),
    (
        "ktheory_preset",
        "preset",
        &["preset", "KS0-rational", "--cap", "9"],
    ),
    ("mzv_dimension", "mzv-dims", &["mzv-dims", "0..12"]),
    (
        "motivic_consistency",
        "motivic-check",
        &["motivic-check", "--cap", "12"],
    ),
];

struct Caps {
    weight: u64,
    cap: u64,
}

fn bounded(value: u64, max: u64) -> Result<u64> {
    if value > max {
        return Err(Error::CapExceeded {
            requested: value as i64,
            cap: max as i64,
        });
    }
    Ok(value)
}

fn caps(cli: &Cli, max: u64) -> Result<Caps> {
    let weight = bounded(cli.max_weight, max)?;
    let cap = bounded(cli.cap.unwrap_or(weight), max)?;
    Ok(Caps { weight, cap })
}

/// Parses a word or sum whose weight stays within `max`.
fn sum(s: &str, max: u64) -> Result<FormalSum> {
    let x: FormalSum = s.parse()?;
    bounded(x.max_weight().unwrap_or(0), max)?;
    Ok(x)
}

fn range(s: &str) -> Result<(u64, u64)> {
    let bad = || Error::Parse(format!("invalid range `{s}`; expected `n` or `a..b`"));
    let s = s.trim();
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (s, s),
    };
    let a: u64 = a.parse().map_err(|_| bad())?;
    let b: u64 = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn letters(s: &str) -> Result<Vec<u32>> {
    match s.parse::<DegreeRule>()? {
        DegreeRule::Explicit(v) => Ok(v),
        other => Err(Error::Parse(format!(
            "expected an explicit list of positive integers, got `{other}`"
        ))),
    }
}

fn cap32(cap: u64) -> u32 {
    cap as u32
}

fn series_table(command: &'static str, label: &str, s: &DimensionSeries) -> Output {
    let rows = s.iter().map(|(d, n)| vec![json!(d), json!(n)]).collect();
    Output::new(
        command,
        Body::Table {
            columns: vec![label.into(), "dim".into()],
            rows,
            notes: vec![],
        },
    )
}

fn reports(command: &'static str, rs: Vec<Report>) -> Output {
    let passed = rs.iter().all(Report::passed);
    let mut out = Output::new(command, Body::Reports(rs));
    out.passed = passed;
    out
}

fn algebra_source(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if arg.ends_with(".json") || (path.is_file() && !arg.contains('(')) {
        return std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read algebra file `{arg}`: {e}")));
    }
    Ok(arg.to_string())
}

fn series_of(kind: SeriesKind, degrees: &[u32], cap: usize) -> Result<DimensionSeries> {
    match kind {
        SeriesKind::Tensor => series_of_tensor_algebra(degrees, cap),
        SeriesKind::Polynomial => series_of_polynomial_algebra(degrees, cap),
        SeriesKind::Exterior => series_of_exterior_algebra(degrees, cap),
    }
}

fn kind_name(kind: SeriesKind) -> &'static str {
    match kind {
        SeriesKind::Tensor => "tensor",
        SeriesKind::Polynomial => "polynomial",
        SeriesKind::Exterior => "exterior",
    }
}

pub fn dispatch(cli: &Cli, max_cap: u64) -> Result<Output> {
    let caps = caps(cli, max_cap)?;
    let name = cli.command.name();
    let out = match &cli.command {
        Command::Shuffle { u, v } | Command::Stuffle { u, v } => {
            let hopf = product_choice(if name == "shuffle" {
                "shuffle"
            } else {
                "stuffle"
            })?;
            let s = hopf.multiply(&sum(u, max_cap)?, &sum(v, max_cap)?);
            Output::new(name, Body::Sum(s))
                .input("u", u.as_str())
                .input("v", v.as_str())
        }
        Command::Coproduct { word } => {
            let product = cli.product.as_deref().unwrap_or("shuffle");
            let t = product_choice(product)?.comultiply(&sum(word, max_cap)?);
            Output::new(name, Body::Tensor(t))
                .input("word", word.as_str())
                .input("product", product)
        }
        Command::Antipode { word } => {
            let product = cli.product.as_deref().unwrap_or("shuffle");
            let s = antipode(&sum(word, max_cap)?, product_choice(product)?);
            Output::new(name, Body::Sum(s))
                .input("word", word.as_str())
                .input("product", product)
        }
        Command::Pair { z, m } => {
            let value = format_rational(&pair(&sum(z, max_cap)?, &sum(m, max_cap)?));
            Output::new(
                name,
                Body::Scalar {
                    label: "value".into(),
                    value: json!(value),
                },
            )
            .input("z", z.as_str())
            .input("m", m.as_str())
        }
        Command::Exp { word } => Output::new(name, Body::Sum(hoffman_exp(&sum(word, max_cap)?)))
            .input("word", word.as_str()),
        Command::Log { word } => Output::new(name, Body::Sum(hoffman_log(&sum(word, max_cap)?)))
            .input("word", word.as_str()),
        Command::SymmEmbed { partition } => {
            let lambda: Partition = partition.parse()?;
            Output::new(name, Body::Sum(symm_to_qsymm(&lambda)))
                .input("partition", partition.as_str())
        }
        Command::BarHomology {
            induced_product,
            kuenneth,
            bigraded,
        } => {
            if let Some(preset) = kuenneth {
                let r = kuenneth_preset_check(preset, cap32(caps.cap))?;
                return Ok(reports(name, vec![r])
                    .input("kuenneth", preset.as_str())
                    .input("cap", caps.cap));
            }
            let source = cli.algebra.as_deref().ok_or_else(|| {
                Error::InvalidArgument("bar-homology needs --algebra or --kuenneth".into())
            })?;
            let a = load_presentation(&algebra_source(source)?, cap32(caps.cap))?;
            let cap = match cli.cap {
                Some(c) => cap32(c),
                None => cap32(caps.cap).min(a.cap()),
            };
            let complex = build_bar_complex(&a, cap)?;
            let base = |o: Output| o.input("algebra", a.name()).input("cap", cap);
            if let Some(uv) = induced_product {
                let s = complex.induced_product(&uv[0].parse()?, &uv[1].parse()?)?;
                base(Output::new(name, Body::Sum(s)))
                    .input("u", uv[0].as_str())
                    .input("v", uv[1].as_str())
            } else {
                let h = complex.homology_dimensions();
                if *bigraded {
                    let rows = h
                        .bigraded
                        .iter()
                        .map(|(&(n, d), &dim)| vec![json!(n), json!(d), json!(dim)])
                        .collect();
                    let columns = ["bar-length", "internal-degree", "dim"]
                        .map(String::from)
                        .to_vec();
                    base(Output::new(
                        name,
                        Body::Table {
                            columns,
                            rows,
                            notes: vec![],
                        },
                    ))
                } else {
                    base(series_table(name, "degree", &h.series))
                }
            }
        }
        Command::LieDims { gens } => {
            let g = GradedGeneratorSet::parse(gens, cap32(caps.cap))?;
            let l = free_lie_dimensions(&g)?.truncate(i64::from(g.cap()))?;
            let rows = l
                .iter()
                .skip(1)
                .map(|(d, n)| vec![json!(d), json!(n)])
                .collect();
            Output::new(
                name,
                Body::Table {
                    columns: vec!["weight".into(), "dim".into()],
                    rows,
                    notes: vec![],
                },
            )
            .input("gens", gens.as_str())
            .input("cap", caps.cap)
        }
        Command::Pbw { gens, perturb } => {
            let g = GradedGeneratorSet::parse(gens, cap32(caps.cap))?;
            let r = match perturb {
                None => pbw_check(&g)?,
                Some(w) => {
                    let mut l = free_lie_dimensions(&g)?.nonnegative_coefficients();
                    let slot = l.get_mut(*w as usize).filter(|_| *w > 0).ok_or_else(|| {
                        Error::InvalidArgument(format!(
                            "perturbed weight must lie in 1..={}",
                            g.cap()
                        ))
                    })?;
                    *slot += 1;
                    pbw_check_with(&g, &DimensionSeries::from_coefficients(l))?
                }
            };
            reports(name, vec![r])
                .input("gens", gens.as_str())
                .input("cap", caps.cap)
        }
        Command::Lyndon { alphabet } => {
            let a = letters(alphabet)?;
            let rows = lyndon_words(&a, caps.weight)
                .iter()
                .map(|w| vec![json!(w.to_string()), json!(w.weight())])
                .collect();
            Output::new(
                name,
                Body::Table {
                    columns: vec!["word".into(), "weight".into()],
                    rows,
                    notes: vec![],
                },
            )
            .input("alphabet", alphabet.as_str())
            .input("max_weight", caps.weight)
        }
        Command::Ext1 { n, gens } => {
            let g = GradedGeneratorSet::parse(gens, cap32(caps.cap))?;
            let d = ext1_dimension(&g, *n)?;
            Output::new(
                name,
                Body::Scalar {
                    label: "dim".into(),
                    value: json!(d),
                },
            )
            .input("gens", gens.as_str())
            .input("n", *n)
        }
        Command::Zeta {
            range: r,
            bernoulli: by_n,
        } => {
            let (a, b) = range(r)?;
            let (columns, rows) = if *by_n {
                let rows = (a..=b)
                    .map(|n| vec![json!(n), json!(format_rational(&bernoulli(n as usize)))])
                    .collect();
                (vec!["n".into(), "B_n".into()], rows)
            } else {
                let mut rows = Vec::new();
                for k in a..=b {
                    let z = zeta_odd_negative(k)?;
                    rows.push(vec![
                        json!(k),
                        json!(format_rational(&bernoulli(2 * k as usize))),
                        json!(format_rational(&z)),
                    ]);
                }
                (vec!["k".into(), "B_2k".into(), "zeta(1-2k)".into()], rows)
            };
            Output::new(
                name,
                Body::Table {
                    columns,
                    rows,
                    notes: vec![],
                },
            )
            .input("range", r.as_str())
        }
        Command::Vsc { range: r } => {
            let (a, b) = range(r)?;
            if a == b && a % 2 == 1 {
                return Err(Error::InvalidArgument(format!(
                    "von Staudt–Clausen needs an even index, got {a}"
                )));
            }
            let mut rows = Vec::new();
            for two_k in (a..=b).filter(|n| n % 2 == 0 && *n > 0) {
                let (d, primes) = von_staudt_clausen(two_k)?;
                let ps: Vec<String> = primes.iter().map(u64::to_string).collect();
                rows.push(vec![json!(two_k), json!(d), json!(ps.join("*"))]);
            }
            let columns = ["2k", "denominator", "primes"].map(String::from).to_vec();
            Output::new(
                name,
                Body::Table {
                    columns,
                    rows,
                    notes: vec![],
                },
            )
            .input("range", r.as_str())
        }
        Command::Imj { range: r } => {
            let (a, b) = range(r)?;
            let rows = (a..=b)
                .map(|k| Ok(vec![json!(k), json!(image_of_j_order(k)?)]))
                .collect::<Result<_>>()?;
            Output::new(
                name,
                Body::Table {
                    columns: vec!["k".into(), "order".into()],
                    rows,
                    notes: vec![],
                },
            )
            .input("range", r.as_str())
        }
        Command::H1c { p, range: r } => {
            let (a, b) = range(r)?;
            let rows = (a..=b)
                .map(|k| Ok(vec![json!(p), json!(k), json!(h1c_order_at_p(*p, k)?)]))
                .collect::<Result<_>>()?;
            let columns = ["p", "k", "order"].map(String::from).to_vec();
            Output::new(
                name,
                Body::Table {
                    columns,
                    rows,
                    notes: vec![],
                },
            )
            .input("p", *p)
            .input("range", r.as_str())
        }
        Command::Preset { name: preset } => {
            let p = ktheory_preset(preset)?;
            let rows_by_label = p.rows(caps.cap as i64)?;
            let mut columns = vec![p.convention().to_string()];
            columns.extend(rows_by_label.iter().map(|(l, _)| l.clone()));
            let first = &rows_by_label[0].1;
            let rows = first
                .iter()
                .map(|(d, _)| {
                    let mut row = vec![json!(d)];
                    row.extend(
                        rows_by_label
                            .iter()
                            .map(|(_, s)| json!(s.get(d).unwrap_or(0))),
                    );
                    row
                })
                .collect();
            Output::new(
                name,
                Body::Table {
                    columns,
                    rows,
                    notes: vec![p.description().to_string()],
                },
            )
            .input("name", preset.as_str())
            .input("cap", caps.cap)
        }
        Command::MzvDims { range: r } => {
            let (a, b) = match r {
                Some(r) => range(r)?,
                None => (0, caps.weight),
            };
            let d = mzv_dimensions(b as usize)?;
            let rows = (a..=b)
                .map(|n| vec![json!(n), json!(d[n as usize])])
                .collect();
            Output::new(
                name,
                Body::Table {
                    columns: vec!["n".into(), "d_n".into()],
                    rows,
                    notes: vec![],
                },
            )
            .input("range", format!("{a}..{b}"))
        }
        Command::MotivicCheck { perturb } => {
            let r = match perturb {
                None => motivic_consistency(caps.cap as usize)?,
                Some(w) => {
                    let w = u64::from(*w);
                    if w > caps.cap {
                        return Err(Error::InvalidArgument(format!(
                            "perturbed weight must lie in 0..={}",
                            caps.cap
                        )));
                    }
                    let kqz = ktheory_preset("KQZ-weights")?.series(caps.cap as i64)?;
                    let corrupted = DimensionSeries::from_fn(caps.cap as usize, |n| {
                        kqz.get(n as i64).unwrap_or(0) + u64::from(n as u64 == w)
                    });
                    motivic_consistency_with(&corrupted, caps.cap as usize)?
                }
            };
            reports(name, vec![r]).input("cap", caps.cap)
        }
        Command::Verify { suite } => {
            let registry = SuiteRegistry::builtin();
            let rs = match (suite.as_str(), cli.product.as_deref()) {
                ("hopf", Some(p)) => vec![verify_bialgebra(product_choice(p)?, caps.cap)],
                ("all", _) => registry
                    .iter()
                    .map(|s| s.run(caps.cap))
                    .collect::<Result<_>>()?,
                (s, _) => vec![registry.get(s)?.run(caps.cap)?],
            };
            reports(name, rs)
                .input("suite", suite.as_str())
                .input("cap", caps.cap)
        }
        Command::Series {
            kind,
            degrees,
            times,
        } => {
            let cap = caps.cap as usize;
            let mut s = series_of(*kind, &letters(degrees)?, cap)?;
            let mut label = format!("{}({degrees})", kind_name(*kind));
            if let Some(t) = times {
                let (k, d) = t
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected KIND:DEGREES, got `{t}`")))?;
                let k = <SeriesKind as clap::ValueEnum>::from_str(k, true)
                    .map_err(|_| Error::unknown("series kind", k))?;
                s = series_pointwise_product(&s, &series_of(k, &letters(d)?, cap)?)?;
                label = format!("{label} * {}({d})", kind_name(k));
            }
            series_table(name, "degree", &s)
                .input("series", label)
                .input("cap", caps.cap)
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{run, EXIT_OK};
    use clap::CommandFactory;
    use std::collections::BTreeSet;

    #[test]
    fn every_operation_is_reachable_from_one_subcommand() {
        let ops: Vec<&str> = COVERAGE.iter().map(|(op, _, _)| *op).collect();
        let unique: BTreeSet<&str> = ops.iter().copied().collect();
        assert_eq!(unique.len(), ops.len(), "an operation is listed twice");
        let subcommands: BTreeSet<String> = Cli::command()
            .get_subcommands()
            .map(|c| c.get_name().to_string())
            .collect();
        for (op, sub, argv) in COVERAGE {
            assert!(subcommands.contains(*sub), "{sub} is not a subcommand");
            assert_eq!(argv[0], *sub, "{op}");
            let out = run(std::iter::once("koszulk").chain(argv.iter().copied()), None);
            assert_eq!(out.code, EXIT_OK, "{op}: {}", out.stderr);
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(range("4").unwrap(), (4, 4));
        assert_eq!(range("1..6").unwrap(), (1, 6));
        assert_eq!(range("1..=6").unwrap(), (1, 6));
        assert!(range("6..1").is_err());
        assert!(range("x").is_err());
    }
}
