//! `ggc`: command-line access to the unigg computations.
//!
//! Output is JSON with sorted keys by default, or aligned `key  value` text.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use unigg::ggvalues::{gg_value_closed, gg_value_via_green, ClassType, Group};
use unigg::poly::rat;
use unigg::symfunc::{
    green_polynomial, kostka_foulkes, kostka_number, lr_coefficient, plethysm_pk, Basis, SymFunc,
};
use unigg::tableaux::{count_domino, count_symplectic, enumerate_domino, enumerate_symplectic};
use unigg::unitary::{
    battery_count, bigmult_construction, dgg_decompose, induced_coeffs, multiplicity_one_r,
    multiplicity_one_witness, ohmori_construction, InducedInput, MultiPartition,
};
use unigg::{Error, LaurentPolyQ, Partition};

mod selfcheck;

#[derive(Parser)]
#[command(
    name = "ggc",
    version,
    about = "Gelfand-Graev characters of finite unitary groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Also run an independent check on the given input.
    #[arg(long, global = true)]
    selfcheck: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Gl,
    U,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableauKind {
    Symplectic,
    Domino,
}

#[derive(Subcommand)]
enum Command {
    /// 2-core of a partition.
    Core {
        #[arg(long)]
        partition: Partition,
    },
    /// 2-core and 2-quotient of a partition.
    Quotient {
        #[arg(long)]
        partition: Partition,
    },
    /// Kostka-Foulkes polynomial K_{λμ}(t).
    Kostka {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Green polynomial Q_ν^μ(q).
    Green {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        lambda: Partition,
    },
    /// Schur expansion of s_λ[p_k].
    Plethysm {
        #[arg(long)]
        partition: Partition,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Compare both sides of a Pieri-type identity.
    PieriCheck {
        #[arg(long, value_enum)]
        kind: TableauKind,
        #[arg(long, default_value_t = 0)]
        m0: usize,
        #[arg(long, value_delimiter = ',')]
        weight: Vec<usize>,
    },
    /// Gelfand-Graev character value at a class.
    GgValue {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        /// Unipotent class type; omit for a non-unipotent class.
        #[arg(long)]
        class: Option<Partition>,
    },
    /// Number of battery tableaux of shape λ and type (k, ν).
    BatteryCount {
        #[arg(long)]
        mp: MultiPartition,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "")]
        nu: Partition,
    },
    /// Nonzero multiplicities in a degenerate Gelfand-Graev character.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "")]
        nu: Partition,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        profile: Vec<usize>,
    },
    /// Signed multiplicities of an induced character.
    Induce {
        /// `size:partition` for an orbit fixed by the involution.
        #[arg(long)]
        fixed: Vec<String>,
        /// `size:alpha:beta` for a pair of swapped orbits.
        #[arg(long)]
        paired: Vec<String>,
    },
    /// A degenerate Gelfand-Graev character containing χ^λ exactly once.
    MultOne {
        #[arg(long)]
        mp: MultiPartition,
    },
    /// The (k, ν) read off the combined unipotent part.
    Ohmori {
        #[arg(long)]
        mp: MultiPartition,
    },
    /// Print every tableau of shape λ/(m0) and the given weight.
    Render {
        #[arg(long, value_enum)]
        kind: TableauKind,
        #[arg(long)]
        partition: Partition,
        #[arg(long, default_value_t = 0)]
        m0: usize,
        #[arg(long, value_delimiter = ',')]
        weight: Vec<usize>,
    },
}

/// Outcome of a command: a JSON object and an optional self-check verdict.
struct Report {
    body: Map<String, Value>,
    check: Option<bool>,
}

fn max_size() -> usize {
    std::env::var("GGC_MAX_SIZE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(24)
}

fn cap(size: usize) -> Result<(), Error> {
    let limit = max_size();
    if size > limit {
        return Err(Error::InvalidInput(format!(
            "size {size} exceeds the limit {limit} (set GGC_MAX_SIZE to raise it)"
        )));
    }
    Ok(())
}

fn boxes(mp: &MultiPartition) -> usize {
    mp.entries().iter().map(|(_, p)| p.size()).sum()
}

fn poly(p: &LaurentPolyQ, var: &str) -> Value {
    Value::String(p.to_string_in(var))
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("reports are objects"),
    }
}

fn schur_terms(f: &SymFunc) -> Value {
    let mut m = Map::new();
    for (lam, c) in f.terms() {
        let v = c.as_int().map_or_else(|| poly(c, "t"), |c| json!(c));
        m.insert(lam.to_string(), v);
    }
    Value::Object(m)
}

fn group(g: GroupArg) -> Group {
    match g {
        GroupArg::Gl => Group::GL,
        GroupArg::U => Group::U,
    }
}

fn witness(lambda: &MultiPartition, found: Option<(usize, Partition)>, selfcheck: bool) -> Report {
    match found {
        None => Report {
            body: object(json!({ "witness": null })),
            check: selfcheck.then_some(true),
        },
        Some((k, nu)) => {
            let count = battery_count(lambda, k, &nu);
            let check = selfcheck.then(|| count == 1 && selfcheck::battery(lambda, k, &nu) == 1);
            Report {
                body: object(json!({ "k": k, "nu": nu.to_string(), "count": count })),
                check,
            }
        }
    }
}

fn parse_induced(fixed: &[String], paired: &[String]) -> Result<Vec<InducedInput>, Error> {
    let bad = |s: &str| Error::InvalidInput(format!("cannot parse induction factor {s:?}"));
    let mut out = Vec::new();
    for s in fixed {
        let (d, l) = s.split_once(':').ok_or_else(|| bad(s))?;
        out.push(InducedInput::Fixed {
            size: d.parse().map_err(|_| bad(s))?,
            lambda: l.parse()?,
        });
    }
    for s in paired {
        let mut it = s.splitn(3, ':');
        let (Some(d), Some(a), Some(b)) = (it.next(), it.next(), it.next()) else {
            return Err(bad(s));
        };
        out.push(InducedInput::Paired {
            size: d.parse().map_err(|_| bad(s))?,
            alpha: a.parse()?,
            beta: b.parse()?,
        });
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let sc = cli.selfcheck;
    let report = match &cli.command {
        Command::Core { partition } => {
            cap(partition.size())?;
            let core = partition.two_core();
            let check = sc.then(|| selfcheck::core(partition) == core);
            Report {
                body: object(json!({ "core": core.to_string() })),
                check,
            }
        }
        Command::Quotient { partition } => {
            cap(partition.size())?;
            let (core, (q0, q1)) = partition.two_core_quotient();
            let check = sc.then(|| {
                Partition::from_two_core_quotient(&core, &q0, &q1)
                    .ok()
                    .as_ref()
                    == Some(partition)
                    && selfcheck::core(partition) == core
            });
            Report {
                body: object(json!({
                    "core": core.to_string(),
                    "quotient": [q0.to_string(), q1.to_string()],
                })),
                check,
            }
        }
        Command::Kostka { lambda, mu } => {
            cap(lambda.size())?;
            let k = kostka_foulkes(lambda, mu)?;
            let check =
                sc.then(|| k.eval(&rat(1)) == rat(kostka_number(lambda, mu.parts()) as i64));
            Report {
                body: object(json!({ "value": poly(&k, "t") })),
                check,
            }
        }
        Command::Green { nu, mu } => {
            cap(nu.size())?;
            let q = green_polynomial(nu, mu)?;
            let check = sc.then(|| {
                let m = SymFunc::power(nu.clone())
                    .to_basis(Basis::Monomial)
                    .coeff(mu);
                LaurentPolyQ::constant(q.eval(&rat(1))) == m
            });
            Report {
                body: object(json!({ "value": poly(&q, "q") })),
                check,
            }
        }
        Command::Lr { mu, nu, lambda } => {
            cap(lambda.size())?;
            let c = lr_coefficient(mu, nu, lambda);
            let check = sc.then(|| {
                let prod = SymFunc::schur(mu.clone())
                    .to_basis(Basis::Power)
                    .mul(&SymFunc::schur(nu.clone()).to_basis(Basis::Power))
                    .to_basis(Basis::Schur);
                prod.coeff(lambda) == LaurentPolyQ::int(c as i64)
            });
            Report {
                body: object(json!({ "value": c })),
                check,
            }
        }
        Command::Plethysm { partition, k } => {
            cap(partition.size() * k)?;
            let f = plethysm_pk(partition, *k)?;
            let check = sc.then(|| selfcheck::plethysm(partition, *k, &f));
            Report {
                body: object(json!({ "terms": schur_terms(&f) })),
                check,
            }
        }
        Command::PieriCheck { kind, m0, weight } => {
            let (product, tableaux) =
                selfcheck::pieri(*kind == TableauKind::Domino, *m0, weight, cap)?;
            let agrees = product == tableaux;
            Report {
                body: object(json!({
                    "agrees": agrees,
                    "product": schur_terms(&product),
                    "tableaux": schur_terms(&tableaux),
                })),
                check: sc.then_some(agrees),
            }
        }
        Command::GgValue { group: g, n, class } => {
            cap(*n)?;
            let class = match class {
                Some(mu) => ClassType::Unipotent(mu.clone()),
                None => ClassType::NonUnipotent,
            };
            let v = gg_value_closed(*n, &class, group(*g))?;
            let check = match (&class, sc) {
                (ClassType::Unipotent(mu), true) => {
                    Some(gg_value_via_green(*n, mu, group(*g))? == v)
                }
                (ClassType::NonUnipotent, true) => Some(true),
                _ => None,
            };
            Report {
                body: object(json!({ "value": poly(&v, "q") })),
                check,
            }
        }
        Command::BatteryCount { mp, k, nu } => {
            cap(boxes(mp))?;
            let count = battery_count(mp, *k, nu);
            let check = sc.then(|| selfcheck::battery(mp, *k, nu) == count);
            Report {
                body: object(json!({ "count": count })),
                check,
            }
        }
        Command::Decompose { n, k, nu, profile } => {
            cap(*n)?;
            let table = dgg_decompose(*n, *k, nu, profile)?;
            let check = sc.then(|| {
                table
                    .iter()
                    .all(|(l, c)| selfcheck::battery(l, *k, nu) == *c)
            });
            let mut m = Map::new();
            for (l, c) in &table {
                m.insert(l.to_string(), json!(c));
            }
            Report {
                body: object(json!({ "multiplicities": m })),
                check,
            }
        }
        Command::Induce { fixed, paired } => {
            let inputs = parse_induced(fixed, paired)?;
            let total: usize = inputs
                .iter()
                .map(|i| match i {
                    InducedInput::Fixed { lambda, .. } => 2 * lambda.size(),
                    InducedInput::Paired { alpha, beta, .. } => alpha.size() + beta.size(),
                })
                .sum();
            cap(total)?;
            let coeffs = induced_coeffs(&inputs)?;
            let check = sc.then(|| coeffs.values().all(|&c| c > 0));
            let mut m = Map::new();
            for (g, c) in &coeffs {
                m.insert(g.to_string(), json!(c));
            }
            Report {
                body: object(json!({ "coefficients": m })),
                check,
            }
        }
        Command::MultOne { mp } => {
            cap(boxes(mp))?;
            let mut r = witness(mp, multiplicity_one_witness(mp), sc);
            if r.body.contains_key("k") {
                r.body.insert("r".into(), json!(multiplicity_one_r(mp)));
            }
            if let Ok((k, nu, predicted)) = bigmult_construction(mp) {
                r.body.insert(
                    "product_formula".into(),
                    json!({ "k": k, "nu": nu.to_string(), "predicted": predicted }),
                );
            }
            r
        }
        Command::Ohmori { mp } => {
            cap(boxes(mp))?;
            witness(mp, ohmori_construction(mp), sc)
        }
        Command::Render {
            kind,
            partition,
            m0,
            weight,
        } => {
            cap(partition.size())?;
            if *m0 > partition.part(0) {
                return Err(Error::InvalidInput(format!(
                    "m0 = {m0} exceeds the first part of {partition}"
                )));
            }
            let (rendered, count): (Vec<String>, u64) = match kind {
                TableauKind::Symplectic => (
                    enumerate_symplectic(partition, *m0, weight)
                        .iter()
                        .map(|t| t.render())
                        .collect(),
                    count_symplectic(partition, *m0, weight),
                ),
                TableauKind::Domino => (
                    enumerate_domino(partition, *m0, weight)
                        .iter()
                        .map(|t| t.render())
                        .collect(),
                    count_domino(partition, *m0, weight),
                ),
            };
            let check = sc.then_some(rendered.len() as u64 == count);
            Report {
                body: object(json!({ "count": rendered.len(), "tableaux": rendered })),
                check,
            }
        }
    };
    Ok(report)
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn print(report: &Report, format: Format) {
    let mut body = report.body.clone();
    if let Some(ok) = report.check {
        body.insert("selfcheck".into(), json!(if ok { "pass" } else { "fail" }));
    }
    match format {
        Format::Json => println!("{}", Value::Object(body)),
        Format::Text => {
            let width = body.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, v) in &body {
                match v {
                    Value::Array(items) if k == "tableaux" => {
                        println!("{k}:");
                        for item in items {
                            println!("{}", text(item));
                        }
                    }
                    _ => println!("{k:width$}  {}", text(v)),
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            print(&report, cli.format);
            if report.check == Some(false) {
                eprintln!("ggc: self-check failed");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("ggc: {e}");
            ExitCode::from(2)
        }
    }
}
