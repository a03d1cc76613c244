//! Command-line front end: scenario files, commands, reports and the
//! comparison harness.

pub mod checks;
pub mod claims;
pub mod examples;
pub mod pipeline;
pub mod report;
pub mod scenario;
pub mod suite;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hadamard_core::arith::{Field, Modulus, PrimeFieldElement, Rational, DEFAULT_PRIME};
use hadamard_core::geometry::{hadamard_product, sample_generic_instance, singular_locus, GeometryError, SamplingRange};
use hadamard_core::groebner::GroebnerError;
use hadamard_core::invariants::variety_invariants;
use hadamard_core::predictor::{predict, FactorSignature, PredictorError, ThresholdMode};
use serde_json::json;
use thiserror::Error;

use pipeline::{analyze, invariants_json, singular_json, Options};
use report::{Report, Verdict};
use scenario::{parse_scenario, FactorKind, FactorSpec, FieldMode, Scenario, ScenarioError};
use suite::{SuiteField, SuiteKind};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        if e.is_budget() {
            CliError::Budget(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        GeometryError::from(e).into()
    }
}

impl From<ScenarioError> for CliError {
    fn from(e: ScenarioError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<PredictorError> for CliError {
    fn from(e: PredictorError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "hprod", version, about = "Hadamard products of projective varieties")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub report: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the product of a scenario's factors and compare it with the
    /// closed-form predictions.
    Hadamard {
        #[arg(long)]
        scenario: PathBuf,
        /// Skip the singular locus.
        #[arg(long)]
        no_singular: bool,
        /// Expected dimension of the product; a mismatch exits with 1.
        #[arg(long)]
        expect_dim: Option<i64>,
        /// Expected degree of the product; a mismatch exits with 1.
        #[arg(long)]
        expect_deg: Option<u64>,
        /// Expected smoothness of the product; a mismatch exits with 1.
        #[arg(long)]
        expect_smooth: Option<bool>,
    },
    /// Implicit equations of every factor.
    Implicitize {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Invariants of the factors and their product, without the singular
    /// locus.
    Invariants {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Singular locus of the product, or of one factor.
    Singular {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        factor: Option<String>,
    },
    /// Closed-form predictions for factor signatures.
    Predict {
        /// Comma-separated `r:d` or `r:d:h` signatures.
        #[arg(long)]
        factors: String,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "parametric")]
        mode: Mode,
    },
    /// Run a built-in example and compare it with its stated values.
    VerifyExample {
        /// One of 4.1, 4.2, 4.3, 4.4.
        id: String,
        /// Dimension of the linear factor in example 4.4.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// `rational` or `prime[:p]`, for example 4.4.
        #[arg(long)]
        field: Option<String>,
    },
    /// Seeded generic suites.
    Suite {
        #[arg(value_enum, default_value = "all")]
        which: Vec<SuiteChoice>,
        #[arg(long, value_enum, default_value = "modular")]
        field: SuiteFieldChoice,
    },
    /// Draw a certified generic instance and print it as a scenario.
    SampleGeneric {
        /// Comma-separated `r:d` factor types.
        #[arg(long)]
        factors: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `rational` or `prime[:p]`.
        #[arg(long, default_value = "rational")]
        field: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Span,
    Parametric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteChoice {
    Large,
    Small,
    Smooth,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteFieldChoice {
    Modular,
    Rational,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("hprod")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandOutput { code, stdout: text, stderr: String::new() }
            } else {
                CommandOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((report, raw)) => {
            let code = exit_code(&report);
            let text = match (raw, cli.report) {
                (Some(raw), Format::Text) => raw,
                (_, Format::Json) => report.to_json(),
                (None, Format::Text) => report.to_text(),
            };
            match &cli.out {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => CommandOutput { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => CommandOutput {
                        code: 2,
                        stdout: String::new(),
                        stderr: format!("cannot write {}: {e}\n", path.display()),
                    },
                },
                None => CommandOutput { code, stdout: text, stderr: String::new() },
            }
        }
        Err(e) => CommandOutput {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// 1 on any mismatching verdict, 3 when a suite instance ran out of budget.
pub fn exit_code(report: &Report) -> i32 {
    if report.mismatches() > 0 {
        1
    } else if report.computed.get("summary").and_then(|s| s["budget_errors"].as_u64()).unwrap_or(0) > 0 {
        3
    } else {
        0
    }
}

fn read_scenario(path: &PathBuf) -> Result<Scenario, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_scenario(&text)?)
}

fn parse_field(s: &str) -> Result<FieldMode, CliError> {
    match s {
        "rational" => Ok(FieldMode::Rational),
        "prime" => Ok(FieldMode::Prime(DEFAULT_PRIME)),
        other => {
            let p = other
                .strip_prefix("prime:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| CliError::Input(format!("unknown field `{other}`; expected rational or prime[:p]")))?;
            let m = Modulus::new(p).map_err(|e| CliError::Input(e.to_string()))?;
            Ok(FieldMode::Prime(m.value()))
        }
    }
}

fn parse_signatures(s: &str) -> Result<Vec<FactorSignature>, CliError> {
    s.split(',')
        .map(|part| {
            let nums = part
                .split(':')
                .map(|x| x.trim().parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::Input(format!("bad signature `{part}`")))?;
            match nums.as_slice() {
                [r, d] => Ok(FactorSignature::new(*r, *d)?),
                [r, d, h] => Ok(FactorSignature::with_span(*r, *d, *h)?),
                _ => Err(CliError::Input(format!("bad signature `{part}`; expected r:d or r:d:h"))),
            }
        })
        .collect()
}

fn parse_types(s: &str) -> Result<Vec<(usize, u32)>, CliError> {
    parse_signatures(s)?
        .into_iter()
        .map(|sig| {
            if sig.h != sig.monomial_count()? - 1 {
                return Err(CliError::Input("factor types take no span dimension".into()));
            }
            Ok((sig.r as usize, sig.d as u32))
        })
        .collect()
}

type Executed = (Report, Option<String>);

fn execute(cli: &Cli) -> Result<Executed, CliError> {
    match &cli.command {
        Command::Predict { factors, n, mode } => {
            let sigs = parse_signatures(factors)?;
            let mode = match mode {
                Mode::Span => ThresholdMode::Span,
                Mode::Parametric => ThresholdMode::Parametric,
            };
            let p = predict(&sigs, *n, mode)?;
            let mut r = Report::new("predict");
            if let serde_json::Value::Object(map) = serde_json::to_value(&p).expect("predictions serialize") {
                r.predicted.extend(map);
            }
            Ok((r, None))
        }
        Command::VerifyExample { id, k, field } => {
            let field = field.as_deref().map(parse_field).transpose()?;
            Ok((examples::verify_example(id, *k, field)?, None))
        }
        Command::Suite { which, field } => {
            let kinds: Vec<SuiteKind> = if which.contains(&SuiteChoice::All) {
                SuiteKind::ALL.to_vec()
            } else {
                let mut k: Vec<SuiteKind> = Vec::new();
                for w in which {
                    let kind = match w {
                        SuiteChoice::Large => SuiteKind::Large,
                        SuiteChoice::Small => SuiteKind::Small,
                        SuiteChoice::Smooth => SuiteKind::Smooth,
                        SuiteChoice::All => unreachable!(),
                    };
                    if !k.contains(&kind) {
                        k.push(kind);
                    }
                }
                k
            };
            let field = match field {
                SuiteFieldChoice::Modular => SuiteField::Modular,
                SuiteFieldChoice::Rational => SuiteField::Rational,
            };
            Ok((suite::run_suites(&kinds, field), None))
        }
        Command::SampleGeneric { factors, n, seed, field } => sample_generic(&parse_types(factors)?, *n, *seed, parse_field(field)?),
        Command::Hadamard { scenario, .. }
        | Command::Implicitize { scenario }
        | Command::Invariants { scenario }
        | Command::Singular { scenario, .. } => {
            let s = read_scenario(scenario)?;
            let r = match s.field {
                FieldMode::Rational => scenario_command::<Rational>(&cli.command, &s, &())?,
                FieldMode::Prime(p) => {
                    let m = Modulus::new(p as u64).map_err(|e| CliError::Input(e.to_string()))?;
                    scenario_command::<PrimeFieldElement>(&cli.command, &s, &m)?
                }
            };
            Ok((r, None))
        }
    }
}

fn scenario_command<F: Field>(cmd: &Command, s: &Scenario, ctx: &F::Ctx) -> Result<Report, CliError> {
    let factors = s.build::<F>(ctx)?;
    let opts = Options {
        truncate: s.truncate,
        seed: s.seed,
        budget: s.budget,
        ..Options::default()
    };
    match cmd {
        Command::Hadamard {
            no_singular,
            expect_dim,
            expect_deg,
            expect_smooth,
            ..
        } => {
            let opts = Options {
                singular: !no_singular,
                ..opts
            };
            let a = analyze(&factors, s.ambient, None, &opts)?;
            let mut r = Report::new("hadamard");
            a.fill(&mut r);
            if let Some(d) = expect_dim {
                r.verdicts.push(Verdict::compare("stated_dimension", *d, a.dimension()).note("from --expect-dim"));
            }
            if let Some(d) = expect_deg {
                r.verdicts.push(Verdict::compare("stated_degree", *d, a.degree()).note("from --expect-deg"));
            }
            if let Some(b) = expect_smooth {
                let smooth = a.singular.as_ref().map(|x| x.smooth);
                r.verdicts.push(Verdict::compare("stated_smooth", *b, smooth).note("from --expect-smooth"));
            }
            Ok(r)
        }
        Command::Invariants { .. } => {
            let opts = Options { singular: false, ..opts };
            let a = analyze(&factors, s.ambient, None, &opts)?;
            let mut r = Report::new("invariants");
            a.fill(&mut r);
            Ok(r)
        }
        Command::Implicitize { .. } => {
            let mut r = Report::new("implicitize");
            let mut out = Vec::new();
            for f in &factors {
                let ideal = f.implicit_ideal()?;
                let gb = ideal.groebner_basis()?;
                let inv = variety_invariants(&ideal, s.truncate)?;
                out.push(json!({
                    "name": f.name(),
                    "generators": ideal.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "groebner_basis": gb.polys().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "invariants": invariants_json(&inv),
                }));
            }
            r.computed.insert("factors".into(), json!(out));
            Ok(r)
        }
        Command::Singular { factor, .. } => {
            let (name, ideal) = match factor {
                Some(name) => {
                    let f = factors
                        .iter()
                        .find(|f| f.name() == name)
                        .ok_or_else(|| CliError::Input(format!("no factor named {name}")))?;
                    (name.clone(), f.implicit_ideal()?)
                }
                None if factors.len() == 1 => (factors[0].name().to_string(), factors[0].implicit_ideal()?),
                None => {
                    let names: Vec<&str> = factors.iter().map(|f| f.name()).collect();
                    (names.join("*"), hadamard_product(&factors, s.ambient, s.budget)?.ideal)
                }
            };
            let inv = variety_invariants(&ideal, s.truncate)?;
            let sing = singular_locus(&ideal, inv.dimension, s.truncate, s.seed)?;
            let mut r = Report::new("singular");
            r.computed.insert("variety".into(), json!({ "name": name, "invariants": invariants_json(&inv) }));
            r.computed.insert("singular_locus".into(), singular_json(&sing));
            Ok(r)
        }
        _ => unreachable!("not a scenario command"),
    }
}

fn sample_generic(types: &[(usize, u32)], n: usize, seed: u64, field: FieldMode) -> Result<Executed, CliError> {
    let inst = sample_generic_instance::<Rational>(types, n, seed, SamplingRange::default(), &())?;
    let factors = inst
        .factors
        .iter()
        .map(|f| {
            let p = f.parametrization().expect("sampled factors are parametric");
            FactorSpec {
                name: f.name().to_string(),
                kind: FactorKind::Parametric {
                    vars: p.params().vars().to_vec(),
                    degree: p.degree(),
                    coords: p.forms().iter().map(|g| g.to_string()).collect(),
                },
                line: 0,
            }
        })
        .collect();
    let scenario = Scenario {
        ambient: n,
        field,
        factors,
        truncate: hadamard_core::invariants::DEFAULT_TRUNCATION,
        seed,
        budget: Default::default(),
    };
    let types_text: Vec<String> = types.iter().map(|(r, d)| format!("{r}:{d}")).collect();
    let text = format!(
        "# generic instance of type {} in P^{n}, seed {seed}: certified {}, attempts {}\n{}",
        types_text.join(","),
        inst.certified,
        inst.attempts,
        scenario.to_text()
    );
    let mut r = Report::new("sample-generic");
    r.computed.insert("scenario".into(), json!(scenario.to_text()));
    r.certificates.insert(
        "sampling".into(),
        json!({
            "certified": inst.certified,
            "attempts": inst.attempts,
            "product_rank": inst.product_rank,
            "max_product_rank": inst.max_product_rank,
        }),
    );
    Ok((r, Some(text)))
}
