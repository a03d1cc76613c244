//! Seeded suites of generic instances compared against the predictor.

use hadamard_core::arith::{is_prime, Field, PrimeFieldElement, Rational, DEFAULT_PRIME, SECONDARY_PRIME};
use hadamard_core::geometry::{sample_generic_instance, GeometryError, SamplingRange, VarietyPresentation};
use hadamard_core::predictor::LemmaTable;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::pipeline::{analyze, singular_json, Analysis, Options};
use crate::report::{Report, Status, Verdict};
use crate::scenario::reduce_mod_p;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteKind {
    /// Ambient at the threshold: product isomorphic to the Segre-Veronese.
    Large,
    /// Small ambient with a singular locus bound.
    Small,
    /// Small ambient rows where the product is smooth.
    Smooth,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 3] = [SuiteKind::Large, SuiteKind::Small, SuiteKind::Smooth];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Large => "large",
            SuiteKind::Small => "small",
            SuiteKind::Smooth => "smooth",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteField {
    /// Two primes, with more drawn when they disagree.
    Modular,
    Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceSpec {
    pub kind: SuiteKind,
    /// `(dimension, degree)` of each factor.
    pub factors: Vec<(usize, u32)>,
    pub n: usize,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn label(&self) -> String {
        let f: Vec<String> = self.factors.iter().map(|(r, d)| format!("({r},{d})")).collect();
        format!("{} {} n={} seed={}", self.kind.name(), f.join(""), self.n, self.seed)
    }
}

fn specs(kind: SuiteKind, rows: &[(&[(usize, u32)], &[usize], &[u64])]) -> Vec<InstanceSpec> {
    let mut out = Vec::new();
    for (factors, ns, seeds) in rows {
        for &n in *ns {
            for &seed in *seeds {
                out.push(InstanceSpec {
                    kind,
                    factors: factors.to_vec(),
                    n,
                    seed,
                });
            }
        }
    }
    out
}

/// The built-in instances of a suite.
pub fn instances(kind: SuiteKind) -> Vec<InstanceSpec> {
    match kind {
        SuiteKind::Large => specs(
            kind,
            &[
                (&[(1, 1), (1, 1)], &[3], &[0, 1, 2]),
                (&[(1, 1), (1, 2)], &[5], &[0, 1]),
                (&[(1, 2), (1, 1)], &[5], &[0, 1]),
                (&[(1, 1), (1, 1), (1, 1)], &[7], &[0, 1]),
                (&[(1, 2), (1, 2)], &[8], &[0]),
            ],
        ),
        SuiteKind::Small => specs(
            kind,
            &[
                (&[(1, 2), (1, 1)], &[3, 4], &[0, 1]),
                (&[(1, 1), (1, 2)], &[3, 4], &[0, 1]),
                (&[(1, 2), (2, 1)], &[5], &[0]),
                (&[(2, 1), (1, 2)], &[5], &[0]),
            ],
        ),
        SuiteKind::Smooth => specs(
            kind,
            &[
                (&[(1, 3), (1, 1)], &[5, 6], &[0]),
                (&[(1, 1), (1, 3)], &[5], &[0]),
                (&[(1, 2), (1, 2)], &[6, 7], &[0]),
            ],
        ),
    }
}

/// Field-independent summary of one analysis, compared across primes.
#[derive(Debug, Clone, PartialEq)]
struct Outcome {
    json: Value,
    verdicts: Vec<Verdict>,
}

fn outcome<F: Field>(a: &Analysis<F>) -> Outcome {
    let hits: Vec<String> = a
        .prediction
        .iter()
        .flat_map(|p| &p.table_hits)
        .filter(|h| h.holds)
        .map(|h| {
            let table = match h.table {
                LemmaTable::SmallRegimeExceedsSum => "small_regime_exceeds_sum",
                LemmaTable::SmallRegimeSmooth => "small_regime_smooth",
                LemmaTable::SingularRange => "singular_range",
            };
            format!("{table}:{}", h.row)
        })
        .collect();
    Outcome {
        json: json!({
            "dimension": a.dimension(),
            "degree": a.degree(),
            "hilbert_function": a.invariants.hilbert_function,
            "factor_hf_products": a.factor_hf_products(),
            "singular_locus": a.singular.as_ref().map(singular_json),
            "regime": a.prediction.as_ref().map(|p| p.regime),
            "table_rows": hits,
            "genericity": { "certified": a.genericity.certified, "reasons": a.genericity.reasons },
            "groebner_basis_certified": a.groebner_certified,
            "sampled_product_points": { "checked": a.samples.checked, "vanishing": a.samples.vanishing },
        }),
        verdicts: a.prediction_verdicts(),
    }
}

/// Comparable part of an outcome: the singular-locus method may legitimately
/// differ between primes.
fn fingerprint(o: &Outcome) -> Value {
    let mut v = o.json.clone();
    if let Some(s) = v.get_mut("singular_locus").and_then(Value::as_object_mut) {
        s.remove("method");
        s.remove("note");
    }
    json!([v, o.verdicts.iter().map(|x| (x.claim, x.status)).collect::<Vec<_>>()])
}

/// Primes tried in order by the modular field mode.
pub fn suite_primes() -> impl Iterator<Item = u32> {
    [DEFAULT_PRIME, SECONDARY_PRIME]
        .into_iter()
        .chain((30_000u32..SECONDARY_PRIME).rev().filter(|&p| is_prime(p as u64)))
}

/// Extra primes drawn before a disagreement is reported as such.
const EXTRA_PRIMES: usize = 3;

pub struct InstanceResult {
    pub spec: InstanceSpec,
    pub json: Value,
    pub verdicts: Vec<Verdict>,
    pub budget_error: bool,
    pub error: bool,
}

fn modular(factors: &[VarietyPresentation<Rational>], n: usize, opts: &Options) -> Result<(Outcome, Value), GeometryError> {
    let mut seen: Vec<(u32, Outcome)> = Vec::new();
    for p in suite_primes().take(2 + EXTRA_PRIMES) {
        let reduced = factors
            .iter()
            .map(|f| reduce_mod_p(f, p))
            .collect::<Result<Vec<VarietyPresentation<PrimeFieldElement>>, _>>();
        let Ok(reduced) = reduced else {
            // a denominator vanishes modulo p; skip the prime
            continue;
        };
        let o = outcome(&analyze(&reduced, n, None, opts)?);
        let agreeing: Vec<u32> = seen.iter().filter(|(_, x)| fingerprint(x) == fingerprint(&o)).map(|(q, _)| *q).collect();
        if let Some(&q) = agreeing.first() {
            let primes: Vec<u32> = seen.iter().map(|(q, _)| *q).chain([p]).collect();
            return Ok((o, json!({ "primes": primes, "agreeing": [q, p] })));
        }
        seen.push((p, o));
    }
    let primes: Vec<u32> = seen.iter().map(|(q, _)| *q).collect();
    let (_, first) = seen.into_iter().next().ok_or_else(|| GeometryError::Invalid("no usable prime".into()))?;
    Ok((first, json!({ "primes": primes, "agreeing": null })))
}

pub fn run_instance(spec: &InstanceSpec, field: SuiteField) -> InstanceResult {
    let opts = Options {
        seed: spec.seed,
        ..Options::default()
    };
    let label = spec.label();
    let mut json = json!({
        "suite": spec.kind,
        "factors": spec.factors,
        "n": spec.n,
        "seed": spec.seed,
        "field": match field { SuiteField::Modular => "modular", SuiteField::Rational => "rational" },
    });
    let run = || -> Result<(Outcome, Value, bool, usize), GeometryError> {
        let inst = sample_generic_instance::<Rational>(&spec.factors, spec.n, spec.seed, SamplingRange::default(), &())?;
        if inst.factors.is_empty() {
            return Err(GeometryError::Degenerate("every draw had a vanishing factor".into()));
        }
        let (o, primes) = match field {
            SuiteField::Modular => modular(&inst.factors, spec.n, &opts)?,
            SuiteField::Rational => (outcome(&analyze(&inst.factors, spec.n, None, &opts)?), Value::Null),
        };
        Ok((o, primes, inst.certified, inst.attempts))
    };
    match run() {
        Ok((o, primes, certified, attempts)) => {
            let agreed = primes.is_null() || !primes["agreeing"].is_null();
            let generic = certified && agreed;
            let why = if !certified {
                "no certified generic draw"
            } else {
                "primes disagree"
            };
            let verdicts = o
                .verdicts
                .into_iter()
                .map(|v| v.unless_generic(generic, why).about(label.clone()))
                .collect();
            if let (Value::Object(dst), Value::Object(src)) = (&mut json, o.json) {
                dst.extend(src);
            }
            json["sampling"] = json!({ "certified": certified, "attempts": attempts });
            json["modular"] = primes;
            InstanceResult {
                spec: spec.clone(),
                json,
                verdicts,
                budget_error: false,
                error: false,
            }
        }
        Err(e) => {
            json["error"] = json!(e.to_string());
            InstanceResult {
                spec: spec.clone(),
                json,
                verdicts: Vec::new(),
                budget_error: e.is_budget(),
                error: true,
            }
        }
    }
}

/// Runs the given suites; results are in instance order whatever the
/// scheduling.
pub fn run_suites(kinds: &[SuiteKind], field: SuiteField) -> Report {
    let all: Vec<InstanceSpec> = kinds.iter().flat_map(|&k| instances(k)).collect();
    let results: Vec<InstanceResult> = all.par_iter().map(|s| run_instance(s, field)).collect();
    let mut report = Report::new(&format!(
        "suite {}",
        kinds.iter().map(|k| k.name()).collect::<Vec<_>>().join(",")
    ));
    let count = |s: Status, r: &[InstanceResult]| r.iter().flat_map(|x| &x.verdicts).filter(|v| v.status == s).count();
    let certified = results.iter().filter(|r| r.json["sampling"]["certified"] == json!(true)).count();
    report.computed.insert(
        "summary".into(),
        json!({
            "instances": results.len(),
            "certified": certified,
            "errors": results.iter().filter(|r| r.error).count(),
            "budget_errors": results.iter().filter(|r| r.budget_error).count(),
            "verdicts": results.iter().map(|r| r.verdicts.len()).sum::<usize>(),
            "match": count(Status::Match, &results),
            "mismatch": count(Status::Mismatch, &results),
            "not_applicable": count(Status::NotApplicable, &results),
        }),
    );
    report.computed.insert(
        "instances".into(),
        Value::Array(results.iter().map(|r| r.json.clone()).collect()),
    );
    for r in results {
        report.verdicts.extend(r.verdicts);
    }
    report
}
