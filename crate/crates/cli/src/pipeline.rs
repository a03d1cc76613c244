//! The compute-and-compare pipeline behind `hadamard`, the examples and the
//! suites.

use hadamard_core::arith::Field;
use hadamard_core::geometry::{
    hadamard_product, ideal_vanishes_at, product_coefficient_matrix, singular_locus, GeometryError,
    Parametrization, ProjectivePoint, SingularMethod, SingularReport, VarietyPresentation,
};
use hadamard_core::groebner::{Budget, Ideal};
use hadamard_core::invariants::{hf_product_check, variety_invariants, InvariantReport};
use hadamard_core::linalg::Matrix;
use hadamard_core::poly::{Monomial, Polynomial, Term};
use hadamard_core::predictor::{predict, FactorSignature, HfRelation, Prediction, Regime, Smoothness, ThresholdMode};
use serde_json::{json, Map, Value};

use crate::checks::{groebner_certificate, vanishes_on_product_samples, SampleCheck};
use crate::report::{Report, Verdict};

/// Largest Segre-Veronese ambient for which the center is intersected with
/// its ideal.
const MAX_CENTER_AMBIENT: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub truncate: usize,
    pub seed: u64,
    pub budget: Budget,
    pub singular: bool,
    /// Product points the product ideal is evaluated at.
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            truncate: hadamard_core::invariants::DEFAULT_TRUNCATION,
            seed: 0,
            budget: Budget::default(),
            singular: true,
            samples: 20,
        }
    }
}

pub fn field_string<F: Field>(x: &F) -> String {
    let (neg, mag) = x.signed_repr();
    if neg {
        format!("-{mag}")
    } else {
        mag
    }
}

pub fn invariants_json(inv: &InvariantReport) -> Value {
    json!({
        "ambient": inv.ambient,
        "dimension": inv.dimension,
        "degree": inv.degree,
        "hilbert_function": inv.hilbert_function,
        "hilbert_numerator": inv.hilbert_numerator,
    })
}

/// Integer `d` with `d^r = degree`, if there is one.
fn integer_root(degree: u64, r: u64) -> Option<u64> {
    let r = u32::try_from(r).ok()?;
    (1..=degree).find(|d| d.checked_pow(r) == Some(degree))
}

#[derive(Debug, Clone)]
pub struct FactorInfo {
    pub name: String,
    pub parametric: bool,
    pub invariants: InvariantReport,
    /// Projective dimension of the linear span.
    pub span_dim: i64,
    pub signature: Option<FactorSignature>,
}

impl FactorInfo {
    pub fn of<F: Field>(v: &VarietyPresentation<F>, truncate: usize) -> Result<Self, GeometryError> {
        let invariants = variety_invariants(&v.implicit_ideal()?, truncate.max(1))?;
        let span_dim = invariants.hf(1).map_or(-1, |h| h as i64 - 1);
        let signature = match v.parametrization() {
            Some(p) => FactorSignature::with_span(p.source_dim() as u64, p.degree() as u64, p.span_dim() as u64).ok(),
            None if invariants.dimension > 0 && span_dim >= 0 => invariants
                .degree
                .and_then(|deg| integer_root(deg, invariants.dimension as u64))
                .and_then(|d| FactorSignature::with_span(invariants.dimension as u64, d, span_dim as u64).ok()),
            None => None,
        };
        Ok(FactorInfo {
            name: v.name().to_string(),
            parametric: v.parametrization().is_some(),
            invariants,
            span_dim,
            signature,
        })
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "presentation": if self.parametric { "parametric" } else { "implicit" },
            "invariants": invariants_json(&self.invariants),
            "span_dim": self.span_dim,
            "signature": self.signature,
        })
    }
}

/// The product coefficient matrix and the center of the projection it
/// defines.
#[derive(Debug, Clone)]
pub struct CoefficientInfo<F: Field> {
    pub matrix: Matrix<F>,
    pub rank: usize,
    pub max_rank: usize,
    pub determinant: Option<F>,
    /// Projective dimension of the kernel, `-1` when it is zero.
    pub center_dim: i64,
    pub center_point: Option<ProjectivePoint<F>>,
    /// Whether the center meets the Segre-Veronese variety; `None` when the
    /// center was too large to test.
    pub center_meets_segre_veronese: Option<bool>,
    pub segre_veronese_ideal: Option<Ideal<F>>,
}

impl<F: Field> CoefficientInfo<F> {
    pub fn of(params: &[&Parametrization<F>], truncate: usize) -> Result<Self, GeometryError> {
        let (matrix, sv) = product_coefficient_matrix(params)?;
        let rank = matrix.rank();
        let max_rank = matrix.rows().min(matrix.cols());
        let determinant = if matrix.rows() == matrix.cols() {
            Some(matrix.determinant()?)
        } else {
            None
        };
        let kernel = matrix.kernel_basis();
        let center_dim = kernel.len() as i64 - 1;
        let center_point = match kernel.as_slice() {
            [v] => Some(ProjectivePoint::new(v.clone())?.normalized()),
            _ => None,
        };
        let (center_meets_segre_veronese, segre_veronese_ideal) = if kernel.is_empty() {
            (Some(false), None)
        } else if sv.ambient() <= MAX_CENTER_AMBIENT {
            let s = sv.implicit_ideal()?;
            let x = s.ring().clone();
            let forms: Vec<Polynomial<F>> = (0..matrix.rows())
                .map(|i| {
                    let terms = matrix
                        .row(i)
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| Term {
                            coeff: c.clone(),
                            mono: Monomial::var(x.nvars(), j, 1),
                        })
                        .collect();
                    Polynomial::from_terms(&x, terms)
                })
                .filter(|f| !f.is_zero())
                .collect();
            let meet = s.sum(&Ideal::new(&x, forms)?)?;
            let inv = variety_invariants(&meet, truncate)?;
            (Some(!inv.is_empty()), Some(s))
        } else {
            (None, None)
        };
        Ok(CoefficientInfo {
            matrix,
            rank,
            max_rank,
            determinant,
            center_dim,
            center_point,
            center_meets_segre_veronese,
            segre_veronese_ideal,
        })
    }

    /// Whether a point lies on the Segre-Veronese variety, when its ideal was
    /// computed.
    pub fn on_segre_veronese(&self, p: &ProjectivePoint<F>) -> Option<bool> {
        self.segre_veronese_ideal.as_ref().map(|s| ideal_vanishes_at(s, p))
    }

    fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = self.matrix.to_rows().iter().map(|r| r.iter().map(field_string).collect()).collect();
        json!({
            "rows": self.matrix.rows(),
            "cols": self.matrix.cols(),
            "matrix": rows,
            "rank": self.rank,
            "max_rank": self.max_rank,
            "determinant": self.determinant.as_ref().map(field_string),
            "center_dim": self.center_dim,
            "center_point": self.center_point.as_ref().map(|p| p.to_string()),
            "center_meets_segre_veronese": self.center_meets_segre_veronese,
        })
    }
}

/// Why the hypotheses of the generic statements are or are not certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Genericity {
    pub certified: bool,
    pub reasons: Vec<String>,
}

impl Genericity {
    fn reason(&self) -> String {
        if self.reasons.is_empty() {
            "certified".into()
        } else {
            self.reasons.join("; ")
        }
    }
}

/// Everything computed for one Hadamard product.
#[derive(Debug, Clone)]
pub struct Analysis<F: Field> {
    pub n: usize,
    pub factors: Vec<FactorInfo>,
    pub product: Ideal<F>,
    pub invariants: InvariantReport,
    /// `HF(t) = prod HF_i(t)` for `t = 0..=T`.
    pub hf_check: Vec<bool>,
    pub groebner_certified: bool,
    pub samples: SampleCheck,
    pub singular: Option<SingularReport<F>>,
    pub coefficients: Option<CoefficientInfo<F>>,
    pub prediction: Option<Prediction>,
    pub prediction_error: Option<String>,
    pub genericity: Genericity,
}

/// Runs the pipeline. `spans`, when given, are linear parametrizations used
/// for the coefficient matrix in place of the factors' own.
pub fn analyze<F: Field>(
    factors: &[VarietyPresentation<F>],
    n: usize,
    spans: Option<&[Parametrization<F>]>,
    opts: &Options,
) -> Result<Analysis<F>, GeometryError> {
    let infos = factors
        .iter()
        .map(|f| FactorInfo::of(f, opts.truncate))
        .collect::<Result<Vec<_>, _>>()?;
    let product = hadamard_product(factors, n, opts.budget)?.ideal;
    let gb = product.groebner_basis()?;
    let groebner_certified = groebner_certificate(&gb);
    let invariants = variety_invariants(&product, opts.truncate)?;
    let factor_invs: Vec<InvariantReport> = infos.iter().map(|f| f.invariants.clone()).collect();
    let hf_check = hf_product_check(&factor_invs, &invariants, opts.truncate);
    let samples = vanishes_on_product_samples(&product, factors, opts.samples, opts.seed);
    let singular = if opts.singular && !invariants.is_empty() {
        Some(singular_locus(&product, invariants.dimension, opts.truncate, opts.seed)?)
    } else {
        None
    };

    let params: Option<Vec<&Parametrization<F>>> = match spans {
        Some(s) => Some(s.iter().collect()),
        None => factors.iter().map(|f| f.parametrization()).collect(),
    };
    let coefficients = match &params {
        Some(p) => Some(CoefficientInfo::of(p, opts.truncate)?),
        None => None,
    };

    let signatures: Option<Vec<FactorSignature>> = infos.iter().map(|f| f.signature).collect();
    let (prediction, prediction_error) = match &signatures {
        Some(sigs) => {
            let mode = if sigs.iter().zip(&infos).any(|(s, _)| {
                let full = s.monomial_count().map(|c| (c - 1).min(n as u64)).unwrap_or(s.h);
                s.h < full
            }) {
                ThresholdMode::Span
            } else {
                ThresholdMode::Parametric
            };
            match predict(sigs, n as u64, mode) {
                Ok(p) => (Some(p), None),
                Err(e) => (None, Some(e.to_string())),
            }
        }
        None => (None, Some("a factor has no (dimension, degree) signature".into())),
    };

    let mut reasons = Vec::new();
    match &coefficients {
        None => reasons.push("not certified: implicit factors have no coefficient matrix".to_string()),
        Some(c) => {
            if c.rank < c.max_rank {
                reasons.push(format!("coefficient matrix has rank {} below the maximal {}", c.rank, c.max_rank));
            }
            match c.center_meets_segre_veronese {
                Some(true) => reasons.push("projection center meets the Segre-Veronese variety".into()),
                Some(false) => {}
                None => reasons.push("projection center too large to test against the Segre-Veronese variety".into()),
            }
        }
    }
    for (f, sig) in infos.iter().zip(signatures.iter().flatten()) {
        let full = sig.monomial_count().map(|c| (c - 1).min(n as u64)).unwrap_or(sig.h);
        if sig.h < full {
            reasons.push(format!("factor {} spans P^{} below the maximal P^{full}", f.name, sig.h));
        }
    }
    let genericity = Genericity {
        certified: reasons.is_empty(),
        reasons,
    };

    Ok(Analysis {
        n,
        factors: infos,
        product,
        invariants,
        hf_check,
        groebner_certified,
        samples,
        singular,
        coefficients,
        prediction,
        prediction_error,
        genericity,
    })
}

impl<F: Field> Analysis<F> {
    pub fn dimension(&self) -> i64 {
        self.invariants.dimension
    }

    pub fn degree(&self) -> Option<u64> {
        self.invariants.degree
    }

    /// `prod HF_i(t)` for `t = 0..=T`.
    pub fn factor_hf_products(&self) -> Vec<Option<u64>> {
        (0..self.invariants.hilbert_function.len())
            .map(|t| {
                self.factors
                    .iter()
                    .try_fold(1u64, |acc, f| f.invariants.hf(t).and_then(|v| acc.checked_mul(v)))
            })
            .collect()
    }

    pub fn singular_dimension(&self) -> Option<i64> {
        self.singular.as_ref().map(|s| s.invariants.dimension)
    }

    /// Verdicts of the closed-form predictions against the computed values.
    pub fn prediction_verdicts(&self) -> Vec<Verdict> {
        let Some(p) = &self.prediction else {
            return Vec::new();
        };
        let generic = self.genericity.certified;
        let why = self.genericity.reason();
        let mut out = Vec::new();
        if let Some(d) = p.expected_dim {
            out.push(Verdict::compare("product_dimension", d, self.dimension()));
        }
        if let Some(d) = p.expected_deg {
            out.push(Verdict::compare("product_degree", d, self.degree()));
        }
        match (p.hf_relation, p.expected_dim) {
            (Some(HfRelation::Multiplicative), _) => {
                let holds = self.hf_check.iter().all(|&b| b);
                out.push(Verdict::check(
                    "hilbert_function_multiplicative",
                    json!(self.factor_hf_products()),
                    json!(self.invariants.hilbert_function),
                    holds,
                ));
            }
            (Some(HfRelation::StrictlySmallerAtOne), Some(_)) => {
                let bound = self.factor_hf_products().get(1).copied().flatten();
                let hf1 = self.invariants.hf(1);
                let holds = matches!((hf1, bound), (Some(a), Some(b)) if a < b);
                out.push(Verdict::check("hilbert_function_drop", json!({ "below": bound }), json!(hf1), holds));
            }
            _ => {}
        }
        if let Some(s) = &self.singular {
            let sing = s.invariants.dimension;
            match p.smoothness {
                Smoothness::Smooth => {
                    let claim = if p.regime == Regime::Large {
                        "smooth_large_ambient"
                    } else {
                        "smooth_small_ambient"
                    };
                    out.push(Verdict::check(claim, json!({ "singular_dimension": -1 }), json!({ "singular_dimension": sing }), s.smooth));
                }
                Smoothness::SingularWithBound(b) => {
                    out.push(Verdict::check("singular_locus_bound", json!({ "at_least": b }), json!(sing), sing >= b));
                }
                Smoothness::NotClassified => {}
            }
        }
        out.into_iter().map(|v| v.unless_generic(generic, &why)).collect()
    }

    /// Writes computed values, the prediction and the certificates.
    pub fn fill(&self, report: &mut Report) {
        let c = &mut report.computed;
        c.insert("ambient".into(), json!(self.n));
        c.insert("factors".into(), Value::Array(self.factors.iter().map(FactorInfo::to_json).collect()));
        let mut product = Map::new();
        product.insert("generators".into(), json!(self.product.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>()));
        product.insert("invariants".into(), invariants_json(&self.invariants));
        product.insert("factor_hf_products".into(), json!(self.factor_hf_products()));
        product.insert("hf_multiplicative".into(), json!(self.hf_check));
        c.insert("product".into(), Value::Object(product));
        if let Some(s) = &self.singular {
            c.insert("singular_locus".into(), singular_json(s));
        }

        if let Some(p) = &self.prediction {
            if let Value::Object(map) = serde_json::to_value(p).expect("predictions serialize") {
                report.predicted.extend(map);
            }
        }
        if let Some(e) = &self.prediction_error {
            report.predicted.insert("error".into(), json!(e));
        }

        let cert = &mut report.certificates;
        cert.insert("groebner_basis_certified".into(), json!(self.groebner_certified));
        cert.insert(
            "sampled_product_points".into(),
            json!({ "checked": self.samples.checked, "vanishing": self.samples.vanishing }),
        );
        if let Some(co) = &self.coefficients {
            cert.insert("coefficient_matrix".into(), co.to_json());
        }
        cert.insert(
            "genericity".into(),
            json!({ "certified": self.genericity.certified, "reasons": self.genericity.reasons }),
        );
        report.verdicts.extend(self.prediction_verdicts());
    }
}

pub fn singular_json<F: Field>(s: &SingularReport<F>) -> Value {
    let method = match s.method {
        SingularMethod::Minors => json!({ "kind": "minors" }),
        SingularMethod::RandomizedMinors { samples } => json!({ "kind": "randomized_minors", "samples": samples }),
        SingularMethod::EmptyByLinearAlgebra { degree, samples } => {
            json!({ "kind": "empty_by_linear_algebra", "degree": degree, "samples": samples })
        }
    };
    let mut v = json!({
        "smooth": s.smooth,
        "codimension": s.codimension,
        "invariants": invariants_json(&s.invariants),
        "method": method,
    });
    if let SingularMethod::RandomizedMinors { .. } = s.method {
        v["note"] = json!("randomized determinant ideal; only the support is meaningful, the degree is not");
    } else if !s.smooth {
        v["note"] = json!("degree of the saturated Jacobian subscheme, which may be non-reduced");
    }
    v
}
