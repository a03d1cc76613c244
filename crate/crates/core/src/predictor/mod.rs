//! Closed-form expectations for Hadamard products of generic varieties.

mod tables;

use serde::Serialize;
use thiserror::Error;

pub use tables::{lemma_table_lookup, sweep_tables, Affine, Entry, LemmaTable, SweepReport, TableHit, TableRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictorError {
    #[error("no factor signatures given")]
    Empty,
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("no closed-form prediction outside the large and small ambient regimes")]
    OutOfRange,
    #[error("this prediction needs exactly two factors, got {0}")]
    NeedsTwoFactors(usize),
    #[error("integer overflow while evaluating a formula")]
    Overflow,
}

/// Dimension `r`, degree `d` and linear-span dimension `h` of one factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FactorSignature {
    pub r: u64,
    pub d: u64,
    pub h: u64,
}

impl FactorSignature {
    /// Signature with the largest possible span, `h = C(r + d, d) - 1`.
    pub fn new(r: u64, d: u64) -> Result<Self, PredictorError> {
        if r == 0 || d == 0 {
            return Err(PredictorError::InvalidSignature(format!("r = {r}, d = {d}: both must be positive")));
        }
        let h = binomial(r + d, d)?.checked_sub(1).ok_or(PredictorError::Overflow)?;
        Ok(FactorSignature { r, d, h })
    }

    pub fn with_span(r: u64, d: u64, h: u64) -> Result<Self, PredictorError> {
        let full = Self::new(r, d)?;
        if h < r || h > full.h {
            return Err(PredictorError::InvalidSignature(format!(
                "span dimension {h} must lie in [{r}, {}]",
                full.h
            )));
        }
        Ok(FactorSignature { h, ..full })
    }

    /// `C(r + d, d)`, the number of degree-`d` monomials in `r + 1` variables.
    pub fn monomial_count(&self) -> Result<u64, PredictorError> {
        binomial(self.r + self.d, self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdMode {
    /// `prod (h_i + 1) - 1`, for varieties inside given linear spaces.
    Span,
    /// `prod C(r_i + d_i, d_i) - 1`, for generic parametrized varieties.
    Parametric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Large,
    Small,
    OutOfRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegimeInfo {
    pub regime: Regime,
    pub threshold: u64,
    /// `n > sum r_i`, required by the small-ambient statements.
    pub exceeds_dimension_sum: bool,
    /// Identifiers of the statements whose hypotheses hold.
    pub applicable: Vec<&'static str>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HfRelation {
    Multiplicative,
    StrictlySmallerAtOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PredictedInvariants {
    pub dim: u64,
    pub deg: u64,
    pub hf_relation: HfRelation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "bound", rename_all = "snake_case")]
pub enum Smoothness {
    Smooth,
    /// The singular locus has at least this dimension.
    SingularWithBound(i64),
    NotClassified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub signatures: Vec<FactorSignature>,
    pub n: u64,
    pub mode: ThresholdMode,
    pub threshold: u64,
    pub regime: Regime,
    pub exceeds_dimension_sum: bool,
    pub applicable: Vec<&'static str>,
    pub expected_dim: Option<u64>,
    pub expected_deg: Option<u64>,
    pub hf_relation: Option<HfRelation>,
    pub secant_dim: Option<u64>,
    pub smoothness: Smoothness,
    pub table_hits: Vec<TableHit>,
}

pub(crate) fn binomial(n: u64, k: u64) -> Result<u64, PredictorError> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(PredictorError::Overflow);
        }
    }
    Ok(acc as u64)
}

fn checked_product(values: impl IntoIterator<Item = Result<u64, PredictorError>>) -> Result<u64, PredictorError> {
    values
        .into_iter()
        .try_fold(1u64, |acc, v| acc.checked_mul(v?).ok_or(PredictorError::Overflow))
}

fn nonempty(signatures: &[FactorSignature]) -> Result<(), PredictorError> {
    if signatures.is_empty() {
        Err(PredictorError::Empty)
    } else {
        Ok(())
    }
}

fn dimension_sum(signatures: &[FactorSignature]) -> u64 {
    signatures.iter().map(|s| s.r).sum()
}

/// `(sum r_i)! / prod r_i!`.
pub fn multinomial(parts: &[u64]) -> Result<u64, PredictorError> {
    let mut total = 0;
    let mut acc = 1u64;
    for &p in parts {
        total += p;
        acc = acc.checked_mul(binomial(total, p)?).ok_or(PredictorError::Overflow)?;
    }
    Ok(acc)
}

pub fn ambient_threshold(signatures: &[FactorSignature], mode: ThresholdMode) -> Result<u64, PredictorError> {
    nonempty(signatures)?;
    let size = match mode {
        ThresholdMode::Span => checked_product(signatures.iter().map(|s| Ok(s.h + 1))),
        ThresholdMode::Parametric => checked_product(signatures.iter().map(|s| s.monomial_count())),
    }?;
    Ok(size - 1)
}

/// Which closed-form statements apply to the product in `P^n`.
pub fn classify_regime(signatures: &[FactorSignature], n: u64, mode: ThresholdMode) -> Result<RegimeInfo, PredictorError> {
    let threshold = ambient_threshold(signatures, mode)?;
    let sum = dimension_sum(signatures);
    let exceeds = n > sum;
    let regime = if n >= threshold {
        Regime::Large
    } else if mode == ThresholdMode::Parametric && n + sum >= threshold {
        Regime::Small
    } else {
        Regime::OutOfRange
    };
    let mut applicable = Vec::new();
    match regime {
        Regime::Large => {
            applicable.extend(["large_ambient_dimension_degree", "large_ambient_hilbert_function", "large_ambient_smooth"]);
        }
        Regime::Small => {
            applicable.push("small_ambient_hilbert_function_drop");
            if exceeds {
                applicable.extend(["small_ambient_dimension_degree", "small_ambient_singular_locus"]);
            }
        }
        Regime::OutOfRange => {}
    }
    Ok(RegimeInfo {
        regime,
        threshold,
        exceeds_dimension_sum: exceeds,
        applicable,
    })
}

/// Dimension `sum r_i` and degree `multinomial * prod d_i`, with the Hilbert
/// function relation holding in the given regime.
pub fn predicted_invariants(signatures: &[FactorSignature], regime: Regime) -> Result<PredictedInvariants, PredictorError> {
    nonempty(signatures)?;
    let hf_relation = match regime {
        Regime::Large => HfRelation::Multiplicative,
        Regime::Small => HfRelation::StrictlySmallerAtOne,
        Regime::OutOfRange => return Err(PredictorError::OutOfRange),
    };
    let parts: Vec<u64> = signatures.iter().map(|s| s.r).collect();
    let deg = multinomial(&parts)?
        .checked_mul(checked_product(signatures.iter().map(|s| Ok(s.d)))?)
        .ok_or(PredictorError::Overflow)?;
    Ok(PredictedInvariants {
        dim: dimension_sum(signatures),
        deg,
        hf_relation,
    })
}

/// Dimension of the secant line variety of the Segre-Veronese variety of the
/// signatures' type.
pub fn secant_dim_formula(signatures: &[FactorSignature]) -> Result<u64, PredictorError> {
    if signatures.len() < 2 {
        return Err(PredictorError::NeedsTwoFactors(signatures.len()));
    }
    let sum = dimension_sum(signatures);
    if signatures.len() == 2 && signatures.iter().all(|s| s.d == 1) {
        return Ok(2 * sum - 1);
    }
    let big_n = ambient_threshold(signatures, ThresholdMode::Parametric)?;
    Ok(big_n.min(2 * sum + 1))
}

pub fn smoothness_prediction(signatures: &[FactorSignature], n: u64) -> Result<Smoothness, PredictorError> {
    let info = classify_regime(signatures, n, ThresholdMode::Parametric)?;
    match info.regime {
        Regime::Large => Ok(Smoothness::Smooth),
        Regime::Small if info.exceeds_dimension_sum && signatures.len() >= 2 => {
            let sigma = secant_dim_formula(signatures)?;
            if n >= sigma {
                Ok(Smoothness::Smooth)
            } else {
                Ok(Smoothness::SingularWithBound(2 * dimension_sum(signatures) as i64 - n as i64))
            }
        }
        _ => Ok(Smoothness::NotClassified),
    }
}

/// All closed-form expectations for the product of the given factors in
/// `P^n`.
pub fn predict(signatures: &[FactorSignature], n: u64, mode: ThresholdMode) -> Result<Prediction, PredictorError> {
    let info = classify_regime(signatures, n, mode)?;
    let invariants = match info.regime {
        Regime::Large => Some(predicted_invariants(signatures, Regime::Large)?),
        Regime::Small if info.exceeds_dimension_sum => Some(predicted_invariants(signatures, Regime::Small)?),
        _ => None,
    };
    let smoothness = match (mode, info.regime) {
        (_, Regime::Large) => Smoothness::Smooth,
        (ThresholdMode::Parametric, _) => smoothness_prediction(signatures, n)?,
        _ => Smoothness::NotClassified,
    };
    let secant_dim = if signatures.len() >= 2 {
        Some(secant_dim_formula(signatures)?)
    } else {
        None
    };
    let table_hits = if signatures.len() == 2 {
        lemma_table_lookup(signatures, Some(n))?
    } else {
        Vec::new()
    };
    let hf_relation = match info.regime {
        Regime::Large => Some(HfRelation::Multiplicative),
        Regime::Small => Some(HfRelation::StrictlySmallerAtOne),
        Regime::OutOfRange => None,
    };
    Ok(Prediction {
        signatures: signatures.to_vec(),
        n,
        mode,
        threshold: info.threshold,
        regime: info.regime,
        exceeds_dimension_sum: info.exceeds_dimension_sum,
        applicable: info.applicable,
        expected_dim: invariants.map(|i| i.dim),
        expected_deg: invariants.map(|i| i.deg),
        hf_relation,
        secant_dim,
        smoothness,
        table_hits,
    })
}
