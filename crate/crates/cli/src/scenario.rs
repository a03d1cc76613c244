//! Line-oriented scenario files.
//!
//! ```text
//! ambient 4
//! field rational
//! factor X param vars y0 y1 degree 1
//! coord 0 = y0 - y1
//! ...
//! factor Y ideal
//! gen = x1^2 - x0*x2
//! truncate 5
//! seed 0
//! budget 1000000
//! ```
//!
//! Blank lines and everything after `#` are ignored.

use std::sync::Arc;

use hadamard_core::arith::{rat_to_fp, Field, Modulus, PrimeFieldElement, Rational};
use hadamard_core::geometry::{ambient_ring, Parametrization, VarietyPresentation};
use hadamard_core::groebner::{Budget, Ideal};
use hadamard_core::invariants::DEFAULT_TRUNCATION;
use hadamard_core::poly::{parse_poly, Polynomial, Ring};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ScenarioError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ScenarioError {
    ScenarioError {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldMode {
    Rational,
    Prime(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorKind {
    Parametric {
        vars: Vec<String>,
        degree: u32,
        coords: Vec<String>,
    },
    Implicit {
        gens: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSpec {
    pub name: String,
    pub kind: FactorKind,
    /// Line of the `factor` header, for error messages.
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub ambient: usize,
    pub field: FieldMode,
    pub factors: Vec<FactorSpec>,
    pub truncate: usize,
    pub seed: u64,
    pub budget: Budget,
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ScenarioError> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| err(line, format!("expected {what}")))
}

/// Parses a scenario, checking its structure but not the polynomials.
pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let mut ambient = None;
    let mut field = FieldMode::Rational;
    let mut factors: Vec<FactorSpec> = Vec::new();
    let mut truncate = DEFAULT_TRUNCATION;
    let mut seed = 0;
    let mut budget = Budget::default();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let keyword = toks.next().unwrap_or("");
        match keyword {
            "ambient" => {
                let n: usize = number(toks.next(), line, "the ambient dimension")?;
                if n == 0 {
                    return Err(err(line, "ambient dimension must be positive"));
                }
                ambient = Some(n);
            }
            "field" => {
                field = match (toks.next(), toks.next()) {
                    (Some("rational"), None) => FieldMode::Rational,
                    (Some("prime"), Some(p)) => {
                        let p: u64 = p.parse().map_err(|_| err(line, "expected a prime"))?;
                        let m = Modulus::new(p).map_err(|e| err(line, e.to_string()))?;
                        FieldMode::Prime(m.value())
                    }
                    _ => return Err(err(line, "expected `field rational` or `field prime <p>`")),
                };
            }
            "factor" => {
                let name = toks.next().ok_or_else(|| err(line, "expected a factor name"))?.to_string();
                if factors.iter().any(|f| f.name == name) {
                    return Err(err(line, format!("duplicate factor name {name}")));
                }
                let kind = match toks.next() {
                    Some("ideal") => FactorKind::Implicit { gens: Vec::new() },
                    Some("param") => {
                        if toks.next() != Some("vars") {
                            return Err(err(line, "expected `param vars <v0 .. vr> degree <d>`"));
                        }
                        let mut vars = Vec::new();
                        let mut degree = None;
                        while let Some(t) = toks.next() {
                            if t == "degree" {
                                degree = Some(number(toks.next(), line, "a degree")?);
                                break;
                            }
                            vars.extend(t.split(',').filter(|v| !v.is_empty()).map(str::to_string));
                        }
                        let degree = degree.ok_or_else(|| err(line, "missing `degree <d>`"))?;
                        if vars.is_empty() {
                            return Err(err(line, "no parameter variables"));
                        }
                        FactorKind::Parametric {
                            vars,
                            degree,
                            coords: Vec::new(),
                        }
                    }
                    _ => return Err(err(line, "expected `ideal` or `param`")),
                };
                if toks.next().is_some() {
                    return Err(err(line, "unexpected trailing tokens"));
                }
                factors.push(FactorSpec { name, kind, line });
            }
            "coord" => {
                let (lhs, rhs) = content.split_once('=').ok_or_else(|| err(line, "expected `coord <i> = <poly>`"))?;
                let i: usize = number(lhs.split_whitespace().nth(1), line, "a coordinate index")?;
                match factors.last_mut().map(|f| &mut f.kind) {
                    Some(FactorKind::Parametric { coords, .. }) => {
                        if i != coords.len() {
                            return Err(err(line, format!("expected coord {}, found coord {i}", coords.len())));
                        }
                        coords.push(rhs.trim().to_string());
                    }
                    _ => return Err(err(line, "`coord` outside a parametric factor")),
                }
            }
            "gen" => {
                let (_, rhs) = content.split_once('=').ok_or_else(|| err(line, "expected `gen = <poly>`"))?;
                match factors.last_mut().map(|f| &mut f.kind) {
                    Some(FactorKind::Implicit { gens }) => gens.push(rhs.trim().to_string()),
                    _ => return Err(err(line, "`gen` outside an ideal factor")),
                }
            }
            "truncate" => truncate = number(toks.next(), line, "a truncation degree")?,
            "seed" => seed = number(toks.next(), line, "a seed")?,
            "budget" => budget = Budget::with_pairs(number(toks.next(), line, "a pair budget")?),
            other => return Err(err(line, format!("unknown keyword `{other}`"))),
        }
    }

    let ambient = ambient.ok_or_else(|| err(0, "missing `ambient <n>`"))?;
    if factors.is_empty() {
        return Err(err(0, "no factors"));
    }
    for f in &factors {
        match &f.kind {
            FactorKind::Parametric { coords, .. } if coords.len() != ambient + 1 => {
                return Err(err(
                    f.line,
                    format!("factor {} has {} coordinates, expected {}", f.name, coords.len(), ambient + 1),
                ));
            }
            FactorKind::Implicit { gens } if gens.is_empty() => {
                return Err(err(f.line, format!("factor {} has no generators", f.name)));
            }
            _ => {}
        }
    }
    Ok(Scenario {
        ambient,
        field,
        factors,
        truncate,
        seed,
        budget,
    })
}

impl Scenario {
    pub fn factor(&self, name: &str) -> Option<&FactorSpec> {
        self.factors.iter().find(|f| f.name == name)
    }

    /// Builds the factors over the field with the given context.
    pub fn build<F: Field>(&self, ctx: &F::Ctx) -> Result<Vec<VarietyPresentation<F>>, ScenarioError> {
        let x = ambient_ring::<F>(self.ambient, ctx);
        self.factors.iter().map(|f| f.build(&x)).collect()
    }

    pub fn ambient_ring<F: Field>(&self, ctx: &F::Ctx) -> Arc<Ring<F>> {
        ambient_ring(self.ambient, ctx)
    }

    /// Renders the scenario back into the line format.
    pub fn to_text(&self) -> String {
        let mut out = format!("ambient {}\n", self.ambient);
        match self.field {
            FieldMode::Rational => out.push_str("field rational\n"),
            FieldMode::Prime(p) => out.push_str(&format!("field prime {p}\n")),
        }
        for f in &self.factors {
            match &f.kind {
                FactorKind::Parametric { vars, degree, coords } => {
                    out.push_str(&format!("factor {} param vars {} degree {degree}\n", f.name, vars.join(" ")));
                    for (i, c) in coords.iter().enumerate() {
                        out.push_str(&format!("coord {i} = {c}\n"));
                    }
                }
                FactorKind::Implicit { gens } => {
                    out.push_str(&format!("factor {} ideal\n", f.name));
                    for g in gens {
                        out.push_str(&format!("gen = {g}\n"));
                    }
                }
            }
        }
        out.push_str(&format!("truncate {}\nseed {}\nbudget {}\n", self.truncate, self.seed, self.budget.max_pair_reductions));
        out
    }
}

impl FactorSpec {
    fn build<F: Field>(&self, x: &Arc<Ring<F>>) -> Result<VarietyPresentation<F>, ScenarioError> {
        let fail = |e: &dyn std::fmt::Display| err(self.line, format!("factor {}: {e}", self.name));
        match &self.kind {
            FactorKind::Parametric { vars, degree, coords } => {
                let ring = Ring::new(vars, x.ctx().clone()).map_err(|e| fail(&e))?;
                let forms = coords
                    .iter()
                    .map(|c| parse_poly(c, &ring).map_err(|e| fail(&e)))
                    .collect::<Result<Vec<Polynomial<F>>, _>>()?;
                let param = Parametrization::new(&ring, forms).map_err(|e| fail(&e))?;
                if param.degree() != *degree {
                    return Err(fail(&format!("forms have degree {}, header says {degree}", param.degree())));
                }
                VarietyPresentation::parametric(&self.name, x.nvars() - 1, param).map_err(|e| fail(&e))
            }
            FactorKind::Implicit { gens } => {
                let polys = gens
                    .iter()
                    .map(|g| parse_poly(g, x).map_err(|e| fail(&e)))
                    .collect::<Result<Vec<_>, _>>()?;
                let ideal = Ideal::new(x, polys).map_err(|e| fail(&e))?;
                if !ideal.is_homogeneous() {
                    return Err(fail(&"generators are not homogeneous"));
                }
                VarietyPresentation::implicit(&self.name, ideal).map_err(|e| fail(&e))
            }
        }
    }
}

/// Reduces a rational parametrized or implicit factor modulo `p`.
pub fn reduce_mod_p(
    v: &VarietyPresentation<Rational>,
    p: u32,
) -> Result<VarietyPresentation<PrimeFieldElement>, String> {
    let modulus = Modulus::new(p as u64).map_err(|e| e.to_string())?;
    let conv = |c: &Rational| rat_to_fp(c, p as u64);
    match v.parametrization() {
        Some(par) => {
            let ring = Ring::new(par.params().vars(), modulus).map_err(|e| e.to_string())?;
            let forms = par
                .forms()
                .iter()
                .map(|f| f.map_coeffs(&ring, conv))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let param = Parametrization::new(&ring, forms).map_err(|e| e.to_string())?;
            VarietyPresentation::parametric(v.name(), v.ambient(), param).map_err(|e| e.to_string())
        }
        None => {
            let ideal = v.implicit_ideal().map_err(|e| e.to_string())?;
            let x = ambient_ring::<PrimeFieldElement>(v.ambient(), &modulus);
            let gens = ideal
                .gens()
                .iter()
                .map(|g| g.map_coeffs(&x, conv))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let ideal = Ideal::new(&x, gens).map_err(|e| e.to_string())?;
            VarietyPresentation::implicit(v.name(), ideal).map_err(|e| e.to_string())
        }
    }
}
