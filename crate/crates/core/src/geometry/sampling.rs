use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::Field;
use crate::poly::{Polynomial, Ring, Term};

use super::{product_coefficient_matrix, GeometryError, Parametrization, VarietyPresentation};

/// Inclusive range of random integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SamplingRange {
    pub lo: i64,
    pub hi: i64,
}

impl Default for SamplingRange {
    fn default() -> Self {
        SamplingRange { lo: -100, hi: 100 }
    }
}

/// Draws per instance before giving up on genericity.
pub const GENERIC_RETRIES: usize = 20;

#[derive(Clone, Debug)]
pub struct GenericInstance<F: Field> {
    /// Factors of the last draw; empty if every draw had a factor whose
    /// coordinate forms all vanished.
    pub factors: Vec<VarietyPresentation<F>>,
    /// Every factor spans the largest possible linear space and the product
    /// coefficient matrix has maximal rank.
    pub certified: bool,
    pub attempts: usize,
    pub product_rank: usize,
    pub max_product_rank: usize,
}

fn random_form<F: Field>(
    ring: &std::sync::Arc<Ring<F>>,
    basis: &[crate::poly::Monomial],
    rng: &mut ChaCha8Rng,
    range: SamplingRange,
) -> Polynomial<F> {
    let ctx = ring.ctx();
    let mut last = Polynomial::zero(ring);
    for _ in 0..100 {
        let terms = basis
            .iter()
            .map(|m| Term {
                coeff: F::from_i64(rng.gen_range(range.lo..=range.hi), ctx),
                mono: m.clone(),
            })
            .collect();
        last = Polynomial::from_terms(ring, terms);
        if !last.is_zero() {
            break;
        }
    }
    last
}

fn factor_name(i: usize, count: usize) -> String {
    match (count, i) {
        (2 | 3, 0) => "X".into(),
        (2 | 3, 1) => "Y".into(),
        (3, 2) => "Z".into(),
        _ => format!("X{}", i + 1),
    }
}

fn draw<F: Field>(
    spec: &[(usize, u32)],
    n: usize,
    rng: &mut ChaCha8Rng,
    range: SamplingRange,
    ctx: &F::Ctx,
) -> Result<Vec<Parametrization<F>>, GeometryError> {
    spec.iter()
        .map(|&(r, d)| {
            let names: Vec<String> = (0..=r).map(|j| format!("y{j}")).collect();
            let ring = Ring::new(&names, ctx.clone())?;
            let basis: Vec<_> = super::segre::block_monomials(r + 1, d)
                .into_iter()
                .map(|e| crate::poly::Monomial::from_exponents(&e))
                .collect();
            let forms = (0..=n).map(|_| random_form(&ring, &basis, rng, range)).collect();
            Parametrization::new(&ring, forms)
        })
        .collect()
}

/// Random parametrized factors of the given `(dimension, degree)` types in
/// `P^n`, re-drawn until certified generic or the retry cap is reached.
pub fn sample_generic_instance<F: Field>(
    spec: &[(usize, u32)],
    n: usize,
    seed: u64,
    range: SamplingRange,
    ctx: &F::Ctx,
) -> Result<GenericInstance<F>, GeometryError> {
    if n == 0 || spec.is_empty() {
        return Err(GeometryError::Invalid("need n >= 1 and at least one factor".into()));
    }
    if spec.iter().any(|&(r, d)| r == 0 || d == 0) {
        return Err(GeometryError::Invalid("factor dimensions and degrees must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for attempt in 1..=GENERIC_RETRIES {
        let params = match draw::<F>(spec, n, &mut rng, range, ctx) {
            Ok(p) => p,
            Err(GeometryError::Degenerate(_)) => {
                if last.is_none() {
                    last = Some(GenericInstance {
                        factors: Vec::new(),
                        certified: false,
                        attempts: attempt,
                        product_rank: 0,
                        max_product_rank: 0,
                    });
                }
                continue;
            }
            Err(e) => return Err(e),
        };
        let spans_ok = params.iter().all(|p| {
            let m = p.coefficient_matrix();
            m.rank() == m.rows().min(m.cols())
        });
        let refs: Vec<&Parametrization<F>> = params.iter().collect();
        let (m, _) = product_coefficient_matrix(&refs)?;
        let rank = m.rank();
        let max_rank = m.rows().min(m.cols());
        let certified = spans_ok && rank == max_rank;
        let factors = params
            .into_iter()
            .enumerate()
            .map(|(i, p)| VarietyPresentation::parametric(&factor_name(i, spec.len()), n, p))
            .collect::<Result<Vec<_>, _>>()?;
        let inst = GenericInstance {
            factors,
            certified,
            attempts: attempt,
            product_rank: rank,
            max_product_rank: max_rank,
        };
        if certified {
            return Ok(inst);
        }
        last = Some(inst);
    }
    let mut inst = last.expect("at least one draw");
    inst.attempts = GENERIC_RETRIES;
    Ok(inst)
}
