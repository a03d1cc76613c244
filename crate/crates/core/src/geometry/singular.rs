use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::Field;
use crate::groebner::{saturate_irrelevant, Ideal};
use crate::invariants::{variety_invariants, InvariantReport};
use crate::linalg::PolyMatrix;
use crate::poly::{MonomialOrder, Polynomial};

use super::certify::certify_empty;
use super::{GeometryError, SamplingRange};

/// Largest number of Jacobian minors computed exactly; above it the
/// randomized determinant construction is used.
pub const EXACT_MINOR_LIMIT: u128 = 2_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularMethod {
    /// All `c x c` Jacobian minors, saturated by the irrelevant ideal.
    Minors,
    /// Determinants of random `c x c` compressions of the Jacobian; only the
    /// support of the locus is meaningful.
    RandomizedMinors { samples: usize },
    /// Random elements of the Jacobian ideal whose multiples span, modulo the
    /// ideal, every form of the given degree; the locus is empty.
    EmptyByLinearAlgebra { degree: u32, samples: usize },
}

#[derive(Clone, Debug)]
pub struct SingularReport<F: Field> {
    pub ideal: Ideal<F>,
    pub invariants: InvariantReport,
    pub smooth: bool,
    pub method: SingularMethod,
    pub codimension: usize,
}

/// Singular locus of the projective variety cut out by `ideal`, of the given
/// dimension, via the Jacobian criterion.
pub fn singular_locus<F: Field>(
    ideal: &Ideal<F>,
    dim: i64,
    truncation: usize,
    seed: u64,
) -> Result<SingularReport<F>, GeometryError> {
    singular_locus_with_limit(ideal, dim, truncation, seed, EXACT_MINOR_LIMIT)
}

/// [`singular_locus`] with an explicit cap on the number of exact minors.
pub fn singular_locus_with_limit<F: Field>(
    ideal: &Ideal<F>,
    dim: i64,
    truncation: usize,
    seed: u64,
    exact_limit: u128,
) -> Result<SingularReport<F>, GeometryError> {
    let ring = ideal.ring();
    let n = ring.nvars() as i64 - 1;
    if dim < 0 || dim >= n {
        // the empty set and the whole space have no singular points
        let unit = Ideal::unit(ring).with_budget(ideal.budget());
        return Ok(SingularReport {
            invariants: variety_invariants(&unit, truncation)?,
            ideal: unit,
            smooth: true,
            method: SingularMethod::Minors,
            codimension: (n - dim.max(-1)).max(0) as usize,
        });
    }
    let c = (n - dim) as usize;
    let gens: Vec<Polynomial<F>> = ideal.groebner_basis()?.polys().to_vec();
    let vars: Vec<usize> = (0..ring.nvars()).collect();
    let jac = PolyMatrix::jacobian(ring, &gens, &vars)?;
    if jac.rows() < c {
        return Err(GeometryError::Invalid(format!(
            "{} generators cannot cut out codimension {c}",
            jac.rows()
        )));
    }

    let mut all = gens.clone();
    let (method, sing) = if jac.minor_count(c) <= exact_limit {
        all.extend(jac.minors(c)?.into_iter().filter(|m| !m.is_zero()));
        let j = Ideal::new(ring, all)?.with_budget(ideal.budget());
        (SingularMethod::Minors, saturate_irrelevant(&j)?)
    } else {
        // rows of the lowest-degree generators keep the determinants small;
        // where their minors have no common zero on the variety, it is
        // smooth, since the full Jacobian never exceeds rank c there
        let low = gens.iter().filter_map(|g| g.degree()).min().unwrap_or(0);
        let sampler = DetSampler::new(&jac, &gens, c, low);
        let gb = ideal.groebner_basis_in(&MonomialOrder::DegRevLex)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cert = if sampler.rows.len() >= c {
            certify_empty(&gb, sampler.degree(), CERTIFY_EXTRA_DEGREES, CERTIFY_MAX_SAMPLES, 3, || {
                sampler.draw(&mut rng).ok()
            })
        } else {
            None
        };
        if let Some(cert) = cert {
            let unit = Ideal::unit(ring).with_budget(ideal.budget());
            return Ok(SingularReport {
                invariants: variety_invariants(&unit, truncation)?,
                ideal: unit,
                smooth: true,
                method: SingularMethod::EmptyByLinearAlgebra {
                    degree: cert.degree,
                    samples: cert.samples,
                },
                codimension: c,
            });
        }
        let sampler = DetSampler::new(&jac, &gens, c, u32::MAX);
        let samples = dim as usize + 2;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let det = sampler.draw(&mut rng)?;
            if !det.is_zero() {
                all.push(det);
            }
        }
        // dimension and degree only depend on the saturation, which is not
        // taken here
        (SingularMethod::RandomizedMinors { samples }, Ideal::new(ring, all)?.with_budget(ideal.budget()))
    };
    let invariants = variety_invariants(&sing, truncation)?;
    Ok(SingularReport {
        smooth: invariants.is_empty(),
        ideal: sing,
        invariants,
        method,
        codimension: c,
    })
}

/// Degrees above the Jacobian determinant degree tried by the emptiness
/// certificate.
const CERTIFY_EXTRA_DEGREES: u32 = 2;
/// Most Jacobian determinants drawn for the emptiness certificate.
const CERTIFY_MAX_SAMPLES: usize = 600;

/// Draws determinants of `B D J C` for random constant `B` (`c x m`) and `C`
/// (`(n+1) x c`), where `D` scales row `i` by a random linear form raised to
/// `e_max - deg g_i` so every entry of a row is homogeneous of one degree.
/// Each determinant lies in the ideal of `c x c` minors.
struct DetSampler<'a, F: Field> {
    jac: &'a PolyMatrix<F>,
    /// Jacobian rows used, with the degrees of their generators.
    rows: Vec<(usize, u32)>,
    e_max: u32,
    c: usize,
}

impl<'a, F: Field> DetSampler<'a, F> {
    /// Uses the rows of generators of degree at most `max_degree`.
    fn new(jac: &'a PolyMatrix<F>, gens: &[Polynomial<F>], c: usize, max_degree: u32) -> Self {
        let rows: Vec<(usize, u32)> = gens
            .iter()
            .map(|g| g.degree().unwrap_or(0))
            .enumerate()
            .filter(|&(_, d)| d <= max_degree)
            .collect();
        let e_max = rows.iter().map(|&(_, d)| d).max().unwrap_or(0);
        DetSampler { jac, rows, e_max, c }
    }

    /// Degree of every determinant drawn.
    fn degree(&self) -> u32 {
        self.c as u32 * self.e_max.saturating_sub(1)
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> Result<Polynomial<F>, GeometryError> {
        let (jac, c) = (self.jac, self.c);
        let ring = jac.ring();
        let ctx = ring.ctx();
        let range = SamplingRange::default();
        let draw = |rng: &mut ChaCha8Rng| F::from_i64(rng.gen_range(range.lo..=range.hi), ctx);
        let (m, cols) = (self.rows.len(), jac.cols());
        let ell = (0..cols).fold(Polynomial::zero(ring), |acc, v| {
            &acc + &Polynomial::var(ring, v).scale(&draw(rng))
        });
        let scaled: Vec<Vec<Polynomial<F>>> = self
            .rows
            .iter()
            .map(|&(i, d)| {
                let factor = ell.pow(self.e_max - d);
                (0..cols).map(|j| jac.get(i, j) * &factor).collect()
            })
            .collect();
        let b: Vec<Vec<F>> = (0..c).map(|_| (0..m).map(|_| draw(rng)).collect()).collect();
        let cm: Vec<Vec<F>> = (0..cols).map(|_| (0..c).map(|_| draw(rng)).collect()).collect();
        // (B * scaled) is c x cols, then times C gives c x c
        let bs: Vec<Vec<Polynomial<F>>> = b
            .iter()
            .map(|brow| {
                (0..cols)
                    .map(|j| (0..m).fold(Polynomial::zero(ring), |acc, i| &acc + &scaled[i][j].scale(&brow[i])))
                    .collect()
            })
            .collect();
        let small: Vec<Vec<Polynomial<F>>> = bs
            .iter()
            .map(|row| {
                (0..c)
                    .map(|k| (0..cols).fold(Polynomial::zero(ring), |acc, j| &acc + &row[j].scale(&cm[j][k])))
                    .collect()
            })
            .collect();
        Ok(PolyMatrix::from_rows(ring, small)?.determinant()?)
    }
}
