use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::Field;
use crate::linalg::PolyMatrix;

use super::{GeometryError, SamplingRange, SegreVeronese};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SecantMethod {
    Formula,
    TerraciniSample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SecantInfo {
    pub dim: i64,
    pub method: SecantMethod,
}

const SEED_ROUNDS: u64 = 5;

/// Dimension of the secant line variety: the rank of the stacked tangent
/// spaces at two random points, minus one, maximized over several seeds.
pub fn terracini_secant_dim<F: Field>(sv: &SegreVeronese<F>, seed: u64) -> Result<SecantInfo, GeometryError> {
    let params = sv.params();
    let ctx = params.ctx();
    let vars: Vec<usize> = (0..params.nvars()).collect();
    let jac = PolyMatrix::jacobian(params, sv.parametrization().forms(), &vars)?;
    let range = SamplingRange::default();
    let mut best = -1i64;
    for round in 0..SEED_ROUNDS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(round));
        let mut point = || -> Vec<F> {
            (0..params.nvars())
                .map(|_| F::from_i64(rng.gen_range(range.lo..=range.hi), ctx))
                .collect()
        };
        let (p, q) = (point(), point());
        let stacked = jac.evaluate(&p).hstack(&jac.evaluate(&q))?;
        best = best.max(stacked.rank() as i64 - 1);
    }
    Ok(SecantInfo {
        dim: best,
        method: SecantMethod::TerraciniSample,
    })
}
