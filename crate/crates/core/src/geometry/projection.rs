use crate::arith::Field;
use crate::groebner::Ideal;
use crate::linalg::Matrix;

use super::{GeometryError, ProjectivePoint};

/// Linear projection `P^N -> P^n` whose rows are the given points, with its
/// center.
#[derive(Clone, Debug)]
pub struct ProjectionSpec<F: Field> {
    pub matrix: Matrix<F>,
    pub rank: usize,
    /// Kernel basis; the center is its projectivization.
    pub center: Vec<Vec<F>>,
    /// Projective dimension of the center, `-1` when it is empty.
    pub center_dim: i64,
}

impl<F: Field> ProjectionSpec<F> {
    /// The center as a point, when it is one.
    pub fn center_point(&self) -> Option<ProjectivePoint<F>> {
        match self.center.as_slice() {
            [v] => ProjectivePoint::new(v.clone()).ok(),
            _ => None,
        }
    }
}

pub fn projection_center<F: Field>(points: &[ProjectivePoint<F>]) -> Result<ProjectionSpec<F>, GeometryError> {
    let first = points.first().ok_or_else(|| GeometryError::Invalid("no points".into()))?;
    if let Some(bad) = points.iter().find(|p| p.coords().len() != first.coords().len()) {
        return Err(GeometryError::AmbientMismatch {
            expected: first.ambient(),
            got: bad.ambient(),
        });
    }
    let ctx = first.coords()[0].context();
    let matrix = Matrix::from_rows(&ctx, points.iter().map(|p| p.coords().to_vec()).collect())?;
    let rank = matrix.rank();
    let center = matrix.kernel_basis();
    Ok(ProjectionSpec {
        center_dim: first.ambient() as i64 - rank as i64,
        matrix,
        rank,
        center,
    })
}

/// Whether every generator of `ideal` vanishes at the point.
pub fn ideal_vanishes_at<F: Field>(ideal: &Ideal<F>, point: &ProjectivePoint<F>) -> bool {
    ideal.gens().iter().all(|g| g.evaluate(point.coords()).is_zero())
}
