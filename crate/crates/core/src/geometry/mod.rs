//! Hadamard products of projective varieties and the constructions around
//! them: presentations, Segre-Veronese embeddings, product-coefficient
//! matrices, projection centers, singular loci and secant dimensions.

mod certify;
mod hadamard;
mod point;
mod presentation;
mod projection;
mod sampling;
mod secant;
mod segre;
mod singular;

use thiserror::Error;

use crate::arith::ArithError;
use crate::groebner::GroebnerError;
use crate::linalg::LinalgError;
use crate::poly::PolyError;

pub use hadamard::{hadamard_product, HadamardResult};
pub use point::{hadamard_point, ProjectivePoint};
pub use presentation::{ambient_ring, implicitize, sample_point, Parametrization, Presentation, VarietyPresentation};
pub use projection::{ideal_vanishes_at, projection_center, ProjectionSpec};
pub use sampling::{sample_generic_instance, GenericInstance, SamplingRange, GENERIC_RETRIES};
pub use secant::{terracini_secant_dim, SecantInfo, SecantMethod};
pub use segre::{build_m_prime, coefficient_points, product_coefficient_matrix, segre_veronese, SegreVeronese};
pub use singular::{singular_locus, singular_locus_with_limit, SingularMethod, SingularReport, EXACT_MINOR_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("coordinatewise product of the points is zero")]
    UndefinedProduct,
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("ambient mismatch: expected P^{expected}, got P^{got}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("coordinate forms must share one degree")]
    DegreeMismatch,
    #[error("factor `{0}` is not linear")]
    NotLinear(String),
    #[error("product form {0} is zero")]
    ZeroProductForm(usize),
    #[error("degenerate presentation: {0}")]
    Degenerate(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

impl GeometryError {
    pub fn is_budget(&self) -> bool {
        matches!(self, GeometryError::Groebner(GroebnerError::Budget { .. }))
    }
}
