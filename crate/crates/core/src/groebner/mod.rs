//! Groebner bases and the ideal operations built on them.

mod engine;
mod ideal;

use thiserror::Error;

use crate::poly::PolyError;

pub use ideal::{
    buchberger, colon_saturate, eliminate, ideal_equal, ideal_member, intersect, normal_form,
    s_polynomial, saturate_irrelevant, GroebnerBasis, Ideal,
};

/// Resource limits for a single Groebner basis computation. Exceeding one
/// aborts the computation with [`GroebnerError::Budget`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Budget {
    pub max_pair_reductions: u64,
    /// Largest intermediate polynomial, in terms.
    pub max_terms: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pair_reductions: 1_000_000,
            max_terms: 2_000_000,
        }
    }
}

impl Budget {
    pub fn with_pairs(max_pair_reductions: u64) -> Self {
        Budget {
            max_pair_reductions,
            ..Budget::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("budget exceeded: more than {limit} {resource}")]
    Budget { resource: &'static str, limit: u64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0}")]
    Invalid(String),
}
