//! Multivariate polynomials over exact fields.

mod monomial;
mod parse;
mod polynomial;
mod ring;

use thiserror::Error;

pub use monomial::{compare_monomials, Exponent, Monomial, MonomialOrder};
pub use parse::{normalize_juxtaposed, parse_poly, print_poly};
pub use polynomial::{multidegree, poly_mul, Polynomial, Term};
pub(crate) use polynomial::merge_scaled;
pub use polynomial::same_ring;
pub use ring::{Ring, VariableBlock};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("expected {expected} substitution images, got {got}")]
    Arity { expected: usize, got: usize },
}
