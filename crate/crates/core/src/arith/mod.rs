//! Exact coefficient arithmetic.
//!
//! Two coefficient fields are provided: [`Rational`] (arbitrary precision,
//! the reference semantics) and [`PrimeFieldElement`] (fast modular mode).
//! Both implement [`Field`], which is what the polynomial layer is generic
//! over.

mod prime;
mod rational;

use std::fmt::{self, Debug};
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

pub use prime::{is_prime, Modulus, PrimeFieldElement, DEFAULT_PRIME, SECONDARY_PRIME};
pub use rational::Rational;

/// `num/den` in lowest terms with a positive denominator.
pub fn rat_normalize(num: i64, den: i64) -> Result<Rational, ArithError> {
    Rational::new(num, den)
}

/// Multiplicative inverse in the prime field.
pub fn fp_inv(a: PrimeFieldElement) -> Result<PrimeFieldElement, ArithError> {
    a.inv()
}

/// Reduces a rational modulo `p`. A prime dividing the denominator is a bad
/// prime for this value and the caller has to pick another one.
pub fn rat_to_fp(r: &Rational, p: u64) -> Result<PrimeFieldElement, ArithError> {
    prime::rational_to_prime(r, Modulus::new(p)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("prime {0} divides the denominator")]
    BadPrime(u32),
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("mismatched moduli {0} and {1}")]
    ModulusMismatch(u32, u32),
}

/// Which coefficient field a ring is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldTag {
    Rational,
    Prime(u32),
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "rational"),
            FieldTag::Prime(p) => write!(f, "prime {p}"),
        }
    }
}

/// A commutative field of exact coefficients.
///
/// Elements do not know how to build a zero on their own (a prime field
/// element needs its modulus), so constructors take the field's context.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(value: i64, ctx: &Self::Ctx) -> Self;
    fn from_rational(value: &Rational, ctx: &Self::Ctx) -> Result<Self, ArithError>;
    fn tag(ctx: &Self::Ctx) -> FieldTag;
    /// The context this element lives in.
    fn context(&self) -> Self::Ctx;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ArithError>;

    fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = self.sub(rhs);
    }

    fn mul_assign(&mut self, rhs: &Self) {
        *self = self.mul(rhs);
    }

    /// Sign and magnitude used by the printer. The magnitude is either an
    /// integer or `a/b`.
    fn signed_repr(&self) -> (bool, String);
}
