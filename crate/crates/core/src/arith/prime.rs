use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{ArithError, Field, FieldTag, Rational};

/// Largest prime below 2^16; the default working prime of modular mode.
pub const DEFAULT_PRIME: u32 = 65521;
/// Second prime used to confirm modular results.
pub const SECONDARY_PRIME: u32 = 65519;

/// Deterministic trial-division primality test; moduli here fit in 32 bits.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A verified prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(Modulus(p as u32))
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl Default for Modulus {
    fn default() -> Self {
        Modulus(DEFAULT_PRIME)
    }
}

/// Residue class modulo a prime, stored as a representative in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    residue: u32,
    modulus: u32,
}

impl PrimeFieldElement {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        let p = modulus.0 as i64;
        PrimeFieldElement {
            residue: value.rem_euclid(p) as u32,
            modulus: modulus.0,
        }
    }

    pub fn residue(self) -> u32 {
        self.residue
    }

    pub fn modulus(self) -> Modulus {
        Modulus(self.modulus)
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn symmetric(self) -> i64 {
        let r = self.residue as i64;
        let p = self.modulus as i64;
        if r > p / 2 {
            r - p
        } else {
            r
        }
    }

    fn check(&self, rhs: &Self) {
        debug_assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
    }

    fn pow(self, mut e: u64) -> Self {
        let p = self.modulus as u64;
        let mut base = self.residue as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        PrimeFieldElement {
            residue: acc as u32,
            modulus: self.modulus,
        }
    }
}

fn big_mod(value: &BigInt, p: u32) -> u32 {
    value.mod_floor(&BigInt::from(p)).to_u32().expect("residue fits in u32")
}

/// Reduces a rational modulo `p`; fails when `p` divides the denominator.
pub(crate) fn rational_to_prime(
    value: &Rational,
    modulus: Modulus,
) -> Result<PrimeFieldElement, ArithError> {
    let p = modulus.0;
    let den = big_mod(value.denom(), p);
    if den == 0 {
        return Err(ArithError::BadPrime(p));
    }
    let num = PrimeFieldElement {
        residue: big_mod(value.numer(), p),
        modulus: p,
    };
    let den = PrimeFieldElement {
        residue: den,
        modulus: p,
    };
    num.div(&den)
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

impl Field for PrimeFieldElement {
    type Ctx = Modulus;

    fn zero(ctx: &Modulus) -> Self {
        PrimeFieldElement {
            residue: 0,
            modulus: ctx.0,
        }
    }

    fn one(ctx: &Modulus) -> Self {
        PrimeFieldElement {
            residue: 1,
            modulus: ctx.0,
        }
    }

    fn from_i64(value: i64, ctx: &Modulus) -> Self {
        PrimeFieldElement::new(value, *ctx)
    }

    fn from_rational(value: &Rational, ctx: &Modulus) -> Result<Self, ArithError> {
        rational_to_prime(value, *ctx)
    }

    fn tag(ctx: &Modulus) -> FieldTag {
        FieldTag::Prime(ctx.0)
    }

    fn context(&self) -> Modulus {
        Modulus(self.modulus)
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn is_one(&self) -> bool {
        self.residue == 1
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let s = self.residue as u64 + rhs.residue as u64;
        let p = self.modulus as u64;
        PrimeFieldElement {
            residue: if s >= p { (s - p) as u32 } else { s as u32 },
            modulus: self.modulus,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let residue = if self.residue >= rhs.residue {
            self.residue - rhs.residue
        } else {
            (self.residue as u64 + self.modulus as u64 - rhs.residue as u64) as u32
        };
        PrimeFieldElement {
            residue,
            modulus: self.modulus,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        PrimeFieldElement {
            residue: (self.residue as u64 * rhs.residue as u64 % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }

    fn neg(&self) -> Self {
        PrimeFieldElement {
            residue: if self.residue == 0 {
                0
            } else {
                self.modulus - self.residue
            },
            modulus: self.modulus,
        }
    }

    fn inv(&self) -> Result<Self, ArithError> {
        if self.residue == 0 {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.pow(self.modulus as u64 - 2))
    }

    fn signed_repr(&self) -> (bool, String) {
        let s = self.symmetric();
        (s < 0, s.unsigned_abs().to_string())
    }
}
