use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use serde::Serialize;
use smallvec::SmallVec;

pub type Exponent = u16;

/// Dense exponent vector with its total degree cached.
#[derive(Clone, Debug)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 24]>,
    degree: u32,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize, power: Exponent) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = power;
        m.degree = power as u32;
        m
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Sum of exponents over the index range.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[Exponent; 24]> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[Exponent; 24]> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i mod 64` is set when variable `i` occurs. A clear bit in
    /// `other`'s mask that is set in ours rules out divisibility.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }
}

/// A monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Product of degree-reverse-lexicographic orders on consecutive blocks
    /// of the given sizes. Any monomial involving a first-block variable is
    /// larger than every monomial free of them, so this eliminates the first
    /// block.
    Block(Vec<usize>),
}

fn degrevlex(a: &[Exponent], b: &[Exponent], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegRevLex => degrevlex(&a.exps, &b.exps, a.degree, b.degree),
            MonomialOrder::Block(sizes) => {
                let mut start = 0;
                for &len in sizes {
                    let r = start..start + len;
                    let ord = degrevlex(
                        &a.exps[r.clone()],
                        &b.exps[r.clone()],
                        a.partial_degree(r.clone()),
                        b.partial_degree(r),
                    );
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    start += len;
                }
                Ordering::Equal
            }
        }
    }

    /// Elimination order for a ring whose first `k` variables are dropped.
    pub fn eliminating_first(k: usize, nvars: usize) -> Self {
        if k == 0 || k == nvars {
            MonomialOrder::DegRevLex
        } else {
            MonomialOrder::Block(vec![k, nvars - k])
        }
    }

    pub fn validate(&self, nvars: usize) -> bool {
        match self {
            MonomialOrder::Block(sizes) => {
                sizes.iter().sum::<usize>() == nvars && sizes.iter().all(|&s| s > 0)
            }
            _ => true,
        }
    }
}

/// Three-way comparison of two monomials under `order`.
pub fn compare_monomials(order: &MonomialOrder, m1: &Monomial, m2: &Monomial) -> Ordering {
    order.compare(m1, m2)
}
