//! Projective invariants read off the Hilbert series of a leading-term
//! ideal.

use serde::Serialize;

use crate::arith::Field;
use crate::groebner::{GroebnerError, Ideal};
use crate::poly::{Monomial, MonomialOrder};

/// Default number of Hilbert-function values reported.
pub const DEFAULT_TRUNCATION: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    /// `n` for a subscheme of `P^n`.
    pub ambient: usize,
    /// Projective dimension, `-1` for the empty set.
    pub dimension: i64,
    pub degree: Option<u64>,
    /// `HF(0), ..., HF(T)`.
    pub hilbert_function: Vec<u64>,
    /// Numerator of the Hilbert series over `(1 - t)^(n + 1)`, ascending in `t`.
    pub hilbert_numerator: Vec<i64>,
}

impl InvariantReport {
    pub fn is_empty(&self) -> bool {
        self.dimension < 0
    }

    pub fn hf(&self, t: usize) -> Option<u64> {
        self.hilbert_function.get(t).copied()
    }
}

type UniPoly = Vec<i64>;

fn trim(mut p: UniPoly) -> UniPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add(a: &[i64], b: &[i64]) -> UniPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn mul(a: &[i64], b: &[i64]) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn shift(a: &[i64], by: usize) -> UniPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; by];
    out.extend_from_slice(a);
    out
}

fn one_minus_t_pow(d: u32) -> UniPoly {
    let mut p = vec![0; d as usize + 1];
    p[0] += 1;
    p[d as usize] -= 1;
    trim(p)
}

/// Drops generators divisible by another generator (and duplicates).
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> UniPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![1], |acc, g| mul(&acc, &one_minus_t_pow(g.degree())));
    }
    // pivot on the variable shared by the most generators, at its median
    // positive exponent
    let (var, _) = (0..nvars)
        .map(|v| (v, gens.iter().filter(|g| g.exponents()[v] > 0).count()))
        .max_by_key(|&(v, c)| (c, std::cmp::Reverse(v)))
        .expect("at least one variable");
    let mut exps: Vec<u16> = gens.iter().map(|g| g.exponents()[var]).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let pivot = Monomial::var(nvars, var, exps[(exps.len() - 1) / 2]);

    let mut with_pivot: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.gcd(&pivot).quotient_of(g).expect("gcd divides"))
        .collect();
    let a = numerator_rec(minimalize(with_pivot), nvars);
    let b = numerator_rec(minimalize(colon), nvars);
    add(&a, &shift(&b, pivot.degree() as usize))
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^nvars` of
/// `K[x] / M` for the monomial ideal `M`, coefficients ascending in `t`.
/// The unit ideal gives the zero polynomial.
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    numerator_rec(minimalize(gens.to_vec()), nvars)
}

/// Divides out every factor `(1 - t)`; returns the quotient and the number
/// of factors removed.
fn strip_one_minus_t(num: &[i64]) -> (UniPoly, usize) {
    let mut q = trim(num.to_vec());
    let mut k = 0;
    while !q.is_empty() && q.iter().sum::<i64>() == 0 {
        // q = (1 - t) * r: r_i = sum_{j <= i} q_j
        let mut r = Vec::with_capacity(q.len() - 1);
        let mut acc = 0;
        for c in &q[..q.len() - 1] {
            acc += c;
            r.push(acc);
        }
        q = trim(r);
        k += 1;
    }
    (q, k)
}

/// Projective dimension and degree from a Hilbert-series numerator over
/// `(1 - t)^nvars`.
pub fn dimension_and_degree(num: &[i64], nvars: usize) -> (i64, Option<u64>) {
    let (q, k) = strip_one_minus_t(num);
    if q.is_empty() || k >= nvars {
        return (-1, None);
    }
    let deg: i64 = q.iter().sum();
    (nvars as i64 - k as i64 - 1, Some(deg as u64))
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) / (i + 1))
}

/// `HF(0..=truncation)` by expanding `N(t) / (1 - t)^nvars`.
pub fn hilbert_function(num: &[i64], nvars: usize, truncation: usize) -> Vec<u64> {
    (0..=truncation as i128)
        .map(|t| {
            let v: i128 = num
                .iter()
                .enumerate()
                .map(|(j, &c)| {
                    let m = t - j as i128;
                    if m < 0 {
                        0
                    } else if nvars == 0 {
                        i128::from(m == 0) * c as i128
                    } else {
                        c as i128 * binomial(m + nvars as i128 - 1, nvars as i128 - 1)
                    }
                })
                .sum();
            u64::try_from(v).expect("Hilbert function values are nonnegative")
        })
        .collect()
}

fn report(leads: &[Monomial], nvars: usize, truncation: usize) -> InvariantReport {
    let num = hilbert_numerator(leads, nvars);
    let (dimension, degree) = dimension_and_degree(&num, nvars);
    InvariantReport {
        ambient: nvars.saturating_sub(1),
        dimension,
        degree,
        hilbert_function: hilbert_function(&num, nvars, truncation),
        hilbert_numerator: num,
    }
}

/// Invariants of the projective subscheme cut out by a homogeneous ideal,
/// read from its degrevlex leading-term ideal.
pub fn variety_invariants<F: Field>(ideal: &Ideal<F>, truncation: usize) -> Result<InvariantReport, GroebnerError> {
    variety_invariants_in(ideal, &MonomialOrder::DegRevLex, truncation)
}

pub fn variety_invariants_in<F: Field>(
    ideal: &Ideal<F>,
    order: &MonomialOrder,
    truncation: usize,
) -> Result<InvariantReport, GroebnerError> {
    if !ideal.is_homogeneous() {
        return Err(GroebnerError::Invalid("ideal is not homogeneous".into()));
    }
    let gb = ideal.groebner_basis_in(order)?;
    Ok(report(&gb.leading_monomials(), ideal.ring().nvars(), truncation))
}

/// For each `t <= truncation`, whether `HF_product(t)` equals the product of
/// the factors' values.
pub fn hf_product_check(factors: &[InvariantReport], product: &InvariantReport, truncation: usize) -> Vec<bool> {
    (0..=truncation)
        .map(|t| {
            let expected = factors
                .iter()
                .map(|f| f.hf(t).map(u128::from))
                .try_fold(1u128, |acc, v| v.map(|v| acc * v));
            match (expected, product.hf(t)) {
                (Some(e), Some(p)) => e == u128::from(p),
                _ => false,
            }
        })
        .collect()
}
