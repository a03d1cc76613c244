//! Emptiness certificates for `V(I + J)` by linear algebra in one degree
//! modulo a Groebner basis of `I`.
//!
//! If the normal forms of the products `a * p` (with `p` in `J` and `a` a
//! monomial) span every standard monomial of degree `D`, then `I + J`
//! contains all forms of degree `D` and the projective zero set is empty.

use std::collections::HashMap;

use crate::arith::Field;
use crate::groebner::GroebnerBasis;
use crate::poly::{Monomial, Polynomial};

use super::segre::block_monomials;

/// Largest number of monomials of one degree a table is built for.
const MAX_MONOMIALS: usize = 20_000;
/// Largest `monomials x standard monomials` table.
const MAX_TABLE: usize = 8_000_000;

/// Normal forms modulo a Groebner basis of every monomial of one degree,
/// as dense vectors over the standard monomials of that degree.
struct DegreeTable<F: Field> {
    index: HashMap<Monomial, usize>,
    forms: Vec<Vec<F>>,
    standard: usize,
}

impl<F: Field> DegreeTable<F> {
    fn build(gb: &GroebnerBasis<F>, degree: u32) -> Option<Self> {
        let ring = gb.ring();
        let nvars = ring.nvars();
        let ctx = ring.ctx();
        let mut monos: Vec<Monomial> = block_monomials(nvars, degree)
            .iter()
            .map(|e| Monomial::from_exponents(e))
            .collect();
        if monos.len() > MAX_MONOMIALS {
            return None;
        }
        let order = gb.order();
        monos.sort_by(|a, b| order.compare(a, b));
        let reducer = |m: &Monomial| {
            gb.polys()
                .iter()
                .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
        };
        let standard = monos.iter().filter(|m| reducer(m).is_none()).count();
        if monos.len().saturating_mul(standard.max(1)) > MAX_TABLE {
            return None;
        }
        let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut forms: Vec<Vec<F>> = Vec::with_capacity(monos.len());
        let mut next_standard = 0;
        for m in &monos {
            let mut v = vec![F::zero(ctx); standard];
            match reducer(m) {
                None => {
                    v[next_standard] = F::one(ctx);
                    next_standard += 1;
                }
                Some(g) => {
                    let lead = g.leading_term().expect("nonzero");
                    let q = lead.mono.quotient_of(m).expect("divides");
                    let inv = lead.coeff.inv().expect("nonzero");
                    for t in &g.terms()[1..] {
                        // tail terms times q are smaller than m, so their
                        // forms are already known
                        let c = t.coeff.mul(&inv).neg();
                        let j = *index.get(&t.mono.mul(&q))?;
                        for (x, y) in v.iter_mut().zip(&forms[j]) {
                            if !y.is_zero() {
                                x.add_assign(&c.mul(y));
                            }
                        }
                    }
                }
            }
            forms.push(v);
        }
        Some(DegreeTable { index, forms, standard })
    }

    /// Normal form of `a * p` for a monomial `a`; `None` unless `a * p` is
    /// homogeneous of the table's degree.
    fn normal_form(&self, a: &Monomial, p: &Polynomial<F>, ctx: &F::Ctx) -> Option<Vec<F>> {
        let mut v = vec![F::zero(ctx); self.standard];
        for t in p.terms() {
            let row = &self.forms[*self.index.get(&t.mono.mul(a))?];
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.add_assign(&t.coeff.mul(y));
                }
            }
        }
        Some(v)
    }
}

/// Row echelon form with unit pivots.
struct Echelon<F: Field> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Echelon<F> {
    /// Adds `v` to the span; returns whether the rank grew.
    fn insert(&mut self, mut v: Vec<F>) -> bool {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let c = v[*pivot].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.sub_assign(&c.mul(y));
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("nonzero");
        for x in &mut v {
            x.mul_assign(&inv);
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Outcome of a successful certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct EmptyCertificate {
    pub degree: u32,
    pub samples: usize,
}

/// Tries to show that `V(I + J)` is empty, where `gb` is a Groebner basis
/// of `I` and `next` draws homogeneous elements of `J` of degree `delta`.
/// Degrees `delta ..= delta + extra` are tried; at each, elements are drawn
/// until `stale` consecutive ones add nothing or `max_samples` is reached.
pub(crate) fn certify_empty<F: Field>(
    gb: &GroebnerBasis<F>,
    delta: u32,
    extra: u32,
    max_samples: usize,
    stale: usize,
    mut next: impl FnMut() -> Option<Polynomial<F>>,
) -> Option<EmptyCertificate> {
    let ring = gb.ring();
    let ctx = ring.ctx();
    let mut samples: Vec<Polynomial<F>> = Vec::new();
    for degree in delta..=delta + extra {
        let table = DegreeTable::build(gb, degree)?;
        if table.standard == 0 {
            return Some(EmptyCertificate {
                degree,
                samples: samples.len(),
            });
        }
        let shifts: Vec<Monomial> = block_monomials(ring.nvars(), degree - delta)
            .iter()
            .map(|e| Monomial::from_exponents(e))
            .collect();
        let mut ech = Echelon { rows: Vec::new() };
        let mut idle = 0;
        let mut k = 0;
        while idle < stale {
            if k == samples.len() {
                if samples.len() >= max_samples {
                    break;
                }
                match next() {
                    Some(p) => samples.push(p.reorder(ring)),
                    None => break,
                }
            }
            let p = &samples[k];
            k += 1;
            let mut grew = false;
            for a in &shifts {
                if ech.insert(table.normal_form(a, p, ctx)?) {
                    grew = true;
                    if ech.rows.len() == table.standard {
                        return Some(EmptyCertificate {
                            degree,
                            samples: samples.len(),
                        });
                    }
                }
            }
            idle = if grew { 0 } else { idle + 1 };
        }
    }
    None
}
