//! Buchberger's algorithm over sorted term vectors.
//!
//! Pairs are pruned with the Gebauer-Moeller installation of Buchberger's
//! coprime and chain criteria and selected by (sugar, lcm, age). Every
//! remainder is fully reduced and made monic.

use std::cmp::Ordering;

use crate::arith::Field;
use crate::poly::{merge_scaled, Monomial, MonomialOrder, Term};

use super::{Budget, GroebnerError};

pub(crate) type Terms<F> = Vec<Term<F>>;

/// Leading-monomial lookup table for divisions.
pub(crate) struct Reducers<'a, F: Field> {
    leads: Vec<(u64, &'a Monomial, &'a [Term<F>])>,
}

impl<'a, F: Field> Reducers<'a, F> {
    pub fn new(polys: impl IntoIterator<Item = &'a [Term<F>]>) -> Self {
        Reducers {
            leads: polys
                .into_iter()
                .filter(|p| !p.is_empty())
                .map(|p| (p[0].mono.support_mask(), &p[0].mono, p))
                .collect(),
        }
    }

    /// First reducer in list order whose leading monomial divides `m`.
    fn find(&self, m: &Monomial) -> Option<&'a [Term<F>]> {
        let mask = m.support_mask();
        self.leads
            .iter()
            .find(|(lm_mask, lm, _)| lm_mask & !mask == 0 && lm.divides(m))
            .map(|(_, _, p)| *p)
    }
}

/// Full reduction of `p` by `reducers`: the result has no term divisible by
/// any reducer's leading monomial.
pub(crate) fn reduce<F: Field>(
    p: Terms<F>,
    reducers: &Reducers<'_, F>,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Terms<F>, GroebnerError> {
    let mut rem: Terms<F> = Vec::new();
    let mut cur = p;
    let mut start = 0;
    while start < cur.len() {
        let lead = &cur[start];
        match reducers.find(&lead.mono) {
            Some(g) => {
                let shift = g[0].mono.quotient_of(&lead.mono).expect("divides");
                let factor = lead.coeff.div(&g[0].coeff).expect("nonzero lead").neg();
                cur = merge_scaled(order, &cur[start + 1..], &g[1..], &factor, Some(&shift));
                start = 0;
                if cur.len() > budget.max_terms {
                    return Err(GroebnerError::Budget {
                        resource: "terms",
                        limit: budget.max_terms as u64,
                    });
                }
            }
            None => {
                rem.push(lead.clone());
                start += 1;
            }
        }
    }
    Ok(rem)
}

fn make_monic<F: Field>(mut p: Terms<F>) -> Terms<F> {
    if let Some(lc) = p.first().map(|t| t.coeff.clone()) {
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            for t in &mut p {
                t.coeff.mul_assign(&inv);
            }
        }
    }
    p
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<'o, F: Field> {
    order: &'o MonomialOrder,
    polys: Vec<Terms<F>>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'o, F: Field> State<'o, F> {
    fn lead(&self, i: usize) -> &Monomial {
        &self.polys[i][0].mono
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.lead(i).lcm(self.lead(j));
        let si = self.sugar[i] + lcm.degree() - self.lead(i).degree();
        let sj = self.sugar[j] + lcm.degree() - self.lead(j).degree();
        Pair {
            i,
            j,
            lcm,
            sugar: si.max(sj),
        }
    }

    /// Gebauer-Moeller update after appending polynomial `h`.
    fn update(&mut self, h: usize) {
        let lh = self.lead(h).clone();
        let mut candidates: Vec<Pair> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| self.pair(g, h))
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = self.lead(p.i).is_coprime(&lh);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        // Buchberger's coprime criterion
        kept.retain(|p| !self.lead(p.i).is_coprime(&lh));

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = &polys[p.i][0].mono;
            let lj = &polys[p.j][0].mono;
            !(lh.divides(&p.lcm) && li.lcm(&lh) != p.lcm && lj.lcm(&lh) != p.lcm)
        });
        kept.reverse();
        self.pairs.extend(kept);

        for g in 0..h {
            if self.active[g] && lh.divides(self.lead(g)) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn push(&mut self, p: Terms<F>, sugar: u32) {
        self.polys.push(p);
        self.sugar.push(sugar);
        self.active.push(false);
        self.update(self.polys.len() - 1);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.compare(&a.lcm, &b.lcm))
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pair: &Pair) -> Terms<F> {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let sf = f[0].mono.quotient_of(&pair.lcm).expect("lcm");
        let sg = g[0].mono.quotient_of(&pair.lcm).expect("lcm");
        let fg = f[0].coeff.div(&g[0].coeff).expect("nonzero").neg();
        let shifted_f: Terms<F> = f[1..]
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                mono: t.mono.mul(&sf),
            })
            .collect();
        merge_scaled(self.order, &shifted_f, &g[1..], &fg, Some(&sg))
    }

    fn active_polys(&self) -> Vec<&[Term<F>]> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p.as_slice())
            .collect()
    }
}

/// Reduced Groebner basis of the span of `gens` under `order`, sorted by
/// ascending leading monomial. Input term vectors must already be sorted
/// under `order`.
pub(crate) fn groebner<F: Field>(
    gens: Vec<Terms<F>>,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Vec<Terms<F>>, GroebnerError> {
    let mut inputs: Vec<Terms<F>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    inputs.sort_by(|a, b| order.compare(&a[0].mono, &b[0].mono));

    let mut st = State {
        order,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in inputs {
        let reduced = {
            let act = st.active_polys();
            reduce(g, &Reducers::new(act), order, budget)?
        };
        if reduced.is_empty() {
            continue;
        }
        let sugar = reduced.iter().map(|t| t.mono.degree()).max().unwrap_or(0);
        if reduced[0].mono.is_one() {
            return Ok(vec![make_monic(reduced)]);
        }
        st.push(make_monic(reduced), sugar);
    }

    let mut processed: u64 = 0;
    while let Some(pair) = st.select() {
        processed += 1;
        if processed > budget.max_pair_reductions {
            return Err(GroebnerError::Budget {
                resource: "pair reductions",
                limit: budget.max_pair_reductions,
            });
        }
        let s = st.spoly(&pair);
        let r = {
            let act = st.active_polys();
            reduce(s, &Reducers::new(act), order, budget)?
        };
        if r.is_empty() {
            continue;
        }
        if r[0].mono.is_one() {
            return Ok(vec![make_monic(r)]);
        }
        st.push(make_monic(r), pair.sugar);
    }

    // interreduce: leads of active elements are already pairwise
    // non-divisible, so only tails need work
    let mut basis: Vec<Terms<F>> = st
        .polys
        .iter()
        .zip(&st.active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p.clone())
        .collect();
    basis.sort_by(|a, b| order.compare(&a[0].mono, &b[0].mono));
    let mut out = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others = Reducers::new(
            basis
                .iter()
                .enumerate()
                .filter(|(m, _)| *m != k)
                .map(|(_, p)| p.as_slice()),
        );
        let tail = reduce(basis[k][1..].to_vec(), &others, order, budget)?;
        let mut p = Vec::with_capacity(tail.len() + 1);
        p.push(basis[k][0].clone());
        p.extend(tail);
        out.push(make_monic(p));
    }
    debug_assert!(out.windows(2).all(|w| order.compare(&w[0][0].mono, &w[1][0].mono) == Ordering::Less));
    Ok(out)
}
