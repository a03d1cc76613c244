use std::sync::{Arc, RwLock};

use crate::arith::Field;
use crate::poly::{same_ring, Monomial, MonomialOrder, PolyError, Polynomial, Ring};

use super::engine::{self, Reducers};
use super::{Budget, GroebnerError};

/// A reduced Groebner basis together with the ring (and order) it is
/// reduced for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<Ring<F>>,
    polys: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.len() == 1 && p.terms()[0].mono.is_one())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().expect("nonzero basis element").clone())
            .collect()
    }

    /// Remainder of `f` on division by the basis; zero iff `f` is in the
    /// ideal.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>, GroebnerError> {
        if f.ring().vars() != self.ring.vars() || f.ring().ctx() != self.ring.ctx() {
            return Err(PolyError::RingMismatch.into());
        }
        let f = if same_ring(f.ring(), &self.ring) {
            f.clone()
        } else {
            f.reorder(&self.ring)
        };
        let reducers = Reducers::new(self.polys.iter().map(|p| p.terms()));
        let r = engine::reduce(f.into_terms(), &reducers, self.ring.order(), &Budget::default())?;
        Ok(Polynomial::from_terms(&self.ring, r))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

type Cache<F> = Arc<RwLock<Vec<(MonomialOrder, Arc<GroebnerBasis<F>>)>>>;

/// Ideal given by generators, with reduced Groebner bases cached per order.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<Ring<F>>,
    gens: Vec<Polynomial<F>>,
    budget: Budget,
    cache: Cache<F>,
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.gens.iter().map(|g| g.to_string())).finish()
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; an empty list is the zero ideal.
    pub fn new(ring: &Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Result<Self, GroebnerError> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !same_ring(g.ring(), ring) {
                return Err(PolyError::RingMismatch.into());
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            budget: Budget::default(),
            cache: Arc::new(RwLock::new(Vec::new())),
        })
    }

    pub fn unit(ring: &Arc<Ring<F>>) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Ideal::new(ring, Vec::new()).expect("same ring")
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        if budget != self.budget {
            self.budget = budget;
        }
        self
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn derived(&self, ring: &Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Result<Self, GroebnerError> {
        Ok(Ideal::new(ring, gens)?.with_budget(self.budget))
    }

    fn seed(&self, basis: GroebnerBasis<F>) {
        let mut c = self.cache.write().expect("cache lock");
        if !c.iter().any(|(o, _)| o == basis.order()) {
            c.push((basis.order().clone(), Arc::new(basis)));
        }
    }

    /// Reduced Groebner basis under the ring's active order.
    pub fn groebner_basis(&self) -> Result<Arc<GroebnerBasis<F>>, GroebnerError> {
        self.groebner_basis_in(self.ring.order())
    }

    pub fn groebner_basis_in(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis<F>>, GroebnerError> {
        if let Some((_, gb)) = self.cache.read().expect("cache lock").iter().find(|(o, _)| o == order) {
            return Ok(gb.clone());
        }
        let ring = if self.ring.order() == order {
            self.ring.clone()
        } else {
            self.ring.with_order(order.clone())?
        };
        let gens = self.gens.iter().map(|g| g.reorder(&ring).into_terms()).collect();
        let polys = engine::groebner(gens, order, &self.budget)?
            .into_iter()
            .map(|t| Polynomial::from_terms(&ring, t))
            .collect();
        let gb = GroebnerBasis { ring, polys };
        self.seed(gb);
        let cached = self.cache.read().expect("cache lock");
        Ok(cached.iter().find(|(o, _)| o == order).expect("just seeded").1.clone())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool, GroebnerError> {
        self.groebner_basis()?.contains(f)
    }

    pub fn is_unit(&self) -> Result<bool, GroebnerError> {
        if self.gens.is_empty() {
            return Ok(false);
        }
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        Ok(self.groebner_basis()?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_subset_of(&self, other: &Ideal<F>) -> Result<bool, GroebnerError> {
        let gb = other.groebner_basis()?;
        for g in &self.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `I + J`.
    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(PolyError::RingMismatch.into());
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        self.derived(&self.ring, gens)
    }

    /// Re-expresses the ideal in `target`, matching variables by name.
    pub fn transfer(&self, target: &Arc<Ring<F>>) -> Result<Ideal<F>, GroebnerError> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        if self.ring.ctx() != target.ctx() {
            return Err(PolyError::RingMismatch.into());
        }
        let map = self
            .ring
            .vars()
            .iter()
            .map(|v| {
                target.var_index(v).ok_or_else(|| {
                    GroebnerError::Invalid(format!("variable `{v}` missing from target ring"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let gens = self.gens.iter().map(|g| g.map_to_ring(target, &map)).collect();
        self.derived(target, gens)
    }
}

/// Remainder of `f` on division by `basis` (first divisor in list order
/// wins) under `order`.
pub fn normal_form<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: &MonomialOrder,
) -> Result<Polynomial<F>, GroebnerError> {
    let ring = f.ring().with_order(order.clone())?;
    for g in basis {
        if g.ring().vars() != ring.vars() || g.ring().ctx() != ring.ctx() {
            return Err(PolyError::RingMismatch.into());
        }
    }
    let basis: Vec<Polynomial<F>> = basis.iter().map(|g| g.reorder(&ring)).collect();
    let reducers = Reducers::new(basis.iter().map(|p| p.terms()));
    let r = engine::reduce(f.reorder(&ring).into_terms(), &reducers, order, &Budget::default())?;
    Ok(Polynomial::from_terms(&ring, r))
}

/// `S(f, g)` for nonzero `f`, `g` in the same ring.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (tf, tg) = (f.leading_term().expect("nonzero"), g.leading_term().expect("nonzero"));
    let lcm = tf.mono.lcm(&tg.mono);
    let a = f.mul_monomial(&tf.mono.quotient_of(&lcm).unwrap()).scale(&tf.coeff.inv().unwrap());
    let b = g.mul_monomial(&tg.mono.quotient_of(&lcm).unwrap()).scale(&tg.coeff.inv().unwrap());
    &a - &b
}

/// Reduced Groebner basis of `ideal` under `order`.
pub fn buchberger<F: Field>(
    ideal: &Ideal<F>,
    order: &MonomialOrder,
) -> Result<Arc<GroebnerBasis<F>>, GroebnerError> {
    ideal.groebner_basis_in(order)
}

fn fresh_name<F: Field>(ring: &Ring<F>, base: &str) -> String {
    let mut name = base.to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// `I ∩ K[remaining variables]`, in a degrevlex ring over the remaining
/// variables (original relative order).
pub fn eliminate<F: Field>(ideal: &Ideal<F>, drop: &[usize]) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if drop.iter().any(|&d| d >= n) {
        return Err(GroebnerError::Invalid("eliminated variable out of range".into()));
    }
    let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
    let mut dropped: Vec<usize> = drop.to_vec();
    dropped.sort_unstable();
    dropped.dedup();
    let k = dropped.len();

    let perm: Vec<usize> = dropped.iter().chain(keep.iter()).copied().collect();
    let mut position = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        position[old] = new;
    }
    let names: Vec<&str> = perm.iter().map(|&i| ring.vars()[i].as_str()).collect();
    let order = MonomialOrder::eliminating_first(k, n);
    let elim_ring = Ring::with_order_and_blocks(&names, ring.ctx().clone(), order.clone(), None)?;
    let gens: Vec<_> = ideal.gens().iter().map(|g| g.map_to_ring(&elim_ring, &position).into_terms()).collect();
    let basis = engine::groebner(gens, &order, &ideal.budget())?;

    let keep_names: Vec<&str> = keep.iter().map(|&i| ring.vars()[i].as_str()).collect();
    let out_ring = Ring::new(&keep_names, ring.ctx().clone())?;
    let back: Vec<usize> = (0..n).map(|j| j.saturating_sub(k)).collect();
    let polys: Vec<Polynomial<F>> = basis
        .into_iter()
        .filter(|t| t.iter().all(|term| term.mono.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|t| Polynomial::from_terms(&elim_ring, t).map_to_ring(&out_ring, &back))
        .collect();
    let out = ideal.derived(&out_ring, polys.clone())?;
    // the block order restricts to degrevlex on the kept block, so the
    // surviving elements already form the reduced basis there
    out.seed(GroebnerBasis {
        ring: out_ring.clone(),
        polys,
    });
    Ok(out)
}

pub fn ideal_member<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>) -> Result<bool, GroebnerError> {
    ideal.contains(f)
}

/// Adds an auxiliary variable in front of the ring.
fn with_aux<F: Field>(ring: &Arc<Ring<F>>) -> Result<(Arc<Ring<F>>, Vec<usize>), GroebnerError> {
    let t = fresh_name(ring, "_t");
    let mut names = vec![t.as_str()];
    names.extend(ring.vars().iter().map(|s| s.as_str()));
    let r = Ring::new(&names, ring.ctx().clone())?;
    let shift: Vec<usize> = (1..=ring.nvars()).collect();
    Ok((r, shift))
}

/// `(I : f^∞)`, by eliminating `t` from `I + (1 - t f)`.
pub fn colon_saturate<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::Invalid("saturation by the zero polynomial".into()));
    }
    if !same_ring(f.ring(), ideal.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    if f.is_constant() || ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let (aux, shift) = with_aux(ideal.ring())?;
    let t = Polynomial::var(&aux, 0);
    let mut gens: Vec<_> = ideal.gens().iter().map(|g| g.map_to_ring(&aux, &shift)).collect();
    gens.push(&Polynomial::one(&aux) - &(&t * &f.map_to_ring(&aux, &shift)));
    let big = ideal.derived(&aux, gens)?;
    eliminate(&big, &[0])?.transfer(ideal.ring())
}

/// `I ∩ J`, by eliminating `t` from `t I + (1 - t) J`.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    if i.is_zero() || j.is_unit()? {
        return Ok(i.clone());
    }
    if j.is_zero() || i.is_unit()? {
        return Ok(j.clone());
    }
    if i.is_subset_of(j)? {
        return Ok(i.clone());
    }
    if j.is_subset_of(i)? {
        return Ok(j.clone());
    }
    let (aux, shift) = with_aux(i.ring())?;
    let t = Polynomial::var(&aux, 0);
    let one_minus_t = &Polynomial::one(&aux) - &t;
    let mut gens: Vec<_> = i.gens().iter().map(|g| &t * &g.map_to_ring(&aux, &shift)).collect();
    gens.extend(j.gens().iter().map(|g| &one_minus_t * &g.map_to_ring(&aux, &shift)));
    let big = i.derived(&aux, gens)?;
    eliminate(&big, &[0])?.transfer(i.ring())
}

/// Saturation by the irrelevant ideal: `∩_i (I : x_i^∞)`.
pub fn saturate_irrelevant<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
    if ideal.is_zero() || ideal.is_unit()? {
        return Ok(ideal.clone());
    }
    let ring = ideal.ring();
    let mut colons = Vec::with_capacity(ring.nvars());
    for v in 0..ring.nvars() {
        let q = colon_saturate(ideal, &Polynomial::var(ring, v))?;
        // I ⊆ I^sat ⊆ (I : x_v^∞), so equality with I settles it
        if q.is_subset_of(ideal)? {
            return Ok(ideal.clone());
        }
        colons.push(q);
    }
    let mut acc = colons.remove(0);
    for q in colons {
        acc = intersect(&acc, &q)?;
    }
    Ok(acc)
}

/// Equality of ideals via their reduced Groebner bases.
pub fn ideal_equal<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<bool, GroebnerError> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    let (a, b) = (i.groebner_basis()?, j.groebner_basis()?);
    Ok(a.polys() == b.polys())
}
