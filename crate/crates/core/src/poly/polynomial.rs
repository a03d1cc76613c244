use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::Field;

use super::{Exponent, Monomial, MonomialOrder, PolyError, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<F> {
    pub coeff: F,
    pub mono: Monomial,
}

/// Sparse polynomial; terms strictly descending in the ring's order, no zero
/// coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    terms: Vec<Term<F>>,
}

pub fn same_ring<F: Field>(a: &Arc<Ring<F>>, b: &Arc<Ring<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// `a + factor * shift * b` over sorted term lists, dropping cancellations.
pub(crate) fn merge_scaled<F: Field>(
    order: &MonomialOrder,
    a: &[Term<F>],
    b: &[Term<F>],
    factor: &F,
    shift: Option<&Monomial>,
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|t| Term {
        coeff: t.coeff.mul(factor),
        mono: match shift {
            Some(s) => t.mono.mul(s),
            None => t.mono.clone(),
        },
    });
    let mut next_b = bi.next();
    while let Some(tb) = next_b.take() {
        while i < a.len() && order.compare(&a[i].mono, &tb.mono) == Ordering::Greater {
            out.push(a[i].clone());
            i += 1;
        }
        if i < a.len() && a[i].mono == tb.mono {
            let c = a[i].coeff.add(&tb.coeff);
            if !c.is_zero() {
                out.push(Term { coeff: c, mono: tb.mono });
            }
            i += 1;
        } else if !tb.coeff.is_zero() {
            out.push(tb);
        }
        next_b = bi.next();
    }
    out.extend_from_slice(&a[i..]);
    out
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring<F>>, c: F) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<Ring<F>>) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn monomial(ring: &Arc<Ring<F>>, coeff: F, mono: Monomial) -> Self {
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff, mono }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<Ring<F>>, index: usize) -> Self {
        Self::monomial(ring, ring.one(), Monomial::var(ring.nvars(), index, 1))
    }

    /// Canonicalizes an arbitrary list of terms.
    pub fn from_terms(ring: &Arc<Ring<F>>, mut terms: Vec<Term<F>>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff.add_assign(&t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted(ring: &Arc<Ring<F>>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|t| t.mono.degree());
        match it.next() {
            Some(d) => it.all(|e| e == d),
            None => true,
        }
    }

    /// Exponent-sum vector over the given blocks when every term agrees on
    /// it, `None` otherwise.
    pub fn multidegree(&self, blocks: &[std::ops::Range<usize>]) -> Option<Vec<u32>> {
        let degs = |t: &Term<F>| -> Vec<u32> {
            blocks.iter().map(|r| t.mono.partial_degree(r.clone())).collect()
        };
        let first = degs(self.terms.first()?);
        self.terms.iter().all(|t| degs(t) == first).then_some(first)
    }

    /// Whether any term uses one of the given variables.
    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .any(|t| vars.iter().any(|&v| t.mono.exponents()[v] > 0))
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let one = self.ring.one();
        Ok(Polynomial::from_sorted(
            &self.ring,
            merge_scaled(self.ring.order(), &self.terms, &other.terms, &one, None),
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let minus = self.ring.one().neg();
        Ok(Polynomial::from_sorted(
            &self.ring,
            merge_scaled(self.ring.order(), &self.terms, &other.terms, &minus, None),
        ))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let order = self.ring.order();
        let mut acc: Vec<Term<F>> = Vec::new();
        for t in &short.terms {
            acc = merge_scaled(order, &acc, &long.terms, &t.coeff, Some(&t.mono));
        }
        Ok(Polynomial::from_sorted(&self.ring, acc))
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, c: &F, m: &Monomial, other: &Self) -> Self {
        debug_assert!(same_ring(&self.ring, &other.ring));
        Polynomial::from_sorted(
            &self.ring,
            merge_scaled(self.ring.order(), &self.terms, &other.terms, c, Some(m)),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn evaluate(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.ring.nvars(), "point has wrong length");
        let mut acc = self.ring.zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(t.mono.exponents()) {
                for _ in 0..e {
                    v.mul_assign(x);
                }
            }
            acc.add_assign(&v);
        }
        acc
    }

    /// Replaces variable `i` by `images[i]`; all images live in one target
    /// ring.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::Arity {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(Polynomial::zero(&self.ring)),
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial<F>>> =
            images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut term = Polynomial::constant(&target, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let ctx = self.ring.ctx();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.exponents()[var] > 0)
            .map(|t| {
                let e = t.mono.exponents()[var];
                let mut exps: Vec<Exponent> = t.mono.exponents().to_vec();
                exps[var] -= 1;
                Term {
                    coeff: t.coeff.mul(&F::from_i64(e as i64, ctx)),
                    mono: Monomial::from_exponents(&exps),
                }
            })
            .filter(|t| !t.coeff.is_zero())
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `var_map[i]`.
    pub fn map_to_ring(&self, target: &Arc<Ring<F>>, var_map: &[usize]) -> Self {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = vec![0 as Exponent; n];
                for (i, &e) in t.mono.exponents().iter().enumerate() {
                    exps[var_map[i]] += e;
                }
                Term {
                    coeff: t.coeff.clone(),
                    mono: Monomial::from_exponents(&exps),
                }
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same variables, re-sorted for a ring that differs only in its order.
    pub fn reorder(&self, target: &Arc<Ring<F>>) -> Self {
        debug_assert_eq!(target.vars(), self.ring.vars());
        Polynomial::from_terms(target, self.terms.clone())
    }

    /// Maps coefficients into another field over a ring with the same
    /// variables.
    pub fn map_coeffs<G: Field>(
        &self,
        target: &Arc<Ring<G>>,
        f: impl Fn(&F) -> Result<G, crate::arith::ArithError>,
    ) -> Result<Polynomial<G>, crate::arith::ArithError> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: f(&t.coeff)?,
                    mono: t.mono.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_terms(target, terms))
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> std::hash::Hash for Polynomial<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<'a, F: Field> Add for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl<'a, F: Field> Sub for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl<'a, F: Field> Mul for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl<'a, F: Field> Neg for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&self.ring.one().neg())
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print_poly(self))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", super::print_poly(self))
    }
}

/// Product of two polynomials in the same ring.
pub fn poly_mul<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>, PolyError> {
    f.try_mul(g)
}

/// Multidegree of `f` over `blocks`, or `None` if `f` is not
/// multihomogeneous.
pub fn multidegree<F: Field>(f: &Polynomial<F>, blocks: &[std::ops::Range<usize>]) -> Option<Vec<u32>> {
    f.multidegree(blocks)
}
