use std::sync::Arc;

use crate::arith::Field;
use crate::groebner::{eliminate, Budget, Ideal};
use crate::poly::{Polynomial, Ring};

use super::{ambient_ring, GeometryError, Parametrization, Presentation, VarietyPresentation};

/// Ideal of a Hadamard product in `K[x0, ..., xn]`.
#[derive(Clone, Debug)]
pub struct HadamardResult<F: Field> {
    pub ideal: Ideal<F>,
    pub factors: Vec<String>,
    /// The ideal cuts out the closure of the set of coordinatewise products.
    pub closure: bool,
}

/// One factor of a binary product, as it enters the elimination ring.
enum Operand<'a, F: Field> {
    Implicit(Ideal<F>),
    Parametric(&'a Parametrization<F>),
}

impl<F: Field> Operand<'_, F> {
    fn block_size(&self) -> usize {
        match self {
            Operand::Implicit(i) => i.ring().nvars(),
            Operand::Parametric(p) => p.params().nvars(),
        }
    }

    /// Generators living in the block and the block's coordinate functions.
    fn embed(&self, ring: &Arc<Ring<F>>, offset: usize) -> (Vec<Polynomial<F>>, Vec<Polynomial<F>>) {
        let map: Vec<usize> = (offset..offset + self.block_size()).collect();
        match self {
            Operand::Implicit(i) => (
                i.gens().iter().map(|g| g.map_to_ring(ring, &map)).collect(),
                map.iter().map(|&v| Polynomial::var(ring, v)).collect(),
            ),
            Operand::Parametric(p) => (Vec::new(), p.forms().iter().map(|f| f.map_to_ring(ring, &map)).collect()),
        }
    }
}

fn operand<'a, F: Field>(v: &'a VarietyPresentation<F>, x: &Arc<Ring<F>>) -> Result<Operand<'a, F>, GeometryError> {
    Ok(match v.kind() {
        Presentation::Parametric(p) => Operand::Parametric(p),
        Presentation::Implicit(i) => Operand::Implicit(i.transfer(x)?),
    })
}

/// `I(X * Y)` from the ring `K[a-block, b-block, x]` by eliminating both
/// factor blocks from the factor generators plus `x_j - A_j B_j`.
fn binary<F: Field>(
    a: &Operand<'_, F>,
    b: &Operand<'_, F>,
    x: &Arc<Ring<F>>,
    budget: Budget,
) -> Result<Ideal<F>, GeometryError> {
    let (na, nb) = (a.block_size(), b.block_size());
    let mut names: Vec<String> = (0..na).map(|j| format!("_a{j}")).collect();
    names.extend((0..nb).map(|j| format!("_b{j}")));
    names.extend(x.vars().iter().cloned());
    let ring = Ring::new(&names, x.ctx().clone())?;
    let (mut gens, ca) = a.embed(&ring, 0);
    let (gb, cb) = b.embed(&ring, na);
    gens.extend(gb);
    for (j, (fa, fb)) in ca.iter().zip(&cb).enumerate() {
        gens.push(&Polynomial::var(&ring, na + nb + j) - &(fa * fb));
    }
    let big = Ideal::new(&ring, gens)?.with_budget(budget);
    let drop: Vec<usize> = (0..na + nb).collect();
    Ok(eliminate(&big, &drop)?.transfer(x)?.with_budget(budget))
}

/// Hadamard product of two or more subvarieties of `P^n`, associating to the
/// left.
pub fn hadamard_product<F: Field>(
    factors: &[VarietyPresentation<F>],
    n: usize,
    budget: Budget,
) -> Result<HadamardResult<F>, GeometryError> {
    if factors.len() < 2 {
        return Err(GeometryError::Invalid("a Hadamard product needs at least two factors".into()));
    }
    if let Some(bad) = factors.iter().find(|f| f.ambient() != n) {
        return Err(GeometryError::AmbientMismatch {
            expected: n,
            got: bad.ambient(),
        });
    }
    let x = ambient_ring(n, factors[0].ambient_ring().ctx());
    let mut acc = binary(&operand(&factors[0], &x)?, &operand(&factors[1], &x)?, &x, budget)?;
    for f in &factors[2..] {
        acc = binary(&Operand::Implicit(acc), &operand(f, &x)?, &x, budget)?;
    }
    Ok(HadamardResult {
        ideal: acc,
        factors: factors.iter().map(|f| f.name().to_string()).collect(),
        closure: true,
    })
}
