use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Field;
use crate::groebner::{eliminate, Ideal};
use crate::linalg::Matrix;
use crate::poly::{same_ring, Monomial, Polynomial, Ring};

use super::{GeometryError, ProjectivePoint, SamplingRange};

/// `K[x0, ..., xn]`, the coordinate ring of `P^n`.
pub fn ambient_ring<F: Field>(n: usize, ctx: &F::Ctx) -> Arc<Ring<F>> {
    Ring::indexed("x", n + 1, ctx.clone()).expect("indexed names are valid")
}

/// Coordinate forms of one common degree in a parameter ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization<F: Field> {
    params: Arc<Ring<F>>,
    forms: Vec<Polynomial<F>>,
    degree: u32,
}

impl<F: Field> Parametrization<F> {
    pub fn new(params: &Arc<Ring<F>>, forms: Vec<Polynomial<F>>) -> Result<Self, GeometryError> {
        if forms.is_empty() {
            return Err(GeometryError::Invalid("no coordinate forms".into()));
        }
        if forms.iter().any(|f| !same_ring(f.ring(), params)) {
            return Err(crate::poly::PolyError::RingMismatch.into());
        }
        let mut degree = None;
        for f in forms.iter().filter(|f| !f.is_zero()) {
            if !f.is_homogeneous() {
                return Err(GeometryError::DegreeMismatch);
            }
            match degree {
                None => degree = f.degree(),
                Some(d) if Some(d) != f.degree() => return Err(GeometryError::DegreeMismatch),
                _ => {}
            }
        }
        let degree = degree.ok_or_else(|| GeometryError::Degenerate("all coordinate forms vanish".into()))?;
        Ok(Parametrization {
            params: params.clone(),
            forms,
            degree,
        })
    }

    pub fn params(&self) -> &Arc<Ring<F>> {
        &self.params
    }

    pub fn forms(&self) -> &[Polynomial<F>] {
        &self.forms
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of parameters minus one.
    pub fn source_dim(&self) -> usize {
        self.params.nvars() - 1
    }

    /// Monomials of the common degree, lexicographically descending.
    pub fn monomial_basis(&self) -> Vec<Monomial> {
        super::segre::block_monomials(self.params.nvars(), self.degree)
            .into_iter()
            .map(|e| Monomial::from_exponents(&e))
            .collect()
    }

    /// `(n+1) x C(r+d, d)` matrix of form coefficients.
    pub fn coefficient_matrix(&self) -> Matrix<F> {
        let basis = self.monomial_basis();
        let ctx = self.params.ctx();
        let rows = self
            .forms
            .iter()
            .map(|f| {
                basis
                    .iter()
                    .map(|m| {
                        f.terms()
                            .iter()
                            .find(|t| &t.mono == m)
                            .map_or_else(|| F::zero(ctx), |t| t.coeff.clone())
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(ctx, rows).expect("rectangular")
    }

    /// Projective dimension of the linear span of the image.
    pub fn span_dim(&self) -> usize {
        self.coefficient_matrix().rank() - 1
    }

    pub fn evaluate(&self, at: &[F]) -> Vec<F> {
        self.forms.iter().map(|f| f.evaluate(at)).collect()
    }
}

#[derive(Clone, Debug)]
pub enum Presentation<F: Field> {
    Parametric(Parametrization<F>),
    /// Homogeneous ideal in `K[x0, ..., xn]`.
    Implicit(Ideal<F>),
}

/// A named subvariety of `P^n`.
#[derive(Clone, Debug)]
pub struct VarietyPresentation<F: Field> {
    name: String,
    ambient: usize,
    kind: Presentation<F>,
    implicit: OnceLock<Ideal<F>>,
}

impl<F: Field> VarietyPresentation<F> {
    pub fn parametric(name: &str, ambient: usize, param: Parametrization<F>) -> Result<Self, GeometryError> {
        if param.forms.len() != ambient + 1 {
            return Err(GeometryError::AmbientMismatch {
                expected: ambient,
                got: param.forms.len().saturating_sub(1),
            });
        }
        Ok(VarietyPresentation {
            name: name.to_string(),
            ambient,
            kind: Presentation::Parametric(param),
            implicit: OnceLock::new(),
        })
    }

    pub fn implicit(name: &str, ideal: Ideal<F>) -> Result<Self, GeometryError> {
        let ambient = ideal.ring().nvars().checked_sub(1).ok_or_else(|| GeometryError::Invalid("empty ring".into()))?;
        if !ideal.is_homogeneous() {
            return Err(GeometryError::Invalid(format!("ideal of `{name}` is not homogeneous")));
        }
        let ideal = ideal.transfer(&ambient_ring(ambient, ideal.ring().ctx()))?;
        Ok(VarietyPresentation {
            name: name.to_string(),
            ambient,
            kind: Presentation::Implicit(ideal),
            implicit: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn kind(&self) -> &Presentation<F> {
        &self.kind
    }

    pub fn parametrization(&self) -> Option<&Parametrization<F>> {
        match &self.kind {
            Presentation::Parametric(p) => Some(p),
            Presentation::Implicit(_) => None,
        }
    }

    /// Ideal of the variety in `K[x0, ..., xn]`, implicitizing on first use.
    pub fn implicit_ideal(&self) -> Result<Ideal<F>, GeometryError> {
        if let Some(i) = self.implicit.get() {
            return Ok(i.clone());
        }
        let ideal = match &self.kind {
            Presentation::Implicit(i) => i.clone(),
            Presentation::Parametric(p) => implicitize(p, &self.ambient_ring())?,
        };
        Ok(self.implicit.get_or_init(|| ideal).clone())
    }

    pub fn ambient_ring(&self) -> Arc<Ring<F>> {
        match &self.kind {
            Presentation::Implicit(i) => i.ring().clone(),
            Presentation::Parametric(p) => ambient_ring(self.ambient, p.params.ctx()),
        }
    }
}

fn fresh_param_names<F: Field>(params: &Ring<F>, taken: &Ring<F>) -> Vec<String> {
    params
        .vars()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            if taken.var_index(v).is_some() {
                format!("_p{i}")
            } else {
                v.clone()
            }
        })
        .collect()
}

/// Ideal of the closure of the image of a parametrization, by eliminating
/// the parameters from `(x_i - f_i)`.
pub fn implicitize<F: Field>(param: &Parametrization<F>, x_ring: &Arc<Ring<F>>) -> Result<Ideal<F>, GeometryError> {
    if param.forms.len() != x_ring.nvars() {
        return Err(GeometryError::AmbientMismatch {
            expected: x_ring.nvars() - 1,
            got: param.forms.len() - 1,
        });
    }
    let np = param.params.nvars();
    let mut names = fresh_param_names(&param.params, x_ring);
    names.extend(x_ring.vars().iter().cloned());
    let big = Ring::new(&names, x_ring.ctx().clone())?;
    let to_big: Vec<usize> = (0..np).collect();
    let gens = param
        .forms
        .iter()
        .enumerate()
        .map(|(i, f)| &Polynomial::var(&big, np + i) - &f.map_to_ring(&big, &to_big))
        .collect();
    let ideal = Ideal::new(&big, gens)?;
    let drop: Vec<usize> = (0..np).collect();
    Ok(eliminate(&ideal, &drop)?.transfer(x_ring)?)
}

/// Image of a seeded random parameter value; re-drawn while the image is
/// the zero vector.
pub fn sample_point<F: Field>(
    param: &Parametrization<F>,
    seed: u64,
    range: SamplingRange,
) -> Result<ProjectivePoint<F>, GeometryError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ctx = param.params.ctx();
    for _ in 0..=100 {
        let at: Vec<F> = (0..param.params.nvars())
            .map(|_| F::from_i64(rng.gen_range(range.lo..=range.hi), ctx))
            .collect();
        if let Ok(p) = ProjectivePoint::new(param.evaluate(&at)) {
            return Ok(p);
        }
    }
    Err(GeometryError::Degenerate("every sampled parameter maps to zero".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::poly::parse_poly;

    fn param(vars: &[&str], forms: &[&str]) -> Parametrization<Rational> {
        let r = Ring::new(vars, ()).unwrap();
        Parametrization::new(&r, forms.iter().map(|f| parse_poly(f, &r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn mixed_degrees_rejected() {
        let r = Ring::<Rational>::new(&["y0", "y1"], ()).unwrap();
        let forms = vec![parse_poly("y0", &r).unwrap(), parse_poly("y1^2", &r).unwrap()];
        assert_eq!(Parametrization::new(&r, forms).unwrap_err(), GeometryError::DegreeMismatch);
    }

    #[test]
    fn evaluation() {
        let line = param(&["y0", "y1"], &["y0", "y1", "y0 + y1"]);
        let one_two = [Rational::from(1), Rational::from(2)];
        assert_eq!(
            ProjectivePoint::new(line.evaluate(&one_two)).unwrap(),
            ProjectivePoint::from_i64(&[1, 2, 3], &()).unwrap()
        );
        let conic = param(&["y0", "y1"], &["y0^2", "y0*y1", "y1^2"]);
        let ones = [Rational::from(1), Rational::from(1)];
        assert_eq!(
            ProjectivePoint::new(conic.evaluate(&ones)).unwrap(),
            ProjectivePoint::from_i64(&[1, 1, 1], &()).unwrap()
        );
        assert_eq!(conic.span_dim(), 2);
        assert_eq!(line.span_dim(), 1);
    }

    #[test]
    fn parameter_names_may_clash_with_coordinates() {
        let p = param(&["x0", "x1"], &["x0", "x1", "x0"]);
        let x = ambient_ring::<Rational>(2, &());
        let i = implicitize(&p, &x).unwrap();
        assert_eq!(i.groebner_basis().unwrap().polys()[0].to_string(), "x0 - x2");
    }
}
