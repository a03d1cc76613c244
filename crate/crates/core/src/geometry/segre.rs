use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::Field;
use crate::groebner::Ideal;
use crate::linalg::Matrix;
use crate::poly::{Exponent, Monomial, MonomialOrder, Polynomial, Ring, VariableBlock};

use super::{ambient_ring, implicitize, GeometryError, Parametrization, ProjectivePoint};

/// Exponent vectors of degree `d` in `nvars` variables, lexicographically
/// descending (`y0^2, y0*y1, y1^2`).
pub(crate) fn block_monomials(nvars: usize, d: u32) -> Vec<Vec<Exponent>> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    if nvars == 1 {
        return vec![vec![d as Exponent]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in block_monomials(nvars - 1, d - first) {
            rest.insert(0, first as Exponent);
            out.push(rest);
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k.min(n - k)).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Image of `P^{r_1} x ... x P^{r_l}` under all monomials of multidegree
/// `(d_1, ..., d_l)`.
#[derive(Clone, Debug)]
pub struct SegreVeronese<F: Field> {
    degrees: Vec<u32>,
    dims: Vec<usize>,
    ambient: usize,
    parametrization: Parametrization<F>,
    index: HashMap<Monomial, usize>,
}

impl<F: Field> SegreVeronese<F> {
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `N`, with the image in `P^N`.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn parametrization(&self) -> &Parametrization<F> {
        &self.parametrization
    }

    pub fn params(&self) -> &Arc<Ring<F>> {
        self.parametrization.params()
    }

    /// Monomials in coordinate order.
    pub fn monomials(&self) -> Vec<Monomial> {
        self.parametrization
            .forms()
            .iter()
            .map(|f| f.leading_monomial().expect("monomial form").clone())
            .collect()
    }

    /// Coordinate index of a parameter-ring monomial.
    pub fn coordinate_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Ideal of the embedding's image in `K[x0, ..., xN]`.
    pub fn implicit_ideal(&self) -> Result<Ideal<F>, GeometryError> {
        let x = ambient_ring(self.ambient, self.params().ctx());
        implicitize(&self.parametrization, &x)
    }

    /// Coefficient vector of a multihomogeneous form of the embedding's
    /// multidegree.
    pub fn coefficients(&self, f: &Polynomial<F>) -> Result<Vec<F>, GeometryError> {
        let ctx = self.params().ctx();
        let mut v = vec![F::zero(ctx); self.ambient + 1];
        for t in f.terms() {
            let j = self
                .coordinate_of(&t.mono)
                .ok_or_else(|| GeometryError::Invalid(format!("{f} has the wrong multidegree")))?;
            v[j] = t.coeff.clone();
        }
        Ok(v)
    }
}

/// Segre-Veronese embedding of the given type, checked against an ambient
/// `P^n` that must contain it.
pub fn segre_veronese<F: Field>(
    degrees: &[u32],
    dims: &[usize],
    n: usize,
    ctx: &F::Ctx,
) -> Result<SegreVeronese<F>, GeometryError> {
    if degrees.is_empty() || degrees.len() != dims.len() {
        return Err(GeometryError::Invalid("degrees and dimensions must pair up".into()));
    }
    if degrees.iter().any(|&d| d == 0) || dims.iter().any(|&r| r == 0) {
        return Err(GeometryError::Invalid("degrees and dimensions must be positive".into()));
    }
    let size: u64 = degrees
        .iter()
        .zip(dims)
        .map(|(&d, &r)| binomial(r as u64 + d as u64, d as u64))
        .product();
    let big_n = size as usize - 1;
    if n < big_n {
        return Err(GeometryError::AmbientMismatch { expected: big_n, got: n });
    }

    let mut names = Vec::new();
    let mut blocks = Vec::new();
    for (i, &r) in dims.iter().enumerate() {
        let start = names.len();
        names.extend((0..=r).map(|j| format!("t{i}_{j}")));
        blocks.push(VariableBlock {
            name: format!("t{i}"),
            range: start..names.len(),
        });
    }
    let params = Ring::with_order_and_blocks(&names, ctx.clone(), MonomialOrder::DegRevLex, Some(blocks))?;
    let nv = names.len();

    let mut exps: Vec<Vec<Exponent>> = vec![Vec::new()];
    for (&d, &r) in degrees.iter().zip(dims) {
        let block = block_monomials(r + 1, d);
        exps = exps
            .iter()
            .flat_map(|prefix| {
                block.iter().map(move |b| {
                    let mut e = prefix.clone();
                    e.extend_from_slice(b);
                    e
                })
            })
            .collect();
    }
    debug_assert!(exps.iter().all(|e| e.len() == nv));
    let monos: Vec<Monomial> = exps.iter().map(|e| Monomial::from_exponents(e)).collect();
    let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let forms = monos
        .into_iter()
        .map(|m| Polynomial::monomial(&params, F::one(ctx), m))
        .collect();
    let parametrization = Parametrization::new(&params, forms)?;
    Ok(SegreVeronese {
        degrees: degrees.to_vec(),
        dims: dims.to_vec(),
        ambient: big_n,
        parametrization,
        index,
    })
}

/// Row `i` is the coefficient vector of the product of the factors' `i`-th
/// coordinate forms, in the Segre-Veronese monomial order.
pub fn product_coefficient_matrix<F: Field>(
    factors: &[&Parametrization<F>],
) -> Result<(Matrix<F>, SegreVeronese<F>), GeometryError> {
    let first = factors.first().ok_or_else(|| GeometryError::Invalid("no factors".into()))?;
    let rows = first.forms().len();
    if let Some(bad) = factors.iter().find(|f| f.forms().len() != rows) {
        return Err(GeometryError::AmbientMismatch {
            expected: rows - 1,
            got: bad.forms().len() - 1,
        });
    }
    let degrees: Vec<u32> = factors.iter().map(|f| f.degree()).collect();
    let dims: Vec<usize> = factors.iter().map(|f| f.source_dim()).collect();
    let ctx = first.params().ctx();
    let sv = segre_veronese::<F>(&degrees, &dims, usize::MAX, ctx)?;
    let target = sv.params().clone();
    let mut offset = 0;
    let maps: Vec<Vec<usize>> = factors
        .iter()
        .map(|f| {
            let m = (offset..offset + f.params().nvars()).collect();
            offset += f.params().nvars();
            m
        })
        .collect();
    let mut data = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut prod = Polynomial::one(&target);
        for (f, map) in factors.iter().zip(&maps) {
            prod = &prod * &f.forms()[i].map_to_ring(&target, map);
        }
        data.push(sv.coefficients(&prod)?);
    }
    Ok((Matrix::from_rows(ctx, data)?, sv))
}

/// The matrix of products of linear coefficients, one row per coordinate.
pub fn build_m_prime<F: Field>(factors: &[(&str, &Parametrization<F>)]) -> Result<Matrix<F>, GeometryError> {
    if let Some((name, _)) = factors.iter().find(|(_, p)| p.degree() != 1) {
        return Err(GeometryError::NotLinear(name.to_string()));
    }
    let params: Vec<&Parametrization<F>> = factors.iter().map(|(_, p)| *p).collect();
    Ok(product_coefficient_matrix(&params)?.0)
}

/// Points given by the coefficient vectors of the products `f_i * g_i`.
pub fn coefficient_points<F: Field>(
    factors: &[&Parametrization<F>],
) -> Result<Vec<ProjectivePoint<F>>, GeometryError> {
    let (m, _) = product_coefficient_matrix(factors)?;
    (0..m.rows())
        .map(|i| ProjectivePoint::new(m.row(i).to_vec()).map_err(|_| GeometryError::ZeroProductForm(i)))
        .collect()
}
