//! Independent certificates attached to reports.

use hadamard_core::arith::Field;
use hadamard_core::geometry::{hadamard_point, ideal_vanishes_at, sample_point, SamplingRange, VarietyPresentation};
use hadamard_core::groebner::{normal_form, s_polynomial, GroebnerBasis, Ideal};

/// Every S-polynomial reduces to zero and the basis is monic and reduced.
pub fn groebner_certificate<F: Field>(gb: &GroebnerBasis<F>) -> bool {
    let polys = gb.polys();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let s = s_polynomial(&polys[i], &polys[j]);
            match normal_form(&s, polys, gb.order()) {
                Ok(r) if r.is_zero() => {}
                _ => return false,
            }
        }
    }
    polys.iter().enumerate().all(|(i, g)| {
        g.leading_coeff().is_some_and(|c| c.is_one())
            && polys.iter().enumerate().filter(|(k, _)| *k != i).all(|(_, h)| {
                let lm = h.leading_monomial().expect("basis elements are nonzero");
                g.terms().iter().all(|t| !lm.divides(&t.mono))
            })
    })
}

/// Outcome of evaluating an ideal at products of sampled factor points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleCheck {
    pub checked: usize,
    pub vanishing: usize,
}

impl SampleCheck {
    pub fn passed(&self) -> bool {
        self.checked == self.vanishing
    }
}

/// Evaluates `ideal` at `count` coordinatewise products of random points of
/// the factors. Implicit factors cannot be sampled, so they yield no checks.
pub fn vanishes_on_product_samples<F: Field>(
    ideal: &Ideal<F>,
    factors: &[VarietyPresentation<F>],
    count: usize,
    seed: u64,
) -> SampleCheck {
    let params: Option<Vec<_>> = factors.iter().map(|f| f.parametrization()).collect();
    let mut out = SampleCheck { checked: 0, vanishing: 0 };
    let Some(params) = params else {
        return out;
    };
    let range = SamplingRange::default();
    let mut draw = seed;
    // products landing on the vanishing coordinate locus are skipped; the
    // attempt cap keeps degenerate inputs from looping forever
    for _ in 0..count * 10 {
        if out.checked == count {
            break;
        }
        let mut acc = None;
        for p in &params {
            draw = draw.wrapping_add(1);
            let Ok(q) = sample_point(p, draw, range) else {
                return out;
            };
            acc = match acc {
                None => Some(Ok(q)),
                Some(Ok(prev)) => Some(hadamard_point(&prev, &q)),
                Some(Err(e)) => Some(Err(e)),
            };
        }
        if let Some(Ok(point)) = acc {
            out.checked += 1;
            if ideal_vanishes_at(ideal, &point) {
                out.vanishing += 1;
            }
        }
    }
    out
}
