use std::fmt;

use crate::arith::Field;

use super::GeometryError;

/// A point of projective space; equality is up to a nonzero scalar.
#[derive(Clone, Debug)]
pub struct ProjectivePoint<F: Field> {
    coords: Vec<F>,
}

impl<F: Field> ProjectivePoint<F> {
    pub fn new(coords: Vec<F>) -> Result<Self, GeometryError> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(GeometryError::ZeroPoint);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_i64(coords: &[i64], ctx: &F::Ctx) -> Result<Self, GeometryError> {
        Self::new(coords.iter().map(|&c| F::from_i64(c, ctx)).collect())
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    /// `n` for a point of `P^n`.
    pub fn ambient(&self) -> usize {
        self.coords.len() - 1
    }

    /// Representative whose first nonzero coordinate is 1.
    pub fn normalized(&self) -> Self {
        let lead = self.coords.iter().find(|c| !c.is_zero()).expect("nonzero point");
        let inv = lead.inv().expect("nonzero");
        ProjectivePoint {
            coords: self.coords.iter().map(|c| c.mul(&inv)).collect(),
        }
    }
}

impl<F: Field> PartialEq for ProjectivePoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords.len() == other.coords.len() && self.normalized().coords == other.normalized().coords
    }
}

impl<F: Field> Eq for ProjectivePoint<F> {}

impl<F: Field> fmt::Display for ProjectivePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            let (neg, mag) = c.signed_repr();
            write!(f, "{}{}", if neg { "-" } else { "" }, mag)?;
        }
        write!(f, "]")
    }
}

/// Coordinatewise product `[p0 q0 : ... : pn qn]`.
pub fn hadamard_point<F: Field>(
    p: &ProjectivePoint<F>,
    q: &ProjectivePoint<F>,
) -> Result<ProjectivePoint<F>, GeometryError> {
    if p.coords.len() != q.coords.len() {
        return Err(GeometryError::AmbientMismatch {
            expected: p.ambient(),
            got: q.ambient(),
        });
    }
    let coords = p.coords.iter().zip(&q.coords).map(|(a, b)| a.mul(b)).collect();
    ProjectivePoint::new(coords).map_err(|_| GeometryError::UndefinedProduct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn pt(c: &[i64]) -> ProjectivePoint<Rational> {
        ProjectivePoint::from_i64(c, &()).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(hadamard_point(&pt(&[1, 2, 3]), &pt(&[1, 1, 1])).unwrap(), pt(&[1, 2, 3]));
        assert_eq!(hadamard_point(&pt(&[1, 2]), &pt(&[3, 4])).unwrap(), pt(&[3, 8]));
        assert_eq!(
            hadamard_point(&pt(&[1, 0]), &pt(&[0, 1])).unwrap_err(),
            GeometryError::UndefinedProduct
        );
    }

    #[test]
    fn equality_up_to_scale() {
        assert_eq!(pt(&[0, 0, -2, 0, 0, 1]), pt(&[0, 0, 4, 0, 0, -2]));
        assert_ne!(pt(&[1, 2]), pt(&[2, 1]));
        assert!(ProjectivePoint::<Rational>::from_i64(&[0, 0], &()).is_err());
        assert_eq!(pt(&[0, 0, -2, 0, 0, 1]).to_string(), "[0:0:-2:0:0:1]");
    }
}
