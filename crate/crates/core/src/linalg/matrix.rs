use std::fmt;

use crate::arith::Field;

use super::LinalgError;

/// Dense row-major matrix over a field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    ctx: F::Ctx,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                let (neg, mag) = e.signed_repr();
                write!(f, "{}{}", if neg { "-" } else { "" }, mag)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn new(ctx: &F::Ctx, rows: usize, cols: usize, data: Vec<F>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            ctx: ctx.clone(),
            data,
        })
    }

    pub fn zeros(ctx: &F::Ctx, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            ctx: ctx.clone(),
            data: vec![F::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: &F::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, F::one(ctx));
        }
        m
    }

    pub fn from_rows(ctx: &F::Ctx, rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(ctx, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(ctx: &F::Ctx, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        Self::from_rows(
            ctx,
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_i64(v, ctx)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(&self.ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape("inner dimensions differ".into()));
        }
        let mut out = Self::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Places `other`'s columns to the right of this matrix.
    pub fn hstack(&self, other: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::Shape("row counts differ".into()));
        }
        let data = (0..self.rows)
            .flat_map(|i| self.row(i).iter().chain(other.row(i)).cloned())
            .collect();
        Self::new(&self.ctx, self.rows, self.cols + other.cols, data)
    }

    pub fn vstack(&self, other: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::Shape("column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self::new(&self.ctx, self.rows + other.rows, self.cols, data)
    }

    /// Fraction-free (Bareiss) forward elimination; returns the rank and the
    /// sign-corrected last pivot, which is the determinant when the matrix is
    /// square and of full rank.
    fn bareiss(&self) -> (usize, F) {
        let mut a = self.to_rows();
        let mut prev = F::one(&self.ctx);
        let mut negate = false;
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            if p != rank {
                a.swap(p, rank);
                negate = !negate;
            }
            for r in rank + 1..self.rows {
                for c in col + 1..self.cols {
                    let v = a[rank][col].mul(&a[r][c]).sub(&a[r][col].mul(&a[rank][c]));
                    a[r][c] = v.div(&prev).expect("previous pivot is nonzero");
                }
                a[r][col] = F::zero(&self.ctx);
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        (rank, if negate { prev.neg() } else { prev })
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    pub fn determinant(&self) -> Result<F, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(F::one(&self.ctx));
        }
        let (rank, last) = self.bareiss();
        Ok(if rank < self.rows { F::zero(&self.ctx) } else { last })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut a = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let inv = a[r][col].inv().expect("nonzero pivot");
            for v in a[r].iter_mut() {
                v.mul_assign(&inv);
            }
            for i in 0..self.rows {
                if i != r && !a[i][col].is_zero() {
                    let factor = a[i][col].clone();
                    for c in col..self.cols {
                        let v = a[i][c].sub(&factor.mul(&a[r][c]));
                        a[i][c] = v;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        let data = a.into_iter().flatten().collect();
        (Matrix::new(&self.ctx, self.rows, self.cols, data).expect("same shape"), pivots)
    }

    /// Basis of the right null space, one vector per free column, each
    /// scaled so its first nonzero entry is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(&self.ctx); self.cols];
                v[f] = F::one(&self.ctx);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.get(row, f).neg();
                }
                let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero vector").clone();
                let inv = lead.inv().expect("nonzero");
                v.iter().map(|x| x.mul(&inv)).collect()
            })
            .collect()
    }

    /// Extends a full-column-rank matrix to a square invertible one by
    /// appending standard basis vectors, in index order, whenever they
    /// raise the rank.
    pub fn complete_to_invertible(&self) -> Result<Matrix<F>, LinalgError> {
        if self.rows < self.cols {
            return Err(LinalgError::Shape(format!(
                "cannot complete a {}x{} matrix with more columns than rows",
                self.rows, self.cols
            )));
        }
        let rank = self.rank();
        if rank < self.cols {
            return Err(LinalgError::RankDeficient { rank, cols: self.cols });
        }
        let mut current = self.clone();
        for e in 0..self.rows {
            if current.cols == self.rows {
                break;
            }
            let mut unit = Self::zeros(&self.ctx, self.rows, 1);
            unit.set(e, 0, F::one(&self.ctx));
            let candidate = current.hstack(&unit)?;
            if candidate.rank() == candidate.cols {
                current = candidate;
            }
        }
        Ok(current)
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: ctx.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn q(rows: &[Vec<i64>]) -> Matrix<Rational> {
        Matrix::from_i64(&(), rows).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(Matrix::<Rational>::identity(&(), 4).determinant().unwrap(), Rational::from(1));
        assert_eq!(q(&[vec![0, 1], vec![1, 0]]).determinant().unwrap(), Rational::from(-1));
        assert_eq!(q(&[vec![2, 3, 1], vec![4, 1, 7], vec![0, 5, 2]]).determinant().unwrap(), Rational::from(-70));
        assert!(q(&[vec![1, 2]]).determinant().is_err());
    }

    #[test]
    fn ranks_and_kernels() {
        assert_eq!(q(&[vec![0, 0], vec![0, 0]]).rank(), 0);
        assert_eq!(q(&vec![vec![0, 0, 0]; 2]).kernel_basis().len(), 3);
        assert!(Matrix::<Rational>::identity(&(), 3).kernel_basis().is_empty());
        let m = q(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        for v in m.kernel_basis() {
            assert!(m.mul_vec(&v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn completion() {
        let a = q(&[vec![1, 0], vec![0, 1], vec![0, 0]]);
        let m = a.complete_to_invertible().unwrap();
        assert_eq!(m, Matrix::identity(&(), 3));
        let sq = q(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(sq.complete_to_invertible().unwrap(), sq);
        let deficient = q(&[vec![1, 2], vec![2, 4], vec![0, 0]]);
        assert!(matches!(deficient.complete_to_invertible(), Err(LinalgError::RankDeficient { rank: 1, cols: 2 })));
    }
}
