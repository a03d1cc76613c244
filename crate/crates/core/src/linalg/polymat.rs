use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::Field;
use crate::poly::{same_ring, PolyError, Polynomial, Ring};

use super::{LinalgError, Matrix};

/// Dense row-major matrix of polynomials from one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    ring: Arc<Ring<F>>,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial<F>>,
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl<F: Field> PolyMatrix<F> {
    pub fn new(ring: &Arc<Ring<F>>, rows: usize, cols: usize, data: Vec<Polynomial<F>>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if data.iter().any(|p| !same_ring(p.ring(), ring)) {
            return Err(LinalgError::Shape(PolyError::RingMismatch.to_string()));
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(ring: &Arc<Ring<F>>, rows: Vec<Vec<Polynomial<F>>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(ring, n, cols, rows.into_iter().flatten().collect())
    }

    /// Jacobian matrix: row `i` holds the partial derivatives of `polys[i]`
    /// with respect to `vars`.
    pub fn jacobian(ring: &Arc<Ring<F>>, polys: &[Polynomial<F>], vars: &[usize]) -> Result<Self, LinalgError> {
        let rows = polys
            .iter()
            .map(|p| vars.iter().map(|&v| p.derivative(v)).collect())
            .collect();
        let m = Self::from_rows(ring, rows)?;
        Ok(if polys.is_empty() {
            PolyMatrix {
                cols: vars.len(),
                ..m
            }
        } else {
            m
        })
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.data[i * self.cols + j]
    }

    pub fn evaluate(&self, point: &[F]) -> Matrix<F> {
        let data = self.data.iter().map(|p| p.evaluate(point)).collect();
        Matrix::new(self.ring.ctx(), self.rows, self.cols, data).expect("same shape")
    }

    /// Determinant of the submatrix on `rows` and the columns in `mask`,
    /// expanding along the first row; memoized on the column set.
    fn minor_det(&self, rows: &[usize], mask: u64, memo: &mut HashMap<u64, Polynomial<F>>) -> Polynomial<F> {
        let k = mask.count_ones() as usize;
        if k == 0 {
            return Polynomial::one(&self.ring);
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let row = rows[rows.len() - k];
        let mut acc = Polynomial::zero(&self.ring);
        let mut sign_neg = false;
        for c in 0..self.cols {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = self.get(row, c);
            if !entry.is_zero() {
                let sub = self.minor_det(rows, mask & !(1 << c), memo);
                if !sub.is_zero() {
                    let term = entry * &sub;
                    acc = if sign_neg { &acc - &term } else { &acc + &term };
                }
            }
            sign_neg = !sign_neg;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    pub fn determinant(&self) -> Result<Polynomial<F>, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.check_width()?;
        let rows: Vec<usize> = (0..self.rows).collect();
        Ok(self.minor_det(&rows, (1u64 << self.cols) - 1, &mut HashMap::new()))
    }

    fn check_width(&self) -> Result<(), LinalgError> {
        if self.cols > 63 {
            return Err(LinalgError::Shape("more than 63 columns".into()));
        }
        Ok(())
    }

    /// All `size x size` minors: row subsets in lexicographic order, and for
    /// each, column subsets in lexicographic order.
    pub fn minors(&self, size: usize) -> Result<Vec<Polynomial<F>>, LinalgError> {
        if size > self.rows.min(self.cols) {
            return Err(LinalgError::Shape(format!(
                "no {size}x{size} minors in a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        self.check_width()?;
        let col_sets = combinations(self.cols, size);
        let mut out = Vec::new();
        for rows in combinations(self.rows, size) {
            let mut memo = HashMap::new();
            for cols in &col_sets {
                let mask = cols.iter().fold(0u64, |m, &c| m | (1 << c));
                out.push(self.minor_det(&rows, mask, &mut memo));
            }
        }
        Ok(out)
    }

    /// Number of minors `minors(size)` would return.
    pub fn minor_count(&self, size: usize) -> u128 {
        fn binom(n: usize, k: usize) -> u128 {
            if k > n {
                return 0;
            }
            (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
        }
        binom(self.rows, size) * binom(self.cols, size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::poly::parse_poly;

    fn pm(vars: &[&str], rows: &[&[&str]]) -> PolyMatrix<Rational> {
        let r = Ring::new(vars, ()).unwrap();
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_poly(s, &r).unwrap()).collect())
            .collect();
        PolyMatrix::from_rows(&r, rows).unwrap()
    }

    #[test]
    fn combos() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn two_by_two() {
        let m = pm(&["x0", "x1", "x2"], &[&["x0", "x1"], &["x1", "x2"]]);
        assert_eq!(m.determinant().unwrap().to_string(), "-x1^2 + x0*x2");
        let ms = m.minors(2).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0], m.determinant().unwrap());
        let ones = m.minors(1).unwrap();
        assert_eq!(ones.iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["x0", "x1", "x1", "x2"]);
    }

    #[test]
    fn generic_two_by_three() {
        let m = pm(&["a", "b", "c", "d", "e", "f"], &[&["a", "b", "c"], &["d", "e", "f"]]);
        let ms = m.minors(2).unwrap();
        assert_eq!(ms.len(), 3);
        assert_eq!(ms[1].to_string(), "-c*d + a*f");
        assert_eq!(m.minor_count(2), 3);
    }
}
