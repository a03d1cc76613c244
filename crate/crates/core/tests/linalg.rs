use hadamard_core::arith::{Field, Modulus, PrimeFieldElement, Rational};
use hadamard_core::linalg::{LinalgError, Matrix, PolyMatrix};
use hadamard_core::poly::{parse_poly, Ring};
use proptest::prelude::*;

fn q(rows: &[Vec<i64>]) -> Matrix<Rational> {
    Matrix::from_i64(&(), rows).unwrap()
}

fn modp(rows: &[Vec<i64>], p: u64) -> Matrix<PrimeFieldElement> {
    Matrix::from_i64(&Modulus::new(p).unwrap(), rows).unwrap()
}

/// Oracle: rank as the size of the largest nonzero minor, by brute force.
fn brute_rank(rows: &[Vec<i64>]) -> usize {
    let (m, n) = (rows.len(), rows[0].len());
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (0..n)
            .flat_map(|last| {
                subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }
    fn det(a: &[Vec<i128>]) -> i128 {
        if a.is_empty() {
            return 1;
        }
        (0..a.len())
            .map(|c| {
                let minor: Vec<Vec<i128>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| *v).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * a[0][c] * det(&minor)
            })
            .sum()
    }
    (1..=m.min(n))
        .rev()
        .find(|&k| {
            subsets(m, k).iter().any(|rs| {
                subsets(n, k).iter().any(|cs| {
                    let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j] as i128).collect()).collect();
                    det(&sub) != 0
                })
            })
        })
        .unwrap_or(0)
}

#[test]
fn identity_and_zero() {
    assert_eq!(Matrix::<Rational>::identity(&(), 4).rank(), 4);
    assert_eq!(q(&vec![vec![0; 3]; 3]).rank(), 0);
    assert_eq!(Matrix::<Rational>::identity(&(), 5).determinant().unwrap(), Rational::from(1));
}

#[test]
fn kernel_normalization() {
    let m = q(&[vec![2, 4, 0, 6], vec![0, 0, 3, 3]]);
    let k = m.kernel_basis();
    assert_eq!(k.len(), 2);
    let shown: Vec<Vec<String>> = k.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect();
    assert_eq!(shown, vec![vec!["1", "-1/2", "0", "0"], vec!["1", "0", "1/3", "-1/3"]]);
}

#[test]
fn completion_keeps_prefix_columns() {
    let a = q(&[vec![1, 1], vec![1, -1], vec![2, 0], vec![0, 3]]);
    let m = a.complete_to_invertible().unwrap();
    assert_eq!((m.rows(), m.cols()), (4, 4));
    for i in 0..4 {
        for j in 0..2 {
            assert_eq!(m.get(i, j), a.get(i, j));
        }
    }
    assert!(!m.determinant().unwrap().is_zero());
    assert!(matches!(
        q(&[vec![1, 2, 3], vec![0, 0, 0]]).complete_to_invertible(),
        Err(LinalgError::Shape(_))
    ));
}

#[test]
fn polynomial_determinant_matches_scalar_after_evaluation() {
    let r = Ring::<Rational>::new(&["a", "b", "c"], ()).unwrap();
    let entries = [
        ["a", "b", "c", "1"],
        ["b^2", "a*c", "0", "a"],
        ["c", "a + b", "b - c", "2"],
        ["1", "a", "b", "c"],
    ];
    let rows = entries
        .iter()
        .map(|row| row.iter().map(|s| parse_poly(s, &r).unwrap()).collect())
        .collect();
    let pm = PolyMatrix::from_rows(&r, rows).unwrap();
    let det = pm.determinant().unwrap();
    for point in [[1i64, 2, 3], [-2, 5, 7], [0, 1, -1]] {
        let pt: Vec<Rational> = point.iter().map(|&v| Rational::from(v)).collect();
        assert_eq!(det.evaluate(&pt), pm.evaluate(&pt).determinant().unwrap());
    }
    assert_eq!(pm.minors(4).unwrap(), vec![det]);
    assert_eq!(pm.minors(3).unwrap().len(), 16);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn rank_kernel_and_primes(rows in (1usize..=4, 1usize..=5).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), m)
    })) {
        let a = q(&rows);
        let rank = a.rank();
        prop_assert_eq!(rank, brute_rank(&rows));
        let kernel = a.kernel_basis();
        prop_assert_eq!(rank + kernel.len(), a.cols());
        for v in &kernel {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
            prop_assert!(v.iter().find(|x| !x.is_zero()).unwrap().is_one());
        }
        prop_assert_eq!(modp(&rows, 65521).rank(), rank);
        prop_assert_eq!(modp(&rows, 65519).rank(), rank);
        if a.rows() >= a.cols() && rank == a.cols() {
            let m = a.complete_to_invertible().unwrap();
            prop_assert!(!m.determinant().unwrap().is_zero());
        }
        if a.rows() == a.cols() {
            prop_assert_eq!(a.determinant().unwrap().is_zero(), rank < a.rows());
        }
    }
}
