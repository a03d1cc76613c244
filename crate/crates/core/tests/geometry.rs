use hadamard_core::arith::{Field, Modulus, PrimeFieldElement, Rational};
use hadamard_core::geometry::*;
use hadamard_core::groebner::{ideal_equal, Budget, Ideal};
use hadamard_core::invariants::variety_invariants;
use hadamard_core::linalg::{Matrix, PolyMatrix};
use hadamard_core::poly::{parse_poly, Polynomial, Ring};
use proptest::prelude::*;

fn q(v: i64) -> Rational {
    Rational::from_i64(v, &())
}

fn param(vars: &[&str], forms: &[&str]) -> Parametrization<Rational> {
    let r = Ring::new(vars, ()).unwrap();
    Parametrization::new(&r, forms.iter().map(|f| parse_poly(f, &r).unwrap()).collect()).unwrap()
}

fn ideal(n: usize, gens: &[&str]) -> Ideal<Rational> {
    let r = ambient_ring::<Rational>(n, &());
    Ideal::new(&r, gens.iter().map(|g| parse_poly(g, &r).unwrap()).collect()).unwrap()
}

fn parametric(name: &str, vars: &[&str], forms: &[&str]) -> VarietyPresentation<Rational> {
    VarietyPresentation::parametric(name, forms.len() - 1, param(vars, forms)).unwrap()
}

/// Ideal generated by the 2x2 minors of a 2-row matrix of variables.
fn minor_ideal(n: usize, rows: [&[&str]; 2]) -> Ideal<Rational> {
    let r = ambient_ring::<Rational>(n, &());
    let entries = rows
        .iter()
        .map(|row| row.iter().map(|e| parse_poly(e, &r).unwrap()).collect())
        .collect();
    let m = PolyMatrix::from_rows(&r, entries).unwrap();
    Ideal::new(&r, m.minors(2).unwrap()).unwrap()
}

/// Leibniz-formula determinant, independent of the elimination code.
fn leibniz(m: &[Vec<Rational>]) -> Rational {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..=p.len() {
                let mut p2 = p.clone();
                p2.insert(pos, k - 1);
                out.push(p2);
            }
        }
        out
    }
    let n = m.len();
    let mut total = q(0);
    for p in perms(n) {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut t = q(if inversions % 2 == 0 { 1 } else { -1 });
        for (i, &j) in p.iter().enumerate() {
            t = t.mul(&m[i][j]);
        }
        total = total.add(&t);
    }
    total
}

/// Some maximal square minor is nonzero.
fn has_full_rank_minor(m: &[Vec<Rational>]) -> bool {
    let (rows, cols) = (m.len(), m[0].len());
    assert!(rows <= cols);
    let mut chosen = Vec::new();
    fn go(m: &[Vec<Rational>], start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == m.len() {
            let sub: Vec<Vec<Rational>> = m.iter().map(|r| chosen.iter().map(|&c| r[c].clone()).collect()).collect();
            return !leibniz(&sub).is_zero();
        }
        for c in start..m[0].len() {
            chosen.push(c);
            if go(m, c + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let _ = cols;
    go(m, 0, &mut chosen)
}

#[test]
fn implicitize_conic_matches_minor() {
    let p = param(&["y0", "y1"], &["y0^2", "y0*y1", "y1^2"]);
    let x = ambient_ring::<Rational>(2, &());
    let got = implicitize(&p, &x).unwrap();
    let oracle = minor_ideal(2, [&["x0", "x1"], &["x1", "x2"]]);
    assert!(ideal_equal(&got, &oracle).unwrap());
}

#[test]
fn implicitize_repeated_coordinate() {
    let p = param(&["y0", "y1"], &["y0", "y1", "y0"]);
    let x = ambient_ring::<Rational>(2, &());
    let got = implicitize(&p, &x).unwrap();
    assert!(ideal_equal(&got, &ideal(2, &["x0 - x2"])).unwrap());
}

#[test]
fn implicitize_segre_quadric() {
    let p = param(&["y0", "y1", "z0", "z1"], &["y0*z0", "y0*z1", "y1*z0", "y1*z1"]);
    let x = ambient_ring::<Rational>(3, &());
    let got = implicitize(&p, &x).unwrap();
    let oracle = minor_ideal(3, [&["x0", "x1"], &["x2", "x3"]]);
    assert!(ideal_equal(&got, &oracle).unwrap());
    assert_eq!(got.groebner_basis().unwrap().polys()[0].to_string(), "x1*x2 - x0*x3");
}

#[test]
fn hadamard_point_examples() {
    let p = |c: &[i64]| ProjectivePoint::<Rational>::from_i64(c, &()).unwrap();
    assert_eq!(hadamard_point(&p(&[1, 2, 3]), &p(&[1, 1, 1])).unwrap(), p(&[1, 2, 3]));
    assert_eq!(hadamard_point(&p(&[1, 2]), &p(&[3, 4])).unwrap(), p(&[3, 8]));
    assert_eq!(hadamard_point(&p(&[1, 0]), &p(&[0, 1])).unwrap_err(), GeometryError::UndefinedProduct);
}

#[test]
fn hadamard_identity_with_all_ones_point() {
    let ones = VarietyPresentation::implicit("E", ideal(3, &["x1 - x0", "x2 - x0", "x3 - x0"])).unwrap();
    let cubic = parametric("C", &["s", "t"], &["s^3", "s^2*t", "s*t^2", "t^3"]);
    let h = hadamard_product(&[ones, cubic.clone()], 3, Budget::default()).unwrap();
    assert!(ideal_equal(&h.ideal, &cubic.implicit_ideal().unwrap()).unwrap());
}

#[test]
fn hadamard_commutes_on_corpus() {
    let corpus = vec![
        (
            parametric("X", &["y0", "y1"], &["y0", "y1", "y0 + y1", "2*y0 - y1"]),
            parametric("Y", &["z0", "z1"], &["z0 + 3*z1", "z1", "z0", "z0 - z1"]),
        ),
        (
            parametric("X", &["y0", "y1"], &["y0^2", "y0*y1", "y1^2", "y0^2 + y1^2"]),
            VarietyPresentation::implicit("Y", ideal(3, &["x0 + x1 - x2 + 2*x3", "x0 - 3*x1 + x3"])).unwrap(),
        ),
        (
            VarietyPresentation::implicit("X", ideal(2, &["x0*x2 - x1^2"])).unwrap(),
            VarietyPresentation::implicit("Y", ideal(2, &["x0 - x1 + x2", "x1 - 2*x2"])).unwrap(),
        ),
    ];
    for (x, y) in corpus {
        let n = x.ambient();
        let xy = hadamard_product(&[x.clone(), y.clone()], n, Budget::default()).unwrap();
        let yx = hadamard_product(&[y, x], n, Budget::default()).unwrap();
        assert!(ideal_equal(&xy.ideal, &yx.ideal).unwrap());
    }
}

#[test]
fn two_generic_lines_in_p3() {
    let inst = sample_generic_instance::<Rational>(&[(1, 1), (1, 1)], 3, 7, SamplingRange::default(), &()).unwrap();
    assert!(inst.certified);
    let h = hadamard_product(&inst.factors, 3, Budget::default()).unwrap();
    let inv = variety_invariants(&h.ideal, 5).unwrap();
    assert_eq!((inv.dimension, inv.degree), (2, Some(2)));
}

#[test]
fn product_vanishes_on_sampled_products() {
    let x = parametric("X", &["y0", "y1"], &["y0 - y1", "y0 + 2*y1", "3*y0", "y1"]);
    let y = parametric("Y", &["z0", "z1"], &["z0^2", "z0*z1 - z1^2", "z1^2", "z0^2 + z0*z1"]);
    let h = hadamard_product(&[x.clone(), y.clone()], 3, Budget::default()).unwrap();
    let range = SamplingRange::default();
    for seed in 0..20 {
        let p = sample_point(x.parametrization().unwrap(), seed, range).unwrap();
        let q = sample_point(y.parametrization().unwrap(), 1000 + seed, range).unwrap();
        if let Ok(pq) = hadamard_point(&p, &q) {
            assert!(ideal_vanishes_at(&h.ideal, &pq));
        }
    }
}

#[test]
fn three_factor_product_of_lines() {
    let inst = sample_generic_instance::<Rational>(&[(1, 1); 3], 7, 3, SamplingRange::default(), &()).unwrap();
    assert!(inst.certified);
    assert_eq!(inst.product_rank, 8);
    let h = hadamard_product(&inst.factors, 7, Budget::default()).unwrap();
    let inv = variety_invariants(&h.ideal, 3).unwrap();
    assert_eq!((inv.dimension, inv.degree), (3, Some(6)));
}

#[test]
fn segre_veronese_sizes() {
    let s11 = segre_veronese::<Rational>(&[1, 1], &[1, 1], 3, &()).unwrap();
    assert_eq!(s11.ambient(), 3);
    let oracle = minor_ideal(3, [&["x0", "x1"], &["x2", "x3"]]);
    assert!(ideal_equal(&s11.implicit_ideal().unwrap(), &oracle).unwrap());
    assert_eq!(segre_veronese::<Rational>(&[2], &[1], 2, &()).unwrap().ambient(), 2);
    assert_eq!(segre_veronese::<Rational>(&[1, 2], &[1, 1], 5, &()).unwrap().ambient(), 5);
    assert_eq!(
        segre_veronese::<Rational>(&[1, 2], &[1, 1], 4, &()).unwrap_err(),
        GeometryError::AmbientMismatch { expected: 5, got: 4 }
    );
}

#[test]
fn terracini_values() {
    let cases: [(&[u32], &[usize], i64); 3] = [(&[1, 1], &[1, 1], 3), (&[2], &[1], 2), (&[1, 2], &[1, 1], 5)];
    for (deg, dims, expected) in cases {
        let n = segre_veronese::<Rational>(deg, dims, usize::MAX - 1, &()).unwrap().ambient();
        let sv = segre_veronese::<Rational>(deg, dims, n, &()).unwrap();
        let info = terracini_secant_dim(&sv, 0).unwrap();
        assert_eq!(info.dim, expected, "type {deg:?}");
        assert_eq!(info.method, SecantMethod::TerraciniSample);
    }
}

#[test]
fn m_prime_of_coordinate_lines() {
    let x = param(&["y0", "y1"], &["y0", "y1", "0", "0"]);
    let y = param(&["z0", "z1"], &["z0", "z1", "z0", "z1"]);
    let m = build_m_prime(&[("X", &x), ("Y", &y)]).unwrap();
    let expected = Matrix::from_i64(&(), &[vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 0, 0], vec![0, 0, 0, 0]]).unwrap();
    assert_eq!(m, expected);
    assert_eq!(m.rank(), 2);
    let conic = param(&["z0", "z1"], &["z0^2", "z1^2", "z0*z1", "z0^2"]);
    assert_eq!(build_m_prime(&[("X", &x), ("C", &conic)]).unwrap_err(), GeometryError::NotLinear("C".into()));
}

#[test]
fn m_prime_entries_are_coefficient_products() {
    let inst = sample_generic_instance::<Rational>(&[(1, 1), (1, 1)], 3, 11, SamplingRange::default(), &()).unwrap();
    let ps: Vec<_> = inst.factors.iter().map(|f| f.parametrization().unwrap()).collect();
    let m = build_m_prime(&[("X", ps[0]), ("Y", ps[1])]).unwrap();
    let coeffs = |p: &Parametrization<Rational>| p.coefficient_matrix();
    let (a, b) = (coeffs(ps[0]), coeffs(ps[1]));
    let mut oracle = Vec::new();
    for i in 0..4 {
        let mut row = Vec::new();
        for j1 in 0..2 {
            for j2 in 0..2 {
                row.push(a.get(i, j1).mul(b.get(i, j2)));
            }
        }
        oracle.push(row);
    }
    assert_eq!(m.to_rows(), oracle);
    assert!(!leibniz(&oracle).is_zero());
    assert_eq!(m.rank(), 4);
}

#[test]
fn coefficient_points_lie_on_segre_veronese() {
    let x = param(&["y0", "y1"], &["y0", "y1", "y0"]);
    let y = param(&["z0", "z1"], &["z0", "z1", "z0"]);
    let pts = coefficient_points(&[&x, &y]).unwrap();
    assert_eq!(pts[0], ProjectivePoint::from_i64(&[1, 0, 0, 0], &()).unwrap());
    let s = segre_veronese::<Rational>(&[1, 1], &[1, 1], 3, &()).unwrap().implicit_ideal().unwrap();
    assert!(pts.iter().all(|p| ideal_vanishes_at(&s, p)));

    let inst = sample_generic_instance::<Rational>(&[(1, 1), (2, 1)], 5, 4, SamplingRange::default(), &()).unwrap();
    let ps: Vec<_> = inst.factors.iter().map(|f| f.parametrization().unwrap()).collect();
    let pts = coefficient_points(&ps).unwrap();
    let s = segre_veronese::<Rational>(&[1, 1], &[1, 2], 5, &()).unwrap().implicit_ideal().unwrap();
    assert!(pts.iter().all(|p| ideal_vanishes_at(&s, p)));
}

#[test]
fn coefficient_points_of_line_and_conic_span_p4() {
    let inst = sample_generic_instance::<Rational>(&[(1, 2), (1, 1)], 4, 0, SamplingRange::default(), &()).unwrap();
    let ps: Vec<_> = inst.factors.iter().map(|f| f.parametrization().unwrap()).collect();
    let pts = coefficient_points(&ps).unwrap();
    let rows: Vec<Vec<Rational>> = pts.iter().map(|p| p.coords().to_vec()).collect();
    assert!(has_full_rank_minor(&rows));
    assert!(inst.certified);
}

#[test]
fn product_with_non_square_quadric_is_off_segre_veronese() {
    // z0*z1 is not a square, so y0*z0*z1 is not a decomposable tensor
    let x = param(&["y0", "y1"], &["y0", "y1"]);
    let y = param(&["z0", "z1"], &["z0*z1", "z0^2"]);
    let pts = coefficient_points(&[&x, &y]).unwrap();
    let s = segre_veronese::<Rational>(&[1, 2], &[1, 1], 5, &()).unwrap().implicit_ideal().unwrap();
    assert!(!ideal_vanishes_at(&s, &pts[0]));
    assert!(ideal_vanishes_at(&s, &pts[1]));
}

#[test]
fn projection_center_of_standard_points() {
    let pts: Vec<_> = (0..3)
        .map(|i| {
            let mut c = vec![0; 5];
            c[i] = 1;
            ProjectivePoint::<Rational>::from_i64(&c, &()).unwrap()
        })
        .collect();
    let spec = projection_center(&pts).unwrap();
    assert_eq!(spec.rank, 3);
    assert_eq!(spec.center_dim, 1);
    let expected: Vec<Vec<Rational>> = vec![
        vec![q(0), q(0), q(0), q(1), q(0)],
        vec![q(0), q(0), q(0), q(0), q(1)],
    ];
    assert_eq!(spec.center, expected);
    assert!(spec.center_point().is_none());
}

#[test]
fn adversarial_range_is_not_generic() {
    let zero = SamplingRange { lo: 0, hi: 0 };
    let inst = sample_generic_instance::<Rational>(&[(1, 1), (1, 1)], 3, 0, zero, &()).unwrap();
    assert!(!inst.certified);
    assert_eq!(inst.attempts, GENERIC_RETRIES);
}

#[test]
fn sampling_is_reproducible() {
    let a = sample_generic_instance::<Rational>(&[(1, 2), (1, 1)], 3, 5, SamplingRange::default(), &()).unwrap();
    let b = sample_generic_instance::<Rational>(&[(1, 2), (1, 1)], 3, 5, SamplingRange::default(), &()).unwrap();
    let forms = |i: &GenericInstance<Rational>| -> Vec<String> {
        i.factors
            .iter()
            .flat_map(|f| f.parametrization().unwrap().forms().iter().map(|p| p.to_string()))
            .collect()
    };
    assert_eq!(forms(&a), forms(&b));
}

#[test]
fn smooth_quadric() {
    let s = singular_locus(&ideal(3, &["x0*x3 - x1*x2"]), 2, 5, 0).unwrap();
    assert!(s.smooth);
    assert_eq!(s.method, SingularMethod::Minors);
}

#[test]
fn quadric_cone_is_singular_at_vertex() {
    let s = singular_locus(&ideal(3, &["x0*x1 - x2^2"]), 2, 5, 0).unwrap();
    assert!(!s.smooth);
    assert_eq!((s.invariants.dimension, s.invariants.degree), (0, Some(1)));
    let vertex = ProjectivePoint::from_i64(&[0, 0, 0, 1], &()).unwrap();
    assert!(ideal_vanishes_at(&s.ideal, &vertex));
}

#[test]
fn randomized_minors_agree_with_exact() {
    let node = ProjectivePoint::from_i64(&[0, 0, 1], &()).unwrap();
    let nodal = ideal(2, &["x1^2*x2 - x0^3 - x0^2*x2"]);
    let exact = singular_locus(&nodal, 1, 5, 0).unwrap();
    assert_eq!((exact.invariants.dimension, exact.invariants.degree), (0, Some(1)));
    assert!(ideal_vanishes_at(&exact.ideal, &node));
    let random = singular_locus_with_limit(&nodal, 1, 5, 0, 0).unwrap();
    assert_eq!(random.method, SingularMethod::RandomizedMinors { samples: 3 });
    assert_eq!((random.invariants.dimension, random.invariants.degree), (0, Some(1)));

    let twisted = implicitize(
        &param(&["s", "t"], &["s^3", "s^2*t", "s*t^2", "t^3"]),
        &ambient_ring::<Rational>(3, &()),
    )
    .unwrap();
    assert!(singular_locus(&twisted, 1, 5, 0).unwrap().smooth);
    let cert = singular_locus_with_limit(&twisted, 1, 5, 0, 0).unwrap();
    assert!(cert.smooth);
    assert!(matches!(cert.method, SingularMethod::EmptyByLinearAlgebra { .. }));
}

#[test]
fn emptiness_certificate_agrees_with_exact_minors() {
    let x = parametric("X", &["y0", "y1"], &["y0 + y1", "y0 - y1", "2*y0 + y1", "y1", "y0 + 3*y1", "y0"]);
    let y = parametric("Y", &["z0", "z1"], &["z0^2", "z0*z1 + z1^2", "z1^2 - z0^2", "z0*z1", "z0^2 + z1^2", "z1^2"]);
    let prod = hadamard_product(&[x, y], 5, Budget::default()).unwrap().ideal;
    let inv = variety_invariants(&prod, 5).unwrap();
    assert_eq!((inv.dimension, inv.degree), (2, Some(4)));
    let exact = singular_locus_with_limit(&prod, 2, 5, 0, u128::MAX).unwrap();
    assert_eq!(exact.method, SingularMethod::Minors);
    let cert = singular_locus_with_limit(&prod, 2, 5, 0, 0).unwrap();
    assert!(matches!(cert.method, SingularMethod::EmptyByLinearAlgebra { .. }));
    assert_eq!(exact.smooth, cert.smooth);
    assert!(cert.smooth);

    // a singular surface must fall through to the determinant ideal
    let cone = ideal(3, &["x0*x1 - x2^2"]);
    let s = singular_locus_with_limit(&cone, 2, 5, 0, 0).unwrap();
    assert!(matches!(s.method, SingularMethod::RandomizedMinors { .. }));
    assert_eq!(s.invariants.dimension, 0);
}

#[test]
fn three_generic_lines_product_is_smooth() {
    let p = Modulus::new(65521).unwrap();
    let inst = sample_generic_instance::<PrimeFieldElement>(&[(1, 1), (1, 1), (1, 1)], 7, 0, SamplingRange::default(), &p)
        .unwrap();
    assert!(inst.certified);
    let prod = hadamard_product(&inst.factors, 7, Budget::default()).unwrap().ideal;
    let inv = variety_invariants(&prod, 5).unwrap();
    assert_eq!((inv.dimension, inv.degree), (3, Some(6)));
    let s = singular_locus(&prod, 3, 5, 0).unwrap();
    assert!(s.smooth);
    assert!(matches!(s.method, SingularMethod::EmptyByLinearAlgebra { degree: 4, .. }));
}

#[test]
fn modular_product_matches_rational() {
    let p = 65521;
    let x = parametric("X", &["y0", "y1"], &["y0 - y1", "y0 + 2*y1", "3*y0", "y1"]);
    let y = parametric("Y", &["z0", "z1"], &["z0 + z1", "z1", "z0", "z0 - 5*z1"]);
    let rat = hadamard_product(&[x.clone(), y.clone()], 3, Budget::default()).unwrap();
    let to_fp = |v: &VarietyPresentation<Rational>| {
        let par = v.parametrization().unwrap();
        let ring = Ring::<PrimeFieldElement>::new(par.params().vars(), Modulus::new(p).unwrap()).unwrap();
        let forms: Vec<Polynomial<PrimeFieldElement>> =
            par.forms().iter().map(|f| parse_poly(&f.to_string(), &ring).unwrap()).collect();
        VarietyPresentation::parametric(v.name(), 3, Parametrization::new(&ring, forms).unwrap()).unwrap()
    };
    let modp = hadamard_product(&[to_fp(&x), to_fp(&y)], 3, Budget::default()).unwrap();
    let a = variety_invariants(&rat.ideal, 5).unwrap();
    let b = variety_invariants(&modp.ideal, 5).unwrap();
    assert_eq!(a.hilbert_function, b.hilbert_function);
    assert_eq!(
        rat.ideal.groebner_basis().unwrap().leading_monomials(),
        modp.ideal.groebner_basis().unwrap().leading_monomials()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hadamard_point_commutes(a in prop::collection::vec(-5i64..=5, 4), b in prop::collection::vec(-5i64..=5, 4)) {
        prop_assume!(a.iter().any(|&v| v != 0) && b.iter().any(|&v| v != 0));
        let p = ProjectivePoint::<Rational>::from_i64(&a, &()).unwrap();
        let q = ProjectivePoint::<Rational>::from_i64(&b, &()).unwrap();
        prop_assert_eq!(hadamard_point(&p, &q).ok(), hadamard_point(&q, &p).ok());
    }

    #[test]
    fn random_line_products_vanish_on_samples(seed in 0u64..1000) {
        let inst = sample_generic_instance::<Rational>(&[(1, 1), (1, 1)], 3, seed, SamplingRange { lo: -9, hi: 9 }, &()).unwrap();
        let h = hadamard_product(&inst.factors, 3, Budget::default()).unwrap();
        let range = SamplingRange::default();
        for s in 0..20 {
            let p = sample_point(inst.factors[0].parametrization().unwrap(), s, range).unwrap();
            let q = sample_point(inst.factors[1].parametrization().unwrap(), s + 500, range).unwrap();
            if let Ok(pq) = hadamard_point(&p, &q) {
                prop_assert!(ideal_vanishes_at(&h.ideal, &pq));
            }
        }
    }

    #[test]
    fn sampled_points_satisfy_implicit_ideal(seed in 0u64..1000) {
        let c = param(&["s", "t"], &["s^3", "s^2*t", "s*t^2", "t^3"]);
        let x = ambient_ring::<Rational>(3, &());
        let i = implicitize(&c, &x).unwrap();
        let p = sample_point(&c, seed, SamplingRange::default()).unwrap();
        prop_assert!(ideal_vanishes_at(&i, &p));
    }
}
