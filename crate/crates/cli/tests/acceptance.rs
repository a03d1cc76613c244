//! Acceptance gate. Prints one PASS or FAIL line per criterion, with the
//! failing sub-checks underneath, and exits non-zero if any criterion fails.

use std::time::Instant;

use hadamard_cli::examples::{verify_example, EX4_1, EX4_2, EX4_2_IMPLICIT, EX4_3};
use hadamard_cli::checks::groebner_certificate;
use hadamard_cli::report::{Report, Status};
use hadamard_cli::scenario::{parse_scenario, reduce_mod_p};
use hadamard_cli::suite::{run_suites, SuiteField, SuiteKind};
use hadamard_core::arith::{Rational, DEFAULT_PRIME};
use hadamard_core::geometry::{
    ambient_ring, hadamard_product, ideal_vanishes_at, product_coefficient_matrix, sample_generic_instance,
    ProjectivePoint, SamplingRange, VarietyPresentation,
};
use hadamard_core::groebner::{eliminate, ideal_equal, Budget, Ideal};
use hadamard_core::invariants::variety_invariants;
use hadamard_core::poly::{parse_poly, Exponent, Monomial, Polynomial, Ring};
use hadamard_core::predictor::sweep_tables;
use serde_json::Value;

type Error = Box<dyn std::error::Error>;

/// Named sub-checks of one criterion.
#[derive(Default)]
struct Checks(Vec<(String, bool)>);

impl Checks {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.0.push((name.into(), ok));
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, computed: T, expected: T) {
        let ok = computed == expected;
        self.0.push((format!("{name}: computed {computed:?}, expected {expected:?}"), ok));
    }

    fn all_verdicts_match(&mut self, name: &str, report: &Report) {
        let bad: Vec<String> = report
            .verdicts
            .iter()
            .filter(|v| v.status != Status::Match)
            .map(|v| format!("{}{} {:?}", v.claim, v.subject.as_deref().map(|s| format!(" [{s}]")).unwrap_or_default(), v.status))
            .collect();
        self.check(format!("{name}: {} verdicts, non-matching {bad:?}", report.verdicts.len()), bad.is_empty());
    }

    /// Stated values must match; generic claims may be not applicable to a
    /// non-generic example but must not mismatch.
    fn example_verdicts(&mut self, name: &str, report: &Report) {
        let bad: Vec<String> = report
            .verdicts
            .iter()
            .filter(|v| v.status == Status::Mismatch || (v.claim.starts_with("stated_") && v.status != Status::Match))
            .map(|v| format!("{}{} {:?}", v.claim, v.subject.as_deref().map(|s| format!(" [{s}]")).unwrap_or_default(), v.status))
            .collect();
        self.check(format!("{name}: {} verdicts, failing {bad:?}", report.verdicts.len()), bad.is_empty());
    }
}

fn verdict_status(report: &Report, claim: &str) -> Option<Status> {
    report.verdicts.iter().find(|v| v.claim == claim && v.subject.is_none()).map(|v| v.status)
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// `(N, sum r, multinomial * prod d)` for factors of type `(r, d)`.
fn formulas(factors: &[(usize, u32)]) -> (u64, u64, u64) {
    let threshold = factors.iter().map(|&(r, d)| binomial(r as u64 + d as u64, d as u64)).product::<u64>() - 1;
    let sum_r: u64 = factors.iter().map(|&(r, _)| r as u64).sum();
    let multinomial = factorial(sum_r) / factors.iter().map(|&(r, _)| factorial(r as u64)).product::<u64>();
    let degree = multinomial * factors.iter().map(|&(_, d)| d as u64).product::<u64>();
    (threshold, sum_r, degree)
}

fn int(v: &Value) -> Option<i64> {
    v.as_i64()
}

/// `matrix * point` for a report's integer coefficient matrix.
fn apply(matrix: &Value, point: &[i64]) -> Option<Vec<i64>> {
    matrix
        .as_array()?
        .iter()
        .map(|row| {
            let row = row.as_array()?;
            row.iter()
                .zip(point)
                .map(|(e, p)| e.as_str()?.parse::<i64>().ok().map(|e| e * p))
                .sum::<Option<i64>>()
        })
        .collect()
}

fn example_4_1() -> Result<(Checks, Vec<Report>), Error> {
    let r = verify_example("4.1", 1, None)?;
    let mut c = Checks::default();
    let product = &r.computed["product"];
    let inv = &product["invariants"];
    c.eq("dimension", int(&inv["dimension"]), Some(2));
    c.eq("degree", int(&inv["degree"]), Some(4));
    let sing = &r.computed["singular_locus"]["invariants"];
    c.eq("singular locus dimension", int(&sing["dimension"]), Some(0));
    c.eq("singular locus degree", int(&sing["degree"]), Some(5));
    c.eq(
        "coefficient matrix determinant",
        r.certificates["coefficient_matrix"]["determinant"].as_str(),
        Some("0"),
    );
    let hf1 = int(&inv["hilbert_function"][1]);
    let expected = int(&product["factor_hf_products"][1]);
    c.check(format!("HF(1) = {hf1:?} differs from the factor product {expected:?}"), hf1.is_some() && hf1 != expected);
    c.example_verdicts("4.1", &r);
    Ok((c, vec![r]))
}

fn example_4_2() -> Result<(Checks, Vec<Report>), Error> {
    let r = verify_example("4.2", 1, None)?;
    let mut c = Checks::default();
    let inv = &r.computed["product"]["invariants"];
    c.eq("dimension", int(&inv["dimension"]), Some(2));
    c.eq("degree", int(&inv["degree"]), Some(3));
    c.eq("degree formula value", int(&r.predicted["expected_deg"]), Some(4));
    c.check("degree strictly below the formula", int(&inv["degree"]) < int(&r.predicted["expected_deg"]));
    c.eq(
        "singular locus dimension",
        int(&r.computed["singular_locus"]["invariants"]["dimension"]),
        Some(-1),
    );
    let co = &r.certificates["coefficient_matrix"];
    c.eq("coefficient matrix rank", int(&co["rank"]), Some(5));

    let stated = [0, 0, -2, 0, 0, 1];
    let image = apply(&co["matrix"], &stated);
    c.check(
        format!(
            "kernel point [0:0:-2:0:0:1] up to scale: matrix image {image:?}, computed kernel {}",
            co["center_point"]
        ),
        image.is_some_and(|v| v.iter().all(|&x| x == 0)) && verdict_status(&r, "stated_center_point") == Some(Status::Match),
    );

    let s = parse_scenario(EX4_2)?;
    let factors = s.build::<Rational>(&())?;
    let params: Vec<_> = factors.iter().filter_map(|f| f.parametrization()).collect();
    let (_, sv) = product_coefficient_matrix(&params)?;
    let point = ProjectivePoint::<Rational>::from_i64(&stated, &())?;
    let on_s = ideal_vanishes_at(&sv.implicit_ideal()?, &point);
    c.check("[0:0:-2:0:0:1] lies on the Segre-Veronese variety of type (1,2)", on_s);

    for claim in ["stated_dimension", "stated_degree", "stated_smooth"] {
        let listed = r
            .verdicts
            .iter()
            .find(|v| v.claim == claim && v.subject.as_deref() == Some("listed equations"))
            .map(|v| v.status);
        c.eq(&format!("listed equations {claim}"), listed, Some(Status::Match));
    }
    Ok((c, vec![r]))
}

fn example_4_3() -> Result<(Checks, Vec<Report>), Error> {
    let r = verify_example("4.3", 1, None)?;
    let mut c = Checks::default();
    let inv = &r.computed["product"]["invariants"];
    c.eq("dimension", int(&inv["dimension"]), Some(2));
    c.eq("degree", int(&inv["degree"]), Some(4));
    let sing = int(&r.computed["singular_locus"]["invariants"]["dimension"]);
    c.eq("singular locus dimension", sing, Some(1));
    let (_, sum_r, _) = formulas(&[(1, 1), (1, 2)]);
    c.eq("meets the bound 2(r+s) - n", sing, Some(2 * sum_r as i64 - 3));
    c.example_verdicts("4.3", &r);
    Ok((c, vec![r]))
}

fn example_4_4() -> Result<(Checks, Vec<Report>), Error> {
    let mut c = Checks::default();
    let mut reports = Vec::new();
    for k in 1..=2i64 {
        let start = Instant::now();
        let r = verify_example("4.4", k as usize, None)?;
        let inv = &r.computed["product"]["invariants"];
        c.eq(&format!("k={k} dimension"), int(&inv["dimension"]), Some(k + 1));
        c.eq(&format!("k={k} degree 2(k+1)"), int(&inv["degree"]), Some(2 * (k + 1)));
        let sing = int(&r.computed["singular_locus"]["invariants"]["dimension"]);
        c.check(format!("k={k} singular locus dimension {sing:?} at least 1"), sing.is_some_and(|d| d >= 1));
        c.eq(&format!("k={k} predictor agrees"), verdict_status(&r, "predictor_agrees"), Some(Status::Match));
        c.example_verdicts(&format!("k={k}"), &r);
        let limit = if k == 1 { 300 } else { 1800 };
        c.check(format!("k={k} finished in {:.1?}", start.elapsed()), start.elapsed().as_secs() < limit);
        reports.push(r);
    }
    Ok((c, reports))
}

fn instance_list(report: &Report) -> &[Value] {
    report.computed.get("instances").and_then(Value::as_array).map(Vec::as_slice).unwrap_or_default()
}

fn instance_factors(inst: &Value) -> Vec<(usize, u32)> {
    inst["factors"]
        .as_array()
        .into_iter()
        .flatten()
        .filter_map(|f| Some((f[0].as_u64()? as usize, f[1].as_u64()? as u32)))
        .collect()
}

fn has_table_row(inst: &Value, table: &str) -> bool {
    inst["table_rows"]
        .as_array()
        .is_some_and(|rows| rows.iter().any(|r| r.as_str().is_some_and(|s| s.starts_with(table))))
}

fn certified(inst: &Value) -> bool {
    inst["sampling"]["certified"] == Value::Bool(true) && !inst["modular"]["agreeing"].is_null()
}

fn large_suite() -> Result<(Checks, Vec<Report>), Error> {
    let r = run_suites(&[SuiteKind::Large], SuiteField::Modular);
    let mut c = Checks::default();
    let list = instance_list(&r);
    c.check(
        format!("{} certified generic instances", list.iter().filter(|i| certified(i)).count()),
        list.iter().filter(|i| certified(i)).count() >= 10,
    );
    for inst in list {
        let label = format!("{} n={} seed={}", inst["factors"], inst["n"], inst["seed"]);
        let factors = instance_factors(inst);
        let (threshold, sum_r, degree) = formulas(&factors);
        let shape = (2..=3).contains(&factors.len()) && factors.iter().all(|&(r, d)| r == 1 && d <= 2);
        c.check(format!("{label}: certified, two or three lines or conics"), certified(inst) && shape);
        c.eq(&format!("{label}: n at the threshold"), inst["n"].as_u64(), Some(threshold));
        c.eq(&format!("{label}: regime"), inst["regime"].as_str(), Some("large"));
        c.eq(&format!("{label}: dimension"), inst["dimension"].as_u64(), Some(sum_r));
        c.eq(&format!("{label}: degree"), inst["degree"].as_u64(), Some(degree));
        let hf = inst["hilbert_function"].as_array().map(Vec::len);
        c.eq(&format!("{label}: HF values through t = 5"), hf, Some(6));
        c.eq(&format!("{label}: smooth"), inst["singular_locus"]["smooth"].as_bool(), Some(true));
    }
    let multiplicative = r.verdicts.iter().filter(|v| v.claim == "hilbert_function_multiplicative").count();
    c.eq("HF multiplicativity verdicts", multiplicative, list.len());
    c.all_verdicts_match("large suite", &r);
    Ok((c, vec![r]))
}

fn small_suites() -> Result<(Checks, Vec<Report>), Error> {
    let r = run_suites(&[SuiteKind::Small], SuiteField::Modular);
    let mut c = Checks::default();
    let list = instance_list(&r);
    let ranged = list.iter().filter(|i| certified(i) && has_table_row(i, "singular_range:")).count();
    c.check(format!("{ranged} certified instances from singular-range rows"), ranged >= 10);
    for inst in list {
        let label = format!("{} n={} seed={}", inst["factors"], inst["n"], inst["seed"]);
        let (threshold, sum_r, degree) = formulas(&instance_factors(inst));
        let n = inst["n"].as_u64().unwrap_or(0);
        c.check(
            format!("{label}: n in [N - sum r, N - 1] with N = {threshold} and n > sum r"),
            threshold - sum_r <= n && n < threshold && n > sum_r,
        );
        c.eq(&format!("{label}: dimension"), inst["dimension"].as_u64(), Some(sum_r));
        c.eq(&format!("{label}: degree"), inst["degree"].as_u64(), Some(degree));
        let hf1 = inst["hilbert_function"][1].as_u64();
        let product = inst["factor_hf_products"][1].as_u64();
        c.check(format!("{label}: HF(1) {hf1:?} below {product:?}"), matches!((hf1, product), (Some(a), Some(b)) if a < b));
        let sing = inst["singular_locus"]["invariants"]["dimension"].as_i64();
        let bound = 2 * sum_r as i64 - n as i64;
        c.check(format!("{label}: singular dimension {sing:?} at least {bound}"), sing.is_some_and(|s| s >= bound));
    }
    c.all_verdicts_match("small suite", &r);

    let smooth = run_suites(&[SuiteKind::Smooth], SuiteField::Modular);
    for inst in instance_list(&smooth) {
        let label = format!("{} n={}", inst["factors"], inst["n"]);
        c.check(
            format!("{label}: certified, from a smooth row, reports smooth"),
            certified(inst) && has_table_row(inst, "small_regime_smooth:") && inst["singular_locus"]["smooth"] == Value::Bool(true),
        );
    }
    c.check("smooth suite is not empty", !instance_list(&smooth).is_empty());
    c.all_verdicts_match("smooth suite", &smooth);
    Ok((c, vec![r, smooth]))
}

/// A small corpus of products: the built-in examples and a few sampled
/// generic instances.
fn corpus() -> Result<Vec<(String, usize, Vec<VarietyPresentation<Rational>>)>, Error> {
    let mut out = Vec::new();
    for (name, text) in [("ex4_1", EX4_1), ("ex4_2", EX4_2), ("ex4_2_implicit", EX4_2_IMPLICIT), ("ex4_3", EX4_3)] {
        let s = parse_scenario(text)?;
        out.push((name.to_string(), s.ambient, s.build::<Rational>(&())?));
    }
    for (factors, n, seed) in [
        (&[(1, 1), (1, 1)][..], 3, 0),
        (&[(1, 2), (1, 1)][..], 3, 1),
        (&[(1, 1), (1, 1), (1, 1)][..], 7, 0),
    ] {
        let inst = sample_generic_instance::<Rational>(factors, n, seed, SamplingRange::default(), &())?;
        out.push((format!("generic {factors:?} n={n} seed={seed}"), n, inst.factors));
    }
    Ok(out)
}

fn monomials(nvars: usize, degree: u32) -> Vec<Vec<Exponent>> {
    if nvars == 1 {
        return vec![vec![degree as Exponent]];
    }
    (0..=degree)
        .flat_map(|e| {
            monomials(nvars - 1, degree - e).into_iter().map(move |mut rest| {
                rest.insert(0, e as Exponent);
                rest
            })
        })
        .collect()
}

/// Hilbert function by counting standard monomials of each degree.
fn brute_hilbert_function(ideal: &Ideal<Rational>, top: u32) -> Result<Vec<u64>, Error> {
    let gb = ideal.groebner_basis()?;
    let leading = gb.leading_monomials();
    let nvars = ideal.ring().nvars();
    Ok((0..=top)
        .map(|t| {
            monomials(nvars, t)
                .iter()
                .filter(|e| {
                    let m = Monomial::from_exponents(e);
                    !leading.iter().any(|l| l.divides(&m))
                })
                .count() as u64
        })
        .collect())
}

/// Every generator of the product vanishes after substituting coordinatewise
/// products of the factors' parametrizations.
fn product_kernel_holds(product: &Ideal<Rational>, factors: &[VarietyPresentation<Rational>]) -> Result<Option<bool>, Error> {
    let params: Option<Vec<_>> = factors.iter().map(|f| f.parametrization()).collect();
    let Some(params) = params else {
        return Ok(None);
    };
    let mut names = Vec::new();
    let mut maps = Vec::new();
    for (i, p) in params.iter().enumerate() {
        maps.push((names.len()..names.len() + p.params().nvars()).collect::<Vec<_>>());
        names.extend((0..p.params().nvars()).map(|j| format!("p{i}_{j}")));
    }
    let ring = Ring::<Rational>::new(&names, ())?;
    let images: Vec<Polynomial<Rational>> = (0..product.ring().nvars())
        .map(|k| {
            params.iter().zip(&maps).fold(Polynomial::one(&ring), |acc, (p, map)| {
                &acc * &p.forms()[k].map_to_ring(&ring, map)
            })
        })
        .collect();
    for g in product.gens() {
        if !g.substitute(&images)?.is_zero() {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Eliminating the parameters from the graph ideal of a parametrization
/// yields elements of the graph ideal that generate the factor's ideal.
fn elimination_sound(f: &VarietyPresentation<Rational>) -> Result<Option<bool>, Error> {
    let Some(p) = f.parametrization() else {
        return Ok(None);
    };
    let k = p.params().nvars();
    let n = p.forms().len();
    let mut names: Vec<String> = (0..k).map(|j| format!("t{j}")).collect();
    names.extend((0..n).map(|i| format!("x{i}")));
    let ring = Ring::<Rational>::new(&names, ())?;
    let param_map: Vec<usize> = (0..k).collect();
    let graph: Vec<Polynomial<Rational>> = p
        .forms()
        .iter()
        .enumerate()
        .map(|(i, form)| &Polynomial::var(&ring, k + i) - &form.map_to_ring(&ring, &param_map))
        .collect();
    let graph = Ideal::new(&ring, graph)?;
    let eliminated = eliminate(&graph, &(0..k).collect::<Vec<_>>())?;
    let back: Vec<usize> = (0..n).map(|i| k + i).collect();
    for g in eliminated.gens() {
        if !graph.contains(&g.map_to_ring(&ring, &back))? {
            return Ok(Some(false));
        }
    }
    let implicit = f.implicit_ideal()?;
    Ok(Some(ideal_equal(&eliminated.transfer(implicit.ring())?, &implicit)?))
}

fn sorted_leading(ideal: &Ideal<impl hadamard_core::arith::Field>) -> Result<Vec<Vec<Exponent>>, Error> {
    let mut lm: Vec<Vec<Exponent>> = ideal.groebner_basis()?.leading_monomials().iter().map(|m| m.exponents().to_vec()).collect();
    lm.sort();
    Ok(lm)
}

fn properties(reports: &[Report]) -> Result<Checks, Error> {
    let mut c = Checks::default();

    let uncertified: Vec<&str> = reports
        .iter()
        .filter(|r| r.certificates.get("groebner_basis_certified").is_some_and(|v| v != &Value::Bool(true)))
        .map(|r| r.command.as_str())
        .collect();
    c.check(format!("example reports carry S-polynomial certificates, failing: {uncertified:?}"), uncertified.is_empty());
    let suite_instances: Vec<&Value> = reports.iter().flat_map(instance_list).collect();
    let bad: Vec<String> = suite_instances
        .iter()
        .filter(|i| i["groebner_basis_certified"] != Value::Bool(true))
        .map(|i| format!("{} n={}", i["factors"], i["n"]))
        .collect();
    c.check(format!("{} suite instances carry S-polynomial certificates, failing: {bad:?}", suite_instances.len()), bad.is_empty());
    let bad: Vec<String> = suite_instances
        .iter()
        .filter(|i| i["sampled_product_points"]["checked"] != 20 || i["sampled_product_points"]["vanishing"] != 20)
        .map(|i| format!("{} n={}", i["factors"], i["n"]))
        .collect();
    c.check(format!("20 sampled product points vanish on every suite instance, failing: {bad:?}"), bad.is_empty());
    for r in reports.iter().filter(|r| r.command == "verify-example 4.2" || r.command == "verify-example 4.4") {
        let s = &r.certificates["sampled_product_points"];
        c.check(format!("{}: sampled points {s}", r.command), s["checked"] == 20 && s["vanishing"] == 20);
    }

    for (name, n, factors) in corpus()? {
        let product = hadamard_product(&factors, n, Budget::default())?.ideal;
        let mut ideals = vec![(format!("{name} product"), product.clone())];
        for f in &factors {
            ideals.push((format!("{name} factor {}", f.name()), f.implicit_ideal()?));
        }
        for (label, ideal) in &ideals {
            c.check(format!("{label}: S-polynomial certificate"), groebner_certificate(&*ideal.groebner_basis()?));
            let computed = variety_invariants(ideal, 6)?.hilbert_function;
            c.eq(&format!("{label}: HF through degree 6"), computed, brute_hilbert_function(ideal, 6)?);
        }

        if let Some(ok) = product_kernel_holds(&product, &factors)? {
            c.check(format!("{name}: product generators vanish on parametrized products"), ok);
        }
        for f in &factors {
            if let Some(ok) = elimination_sound(f)? {
                c.check(format!("{name} factor {}: elimination soundness", f.name()), ok);
            }
        }

        if factors.len() == 2 {
            let swapped = [factors[1].clone(), factors[0].clone()];
            let other = hadamard_product(&swapped, n, Budget::default())?.ideal;
            c.check(format!("{name}: commutativity"), ideal_equal(&product, &other)?);
        }
        let x = ambient_ring::<Rational>(n, &());
        let ones: Vec<Polynomial<Rational>> = (1..=n).map(|i| parse_poly(&format!("x{i} - x0"), &x)).collect::<Result<_, _>>()?;
        let ones = VarietyPresentation::implicit("ones", Ideal::new(&x, ones)?)?;
        for f in &factors {
            let h = hadamard_product(&[f.clone(), ones.clone()], n, Budget::default())?.ideal;
            c.check(
                format!("{name} factor {}: product with the all-ones point", f.name()),
                ideal_equal(&h, &f.implicit_ideal()?)?,
            );
        }

        let reduced = factors.iter().map(|f| reduce_mod_p(f, DEFAULT_PRIME)).collect::<Result<Vec<_>, _>>()?;
        let modular = hadamard_product(&reduced, n, Budget::default())?.ideal;
        c.eq(
            &format!("{name}: leading monomials modulo {DEFAULT_PRIME}"),
            sorted_leading(&modular)?,
            sorted_leading(&product)?,
        );
    }
    Ok(c)
}

fn sweep() -> Result<Checks, Error> {
    let mut c = Checks::default();
    let start = Instant::now();
    let report = sweep_tables(4)?;
    let elapsed = start.elapsed();
    c.check(format!("{} table evaluations", report.checked), report.checked > 0);
    c.eq("failing rows", report.failures.len(), 0);
    c.check(format!("runtime {elapsed:.1?} below one second"), elapsed.as_secs_f64() < 1.0);
    Ok(c)
}

fn print(id: usize, title: &str, result: Result<Checks, Error>) -> bool {
    match result {
        Ok(Checks(checks)) => {
            let failed: Vec<&String> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
            let pass = failed.is_empty() && !checks.is_empty();
            println!("{} criterion {id}: {title} ({} checks)", if pass { "PASS" } else { "FAIL" }, checks.len());
            for f in failed {
                println!("    failed: {f}");
            }
            pass
        }
        Err(e) => {
            println!("FAIL criterion {id}: {title} (error: {e})");
            false
        }
    }
}

fn main() {
    // tooling may probe test binaries with `--list`
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let mut reports = Vec::new();
    let mut passed = Vec::new();
    let mut run = |id: usize, title: &str, f: fn() -> Result<(Checks, Vec<Report>), Error>| {
        let result = f().map(|(c, r)| {
            reports.extend(r);
            c
        });
        passed.push(print(id, title, result));
    };
    run(1, "line times degenerate conic in P^4, singular quartic", example_4_1);
    run(2, "line times conic in P^4 with a special projection center", example_4_2);
    run(3, "line times conic in P^3, singular quartic surface", example_4_3);
    run(4, "conic times k-plane in P^(2k+1), k = 1 and 2", example_4_4);
    run(5, "large-ambient generic suite", large_suite);
    run(6, "small-ambient generic suites", small_suites);
    passed.push(print(7, "property suites", properties(&reports)));
    passed.push(print(8, "predictor table sweep", sweep()));
    let failed = passed.iter().filter(|p| !**p).count();
    println!("acceptance: {} of {} criteria pass", passed.len() - failed, passed.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
