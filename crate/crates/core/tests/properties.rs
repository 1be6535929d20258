use std::collections::BTreeMap;

use painleve_core::catalog::{generic_check, table1_solutions, Family, PeriodicForm, SolutionDescriptor};
use painleve_core::exactnum::Value;
use painleve_core::ode::{from_falkner_skan, residual_numeric, residual_series, to_general_ode};
use painleve_core::painleve::{laurent_expand, leading_behaviors};
use painleve_core::series::{LaurentSeries, Poly, RatExpFunction};
use painleve_core::verify::{default_samples, verify_descriptor, verify_numeric_default, VerificationMode};
use painleve_core::{rat, ComplexF, OdeParams, PolyZ, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn series(start: i64) -> impl Strategy<Value = LaurentSeries> {
    (prop::collection::vec(rational(), 1..8), 4i64..10)
        .prop_map(move |(c, n)| LaurentSeries::new(start, c, start + n))
}

fn eval_jet(u: &LaurentSeries, z: ComplexF) -> [ComplexF; 4] {
    let d1 = u.diff(1);
    let d2 = d1.diff(1);
    [u.eval_complex(z), d1.eval_complex(z), d2.eval_complex(z), d2.diff(1).eval_complex(z)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn square_roots_of_squares(s in rational()) {
        prop_assert_eq!(s.square().perfect_square(), Some(s.abs()));
    }

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        } else {
            prop_assert!(a.recip().is_err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_rule(f in series(-2), g in series(1)) {
        let lhs = f.mul(&g).diff(1);
        let rhs = f.diff(1).mul(&g).add(&f.mul(&g.diff(1)));
        prop_assert_eq!(lhs.precision(), rhs.precision());
        prop_assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn truncation_commutes_with_products(f in series(-1), g in series(0), cut in 0i64..4) {
        let full = f.mul(&g);
        let p = full.precision() - cut;
        let lhs = f.truncate(f.precision() - cut).mul(&g.truncate(g.precision() - cut)).truncate(p);
        prop_assert_eq!(lhs.truncate(p).sub(&full.truncate(p)).truncate(lhs.precision().min(p)).is_zero(), true);
    }

    #[test]
    fn ratexp_derivative_matches_finite_differences(
        k in nonzero(), num in prop::collection::vec(rational(), 1..4), root in rational(),
    ) {
        let den = Poly::linear_root(root);
        let f = RatExpFunction::new(k, PolyZ::new(num), den).unwrap().to_complex();
        let df = f.diff_z();
        let h = 1e-6;
        for z in default_samples().into_iter().take(8) {
            if f.denominator_size(z) < 1e-2 {
                continue;
            }
            let (Some(a), Some(b), Some(d)) = (f.eval(z + h), f.eval(z - h), df.eval(z)) else { continue };
            let fd = (a - b) / (2.0 * h);
            prop_assert!((fd - d).norm() <= 1e-6 * d.norm().max(1.0), "{} vs {}", fd, d);
        }
    }

    #[test]
    fn series_and_pointwise_residuals_agree(
        a in rational(), b in rational(), beta in rational(), delta in rational(),
        coeffs in prop::collection::vec(rational(), 1..5),
    ) {
        // Finite series are exact functions, so both routes must coincide.
        let params = OdeParams::new(a, b, rat(1, 2), beta, rat(-1, 3), delta);
        let u = LaurentSeries::new(-1, coeffs, i64::MAX / 8);
        let res = residual_series(&params, &u).unwrap();
        let samples = default_samples();
        let numeric = residual_numeric(&params, |z| eval_jet(&u, z), &samples);
        for (s, z) in numeric.samples.iter().zip(&samples) {
            let exact = res.eval_complex(*z);
            let got = s.residual.unwrap();
            prop_assert!((got - exact.norm()).abs() <= 1e-9 * (1.0 + exact.norm()));
        }
    }

    #[test]
    fn general_form_round_trips(
        a in rational(), b in rational(), alpha in rational(), beta in rational(),
        gamma in rational(), delta in rational(), u in series(-2),
    ) {
        let params = OdeParams::new(a, b, alpha, beta, gamma, delta);
        let direct = residual_series(&params, &u);
        prop_assume!(direct.is_ok());
        let general = to_general_ode(&params).evaluate(&u);
        let direct = direct.unwrap();
        prop_assert!(general.sub(&direct).is_zero());
    }

    #[test]
    fn simple_pole_residue(a in nonzero(), b in rational()) {
        let params = OdeParams::ab(a, b);
        prop_assume!(!params.pole_sum().is_zero());
        let search = leading_behaviors(&to_general_ode(&params));
        let lead = search.behaviors.iter().find(|l| l.p == -1).expect("simple pole balance");
        prop_assert_eq!(&lead.u0 * &params.pole_sum(), Rational::from(-6));
    }

    #[test]
    fn compatible_expansion_solves_the_equation(
        a in nonzero(), beta in rational(), delta in rational(), u1 in rational(), u6 in rational(),
    ) {
        let params = OdeParams::new(a, Rational::zero(), Rational::zero(), beta, Rational::zero(), delta);
        let free = BTreeMap::from([(1, u1), (6, u6)]);
        let rep = laurent_expand(&params, 14, &free).unwrap();
        prop_assert!(rep.compatible());
        let res = residual_series(&params, &rep.series()).unwrap();
        prop_assert!(res.is_zero(), "{:?}", res);
    }
}

#[test]
fn falkner_skan_first_family_never_satisfies_cond_ii() {
    for r in (-20i64..=20).filter(|&r| r != 0) {
        let p = from_falkner_skan(&(&Rational::one() - &rat(1, r)));
        assert!(!generic_check(&p.a, &p.b).cond_ii, "r = {r}");
    }
}

fn generic_pair() -> impl Strategy<Value = (Rational, Rational)> {
    (nonzero(), nonzero()).prop_filter("generic", |(a, b)| a != b && generic_check(a, b).generic)
}

/// Parameters for which some Table 1 row is satisfiable.
fn table1_case() -> impl Strategy<Value = (OdeParams, BTreeMap<String, Rational>)> {
    (generic_pair(), 0usize..4, rational(), nonzero(), rational(), rational()).prop_map(
        |((a, b), row, alpha, x, y, free_b)| {
            let z = Rational::zero();
            let two = rat(2, 1);
            let mut free = BTreeMap::from([("b".to_string(), free_b)]);
            let p = match row {
                0 => {
                    let beta = &(&(-&x.square()) * &(&a - &b)) / &(&a + &(&b * &two));
                    free.insert("zeta0".into(), y.clone() + rat(1, 1000));
                    OdeParams::new(a, b, alpha, beta, z.clone(), z)
                }
                1 => {
                    let delta = &(&(-&y.square()) * &(&a - &(&b * &two))) / &(&(&a - &b).square() * &rat(4, 1));
                    OdeParams::new(a, b, alpha, y, z.clone(), delta)
                }
                2 => OdeParams::new(a, b, alpha, z, x, y),
                _ => {
                    let delta = &(&a * &x.square()) - &(&y * &x);
                    OdeParams::new(a, b, alpha, y, z, delta)
                }
            };
            (p, free)
        },
    )
}

fn bump(v: &Value, by: &Rational) -> Value {
    match v {
        Value::Exact(r) => Value::Exact(r + by),
        Value::Approx(c) => Value::Approx(c + by.to_f64()),
    }
}

/// One corrupted copy per determined (non-free) constant. For the linear
/// family a shift only moves the free intercept, so it is not a corruption.
fn corruptions(d: &SolutionDescriptor, by: &Rational) -> Vec<SolutionDescriptor> {
    let mut out = Vec::new();
    let mut push = |f: &dyn Fn(&mut SolutionDescriptor)| {
        let mut c = d.clone();
        f(&mut c);
        out.push(c);
    };
    if !matches!(d.family, Family::Linear { .. }) {
        push(&|c| c.offset = &c.offset + by);
    }
    match &d.family {
        Family::RationalPole { .. } => {
            push(&|c| {
                if let Family::RationalPole { c_minus1, .. } = &mut c.family {
                    *c_minus1 = &*c_minus1 + by;
                }
            });
            push(&|c| {
                if let Family::RationalPole { poly, .. } = &mut c.family {
                    let mut k = poly.coeffs().to_vec();
                    k.resize(3, Rational::zero());
                    k[2] = &k[2] + by;
                    *poly = PolyZ::new(k);
                }
            });
        }
        Family::SimplyPeriodic { form: PeriodicForm::SimplePole { .. }, .. } => {
            push(&|c| {
                if let Family::SimplyPeriodic { k, .. } = &mut c.family {
                    *k = bump(k, by);
                }
            });
            push(&|c| {
                if let Family::SimplyPeriodic { form: PeriodicForm::SimplePole { h0, .. }, .. } = &mut c.family {
                    *h0 = bump(h0, by);
                }
            });
            push(&|c| {
                if let Family::SimplyPeriodic { form: PeriodicForm::SimplePole { c0, .. }, .. } = &mut c.family {
                    *c0 = bump(c0, by);
                }
            });
        }
        Family::Quadratic { .. } => {
            push(&|c| {
                if let Family::Quadratic { a, .. } = &mut c.family {
                    *a = &*a + by;
                }
            });
            push(&|c| {
                if let Family::Quadratic { c: c0, .. } = &mut c.family {
                    *c0 = &*c0 + by;
                }
            });
        }
        Family::Linear { .. } => push(&|c| {
            if let Family::Linear { a, .. } = &mut c.family {
                *a = bump(a, by);
            }
        }),
        _ => {}
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn table1_descriptors_verify((params, free) in table1_case()) {
        let sols = table1_solutions(&params, &free);
        prop_assert!(!sols.descriptors.is_empty());
        for d in &sols.descriptors {
            prop_assert!(d.constraints_hold());
            let r = verify_descriptor(&params, d, 20).unwrap();
            prop_assert!(r.verified, "{:?} {:?}", d, r);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn exact_and_numeric_checks_agree((params, free) in table1_case()) {
        for d in table1_solutions(&params, &free).descriptors {
            let exact = verify_descriptor(&params, &d, 20).unwrap();
            prop_assume!(exact.mode != VerificationMode::Numeric);
            if let Ok(Some(n)) = verify_numeric_default(&params, &d) {
                prop_assert_eq!(n.verified, exact.verified, "{:?}", n);
            }
        }
    }

    #[test]
    fn quadratic_row_consistency(
        (a, b) in generic_pair(), gamma in nonzero(), delta in rational(), free_b in rational(),
    ) {
        let params = OdeParams::new(a.clone(), b.clone(), Rational::zero(), Rational::zero(), gamma.clone(), delta.clone());
        let free = BTreeMap::from([("b".to_string(), free_b.clone())]);
        let sols = table1_solutions(&params, &free);
        let quad: Vec<_> = sols.descriptors.iter().filter(|d| d.tag() == "Quadratic").collect();
        prop_assert_eq!(quad.len(), 1);
        let Family::Quadratic { a: qa, b: qb, c: qc } = &quad[0].family else { unreachable!() };
        // Matching z², z¹, z⁰ in the residual of a z² + b z + c by hand.
        let two_a_b = &(&a * &rat(2, 1)) + &b;
        if !two_a_b.is_zero() {
            prop_assert_eq!(qa, &(&gamma / &(&two_a_b * &rat(2, 1))));
        }
        prop_assert_eq!(qb, &free_b);
        let lhs = qc * &(&gamma - &(&(&rat(2, 1) * qa) * &b));
        prop_assert_eq!(lhs, &(&a * &qb.square()) - &delta);
        prop_assert!(verify_descriptor(&params, quad[0], 20).unwrap().verified);
    }
}

#[test]
fn corruption_is_detected() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let cases = table1_case();
    let bumps = nonzero();
    let (mut total, mut caught, mut landed) = (0usize, 0usize, 0usize);
    for _ in 0..300 {
        let (params, free) = cases.new_tree(&mut runner).unwrap().current();
        let by = bumps.new_tree(&mut runner).unwrap().current();
        for d in table1_solutions(&params, &free).descriptors {
            for bad in corruptions(&d, &by) {
                total += 1;
                if !verify_descriptor(&params, &bad, 20).unwrap().verified {
                    caught += 1;
                } else {
                    // A corrupted constant can land on another valid branch;
                    // it must then really be a solution.
                    landed += 1;
                    let check = verify_numeric_default(&params, &bad).unwrap().unwrap();
                    assert!(check.verified, "{bad:?}");
                }
            }
        }
    }
    assert!(total > 500);
    assert!(caught as f64 >= 0.99 * total as f64, "caught {caught} of {total} ({landed} landed)");
}
