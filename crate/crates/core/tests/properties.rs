use chernbound::bounds::{
    degree_bound, delta_lower, genus_upper_delta, section5_quadratic, sharp_root_bracket,
    sharp_tolerance, LowerBoundMode,
};
use chernbound::constraints::{
    constraint_value, evaluate, is_feasible, ConstraintId, HypothesisConfig,
};
use chernbound::invariants::{profile, InvariantTuple};
use chernbound::rational::{from_big, int, ratio, Rational};
use chernbound::ring::{
    reduce_to_params, schur_closed_forms, twist_rank3, twisted_normal_schur, verify_identity,
    GradedPoly, IdentityId, Monomial, Side,
};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

const ALL_MONOMIALS: [[u8; 4]; 11] = [
    [0, 0, 0, 0],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [2, 0, 0, 0],
    [1, 1, 0, 0],
    [0, 2, 0, 0],
    [0, 0, 1, 0],
    [3, 0, 0, 0],
    [2, 1, 0, 0],
    [1, 2, 0, 0],
    [0, 3, 0, 0],
];

fn graded_poly() -> impl Strategy<Value = GradedPoly> {
    let extra = [[1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]];
    let monos: Vec<[u8; 4]> = ALL_MONOMIALS.iter().copied().chain(extra).collect();
    proptest::collection::vec(small_rational(), monos.len()).prop_map(move |coeffs| {
        monos
            .iter()
            .zip(coeffs)
            .fold(GradedPoly::zero(), |acc, (m, c)| {
                acc + GradedPoly::monomial(Monomial(*m), c)
            })
    })
}

fn pure(degree: u32) -> impl Strategy<Value = GradedPoly> {
    graded_poly().prop_map(move |p| p.component(degree))
}

fn tuple(bound: i64) -> impl Strategy<Value = InvariantTuple> {
    (
        -bound..=bound,
        -bound..=bound,
        -bound..=bound,
        -bound..=bound,
        -bound..=bound,
    )
        .prop_map(|(d, delta, chi, u, v)| InvariantTuple::new(d, delta, chi, u, v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_product_laws(a in graded_poly(), b in graded_poly(), c in graded_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn unit_inverse(x in graded_poly()) {
        let c = &(&x - &GradedPoly::constant(x.constant_term())) + &GradedPoly::one();
        let inv = c.invert_unit().unwrap();
        prop_assert_eq!(&c * &inv, GradedPoly::one());
    }

    #[test]
    fn reduction_is_linear(p in pure(3), q in pure(3), a in small_rational(), b in small_rational()) {
        let lhs = reduce_to_params(&(&p.scale(&a) + &q.scale(&b))).unwrap();
        let rhs = &reduce_to_params(&p).unwrap().scale(&a) + &reduce_to_params(&q).unwrap().scale(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn twist_round_trip(c1 in pure(1), c2 in pure(2), c3 in pure(3), l in pure(1)) {
        let (t1, t2, t3) = twist_rank3(&c1, &c2, &c3, &l).unwrap();
        let back = twist_rank3(&t1, &t2, &t3, &-&l).unwrap();
        prop_assert_eq!(back, (c1, c2, c3));
    }

    #[test]
    fn profile_identities(t in tuple(1_000_000)) {
        let p = profile(&t);
        prop_assert_eq!(&p.n3, &(&t.d * &t.d));
        prop_assert_eq!(&p.ks2 + &p.c2s, &t.chi * 12);
        prop_assert_eq!(p.kc2.clone(), BigInt::from(-24));
        prop_assert_eq!(p.g.clone() * int(2) - int(2), from_big(&t.delta));
    }

    #[test]
    fn profile_schur_matches_symbolic_ring(t in tuple(10_000)) {
        let s = twisted_normal_schur();
        let h = GradedPoly::h();
        let classes = [
            &s.s1 * &h.pow(2),
            &s.s20 * &h,
            &s.s11 * &h,
            s.s300.clone(),
            s.s210.clone(),
            s.s111.clone(),
        ];
        let p = profile(&t);
        for (class, got) in classes.iter().zip(p.schur()) {
            let want = t.eval(&reduce_to_params(class).unwrap());
            prop_assert_eq!(want, from_big(got));
        }
    }

    #[test]
    fn constraints_agree_with_profile(t in tuple(10_000)) {
        let cfg = HypothesisConfig::raw();
        let p = profile(&t);
        use ConstraintId::*;
        for (id, got) in [S1, S2, S3, S4, S5, S6].into_iter().zip(p.schur()) {
            prop_assert_eq!(&constraint_value(id, &t, &cfg), got);
        }
        let sum = constraint_value(S2, &t, &cfg) + constraint_value(S3, &t, &cfg);
        prop_assert_eq!(sum, &t.d * 3 + &t.delta * 6 + &t.chi * 10 - &t.u);
    }

    #[test]
    fn feasibility_shortcut_matches_report(t in tuple(40), kappa in proptest::option::of(-5i64..15)) {
        let mut cfg = HypothesisConfig::geometric();
        cfg.ks2_cap = kappa;
        let r = evaluate(&t, &cfg);
        prop_assert_eq!(is_feasible(&t, &cfg), r.feasible);
        prop_assert_eq!(r.feasible, r.constraints.iter().all(|e| e.ok));
        // Profile-then-compare route.
        let p = profile(&t);
        let via_profile = p.schur().iter().all(|x| !x.is_negative());
        let schur_ok = r.constraints.iter().filter(|e| e.id.as_str().starts_with('S')).all(|e| e.ok);
        prop_assert_eq!(via_profile, schur_ok);
    }

    #[test]
    fn quadratic_matches_symbolic_expansion(d in -100_000i64..100_000) {
        let v = verify_identity(IdentityId::DegreeQuadratic);
        let Side::Params(expr) = v.stated else { panic!("parameter identity") };
        let (a, b, c) = section5_quadratic(&BigInt::from(d), 9);
        // Recover A, B, C by evaluating at δ = 0, ±1.
        let at = |delta: i64| expr.eval(&[int(d), int(delta), int(0), int(0), int(0)]);
        prop_assert_eq!(at(0), c.clone());
        prop_assert_eq!((at(1) - at(-1)) / int(2), b);
        prop_assert_eq!((at(1) + at(-1)) / int(2) - c, a);
    }

    #[test]
    fn sharp_bound_dominates_linear(d in 12i64..2_000_000, kappa in 0i64..=9) {
        let d = BigInt::from(d);
        let paper = delta_lower(&d, kappa, LowerBoundMode::Paper).unwrap();
        let (lo, hi) = sharp_root_bracket(&d, kappa).unwrap();
        prop_assert!(paper <= lo);
        prop_assert!(&hi - &lo <= sharp_tolerance());
        let (a, b, c) = section5_quadratic(&d, kappa);
        let q = |x: &Rational| (&a * x + &b) * x + &c;
        prop_assert!(!q(&lo).is_positive());
        prop_assert!(!q(&hi).is_negative());
    }
}

#[test]
fn degree_bound_monotone_in_kappa() {
    for s in [34, 35, 36, 40, 50] {
        let mut previous: Option<BigInt> = None;
        for kappa in -10..=30 {
            let r = degree_bound(s, kappa, LowerBoundMode::Paper).unwrap();
            assert!(r.final_bound >= r.s_cubed);
            if let Some(prev) = &previous {
                assert!(prev <= &r.final_bound, "s={s} kappa={kappa}");
            }
            previous = Some(r.final_bound);
        }
    }
}

/// Brute force over every degree: no contradiction below the reported
/// crossing, and a contradiction at every degree from it up to well past
/// the bound.
#[test]
fn crossing_is_exact_by_brute_force() {
    for mode in [LowerBoundMode::Paper, LowerBoundMode::Sharp] {
        let r = degree_bound(34, 9, mode).unwrap();
        let first = i64::try_from(&r.first_contradictory_degree).unwrap();
        let upper = |d: i64| {
            let d = int(d);
            &d * &d / int(34) + int(14) * &d + int(860)
        };
        for d in 1..=first + 2000 {
            let big = BigInt::from(d);
            let (a, b, c) = section5_quadratic(&big, 9);
            let contradiction = c.is_negative()
                && match mode {
                    LowerBoundMode::Paper => -&b / &a > upper(d),
                    LowerBoundMode::Sharp => {
                        let u = upper(d);
                        ((&a * &u + &b) * &u + &c).is_negative()
                    }
                };
            assert_eq!(contradiction, d >= first, "{mode} d={d}");
        }
    }
}

#[test]
fn no_false_contradiction_below_the_bound() {
    // The clamp s_eff³ dominates for these s, so the range below is empty;
    // the loop only bites if the crossing ever exceeds s_eff³.
    for s in [34, 36, 40] {
        let r = degree_bound(s, 9, LowerBoundMode::Paper).unwrap();
        let mut d = &r.s_cubed + 1;
        while d <= r.final_bound {
            let lo = delta_lower(&d, 9, LowerBoundMode::Paper).unwrap();
            assert!(lo <= genus_upper_delta(&d, s).unwrap());
            d += 1;
        }
        assert!(r.first_contradictory_degree <= &r.final_bound + 1);
    }
}

#[test]
fn schur_closed_forms_are_what_the_registry_checks() {
    for (i, id) in [
        IdentityId::SchurS1,
        IdentityId::SchurS20,
        IdentityId::SchurS11,
        IdentityId::SchurS300,
        IdentityId::SchurS210,
        IdentityId::SchurS111,
    ]
    .into_iter()
    .enumerate()
    {
        let v = verify_identity(id);
        assert!(v.passed);
        assert_eq!(v.stated, Side::Params(schur_closed_forms()[i].clone()));
        let Side::Params(diff) = v.diff else { panic!() };
        assert!(diff.is_zero());
    }
}
