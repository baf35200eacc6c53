//! Property tests for the algebraic identities and interval bookkeeping the rest of the
//! crate leans on.

use heightlab::arith::{parse_univariate, resultant_int, IntPoly};
use heightlab::constants::{BoundExpr, Env};
use heightlab::heights::{height_from_min_poly, height_point, sandwich_check, Norm, ProjectivePoint};
use proptest::prelude::*;
use rug::{Integer, Rational};

fn poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1)
        .prop_map(|c| IntPoly::from_i64s(&c))
        .prop_filter("nonconstant", |f| !f.is_zero() && f.degree() >= 1)
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..1000, 1i64..1000).prop_map(|(a, b)| Rational::from((a, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_is_multiplicative(f in poly(4), g in poly(4), h in poly(4)) {
        let lhs = resultant_int(&f.mul(&g), &h).unwrap();
        let rhs = resultant_int(&f, &h).unwrap() * resultant_int(&g, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_swaps_with_sign(f in poly(5), g in poly(5)) {
        let sign = if (f.degree() * g.degree()) % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(resultant_int(&f, &g).unwrap(), resultant_int(&g, &f).unwrap() * sign);
    }

    #[test]
    fn display_parse_roundtrip(f in poly(8)) {
        let back = parse_univariate(&f.to_string(), "x").unwrap();
        prop_assert_eq!(back.primitive_part(), f.primitive());
        prop_assert_eq!(back.to_primitive().1.degree(), f.degree());
    }

    #[test]
    fn point_heights_sandwich(c in prop::collection::vec(-10_000i64..10_000, 2..6)) {
        prop_assume!(c.iter().any(|&x| x != 0));
        let p = ProjectivePoint::from_i64s(&c).unwrap();
        let hi = height_point(&p, Norm::Inf).value;
        let h2 = height_point(&p, Norm::L2).value;
        prop_assert!(sandwich_check(&p, p.dim()));
        prop_assert!(hi <= h2 + 1e-12);
        prop_assert!(h2 <= hi + 0.5 * ((p.dim() + 1) as f64).ln() + 1e-12);
    }

    #[test]
    fn point_height_is_projective(c in prop::collection::vec(-500i64..500, 2..5), k in 1i64..50) {
        prop_assume!(c.iter().any(|&x| x != 0));
        let p = ProjectivePoint::from_i64s(&c).unwrap();
        let scaled: Vec<i64> = c.iter().map(|x| x * k).collect();
        let q = ProjectivePoint::from_i64s(&scaled).unwrap();
        prop_assert!((height_point(&p, Norm::L2).value - height_point(&q, Norm::L2).value).abs() < 1e-12);
    }

    #[test]
    fn inverse_has_same_height(a in 1i64..6, b in -6i64..6, c in 1i64..6) {
        // a x^2 + b x + c and its reversal define alpha and 1/alpha
        let f = IntPoly::from_i64s(&[c, b, a]);
        prop_assume!(Integer::from(b * b - 4 * a * c) != 0);
        let h = |p: &IntPoly| height_from_min_poly(p, 1e-12).unwrap().value;
        prop_assert!((h(&f) - h(&f.reverse())).abs() < 1e-10);
    }

    #[test]
    fn rational_expressions_are_enclosed(a in positive_rational(), b in positive_rational(), c in positive_rational(), n in 0u32..6) {
        let e = BoundExpr::pow(
            BoundExpr::quotient(
                BoundExpr::product(vec![BoundExpr::sum(vec![BoundExpr::rational(a.clone()), BoundExpr::rational(b.clone())]), BoundExpr::rational(c.clone())]),
                BoundExpr::rational(a.clone()),
            ),
            BoundExpr::int(n as i64),
        );
        let base = (a.clone() + &b) * &c / &a;
        let exact = (0..n).fold(Rational::from(1), |acc, _| acc * &base);
        for prec in [53, 128, 512] {
            let bound = e.eval(&Env::new(), prec).unwrap();
            prop_assert!(bound.contains(&exact), "prec {prec}");
        }
    }

    #[test]
    fn precision_tightens_and_stays_consistent(a in positive_rational(), b in positive_rational()) {
        // log, exp and a large power force the interval path
        let e = BoundExpr::sum(vec![
            BoundExpr::log(BoundExpr::sum(vec![BoundExpr::int(1), BoundExpr::rational(a)])),
            BoundExpr::exp(BoundExpr::rational(b.clone())),
            BoundExpr::pow(BoundExpr::rational(b + 1u32), BoundExpr::int(1000)),
        ]);
        let lo = e.eval(&Env::new(), 64).unwrap();
        let hi = e.eval(&Env::new(), 512).unwrap();
        prop_assert!(hi.width() <= lo.width());
        prop_assert!(hi.lo <= lo.hi && lo.lo <= hi.hi, "intervals at two precisions must overlap");
    }
}

#[test]
fn double_exponential_constants_tighten() {
    let g0 = heightlab::constants::remond_theta_coefficient(4, 3, 15).unwrap();
    let a = g0.eval(&Env::new(), 128).unwrap();
    let b = g0.eval(&Env::new(), 1024).unwrap();
    assert!(b.width() < a.width());
    assert!(b.lo <= a.hi && a.lo <= b.hi);
}
