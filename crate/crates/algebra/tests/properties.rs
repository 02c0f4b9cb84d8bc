use std::sync::Arc;

use heunblock_algebra::json::{from_json, to_json};
use heunblock_algebra::modgcd::gcd;
use heunblock_algebra::{
    BigRational, ExecPolicy, FormalSeries, Grid, Laurent, ParameterSpace, Polynomial, RationalFunction, Ring, SeriesVar,
};
use proptest::prelude::*;

fn space() -> Arc<ParameterSpace> {
    ParameterSpace::new(["x", "y", "z"]).unwrap()
}

/// Sparse polynomial in `x, y, z` as infix text: `(c, [i, j, k])` terms.
fn poly_text(terms: &[(i64, [u8; 3])]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(c, e)| format!("({})*x^{}*y^{}*z^{}", c, e[0], e[1], e[2]))
        .collect::<Vec<_>>()
        .join("+")
}

fn poly() -> impl Strategy<Value = RationalFunction> {
    prop::collection::vec((-6i64..=6, [0u8..3, 0u8..3, 0u8..2]), 0..5)
        .prop_map(|t| RationalFunction::parse(&poly_text(&t), &space()).unwrap())
}

fn nonzero_poly() -> impl Strategy<Value = RationalFunction> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| n.try_div(&d).unwrap())
}

fn point() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-20i64..=20, 1i64..=7), 3)
        .prop_map(|v| v.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect())
}

fn series(order: i64) -> impl Strategy<Value = FormalSeries<RationalFunction>> {
    prop::collection::vec(poly(), (order + 1) as usize)
        .prop_map(move |c| FormalSeries::from_coefficients(SeriesVar::T, 0, c, order))
}

fn unit_series(order: i64) -> impl Strategy<Value = FormalSeries<RationalFunction>> {
    prop::collection::vec(poly(), order as usize).prop_map(move |mut c| {
        c.insert(0, RationalFunction::one());
        FormalSeries::from_coefficients(SeriesVar::T, 0, c, order)
    })
}

/// Numerator as a polynomial in all three variables (constants carry none).
fn lift(r: &RationalFunction) -> Polynomial {
    let n = r.numerator();
    match n.constant_value() {
        Some(c) if n.nvars() != 3 => Polynomial::constant(3, c),
        _ => n.clone(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(
            a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
            a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.try_add(&b).unwrap().try_mul(&c).unwrap(),
            a.try_mul(&c).unwrap().try_add(&b.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.try_div(&b).unwrap().try_mul(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let plain = a.try_div(&b).unwrap();
        let padded = a.try_mul(&c).unwrap().try_div(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&plain, &padded);
        prop_assert!(plain.denominator().is_sign_normalized());
        let g = gcd(plain.numerator(), plain.denominator());
        prop_assert!(g.is_constant());
        let text = plain.to_string();
        prop_assert_eq!(RationalFunction::parse(&text, &space()).unwrap(), plain);
    }

    #[test]
    fn gcd_keeps_common_factor(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let (pa, pb, pc) = (lift(&a), lift(&b), lift(&c));
        let g = gcd(&pa.mul(&pc), &pb.mul(&pc));
        prop_assert!(g.div_exact(&pc).is_some());
        prop_assert!(pa.mul(&pc).div_exact(&g).is_some());
        prop_assert!(pb.mul(&pc).div_exact(&g).is_some());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), p in point()) {
        let (ea, eb) = (a.eval_rational(&p), b.eval_rational(&p));
        if let (Ok(ea), Ok(eb)) = (ea, eb) {
            prop_assert_eq!(a.try_mul(&b).unwrap().eval_rational(&p).unwrap(), &ea * &eb);
            prop_assert_eq!(a.try_add(&b).unwrap().eval_rational(&p).unwrap(), &ea + &eb);
        }
    }

    #[test]
    fn derivative_obeys_leibniz(a in ratfunc(), b in ratfunc()) {
        let lhs = a.try_mul(&b).unwrap().derivative("y");
        let rhs = a.derivative("y").try_mul(&b).unwrap().try_add(&a.try_mul(&b.derivative("y")).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_division_inverts_multiplication(a in series(4), b in unit_series(4)) {
        let q = a.try_mul(&b).unwrap().try_div(&b).unwrap();
        prop_assert_eq!(q.first_mismatch(&a, 4), None);
    }

    #[test]
    fn series_log_and_exp_are_inverse(a in unit_series(4)) {
        let back = a.log().unwrap().exp().unwrap();
        prop_assert_eq!(back.first_mismatch(&a, 4), None);
    }

    #[test]
    fn series_sqrt_squares_back(a in unit_series(4)) {
        let r = a.sqrt().unwrap();
        prop_assert_eq!(r.try_mul(&r).unwrap().first_mismatch(&a, 4), None);
    }

    #[test]
    fn json_round_trip_is_byte_stable(a in series(3)) {
        let text = to_json(&a);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(back.first_mismatch(&a, 3), None);
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn laurent_derivative_has_no_residue(min in -4i64..=1, cs in prop::collection::vec(-9i64..=9, 1..7)) {
        let l = Laurent::new(min, cs.into_iter().map(RationalFunction::from_i64).collect());
        prop_assert!(l.derivative().residue().is_zero());
    }

    #[test]
    fn policies_agree(items in prop::collection::vec(-50i64..=50, 0..40)) {
        let f = |n: i64| RationalFunction::from_i64(n).pow(3);
        prop_assert_eq!(
            ExecPolicy::Parallel.map(items.clone(), f),
            ExecPolicy::Sequential.map(items, f)
        );
    }
}

#[test]
fn series_of_constants_round_trip() {
    let s = FormalSeries::constant(SeriesVar::T, Grid::Half, RationalFunction::ratio(-3, 7), 5);
    assert_eq!(from_json(&to_json(&s)).unwrap().first_mismatch(&s, 5), None);
    assert!(Laurent::<RationalFunction>::one().is_one());
}
