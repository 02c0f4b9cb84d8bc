use heunblock::algebra::{BigRational, FormalSeries, Grid, Laurent, RationalFunction, Ring, SeriesVar};
use heunblock::wkb::{wkb_stack, HbarSeries};
use proptest::prelude::*;

mod common;
use common::wkb_identities::{d, k, mul};

/// The printed closed forms of `S_0 … S_3` in terms of `p = S_{-1}`.
fn closed_forms(p: &HbarSeries) -> [HbarSeries; 4] {
    let one = FormalSeries::one(SeriesVar::Hbar, Grid::Integer, p.order_steps());
    let inv = one.try_div(p).unwrap();
    let inv_pow = |n: u32| (1..n).fold(inv.clone(), |acc, _| mul(&acc, &inv));
    let (p1, p2) = (d(p), d(&d(p)));
    let (p3, p4) = (d(&p2), d(&d(&p2)));
    let s0 = mul(&p1, &inv).scale(&Laurent::from_rational(&BigRational::new((-1).into(), 2.into())));
    let s1 = mul(
        &mul(p, &p2).scale(&k(2)).try_sub(&mul(&p1, &p1).scale(&k(3))).unwrap(),
        &inv_pow(3),
    )
    .scale(&Laurent::from_rational(&BigRational::new(1.into(), 8.into())));
    let inner = mul(&mul(&p1, &p1), &inv_pow(4))
        .scale(&k(3))
        .try_sub(&mul(&p2, &inv_pow(3)).scale(&k(2)))
        .unwrap();
    let s2 = d(&inner).scale(&Laurent::from_rational(&BigRational::new(1.into(), 16.into())));
    let p1sq = mul(&p1, &p1);
    let psq = mul(p, p);
    let num = mul(&p1sq, &p1sq)
        .scale(&k(297))
        .try_sub(&mul(&mul(p, &p1sq), &p2).scale(&k(396)))
        .unwrap()
        .try_add(&mul(&psq, &mul(&p2, &p2)).scale(&k(52)))
        .unwrap()
        .try_add(&mul(&psq, &mul(&p1, &p3)).scale(&k(80)))
        .unwrap()
        .try_sub(&mul(&mul(&psq, p), &p4).scale(&k(8)))
        .unwrap();
    let s3 = mul(&num, &inv_pow(7))
        .scale(&Laurent::from_rational(&BigRational::new((-1).into(), 128.into())));
    [s0, s1, s2, s3]
}

fn assert_same(a: &HbarSeries, b: &HbarSeries, what: &str) {
    let o = a.order_steps().min(b.order_steps());
    assert_eq!(a.truncate(o), b.truncate(o), "{}", what);
}

/// `U = (a λ^m)^2 + Σ_{k=1}^3 ħ^k L_k(λ)` with random Laurent `L_k`.
fn random_potential(a: i64, m: i64, coeffs: &[i64]) -> HbarSeries {
    let mut terms = vec![Laurent::monomial(2 * m, RationalFunction::from_i64(a * a))];
    for chunk in coeffs.chunks(4) {
        let cs = chunk.iter().map(|&c| RationalFunction::ratio(c, 3)).collect();
        terms.push(Laurent::new(-2, cs));
    }
    FormalSeries::from_coefficients(SeriesVar::Hbar, 0, terms, 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn stack_matches_printed_closed_forms(
        a in prop_oneof![-5i64..=-1, 1i64..=5],
        m in prop_oneof![-2i64..=-1, 1i64..=2],
        coeffs in prop::collection::vec(-9i64..=9, 12),
    ) {
        let u = random_potential(a, m, &coeffs);
        let stack = wkb_stack(&u, 3).unwrap();
        let forms = closed_forms(stack.term(-1));
        for (n, f) in forms.iter().enumerate() {
            assert_same(stack.term(n as i32), f, &format!("S_{}", n));
        }
        for n in -1..=2 {
            prop_assert!(stack.residual(n).unwrap().is_zero());
        }
    }
}

#[test]
fn constant_potential_has_no_corrections() {
    let u = FormalSeries::constant(
        SeriesVar::Hbar,
        Grid::Integer,
        Laurent::from_rational(&BigRational::new(1.into(), 4.into())),
        6,
    );
    let stack = wkb_stack(&u, 3).unwrap();
    for n in 0..=3 {
        assert!(stack.term(n).is_zero());
    }
}
