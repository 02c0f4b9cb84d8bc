use heunblock::algebra::{ExecPolicy, RationalFunction};
use heunblock::wkb::{
    back_substitute, bs_period, invert_bs, inversion_space, potential_catalog, BsPeriod, HeunEquation,
};
use heunblock::HeunError;

fn parse_in(period: &BsPeriod, text: &str) -> RationalFunction {
    RationalFunction::parse(text, &period.space).unwrap()
}

/// Asserts the listed ħ-coefficients of a period contribution.
fn assert_hbar(period: &BsPeriod, index: i32, expected: &[(i64, &str)]) {
    let s = period.contribution(index).unwrap();
    for (k, text) in expected {
        assert_eq!(s.coeff_int(*k).unwrap(), parse_in(period, text), "nu_{} at hbar^{}", index, k);
    }
}

pub fn confluent_period_matches_printed_expansion() {
    let p = bs_period(HeunEquation::HV, 7, ExecPolicy::default()).unwrap();
    assert_hbar(
        &p,
        -1,
        &[
            (0, "0"),
            (1, "kappa+thetastar"),
            (2, "0"),
            (3, "E0-2*kappa^2-2*kappa*thetastar"),
            (
                5,
                "E1-2*E0*(thetastar+2*kappa)+2*kappa*(6*kappa^2+3*thetastar^2+9*kappa*thetastar+delta0+deltat)+2*deltat*thetastar",
            ),
            (
                7,
                "E2-2*E1*(thetastar+2*kappa)+2*E0*(-E0+delta0+deltat+3*thetastar^2+18*kappa*thetastar+18*kappa^2)\
                 -100*kappa^2*(thetastar+kappa)^2-12*(thetastar+2*kappa)*(kappa*delta0+kappa*deltat+deltat*thetastar)\
                 -20*thetastar^2*kappa*(thetastar+kappa)-4*delta0*deltat",
            ),
        ],
    );
    assert_hbar(&p, 1, &[(3, "0"), (4, "0"), (5, "-4*kappa*(kappa+thetastar)")]);
}

pub fn biconfluent_period_matches_printed_expansion() {
    let p = bs_period(HeunEquation::HIV, 5, ExecPolicy::default()).unwrap();
    assert_hbar(
        &p,
        -1,
        &[
            (1, "-kappa/2"),
            (2, "-E0/2"),
            (3, "(-E1+delta0+kappa*thetabullet+3/4*kappa^2)/2"),
            (4, "(-2*E2+(2*thetabullet+3*kappa)*E0)/4"),
            (
                5,
                "(-2*E3+E1*(2*thetabullet+3*kappa)+3/2*E0^2-15/4*kappa^2*(2*thetabullet+kappa)-6*delta0*(thetabullet+kappa)-3*thetabullet^2*kappa)/4",
            ),
        ],
    );
    // ν_1 enters the total as ħ ν_1, so ħ^3 is all this truncation needs.
    assert_hbar(&p, 1, &[(3, "-3/16*kappa")]);
}

pub fn leading_higher_contributions() {
    let p = bs_period(HeunEquation::HIV, 7, ExecPolicy::default()).unwrap();
    assert_hbar(
        &p,
        1,
        &[(4, "-3/16*E0"), (5, "(-12*E1+60*delta0+100*thetabullet*kappa+105*kappa^2)/64")],
    );
    assert_hbar(&p, 3, &[(3, "0")]);
    let p = bs_period(HeunEquation::HIV, 9, ExecPolicy::default()).unwrap();
    assert_hbar(&p, 3, &[(5, "-315/256*kappa")]);
}

pub fn confluent_inversion() {
    let inv = invert_bs(HeunEquation::HV, 2, ExecPolicy::default()).unwrap();
    let s = inversion_space(HeunEquation::HV).unwrap();
    let parse = |t: &str| RationalFunction::parse(t, &s).unwrap();
    assert_eq!(inv.kappa, parse("nu-thetastar"));
    assert_eq!(inv.coefficients[0], parse("2*nu*(nu-thetastar)"));
    let u1 = parse("4*nu^3-6*nu^2*thetastar+2*nu*(delta0+deltat+thetastar^2)-2*delta0*thetastar");
    let u2 = parse(
        "-2*(delta0-nu*(thetastar-3*nu))*(deltat+(2*thetastar-3*nu)*(thetastar-nu)) - 2*nu*(thetastar-nu)*((thetastar-2*nu)^2-1)",
    );
    assert_eq!(inv.coefficients[1], -&u1);
    assert_eq!(inv.coefficients[2], &u2 * &RationalFunction::from_i64(-2));
}

pub fn biconfluent_inversion() {
    let inv = invert_bs(HeunEquation::HIV, 4, ExecPolicy::default()).unwrap();
    let s = inversion_space(HeunEquation::HIV).unwrap();
    let parse = |t: &str| RationalFunction::parse(t, &s).unwrap();
    assert_eq!(inv.kappa, parse("-2*nu"));
    assert!(inv.coefficients[0].is_zero());
    assert!(inv.coefficients[2].is_zero());
    assert!(inv.coefficients[4].is_zero());
    assert_eq!(inv.coefficients[1], parse("delta0+3*nu^2-2*thetabullet*nu"));
    assert_eq!(
        inv.coefficients[3],
        parse("6*nu^3-6*thetabullet*nu^2+(thetabullet^2+3*delta0+3/4)*nu-2*delta0*thetabullet")
    );
}

pub fn inversion_kills_quantum_corrections() {
    for (eq, n) in [(HeunEquation::HV, 2), (HeunEquation::HIV, 4)] {
        let p = ExecPolicy::default();
        let inv = invert_bs(eq, n, p).unwrap();
        let period = bs_period(eq, heunblock::wkb::hbar_order_for(eq, n).unwrap(), p).unwrap();
        let total = back_substitute(&period, &inv).unwrap();
        let nu = RationalFunction::parse("nu", &inv.space).unwrap();
        assert_eq!(total.coeff_int(0).unwrap().transfer(&inv.space).unwrap(), nu);
        for k in 1..=total.order_steps() {
            assert!(total.coeff_int(k).unwrap().is_zero(), "{:?} hbar^{}", eq, k);
        }
    }
}

pub fn catalog_rows_without_rescaling() {
    for eq in HeunEquation::ALL {
        let spec = potential_catalog(eq);
        match eq {
            HeunEquation::HV | HeunEquation::HIV => assert!(spec.rescaled().is_ok()),
            _ => assert!(matches!(spec.rescaled(), Err(HeunError::NoBSRescaling(_)))),
        }
    }
    let hi = potential_catalog(HeunEquation::HI);
    assert_eq!(hi.potential, RationalFunction::parse("4*z^3+2*t*z+E", &hi.space).unwrap());
}
