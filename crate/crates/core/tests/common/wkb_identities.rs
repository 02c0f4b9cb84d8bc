use heunblock::algebra::{ExecPolicy, FormalSeries, Grid, Laurent, ParameterSpace, RationalFunction, Ring, SeriesVar};
use heunblock::wkb::{bs_period, potential_catalog, residues, HbarSeries, HeunEquation, WkbStack};

pub fn d(s: &HbarSeries) -> HbarSeries {
    s.map(|l| l.derivative())
}

pub fn mul(a: &HbarSeries, b: &HbarSeries) -> HbarSeries {
    a.try_mul(b).unwrap()
}

pub fn k(n: i64) -> Laurent<RationalFunction> {
    Laurent::from_i64(n)
}

fn odd_even(stack: &WkbStack) -> (HbarSeries, HbarSeries) {
    let order = stack.potential.order_steps() - 1;
    let zero = FormalSeries::zero(SeriesVar::Hbar, Grid::Integer, order);
    let (mut odd, mut even) = (zero.clone(), zero);
    for n in -1..=stack.max_index() {
        let shifted = stack.term(n).shift(n as i64);
        if n.rem_euclid(2) == 1 {
            odd = odd.try_add(&shifted).unwrap();
        } else {
            even = even.try_add(&shifted).unwrap();
        }
    }
    (odd, even)
}

pub fn recurrence_and_parity_identities_through_s6() {
    for eq in [HeunEquation::HV, HeunEquation::HIV] {
        let period = bs_period(eq, 7, ExecPolicy::default()).unwrap();
        let stack = &period.stack;
        assert!(stack.max_index() >= 6);
        for n in -1..stack.max_index() {
            assert!(stack.residual(n).unwrap().is_zero(), "{:?} residual {}", eq, n);
        }
        for n in (0..=6).step_by(2) {
            assert!(residues(stack.term(n)).is_zero(), "{:?} S_{}", eq, n);
        }
        let (odd, even) = odd_even(stack);
        let rel = d(&odd).try_add(&mul(&even, &odd).scale(&k(2))).unwrap();
        assert!(rel.is_zero(), "{:?}", eq);
        let p = stack.term(-1);
        assert_eq!(mul(p, p), stack.potential.truncate(mul(p, p).order_steps()));
    }
}

pub fn confluent_third_contribution_leading_term() {
    let p = bs_period(HeunEquation::HV, 11, ExecPolicy::default()).unwrap();
    let nu3 = p.contribution(3).unwrap();
    let expected = RationalFunction::parse("-48*kappa*(kappa+thetastar)", &p.space).unwrap();
    for j in 0..7 {
        assert!(nu3.coeff_int(j).unwrap().is_zero(), "hbar^{}", j);
    }
    assert_eq!(nu3.coeff_int(7).unwrap(), expected);
}

/// `t^{-2k} V(z(x))` from the catalog equals `ħ^{-2} U(x)` once `δ = ¼ − θ²`
/// and `ħ = 1/s` are substituted, with `t = s²` (HV) or `t = s` (HIV).
pub fn rescaled_potential_matches_catalog() {
    let space = ParameterSpace::new(["lambda", "z", "s", "theta0", "thetat", "thetastar", "thetabullet", "E"]).unwrap();
    let v = |t: &str| RationalFunction::parse(t, &space).unwrap();
    let delta = |theta: &str| v(&format!("1/4-{}^2", theta));
    for (eq, z_sub, t_sub, jac) in [
        (HeunEquation::HV, "lambda*s", "s^2", "s^2"),
        (HeunEquation::HIV, "z", "s", "1"),
    ] {
        let spec = potential_catalog(eq);
        let lhs = spec
            .potential
            .substitute(&space, &[("z", v(z_sub)), ("t", v(t_sub))])
            .unwrap()
            .try_mul(&v(jac))
            .unwrap();
        let resc = spec.rescaled().unwrap();
        let rhs = resc
            .potential
            .substitute(
                &space,
                &[
                    ("hbar", v("1/s")),
                    ("delta0", delta("theta0")),
                    ("deltat", delta("thetat")),
                ],
            )
            .unwrap()
            .try_mul(&v("s^2"))
            .unwrap();
        assert_eq!(lhs, rhs, "{:?}", eq);
    }
}
