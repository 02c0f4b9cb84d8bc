use heunblock::algebra::{ExecPolicy, ParameterSpace, RationalFunction};
use heunblock::floquet::*;
use heunblock::symbols::{extend, var};
use std::sync::Arc;

/// Parses `text` over `space` extended by `deltasigma, delta0, deltat`,
/// then replaces each `deltaX` by `1/4 − X²`.
fn with_deltas(text: &str, space: &Arc<ParameterSpace>) -> RationalFunction {
    let ext = extend(space, &["deltasigma", "delta0", "deltat"]);
    let raw = RationalFunction::parse(text, &ext).unwrap();
    let mut subs = Vec::new();
    for (d, th) in [("deltasigma", "sigma"), ("delta0", "theta0"), ("deltat", "thetat")] {
        if space.contains(th) {
            let x = var(space, th);
            subs.push((d, &RationalFunction::ratio(1, 4) - &(&x * &x)));
        }
    }
    raw.substitute(space, &subs).unwrap()
}

pub fn hvi_first_two_q_coefficients() {
    let fam = cf_family(CfEquation::HVI);
    let x = floquet_expansion(CfEquation::HVI, 1).unwrap();
    let q = x.q.as_ref().unwrap();
    let w = fam.omega().clone();
    let p = |n: &str| fam.parameter(n).unwrap().clone();
    let (a, b, g, d, e) = (p("alpha"), p("beta"), p("gamma"), p("delta"), p("epsilon"));
    let one = RationalFunction::one();
    let q0 = -(&w * &(&(&w + &g) + &(&e - &one)));
    assert_eq!(q.coeff_int(0).unwrap(), q0);
    let two = RationalFunction::from_i64(2);
    let d1 = &(&(&two * &w) + &g) + &e;
    let t1 = &(&(&(&(&w + &one) * &(&w + &a)) * &(&w + &b)) * &(&w + &g)) / &d1;
    let t2 = &(&(&(&w * &(&(&w + &a) - &one)) * &(&(&w + &b) - &one)) * &(&(&w + &g) - &one)) / &(&d1 - &two);
    // The printed first term of q₁ repeats q₀ verbatim, with ε; the t-part
    // of B₀ is ω(δ + ω − 1 + γ), so the recurrence gives δ there.
    let lead = -(&w * &(&(&w + &g) + &(&d - &one)));
    assert_eq!(q.coeff_int(1).unwrap(), &(&lead + &t1) - &t2);
    let verbatim = &(&q0 + &t1) - &t2;
    assert_eq!(&q.coeff_int(1).unwrap() - &verbatim, &w * &(&e - &d));
}

pub fn hv_q_series_and_characteristic() {
    let fam = cf_family(CfEquation::HV);
    let x = floquet_expansion(CfEquation::HV, 2).unwrap();
    let q = x.q.as_ref().unwrap();
    let w = fam.omega().clone();
    let p = |n: &str| fam.parameter(n).unwrap().clone();
    let (a, b, g) = (p("alpha"), p("beta"), p("gamma"));
    let one = RationalFunction::one();
    let two = RationalFunction::from_i64(2);
    assert_eq!(q.coeff_int(0).unwrap(), &w * &(&(&w + &b) + &(&g - &one)));
    let d = &(&(&two * &w) + &b) + &g;
    let q1 = &(&-&w + &(&(&(&(&w + &one) * &(&w + &a)) * &(&w + &b)) / &d))
        - &(&(&(&w * &(&(&w + &a) - &one)) * &(&(&w + &b) - &one)) / &(&d - &two));
    assert_eq!(q.coeff_int(1).unwrap(), q1);
    let s = CfEquation::HV.space();
    let e1 = with_deltas("-thetastar*(deltasigma-delta0+deltat)/(2*deltasigma)", &s);
    let e2 = with_deltas(
        "thetastar^2*(deltasigma^2-(delta0-deltat)^2)/(8*deltasigma^3) \
         - (3*thetastar^2+deltasigma)*(deltasigma^2+2*deltasigma*(delta0+deltat)-3*(delta0-deltat)^2)/(8*deltasigma^2*(3+4*deltasigma))",
        &s,
    );
    assert_eq!(x.coefficient(0), with_deltas("deltasigma-delta0-deltat", &s));
    assert_eq!(x.coefficient(1), e1);
    assert_eq!(x.coefficient(2), e2);
    // E and −q agree from the quadratic term on.
    assert_eq!(x.coefficient(2), -q.coeff_int(2).unwrap());
}

pub fn third_kind_expansions_match_published() {
    let s = CfEquation::HIII1.space();
    let x = floquet_expansion(CfEquation::HIII1, 2).unwrap();
    assert_eq!(x.coefficient(0), with_deltas("deltasigma", &s));
    assert_eq!(x.coefficient(1), with_deltas("thetastar*thetabigstar/(2*deltasigma)", &s));
    assert_eq!(
        x.coefficient(2),
        with_deltas(
            "(3*thetastar^2+deltasigma)*(3*thetabigstar^2+deltasigma)/(8*deltasigma^2*(3+4*deltasigma)) - thetastar^2*thetabigstar^2/(8*deltasigma^3)",
            &s
        )
    );

    let s = CfEquation::HIII2.space();
    let x = floquet_expansion(CfEquation::HIII2, 3).unwrap();
    let printed = [
        "deltasigma",
        "thetastar/(2*deltasigma)",
        "((5*deltasigma-3)*thetastar^2+3*deltasigma^2)/(8*deltasigma^3*(3+4*deltasigma))",
        "thetastar*((7*deltasigma-6)*deltasigma^2+(9*deltasigma^2-19*deltasigma+6)*thetastar^2)/(16*deltasigma^5*(3+4*deltasigma)*(2+deltasigma))",
    ];
    for (n, p) in printed.iter().enumerate() {
        assert_eq!(x.coefficient(n as i64), with_deltas(p, &s), "HIII2 order {}", n);
    }

    let s = CfEquation::HIII3.space();
    let x = floquet_expansion(CfEquation::HIII3, 3).unwrap();
    let printed = [
        "deltasigma",
        "1/(2*deltasigma)",
        "(5*deltasigma-3)/(8*deltasigma^3*(3+4*deltasigma))",
        "(9*deltasigma^2-19*deltasigma+6)/(16*deltasigma^5*(3+4*deltasigma)*(2+deltasigma))",
    ];
    for (n, p) in printed.iter().enumerate() {
        assert_eq!(x.coefficient(n as i64), with_deltas(p, &s), "HIII3 order {}", n);
    }
}

pub fn confluence_links_hold_through_third_order() {
    for link in FloquetLink::ALL {
        let r = confluent_chain_floquet(link, 3, ExecPolicy::Sequential).unwrap();
        assert!(r.passed(), "{}: {:?}", link.tag(), r);
    }
}

pub fn deeper_ladders_do_not_change_coefficients() {
    for eq in CfEquation::ALL {
        let a = floquet_expansion_with_depth(eq, 3, 4).unwrap();
        let b = floquet_expansion_with_depth(eq, 3, 5).unwrap();
        assert_eq!(a.e, b.e, "{}", eq.tag());
    }
}

pub fn third_kind_has_no_canonical_dictionary() {
    let x = floquet_expansion(CfEquation::HIII3, 1).unwrap();
    assert!(x.q.is_none());
    assert!(q_to_e(CfEquation::HIII3, &x.e).is_err());
}
