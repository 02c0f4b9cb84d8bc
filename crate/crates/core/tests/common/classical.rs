use heunblock::algebra::{ExecPolicy, RationalFunction};
use heunblock::correspondence::{classical_block, classical_space};
use heunblock::virasoro::BlockKind;

fn parse(kind: BlockKind, text: &str) -> RationalFunction {
    RationalFunction::parse(text, &classical_space(kind)).unwrap()
}

pub fn regular_classical_low_orders() {
    let w = classical_block(BlockKind::Regular, 2, ExecPolicy::default()).unwrap();
    let k = BlockKind::Regular;
    let w1 = parse(k, "(deltasigma-delta0+deltat)*(deltasigma-deltainf+delta1)/(2*deltasigma)");
    let a = "(deltasigma-delta0+deltat)";
    let b = "(deltasigma-deltainf+delta1)";
    let w2 = parse(
        k,
        &format!(
            "{a}^2*{b}^2/(8*deltasigma^2)*(1/{a}+1/{b}-1/(2*deltasigma)) + \
             (deltasigma^2+2*deltasigma*(delta0+deltat)-3*(delta0-deltat)^2)*\
             (deltasigma^2+2*deltasigma*(deltainf+delta1)-3*(deltainf-delta1)^2)/(16*deltasigma^2*(4*deltasigma+3))"
        ),
    );
    assert_eq!(w.coeff_int(1).unwrap(), w1);
    assert_eq!(w.coeff_int(2).unwrap(), w2);
    assert_eq!(w.log_coefficient().unwrap(), &parse(k, "deltasigma-delta0-deltat"));
}

pub fn first_kind_classical_low_orders() {
    let p = ExecPolicy::default();
    let k = BlockKind::Nf3;
    let w = classical_block(k, 2, p).unwrap();
    assert_eq!(w.log_coefficient().unwrap(), &parse(k, "deltasigma-delta0-deltat"));
    assert_eq!(
        w.coeff_int(1).unwrap(),
        parse(k, "-(deltasigma-delta0+deltat)*thetastar/(2*deltasigma)")
    );
    assert_eq!(
        w.coeff_int(2).unwrap(),
        parse(
            k,
            "(deltasigma^2-(delta0-deltat)^2)*thetastar^2/(16*deltasigma^3) - \
             (3*thetastar^2+deltasigma)*(deltasigma^2+2*deltasigma*(delta0+deltat)-3*(delta0-deltat)^2)/(16*deltasigma^2*(3+4*deltasigma))"
        )
    );
    let cases = [
        (
            BlockKind::Nf2,
            "thetabigstar*thetastar/(2*deltasigma)",
            "(3*thetastar^2+deltasigma)*(3*thetabigstar^2+deltasigma)/(16*deltasigma^2*(3+4*deltasigma)) - thetastar^2*thetabigstar^2/(16*deltasigma^3)",
        ),
        (
            BlockKind::Nf1,
            "thetastar/(2*deltasigma)",
            "((5*deltasigma-3)*thetastar^2+3*deltasigma^2)/(16*deltasigma^3*(3+4*deltasigma))",
        ),
        (BlockKind::Nf0, "1/(2*deltasigma)", "(5*deltasigma-3)/(16*deltasigma^3*(3+4*deltasigma))"),
    ];
    for (k, w1, w2) in cases {
        let w = classical_block(k, 2, p).unwrap();
        assert_eq!(w.log_coefficient().unwrap(), &parse(k, "deltasigma"), "{:?}", k);
        assert_eq!(w.coeff_int(1).unwrap(), parse(k, w1), "{:?}", k);
        assert_eq!(w.coeff_int(2).unwrap(), parse(k, w2), "{:?}", k);
    }
}

pub fn typed_classical_low_orders() {
    let k = BlockKind::TypeD;
    let u = classical_block(k, 2, ExecPolicy::default()).unwrap();
    // Series in 1/t: the log coefficient multiplies ln(1/t).
    assert_eq!(u.log_coefficient().unwrap(), &parse(k, "-2*nu*(nu-thetastar)"));
    assert_eq!(u.coeff_int(-1).unwrap(), parse(k, "nu-thetastar"));
    assert_eq!(
        u.coeff_int(1).unwrap(),
        parse(k, "4*nu^3-6*nu^2*thetastar+2*nu*(delta0+deltat+thetastar^2)-2*delta0*thetastar")
    );
    assert_eq!(
        u.coeff_int(2).unwrap(),
        parse(
            k,
            "-2*(delta0-nu*(thetastar-3*nu))*(deltat+(2*thetastar-3*nu)*(thetastar-nu)) - 2*nu*(thetastar-nu)*((thetastar-2*nu)^2-1)"
        )
    );
}

pub fn typeg_classical_coefficients() {
    let k = BlockKind::TypeG;
    let u = classical_block(k, 4, ExecPolicy::default()).unwrap();
    assert_eq!(u.log_coefficient().unwrap(), &parse(k, "-(delta0+3*nu^2-2*thetabullet*nu)"));
    assert_eq!(u.coeff_int(-2).unwrap(), parse(k, "-nu"));
    assert_eq!(
        u.coeff_int(2).unwrap(),
        parse(k, "-(6*nu^3-6*thetabullet*nu^2+(thetabullet^2+3*delta0+3/4)*nu-2*delta0*thetabullet)/2")
    );
    assert_eq!(
        u.coeff_int(4).unwrap(),
        parse(
            k,
            "-(105/4*nu^4-35*thetabullet*nu^3+(12*thetabullet^2+33/2*delta0+39/4)*nu^2-(thetabullet^2+18*delta0+19/4)*thetabullet*nu+(4*thetabullet^2+1/4*delta0+3/2)*delta0)/4"
        )
    );
    assert!(u.coeff_int(1).is_none_or(|c| c.is_zero()));
    assert!(u.coeff_int(3).is_none_or(|c| c.is_zero()));
}
