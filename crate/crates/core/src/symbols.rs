//! Symbol names shared by all pipelines and the parameter spaces built
//! from them.

use std::sync::Arc;

use heunblock_algebra::{ParameterSpace, RationalFunction};

pub const SIGMA: &str = "sigma";
pub const THETA0: &str = "theta0";
pub const THETAT: &str = "thetat";
pub const THETA1: &str = "theta1";
pub const THETAINF: &str = "thetainf";
pub const THETASTAR: &str = "thetastar";
pub const THETABIGSTAR: &str = "thetabigstar";
pub const THETABULLET: &str = "thetabullet";
pub const THETACIRC: &str = "thetacirc";
pub const C: &str = "c";
pub const DELTA0: &str = "Delta0";
pub const DELTAT: &str = "Deltat";
pub const DELTA1: &str = "Delta1";
pub const DELTAINF: &str = "Deltainf";
pub const DELTASIGMA: &str = "Deltasigma";
pub const PSTAR: &str = "Pstar";
pub const PBIGSTAR: &str = "Pbigstar";
pub const PBULLET: &str = "Pbullet";
pub const PNU: &str = "Pnu";
pub const LAMBDA: &str = "Lambda";
pub const B2: &str = "b2";
/// `i/b`; classical scalings are written as powers of it.
pub const IB: &str = "ib";
pub const DELTA0_CL: &str = "delta0";
pub const DELTAT_CL: &str = "deltat";
pub const DELTA1_CL: &str = "delta1";
pub const DELTAINF_CL: &str = "deltainf";
pub const DELTASIGMA_CL: &str = "deltasigma";
pub const NU: &str = "nu";
pub const KAPPA: &str = "kappa";
pub const E: &str = "E";
pub const Q: &str = "q";
pub const T: &str = "t";
pub const Z: &str = "z";
pub const HBAR: &str = "hbar";

pub fn space(names: &[&str]) -> Arc<ParameterSpace> {
    ParameterSpace::new(names.iter().copied()).expect("static symbol list is valid")
}

/// Space extended by extra names that are not yet present.
pub fn extend(base: &ParameterSpace, extra: &[&str]) -> Arc<ParameterSpace> {
    let mut names: Vec<String> = base.names().to_vec();
    for e in extra {
        if !base.contains(e) {
            names.push(e.to_string());
        }
    }
    ParameterSpace::new(names).expect("names stay unique")
}

pub fn var(space: &Arc<ParameterSpace>, name: &str) -> RationalFunction {
    RationalFunction::var(space, name).expect("symbol is declared in its space")
}

pub fn rat(n: i64, d: i64) -> RationalFunction {
    RationalFunction::ratio(n, d)
}

/// `¼ − θ²`.
pub fn delta_of_theta(theta: &RationalFunction) -> RationalFunction {
    &rat(1, 4) - &(theta * theta)
}

/// `(c − 1)/24 + P²`.
pub fn dim_of_momentum(c: &RationalFunction, p: &RationalFunction) -> RationalFunction {
    &(&(c - &rat(1, 1)) / &rat(24, 1)) + &(p * p)
}
