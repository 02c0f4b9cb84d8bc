use std::sync::Arc;

use heunblock_algebra::{ParameterSpace, RationalFunction};

use crate::error::{HeunError, Result};
use crate::symbols::{self as sym, rat, var};

/// Equations with a weak-coupling Floquet characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CfEquation {
    HVI,
    HV,
    HIII1,
    HIII2,
    HIII3,
}

impl CfEquation {
    pub const ALL: [CfEquation; 5] = [
        CfEquation::HVI,
        CfEquation::HV,
        CfEquation::HIII1,
        CfEquation::HIII2,
        CfEquation::HIII3,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CfEquation::HVI => "HVI",
            CfEquation::HV => "HV",
            CfEquation::HIII1 => "HIII1",
            CfEquation::HIII2 => "HIII2",
            CfEquation::HIII3 => "HIII3",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|e| e.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| HeunError::UnsupportedEquation(s.to_string()))
    }

    /// Parameters the expansion depends on, Floquet exponent first.
    pub fn space(self) -> Arc<ParameterSpace> {
        match self {
            CfEquation::HVI => sym::space(&[sym::SIGMA, sym::THETA0, sym::THETAT, sym::THETA1, sym::THETAINF]),
            CfEquation::HV => sym::space(&[sym::SIGMA, sym::THETA0, sym::THETAT, sym::THETASTAR]),
            CfEquation::HIII1 => sym::space(&[sym::SIGMA, sym::THETASTAR, sym::THETABIGSTAR]),
            CfEquation::HIII2 => sym::space(&[sym::SIGMA, sym::THETASTAR]),
            CfEquation::HIII3 => sym::space(&[sym::SIGMA]),
        }
    }

    /// Name of the unknown entering `B_n`: the canonical-form `q` where a
    /// canonical form is used, otherwise the accessory parameter itself.
    pub fn unknown(self) -> &'static str {
        match self {
            CfEquation::HVI | CfEquation::HV => sym::Q,
            _ => sym::E,
        }
    }

    /// How the Floquet exponent `ω` of the recurrence is tied to `σ`.
    pub fn floquet_convention(self) -> &'static str {
        match self {
            CfEquation::HVI | CfEquation::HV => "omega = sigma + theta0 + thetat - 1/2",
            _ => "omega = sigma",
        }
    }
}

/// Coefficients of `A_n c_{n-1} − B_n c_n + t C_n c_{n+1} = 0`, with
/// `B_n = unknown + b_const(n) + b_linear(n)·t`.
#[derive(Clone, Debug)]
pub struct CfFamily {
    pub equation: CfEquation,
    space: Arc<ParameterSpace>,
    omega: RationalFunction,
    /// Canonical-form parameters `α, β, γ, δ, ε` (as many as the equation has).
    params: Vec<RationalFunction>,
}

impl CfFamily {
    pub fn space(&self) -> &Arc<ParameterSpace> {
        &self.space
    }

    pub fn omega(&self) -> &RationalFunction {
        &self.omega
    }

    /// Canonical-form parameters by name.
    pub fn parameter(&self, name: &str) -> Option<&RationalFunction> {
        let names: &[&str] = match self.equation {
            CfEquation::HVI => &["alpha", "beta", "gamma", "delta", "epsilon"],
            CfEquation::HV => &["alpha", "beta", "gamma"],
            _ => &[],
        };
        names.iter().position(|n| *n == name).map(|i| &self.params[i])
    }

    fn shifted(&self, n: i64) -> RationalFunction {
        &self.omega + &rat(n, 1)
    }

    fn p(&self, i: usize) -> &RationalFunction {
        &self.params[i]
    }

    pub fn a(&self, n: i64) -> RationalFunction {
        let w = self.shifted(n - 1);
        match self.equation {
            CfEquation::HVI => &(&w + self.p(0)) * &(&w + self.p(1)),
            CfEquation::HV => &w + self.p(0),
            CfEquation::HIII1 | CfEquation::HIII2 => {
                let ts = var(&self.space, sym::THETASTAR);
                &(&ts - &self.shifted(n)) + &rat(1, 2)
            }
            CfEquation::HIII3 => rat(1, 1),
        }
    }

    /// `B_n` at `t = 0` without the unknown.
    pub fn b_const(&self, n: i64) -> RationalFunction {
        let w = self.shifted(n);
        let w1 = self.shifted(n - 1);
        match self.equation {
            CfEquation::HVI => &w * &(&(self.p(4) + &w1) + self.p(2)),
            CfEquation::HV => -(&w * &(&(&w1 + self.p(1)) + self.p(2))),
            _ => &(&w * &w) - &rat(1, 4),
        }
    }

    /// Coefficient of `t` in `B_n`.
    pub fn b_linear(&self, n: i64) -> RationalFunction {
        let w = self.shifted(n);
        match self.equation {
            CfEquation::HVI => &w * &(&(self.p(3) + &self.shifted(n - 1)) + self.p(2)),
            CfEquation::HV => w,
            CfEquation::HIII1 => rat(-1, 2),
            _ => RationalFunction::zero(),
        }
    }

    pub fn c(&self, n: i64) -> RationalFunction {
        let w = self.shifted(n);
        match self.equation {
            CfEquation::HVI => &self.shifted(n + 1) * &(&w + self.p(2)),
            CfEquation::HV => -(&self.shifted(n + 1) * &(&w + self.p(1))),
            CfEquation::HIII1 => {
                let tb = var(&self.space, sym::THETABIGSTAR);
                &(&tb + &w) + &rat(1, 2)
            }
            CfEquation::HIII2 | CfEquation::HIII3 => rat(1, 1),
        }
    }
}

/// The recurrence coefficients of an equation, with its canonical-form
/// parameters expressed through the local monodromy exponents.
pub fn cf_family(equation: CfEquation) -> CfFamily {
    let s = equation.space();
    let sigma = var(&s, sym::SIGMA);
    let one = rat(1, 1);
    let two = rat(2, 1);
    let (omega, params) = match equation {
        CfEquation::HVI | CfEquation::HV => {
            let (t0, tt) = (var(&s, sym::THETA0), var(&s, sym::THETAT));
            let omega = &(&(&sigma + &t0) + &tt) - &rat(1, 2);
            let gamma0 = &one - &(&two * &t0);
            let gammat = &one - &(&two * &tt);
            let params = if equation == CfEquation::HVI {
                let (t1, ti) = (var(&s, sym::THETA1), var(&s, sym::THETAINF));
                let base = &(&(&one - &t0) - &t1) - &tt;
                vec![
                    &base - &ti,
                    &base + &ti,
                    gamma0,
                    &one - &(&two * &t1),
                    gammat,
                ]
            } else {
                let ts = var(&s, sym::THETASTAR);
                vec![&(&(&one - &t0) - &tt) - &ts, gamma0, gammat]
            };
            (omega, params)
        }
        _ => (sigma, Vec::new()),
    };
    CfFamily {
        equation,
        space: s,
        omega,
        params,
    }
}
