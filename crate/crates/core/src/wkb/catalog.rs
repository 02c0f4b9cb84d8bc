use std::sync::Arc;

use heunblock_algebra::{ParameterSpace, RationalFunction};
use serde::Serialize;

use crate::error::{HeunError, Result};
use crate::symbols as sym;

/// Heun-class equations `ψ'' = V(z) ψ` in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HeunEquation {
    HVI,
    HV,
    HIV,
    HIII1,
    HIII2,
    HIII3,
    HII,
    HI,
    /// Laplace transform of `HIII1`.
    HIII1Prime,
    /// Laplace transform of `HII`.
    HIIPrime,
}

impl HeunEquation {
    pub const ALL: [HeunEquation; 10] = [
        HeunEquation::HVI,
        HeunEquation::HV,
        HeunEquation::HIV,
        HeunEquation::HIII1,
        HeunEquation::HIII2,
        HeunEquation::HIII3,
        HeunEquation::HII,
        HeunEquation::HI,
        HeunEquation::HIII1Prime,
        HeunEquation::HIIPrime,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            HeunEquation::HVI => "HVI",
            HeunEquation::HV => "HV",
            HeunEquation::HIV => "HIV",
            HeunEquation::HIII1 => "HIII1",
            HeunEquation::HIII2 => "HIII2",
            HeunEquation::HIII3 => "HIII3",
            HeunEquation::HII => "HII",
            HeunEquation::HI => "HI",
            HeunEquation::HIII1Prime => "HIII1'",
            HeunEquation::HIIPrime => "HII'",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|e| e.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| HeunError::UnknownTag(s.to_string()))
    }

    fn parameters(self) -> &'static [&'static str] {
        match self {
            HeunEquation::HVI => &[sym::THETA0, sym::THETAT, sym::THETA1, sym::THETAINF],
            HeunEquation::HV => &[sym::THETA0, sym::THETAT, sym::THETASTAR],
            HeunEquation::HIV => &[sym::THETA0, sym::THETABULLET],
            HeunEquation::HIII1 => &[sym::THETASTAR, sym::THETABIGSTAR],
            HeunEquation::HIII2 => &[sym::THETASTAR],
            HeunEquation::HIII3 | HeunEquation::HI => &[],
            HeunEquation::HII => &[sym::THETACIRC],
            HeunEquation::HIII1Prime => &[sym::THETA0, sym::THETAT],
            HeunEquation::HIIPrime => &[sym::THETA0],
        }
    }

    fn potential_text(self) -> &'static str {
        match self {
            HeunEquation::HVI => {
                "(theta0^2-1/4)/z^2 + (theta1^2-1/4)/(z-1)^2 + (thetat^2-1/4)/(z-t)^2 \
                 + (thetainf^2-theta0^2-theta1^2-thetat^2+1/2)/(z*(z-1)) + (1-t)*E/(z*(z-1)*(z-t))"
            }
            HeunEquation::HV => {
                "(theta0^2-1/4)/z^2 + (thetat^2-1/4)/(z-t)^2 + 1/4 + thetastar/z - E/(z*(z-t))"
            }
            HeunEquation::HIV => "(theta0^2-1/4)/z^2 - E/z + 2*thetabullet + (z+t)^2",
            HeunEquation::HIII1 => "t^2/(4*z^4) + t*thetabigstar/z^3 - E/z^2 + thetastar/z + 1/4",
            HeunEquation::HIII2 => "t/z^3 - E/z^2 + thetastar/z + 1/4",
            HeunEquation::HIII3 => "t/z^3 - E/z^2 + 1/z",
            HeunEquation::HII => "(z^2+t)^2 + 2*thetacirc*z + E",
            HeunEquation::HI => "4*z^3 + 2*t*z + E",
            HeunEquation::HIII1Prime => "(theta0^2-1/4)/z^2 + (thetat^2-1/4)/(z-t)^2 + 1/z - E/(z*(z-t))",
            HeunEquation::HIIPrime => "(theta0^2-1/4)/z^2 + E/z + t + z",
        }
    }
}

/// Strong-coupling rescaling `V(z) = ħ^{-2} U(x)` used for Bohr–Sommerfeld
/// periods, with `U` written through `δ = ¼ − θ²`.
#[derive(Clone, Debug)]
pub struct Rescaling {
    /// `lambda` with `z = λ√t` (HV) or `z` itself (HIV).
    pub coordinate: &'static str,
    /// `t` as a power of ħ.
    pub t_power_of_hbar: i64,
    /// Lowest ħ power multiplying `E` in `U`.
    pub accessory_hbar_power: i64,
    /// Parameters of `U` besides the coordinate, ħ and `E`.
    pub parameters: Vec<&'static str>,
    /// Space `[coordinate, hbar, parameters.., E]`.
    pub space: Arc<ParameterSpace>,
    pub potential: RationalFunction,
}

#[derive(Clone, Debug)]
pub struct PotentialSpec {
    pub equation: HeunEquation,
    /// Space `[z, t, parameters.., E]`.
    pub space: Arc<ParameterSpace>,
    pub potential: RationalFunction,
    pub rescaling: Option<Rescaling>,
}

impl PotentialSpec {
    /// The rescaled potential, or `NoBSRescaling` for catalog-only rows.
    pub fn rescaled(&self) -> Result<&Rescaling> {
        self.rescaling
            .as_ref()
            .ok_or_else(|| HeunError::NoBSRescaling(self.equation.tag().to_string()))
    }
}

fn rescaling(eq: HeunEquation) -> Option<Rescaling> {
    let (coordinate, t_power_of_hbar, accessory_hbar_power, parameters, text) = match eq {
        HeunEquation::HV => (
            "lambda",
            -2,
            3,
            vec![sym::THETASTAR, sym::DELTA0_CL, sym::DELTAT_CL],
            "1/4 + hbar*thetastar/lambda + hbar^3*E/(lambda*(1-hbar*lambda)) \
             - hbar^2*delta0/lambda^2 - hbar^4*deltat/(1-hbar*lambda)^2",
        ),
        HeunEquation::HIV => (
            sym::Z,
            -1,
            2,
            vec![sym::DELTA0_CL, sym::THETABULLET],
            "1 + 2*hbar*z - hbar^2*E/z + hbar^2*(z^2 - delta0/z^2 + 2*thetabullet)",
        ),
        _ => return None,
    };
    let mut names = vec![coordinate, sym::HBAR];
    names.extend(parameters.iter().copied());
    names.push(sym::E);
    let space = sym::space(&names);
    let potential = RationalFunction::parse(text, &space).expect("static potential parses");
    Some(Rescaling {
        coordinate,
        t_power_of_hbar,
        accessory_hbar_power,
        parameters,
        space,
        potential,
    })
}

pub fn potential_catalog(eq: HeunEquation) -> PotentialSpec {
    let mut names = vec![sym::Z, sym::T];
    names.extend(eq.parameters().iter().copied());
    names.push(sym::E);
    let space = sym::space(&names);
    let potential = RationalFunction::parse(eq.potential_text(), &space).expect("static potential parses");
    PotentialSpec {
        equation: eq,
        space,
        potential,
        rescaling: rescaling(eq),
    }
}
