use std::sync::Arc;

use heunblock_algebra::{ExecPolicy, FormalSeries, ParameterSpace, RationalFunction, SeriesVar};
use serde::Serialize;

use super::family::{cf_family, CfEquation, CfFamily};
use crate::error::{HeunError, Result};
use crate::report::SeriesReport;
use crate::symbols::{self as sym, rat, var};
use crate::virasoro::termwise_limit;

/// Placeholder for the coefficient solved for at the current order.
const NEXT: &str = "next";

type Series = FormalSeries<RationalFunction>;

/// Weak-coupling expansion of an accessory parameter.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AccessoryExpansion {
    #[serde(serialize_with = "ser_equation")]
    pub equation: CfEquation,
    pub convention: &'static str,
    /// Series of the canonical-form unknown, for equations that have one.
    #[serde(skip)]
    pub q: Option<Series>,
    #[serde(skip)]
    pub e: Series,
}

fn ser_equation<S: serde::Serializer>(e: &CfEquation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(e.tag())
}

impl AccessoryExpansion {
    pub fn coefficient(&self, n: i64) -> RationalFunction {
        self.e.coeff_int(n).unwrap_or_else(RationalFunction::zero)
    }
}

fn t_series(coeffs: Vec<RationalFunction>, order: i64) -> Series {
    FormalSeries::from_coefficients(SeriesVar::T, 0, coeffs, order)
}

fn lift(r: &RationalFunction, s: &Arc<ParameterSpace>) -> Result<RationalFunction> {
    Ok(r.transfer(s)?)
}

/// `T_1 + S_1 − B_0` through `t^order` for a given series of the unknown,
/// with both continued fractions cut after `depth` levels.
fn cf_residual(fam: &CfFamily, unknown: &Series, depth: i64, order: i64) -> Result<Series> {
    let s = unknown
        .terms()
        .find_map(|(_, c)| c.space().cloned())
        .unwrap_or_else(|| fam.space().clone());
    let b = |n: i64| -> Result<Series> {
        let fixed = t_series(vec![lift(&fam.b_const(n), &s)?, lift(&fam.b_linear(n), &s)?], order);
        Ok(unknown.try_add(&fixed)?)
    };
    let t = t_series(vec![RationalFunction::zero(), RationalFunction::one()], order);
    let mut upper = Series::zero(SeriesVar::T, heunblock_algebra::Grid::Integer, order);
    let mut lower = upper.clone();
    for k in (1..=depth).rev() {
        let num = t.scale(&lift(&(&fam.c(k - 1) * &fam.a(k)), &s)?);
        upper = num.try_div(&b(k)?.try_sub(&upper)?)?;
        let num = t.scale(&lift(&(&fam.a(1 - k) * &fam.c(-k)), &s)?);
        lower = num.try_div(&b(-k)?.try_sub(&lower)?)?;
    }
    Ok(upper.try_add(&lower)?.try_sub(&b(0)?)?)
}

/// Solves `a·x + b = 0` for an order equation, insisting on linearity.
fn solve_linear(r: &RationalFunction, order: u32, base: &Arc<ParameterSpace>) -> Result<RationalFunction> {
    let nonlinear = || HeunError::NonlinearOrderEquation { order };
    let i = match r.space().and_then(|s| s.index_of(NEXT)) {
        Some(i) => i,
        None => return Err(nonlinear()),
    };
    if r.denominator().depends_on(i) || r.numerator().degree_in(i) != 1 {
        return Err(nonlinear());
    }
    let a = r.derivative(NEXT);
    let b = r.substitute(r.space().unwrap(), &[(NEXT, RationalFunction::zero())])?;
    if a.is_zero() {
        return Err(nonlinear());
    }
    Ok((-&b / &a).transfer(base)?)
}

/// Coefficients `u_0..u_order` of the unknown solving the continued
/// fraction equation, each found from a linear equation at its order.
pub fn solve_unknown(fam: &CfFamily, order: u32, depth: u32) -> Result<Vec<RationalFunction>> {
    let base = fam.space().clone();
    let ext = sym::extend(&base, &[NEXT]);
    let mut known: Vec<RationalFunction> = Vec::new();
    for k in 0..=order {
        let mut coeffs: Vec<RationalFunction> =
            known.iter().map(|c| c.transfer(&ext)).collect::<std::result::Result<_, _>>()?;
        coeffs.push(var(&ext, NEXT));
        let unknown = t_series(coeffs, k as i64);
        let residual = cf_residual(fam, &unknown, depth as i64, k as i64)?;
        let r = residual.coeff_int(k as i64).unwrap_or_else(RationalFunction::zero);
        known.push(solve_linear(&r, k, &base)?);
    }
    Ok(known)
}

/// `q ↦ E` for the equations written in canonical form.
pub fn q_to_e(equation: CfEquation, q: &Series) -> Result<Series> {
    let fam = cf_family(equation);
    let order = q.order_steps();
    let p = |n: &str| fam.parameter(n).unwrap().clone();
    match equation {
        CfEquation::HVI => {
            let (a, b, g, d, e) = (p("alpha"), p("beta"), p("gamma"), p("delta"), p("epsilon"));
            // q = (1−t)E + (γε + (2αβ − (γ+δ)ε)t)/2
            let shift = t_series(
                vec![&(&g * &e) / &rat(2, 1), &(&(&(&a * &b) * &rat(2, 1)) - &(&(&g + &d) * &e)) / &rat(2, 1)],
                order,
            );
            let one_minus_t = t_series(vec![RationalFunction::one(), rat(-1, 1)], order);
            Ok(q.try_sub(&shift)?.try_div(&one_minus_t)?)
        }
        CfEquation::HV => {
            let (a, b, g) = (p("alpha"), p("beta"), p("gamma"));
            // q = −E + αt − (β + t)γ/2
            let shift = t_series(vec![-(&(&b * &g) / &rat(2, 1)), &a - &(&g / &rat(2, 1))], order);
            Ok(shift.try_sub(q)?)
        }
        _ => Err(HeunError::UnsupportedEquation(format!(
            "{} is expanded directly in E",
            equation.tag()
        ))),
    }
}

/// Continued-fraction expansion of the Floquet characteristic through
/// `t^order`, with ladders of depth `order + 1`.
pub fn floquet_expansion(equation: CfEquation, order: u32) -> Result<AccessoryExpansion> {
    floquet_expansion_with_depth(equation, order, order + 1)
}

pub fn floquet_expansion_with_depth(equation: CfEquation, order: u32, depth: u32) -> Result<AccessoryExpansion> {
    let fam = cf_family(equation);
    let coeffs = solve_unknown(&fam, order, depth)?;
    let series = t_series(coeffs, order as i64);
    let (q, e) = match equation {
        CfEquation::HVI | CfEquation::HV => {
            let e = q_to_e(equation, &series)?;
            (Some(series), e)
        }
        _ => (None, series),
    };
    Ok(AccessoryExpansion {
        equation,
        convention: equation.floquet_convention(),
        q,
        e,
    })
}

/// Link of the chain HVI → HV → HIII1 → HIII2 → HIII3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FloquetLink {
    SixToFive,
    FiveToThree1,
    Three1ToThree2,
    Three2ToThree3,
}

impl FloquetLink {
    pub const ALL: [FloquetLink; 4] = [
        FloquetLink::SixToFive,
        FloquetLink::FiveToThree1,
        FloquetLink::Three1ToThree2,
        FloquetLink::Three2ToThree3,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FloquetLink::SixToFive => "VI->V",
            FloquetLink::FiveToThree1 => "V->III1",
            FloquetLink::Three1ToThree2 => "III1->III2",
            FloquetLink::Three2ToThree3 => "III2->III3",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.tag().eq_ignore_ascii_case(s))
    }

    pub fn ends(self) -> (CfEquation, CfEquation) {
        match self {
            FloquetLink::SixToFive => (CfEquation::HVI, CfEquation::HV),
            FloquetLink::FiveToThree1 => (CfEquation::HV, CfEquation::HIII1),
            FloquetLink::Three1ToThree2 => (CfEquation::HIII1, CfEquation::HIII2),
            FloquetLink::Three2ToThree3 => (CfEquation::HIII2, CfEquation::HIII3),
        }
    }
}

/// Applies one confluence link to the upper expansion and compares with
/// the directly computed lower one through `t^order`.
pub fn confluent_chain_floquet(link: FloquetLink, order: u32, policy: ExecPolicy) -> Result<SeriesReport> {
    let (hi, lo) = link.ends();
    let upper = floquet_expansion(hi, order)?;
    let lower = floquet_expansion(lo, order)?;
    let lhs = format!("limit of E[{}]", hi.tag());
    let rhs = format!("E[{}]", lo.tag());
    let mut coeffs: Vec<RationalFunction> = (0..=order as i64).map(|n| upper.coefficient(n)).collect();
    let half = rat(1, 2);
    let (target, subs, large) = match link {
        FloquetLink::SixToFive => {
            let target = sym::extend(&lo.space(), &[sym::LAMBDA]);
            let (l, ts) = (var(&target, sym::LAMBDA), var(&target, sym::THETASTAR));
            let subs = vec![(sym::THETA1, &(&l + &ts) * &half), (sym::THETAINF, &(&l - &ts) * &half)];
            (target, subs, sym::LAMBDA)
        }
        FloquetLink::FiveToThree1 => {
            let target = sym::extend(&lo.space(), &[sym::LAMBDA]);
            let (l, tb) = (var(&target, sym::LAMBDA), var(&target, sym::THETABIGSTAR));
            let t0 = &(&l - &tb) * &half;
            let tt = &(&l + &tb) * &half;
            let shift = &(&(&t0 * &t0) + &(&tt * &tt)) - &half;
            coeffs[0] = &coeffs[0].substitute(&target, &[(sym::THETA0, t0.clone()), (sym::THETAT, tt.clone())])? - &shift;
            let subs = vec![(sym::THETA0, t0), (sym::THETAT, tt)];
            (target, subs, sym::LAMBDA)
        }
        FloquetLink::Three1ToThree2 => (hi.space(), Vec::new(), sym::THETABIGSTAR),
        FloquetLink::Three2ToThree3 => (hi.space(), Vec::new(), sym::THETASTAR),
    };
    let limited = match termwise_limit(&coeffs, &target, &subs, large, policy) {
        Ok(v) => v,
        Err(e) => return Ok(SeriesReport::failed(&lhs, &rhs, e)),
    };
    let lo_space = lo.space();
    let mut entries = Vec::new();
    for (n, v) in limited.into_iter().enumerate() {
        match v.transfer(&lo_space) {
            Ok(v) => entries.push((format!("t^{}", n), v, lower.coefficient(n as i64))),
            Err(e) => return Ok(SeriesReport::failed(&lhs, &rhs, e)),
        }
    }
    Ok(SeriesReport::compare(&lhs, &rhs, entries))
}
