use heunblock_algebra::{BigRational, RationalFunction};
use num_traits::{FromPrimitive, ToPrimitive};

use super::family::{cf_family, CfEquation};
use crate::error::{HeunError, Result};

/// Standard Mathieu parameters for the H_III3 Floquet problem.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MathieuParameters {
    /// Characteristic exponent `ν = 2σ`.
    pub nu: f64,
    /// Coupling `q = 4√t`.
    pub q: f64,
    /// `δσ = (1 − ν²)/4`.
    pub delta_sigma: f64,
}

impl MathieuParameters {
    /// Characteristic value `a = 1 − 4E` for a given accessory parameter.
    pub fn characteristic_value(&self, e: f64) -> f64 {
        1.0 - 4.0 * e
    }
}

pub fn mathieu_dictionary(sigma: f64, t: f64) -> MathieuParameters {
    let nu = 2.0 * sigma;
    MathieuParameters {
        nu,
        q: 4.0 * t.sqrt(),
        delta_sigma: (1.0 - nu * nu) / 4.0,
    }
}

fn eval(r: &RationalFunction, point: &[BigRational]) -> Result<f64> {
    let v = r.eval_rational(point)?;
    v.to_f64()
        .ok_or_else(|| HeunError::ResonantDenominator("value out of floating range".into()))
}

/// Root in the unknown of the continued fraction equation at numeric
/// parameters, by Newton iteration from `initial`.
///
/// `params` lists values in the order of the equation's parameter space.
pub fn cf_root_f64(equation: CfEquation, params: &[f64], t: f64, initial: f64, depth: usize) -> Result<f64> {
    let fam = cf_family(equation);
    let point: Vec<BigRational> = params
        .iter()
        .map(|&x| BigRational::from_f64(x).ok_or_else(|| HeunError::ResonantDenominator(format!("{} is not finite", x))))
        .collect::<Result<_>>()?;
    if point.len() != fam.space().len() {
        return Err(HeunError::UnsupportedEquation(format!(
            "{} expects {} parameters",
            equation.tag(),
            fam.space().len()
        )));
    }
    let d = depth as i64;
    let mut a = Vec::new();
    let mut c = Vec::new();
    let mut b0 = Vec::new();
    let mut b1 = Vec::new();
    for n in -d..=d {
        a.push(eval(&fam.a(n), &point)?);
        c.push(eval(&fam.c(n), &point)?);
        b0.push(eval(&fam.b_const(n), &point)?);
        b1.push(eval(&fam.b_linear(n), &point)?);
    }
    let at = |v: &Vec<f64>, n: i64| v[(n + d) as usize];
    let residual = |x: f64| -> f64 {
        let b = |n: i64| x + at(&b0, n) + at(&b1, n) * t;
        let mut upper = 0.0;
        let mut lower = 0.0;
        for k in (1..=d).rev() {
            upper = t * at(&c, k - 1) * at(&a, k) / (b(k) - upper);
            lower = t * at(&a, 1 - k) * at(&c, -k) / (b(-k) - lower);
        }
        upper + lower - b(0)
    };
    let mut x = initial;
    for _ in 0..100 {
        let f = residual(x);
        let h = 1e-7 * x.abs().max(1.0);
        let df = (residual(x + h) - residual(x - h)) / (2.0 * h);
        if df == 0.0 || !df.is_finite() {
            break;
        }
        let step = f / df;
        x -= step;
        if step.abs() <= 1e-15 * x.abs().max(1.0) {
            return Ok(x);
        }
    }
    if residual(x).abs() < 1e-10 {
        Ok(x)
    } else {
        Err(HeunError::ResonantDenominator(format!(
            "Newton iteration for {} did not converge",
            equation.tag()
        )))
    }
}
