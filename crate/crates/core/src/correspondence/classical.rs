use std::sync::Arc;

use heunblock_algebra::{
    BigInt, ExecPolicy, FormalSeries, Grid, ParameterSpace, Polynomial, RationalFunction, SeriesVar,
};

use crate::error::{HeunError, Result};
use crate::symbols::{self as sym, rat, var};
use crate::virasoro::{block, BlockKind, BlockSeries};

type Series = FormalSeries<RationalFunction>;

/// Classical parameters of each kind of block, in the order used by its
/// parameter space.
pub fn classical_names(kind: BlockKind) -> &'static [&'static str] {
    match kind {
        BlockKind::Regular => &[sym::DELTA0_CL, sym::DELTAT_CL, sym::DELTA1_CL, sym::DELTAINF_CL, sym::DELTASIGMA_CL],
        BlockKind::Nf3 => &[sym::DELTA0_CL, sym::DELTAT_CL, sym::DELTASIGMA_CL, sym::THETASTAR],
        BlockKind::Nf2 => &[sym::DELTASIGMA_CL, sym::THETASTAR, sym::THETABIGSTAR],
        BlockKind::Nf1 => &[sym::DELTASIGMA_CL, sym::THETASTAR],
        BlockKind::Nf0 => &[sym::DELTASIGMA_CL],
        BlockKind::TypeD => &[sym::DELTA0_CL, sym::DELTAT_CL, sym::THETASTAR, sym::NU],
        BlockKind::TypeG => &[sym::DELTA0_CL, sym::THETABULLET, sym::NU],
    }
}

pub fn classical_space(kind: BlockKind) -> Arc<ParameterSpace> {
    sym::space(classical_names(kind))
}

/// Classical counterpart of a quantum parameter: dimensions become rescaled
/// dimensions, momenta become exponents.
fn classical_partner(quantum: &str) -> Option<&'static str> {
    Some(match quantum {
        sym::DELTA0 => sym::DELTA0_CL,
        sym::DELTAT => sym::DELTAT_CL,
        sym::DELTA1 => sym::DELTA1_CL,
        sym::DELTAINF => sym::DELTAINF_CL,
        sym::DELTASIGMA => sym::DELTASIGMA_CL,
        sym::PSTAR => sym::THETASTAR,
        sym::PBIGSTAR => sym::THETABIGSTAR,
        sym::PBULLET => sym::THETABULLET,
        sym::PNU => sym::NU,
        _ => return None,
    })
}

/// Substitution and time scaling taking a block to its quasiclassical
/// regime, written with `s = i/b` so that everything stays rational:
/// `c = 13 − 6s² − 6/s²`, `Δ = −δ s² + ½ − 1/(4s²)`, `P = θ s`.
#[derive(Clone, Debug)]
pub struct ClassicalScaling {
    pub kind: BlockKind,
    /// `[ib, classical parameters…]`.
    pub s_space: Arc<ParameterSpace>,
    /// `[b2, classical parameters…]`, index-aligned with `s_space`.
    pub b2_space: Arc<ParameterSpace>,
    pub substitutions: Vec<(&'static str, RationalFunction)>,
}

impl ClassicalScaling {
    pub fn new(kind: BlockKind) -> Self {
        let names = classical_names(kind);
        let mut s_names = vec![sym::IB];
        s_names.extend_from_slice(names);
        let mut b_names = vec![sym::B2];
        b_names.extend_from_slice(names);
        let s_space = sym::space(&s_names);
        let b2_space = sym::space(&b_names);
        let s = var(&s_space, sym::IB);
        let s2 = &s * &s;
        let inv_s2 = s2.pow(-1);
        let mut substitutions = vec![(
            sym::C,
            &(&rat(13, 1) - &(&s2 * &rat(6, 1))) - &(&inv_s2 * &rat(6, 1)),
        )];
        let quantum = [
            sym::DELTA0,
            sym::DELTAT,
            sym::DELTA1,
            sym::DELTAINF,
            sym::DELTASIGMA,
            sym::PSTAR,
            sym::PBIGSTAR,
            sym::PBULLET,
            sym::PNU,
        ];
        for q in quantum {
            let cl = classical_partner(q).unwrap();
            if !names.contains(&cl) {
                continue;
            }
            let x = var(&s_space, cl);
            let value = if q.starts_with('P') {
                &x * &s
            } else {
                &(&rat(1, 2) - &(&x * &s2)) - &(&inv_s2 * &rat(1, 4))
            };
            substitutions.push((q, value));
        }
        ClassicalScaling {
            kind,
            s_space,
            b2_space,
            substitutions,
        }
    }

    fn s(&self) -> RationalFunction {
        var(&self.s_space, sym::IB)
    }

    /// Factor picked up by the stored coefficient of index `k` when the
    /// expansion variable is rescaled.
    pub fn time_factor(&self, k: i64) -> RationalFunction {
        let s = self.s();
        match self.kind {
            BlockKind::Regular => RationalFunction::one(),
            BlockKind::Nf3 => s.pow(k),
            BlockKind::Nf2 => s.pow(2 * k),
            BlockKind::Nf1 => s.pow(3 * k),
            BlockKind::Nf0 => s.pow(4 * k),
            BlockKind::TypeD => s.pow(-k),
            // t ↦ t·√(2s): the coefficient of t^{-k} (k even) scales by (2s)^{-k/2}.
            BlockKind::TypeG => (&s * &rat(2, 1)).pow(-k / 2),
        }
    }

    /// Factor picked up by `t^power` under the same rescaling.
    pub fn power_factor(&self, power: i64) -> RationalFunction {
        match self.kind {
            BlockKind::TypeD | BlockKind::TypeG => self.time_factor(-power),
            _ => self.time_factor(power),
        }
    }

    /// Quantum quantity in the `s` space, multiplied by `factor`, then
    /// rewritten through `b² = −1/s²`.
    pub fn to_b2(&self, r: &RationalFunction, factor: &RationalFunction, order: i64) -> Result<RationalFunction> {
        let v = &r.substitute(&self.s_space, &self.substitutions)? * factor;
        even_to_b2(&v, &self.b2_space, order)
    }

    /// `lim_{b→0} b² x` for `x` written over `b2_space`, moved to the
    /// classical space.
    pub fn classical_part(&self, x: &RationalFunction) -> Result<RationalFunction> {
        let b2 = var(&self.b2_space, sym::B2);
        let v = (x * &b2).limit_zero(sym::B2)?;
        Ok(v.transfer(&classical_space(self.kind))?)
    }
}

/// Rewrites a function of `s = i/b` that is even in `s` as a function of
/// `b²`, using `s^{2k} = (−1)^k b^{−2k}`. The `s` symbol must sit at index 0
/// and the target space must be index-aligned with the source.
pub fn even_to_b2(r: &RationalFunction, target: &Arc<ParameterSpace>, order: i64) -> Result<RationalFunction> {
    let src = match r.space() {
        None => return Ok(r.clone()),
        Some(s) => s.clone(),
    };
    debug_assert_eq!(src.name(0), sym::IB);
    let convert = |p: &Polynomial| -> Result<(Polynomial, u16)> {
        let half_max = p.terms().iter().map(|(e, _)| e[0]).max().unwrap_or(0);
        if p.terms().iter().any(|(e, _)| e[0] % 2 == 1) {
            return Err(HeunError::OddImaginaryPower { order });
        }
        let k_max = half_max / 2;
        let terms = p.terms().iter().map(|(e, c)| {
            let k = e[0] / 2;
            let mut e2 = e.clone();
            e2[0] = k_max - k;
            let c: BigInt = if k % 2 == 1 { -c.clone() } else { c.clone() };
            (e2, c)
        });
        Ok((Polynomial::from_terms(p.nvars(), terms), k_max))
    };
    let (num, kn) = convert(r.numerator())?;
    let (den, kd) = convert(r.denominator())?;
    let base = RationalFunction::from_polynomials(target, num, den)?;
    let b2 = var(target, sym::B2);
    Ok(&base * &b2.pow(kd as i64 - kn as i64))
}

/// Classical block of the given kind through the block's order: the
/// coefficientwise `b → 0` limit of `b²·log` of the rescaled block.
///
/// The result lives in the same variable as the block. Its constant term
/// (the undetermined normalization) is dropped; the log coefficient refers
/// to the log of the series variable; an exponential prefactor `e^{a t^p}`
/// appears as the coefficient of `t^p`, i.e. at index `−p` for series in
/// `1/t`.
pub fn classical_block(kind: BlockKind, order: u32, policy: ExecPolicy) -> Result<Series> {
    let quantum = block(kind, order, policy)?;
    classical_from_block(&quantum, policy)
}

pub fn classical_from_block(quantum: &BlockSeries, policy: ExecPolicy) -> Result<Series> {
    let sc = ClassicalScaling::new(quantum.kind);
    let var_tag = quantum.series.variable();
    let order = quantum.series.order_steps();
    let items: Vec<i64> = (0..=order).collect();
    let coeffs: Vec<RationalFunction> = policy
        .map(items, |k| sc.to_b2(&quantum.coefficient(k), &sc.time_factor(k), k))
        .into_iter()
        .collect::<Result<_>>()?;
    let bracket = FormalSeries::from_coefficients(var_tag, 0, coeffs, order);
    let log = bracket.log()?;
    let items: Vec<i64> = (1..=order).collect();
    let mut out: Vec<(i64, RationalFunction)> = policy
        .map(items, |k| -> Result<(i64, RationalFunction)> {
            let c = log.coeff_int(k).unwrap_or_else(RationalFunction::zero);
            Ok((k, sc.classical_part(&c)?))
        })
        .into_iter()
        .collect::<Result<_>>()?;
    let sign = if var_tag == SeriesVar::InvT { -1 } else { 1 };
    let offset = sc.to_b2(&quantum.prefactor_exponent(), &RationalFunction::one(), 0)?;
    let log_coefficient = &sc.classical_part(&offset)? * &rat(sign, 1);
    let mut start = 1;
    if let Some(ex) = &quantum.exponential {
        let c = sc.to_b2(&ex.coefficient, &sc.power_factor(ex.power), 0)?;
        let index = if var_tag == SeriesVar::InvT { -ex.power } else { ex.power };
        out.push((index, sc.classical_part(&c)?));
        start = start.min(index);
    }
    let mut dense = vec![RationalFunction::zero(); (order - start + 1).max(0) as usize];
    for (k, v) in out {
        dense[(k - start) as usize] = v;
    }
    Ok(FormalSeries::from_steps(var_tag, Grid::Integer, start, dense, order).with_log_coefficient(Some(log_coefficient)))
}
