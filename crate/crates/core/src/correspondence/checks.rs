use std::sync::Arc;

use heunblock_algebra::{ExecPolicy, FormalSeries, ParameterSpace, RationalFunction};

use super::classical::{classical_block, classical_space};
use crate::error::Result;
use crate::floquet::{floquet_expansion, CfEquation};
use crate::report::SeriesReport;
use crate::symbols::{self as sym, delta_of_theta, rat, var};
use crate::virasoro::{termwise_limit, BlockKind, FirstKind};
use crate::wkb::{invert_bs, HeunEquation};

type Series = FormalSeries<RationalFunction>;

/// Exponent whose `¼ − θ²` gives each rescaled dimension.
fn exponent_of(delta: &str) -> &'static str {
    match delta {
        sym::DELTA0_CL => sym::THETA0,
        sym::DELTAT_CL => sym::THETAT,
        sym::DELTA1_CL => sym::THETA1,
        sym::DELTAINF_CL => sym::THETAINF,
        _ => sym::SIGMA,
    }
}

/// Rewrites a function of rescaled dimensions through monodromy exponents
/// living in `target`.
pub fn in_exponents(r: &RationalFunction, target: &Arc<ParameterSpace>) -> Result<RationalFunction> {
    let subs: Vec<(&str, RationalFunction)> = [
        sym::DELTA0_CL,
        sym::DELTAT_CL,
        sym::DELTA1_CL,
        sym::DELTAINF_CL,
        sym::DELTASIGMA_CL,
    ]
    .into_iter()
    .filter(|d| target.contains(exponent_of(d)))
    .map(|d| (d, delta_of_theta(&var(target, exponent_of(d)))))
    .collect();
    Ok(r.substitute(target, &subs)?)
}

/// Coefficients of `t ∂_t W` for a small-`t` classical block: the log
/// coefficient at `t⁰`, then `k W_k`.
pub fn euler_coefficients(w: &Series, order: u32) -> Vec<RationalFunction> {
    let mut out = vec![w.log_coefficient().cloned().unwrap_or_else(RationalFunction::zero)];
    for k in 1..=order as i64 {
        out.push(&w.coeff_int(k).unwrap_or_else(RationalFunction::zero) * &rat(k, 1));
    }
    out
}

fn compare_with_floquet(kind: BlockKind, equation: CfEquation, order: u32, policy: ExecPolicy) -> Result<SeriesReport> {
    let lhs = format!("E[{}]", equation.tag());
    let rhs = format!("t d/dt W[{}]", kind.tag());
    let e = match floquet_expansion(equation, order) {
        Ok(e) => e,
        Err(err) => return Ok(SeriesReport::failed(&lhs, &rhs, err)),
    };
    let w = match classical_block(kind, order, policy) {
        Ok(w) => w,
        Err(err) => return Ok(SeriesReport::failed(&lhs, &rhs, err)),
    };
    let target = equation.space();
    let mut entries = Vec::new();
    for (k, c) in euler_coefficients(&w, order).into_iter().enumerate() {
        entries.push((format!("t^{}", k), e.coefficient(k as i64), in_exponents(&c, &target)?));
    }
    Ok(SeriesReport::compare(&lhs, &rhs, entries))
}

/// Heun accessory parameter against `t ∂_t` of the classical regular block.
pub fn conjecture_b_regular(order: u32, policy: ExecPolicy) -> Result<SeriesReport> {
    compare_with_floquet(BlockKind::Regular, CfEquation::HVI, order, policy)
}

/// Equation whose Floquet characteristic matches a first-kind block.
pub fn floquet_partner(nf: FirstKind) -> CfEquation {
    match nf {
        FirstKind::Nf3 => CfEquation::HV,
        FirstKind::Nf2 => CfEquation::HIII1,
        FirstKind::Nf1 => CfEquation::HIII2,
        FirstKind::Nf0 => CfEquation::HIII3,
    }
}

pub fn conjecture_b_first_kind(nf: FirstKind, order: u32, policy: ExecPolicy) -> Result<SeriesReport> {
    compare_with_floquet(nf.kind(), floquet_partner(nf), order, policy)
}

/// Link of the classical chain regular → Nf=3 → 2 → 1 → 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalLink {
    RegularToThree,
    ThreeToTwo,
    TwoToOne,
    OneToZero,
}

impl ClassicalLink {
    pub const ALL: [ClassicalLink; 4] = [
        ClassicalLink::RegularToThree,
        ClassicalLink::ThreeToTwo,
        ClassicalLink::TwoToOne,
        ClassicalLink::OneToZero,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ClassicalLink::RegularToThree => "regular->3",
            ClassicalLink::ThreeToTwo => "3->2",
            ClassicalLink::TwoToOne => "2->1",
            ClassicalLink::OneToZero => "1->0",
        }
    }

    pub fn ends(self) -> (BlockKind, BlockKind) {
        match self {
            ClassicalLink::RegularToThree => (BlockKind::Regular, BlockKind::Nf3),
            ClassicalLink::ThreeToTwo => (BlockKind::Nf3, BlockKind::Nf2),
            ClassicalLink::TwoToOne => (BlockKind::Nf2, BlockKind::Nf1),
            ClassicalLink::OneToZero => (BlockKind::Nf1, BlockKind::Nf0),
        }
    }
}

/// Confluence applied to the classical upper block against the classical
/// lower block, log coefficient included.
pub fn classical_chain_check(link: ClassicalLink, order: u32, policy: ExecPolicy) -> Result<SeriesReport> {
    let (hi, lo) = link.ends();
    let lhs = format!("limit of W[{}]", hi.tag());
    let rhs = format!("W[{}]", lo.tag());
    let upper = classical_block(hi, order, policy)?;
    let lower = classical_block(lo, order, policy)?;
    let lo_space = classical_space(lo);
    let zero = RationalFunction::zero;
    let mut coeffs: Vec<RationalFunction> = vec![upper.log_coefficient().cloned().unwrap_or_else(zero)];
    coeffs.extend((1..=order as i64).map(|k| upper.coeff_int(k).unwrap_or_else(zero)));
    let half = rat(1, 2);
    let pair = |target: &Arc<ParameterSpace>, a: &'static str, b: &'static str, m: &str| {
        let (l, m) = (var(target, sym::LAMBDA), var(target, m));
        let plus = delta_of_theta(&(&(&l + &m) * &half));
        let minus = delta_of_theta(&(&(&l - &m) * &half));
        vec![(a, plus), (b, minus)]
    };
    let (target, subs, large) = match link {
        ClassicalLink::RegularToThree => {
            let t = sym::extend(&lo_space, &[sym::LAMBDA]);
            let subs = pair(&t, sym::DELTA1_CL, sym::DELTAINF_CL, sym::THETASTAR);
            (t, subs, sym::LAMBDA)
        }
        ClassicalLink::ThreeToTwo => {
            let t = sym::extend(&lo_space, &[sym::LAMBDA]);
            let subs = pair(&t, sym::DELTAT_CL, sym::DELTA0_CL, sym::THETABIGSTAR);
            // The t^{Δ0+Δt} prefactor of the limit shifts the log coefficient.
            let shift = &subs[0].1 + &subs[1].1;
            coeffs[0] = &coeffs[0].substitute(&t, &subs)? + &shift;
            (t, subs, sym::LAMBDA)
        }
        ClassicalLink::TwoToOne => (classical_space(hi), Vec::new(), sym::THETABIGSTAR),
        ClassicalLink::OneToZero => (classical_space(hi), Vec::new(), sym::THETASTAR),
    };
    let limited = match termwise_limit(&coeffs, &target, &subs, large, policy) {
        Ok(v) => v,
        Err(e) => return Ok(SeriesReport::failed(&lhs, &rhs, e)),
    };
    let mut entries = Vec::new();
    for (k, v) in limited.into_iter().enumerate() {
        let expected = if k == 0 {
            lower.log_coefficient().cloned().unwrap_or_else(zero)
        } else {
            lower.coeff_int(k as i64).unwrap_or_else(zero)
        };
        let label = if k == 0 { "log t".to_string() } else { format!("t^{}", k) };
        match v.transfer(&lo_space) {
            Ok(v) => entries.push((label, v, expected)),
            Err(e) => return Ok(SeriesReport::failed(&lhs, &rhs, e)),
        }
    }
    Ok(SeriesReport::compare(&lhs, &rhs, entries))
}

/// `U_1..U_order` of the classical type-D block obtained by taking the
/// collision limit directly on the classical regular block:
/// `U_n = lim Λ^n [W_n − (δt − (θ* − ν)(Λ + ν))/n]`.
pub fn typed_via_classical_limit(order: u32, policy: ExecPolicy) -> Result<Vec<RationalFunction>> {
    let w = classical_block(BlockKind::Regular, order, policy)?;
    let target = sym::extend(&classical_space(BlockKind::TypeD), &[sym::LAMBDA]);
    let (l, ts, nu, d0, dt) = (
        var(&target, sym::LAMBDA),
        var(&target, sym::THETASTAR),
        var(&target, sym::NU),
        var(&target, sym::DELTA0_CL),
        var(&target, sym::DELTAT_CL),
    );
    let half = rat(1, 2);
    let p1 = &(&l + &ts) * &half;
    let subs = vec![
        (sym::DELTA1_CL, delta_of_theta(&p1)),
        (sym::DELTASIGMA_CL, delta_of_theta(&(&p1 - &nu))),
        (sym::DELTAINF_CL, d0),
        (sym::DELTA0_CL, delta_of_theta(&(&(&l - &ts) * &half))),
        (sym::DELTAT_CL, dt.clone()),
    ];
    let alpha = &dt - &(&(&ts - &nu) * &(&l + &nu));
    let items: Vec<i64> = (1..=order as i64).collect();
    let out_space = classical_space(BlockKind::TypeD);
    policy
        .map(items, |n| -> Result<RationalFunction> {
            let wn = w.coeff_int(n).unwrap_or_else(RationalFunction::zero).substitute(&target, &subs)?;
            let v = &(&wn - &(&alpha / &rat(n, 1))) * &l.pow(n);
            Ok(v.limit_infinity(sym::LAMBDA)?.transfer(&out_space)?)
        })
        .into_iter()
        .collect()
}

/// The two routes to the classical type-D coefficients side by side.
pub fn typed_routes_agree(order: u32, policy: ExecPolicy) -> Result<SeriesReport> {
    let lhs = "U via classical limit of the regular block";
    let rhs = "U via classical limit of the type-D block";
    let direct = classical_block(BlockKind::TypeD, order, policy)?;
    let via = match typed_via_classical_limit(order, policy) {
        Ok(v) => v,
        Err(e) => return Ok(SeriesReport::failed(lhs, rhs, e)),
    };
    let entries = via
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            let n = i as i64 + 1;
            (format!("t^-{}", n), v, direct.coeff_int(n).unwrap_or_else(RationalFunction::zero))
        })
        .collect();
    Ok(SeriesReport::compare(lhs, rhs, entries))
}

/// `t ∂_t` of a classical block stored as a series in `u = 1/t` with a
/// `ln u` term: index `k` maps to `−k w_k`, and the log term to `−L`.
fn inv_t_euler(w: &Series, lowest: i64, highest: i64) -> Vec<(i64, RationalFunction)> {
    let log = w.log_coefficient().cloned().unwrap_or_else(RationalFunction::zero);
    (lowest..=highest)
        .map(|k| {
            let c = if k == 0 {
                -&log
            } else {
                &w.coeff_int(k).unwrap_or_else(RationalFunction::zero) * &rat(-k, 1)
            };
            (k, c)
        })
        .collect()
}

/// `∂_t` of the same kind of series: index `j` maps to `−(j−1) w_{j−1}`,
/// plus `−L` at `j = 1`.
fn inv_t_derivative(w: &Series, lowest: i64, highest: i64) -> Vec<(i64, RationalFunction)> {
    let log = w.log_coefficient().cloned().unwrap_or_else(RationalFunction::zero);
    (lowest..=highest)
        .map(|j| {
            let mut c = &w.coeff_int(j - 1).unwrap_or_else(RationalFunction::zero) * &rat(1 - j, 1);
            if j == 1 {
                c = &c - &log;
            }
            (j, c)
        })
        .collect()
}

fn label_inv_t(k: i64) -> String {
    format!("t^{}", -k)
}

fn compare_bs(
    equation: HeunEquation,
    kind: BlockKind,
    order: u32,
    policy: ExecPolicy,
    rhs: &str,
    derivative: fn(&Series, i64, i64) -> Vec<(i64, RationalFunction)>,
    classical_order: u32,
) -> Result<SeriesReport> {
    let lhs = format!("E[BS,{}]", equation.tag());
    let inv = match invert_bs(equation, order, policy) {
        Ok(v) => v,
        Err(e) => return Ok(SeriesReport::failed(&lhs, rhs, e)),
    };
    let w = match classical_block(kind, classical_order, policy) {
        Ok(v) => v,
        Err(e) => return Ok(SeriesReport::failed(&lhs, rhs, e)),
    };
    let space = classical_space(kind);
    let e = inv.accessory_series();
    let mut entries = Vec::new();
    for (k, c) in derivative(&w, -1, order as i64) {
        let lhs_c = e.coeff_int(k).unwrap_or_else(RationalFunction::zero).transfer(&space)?;
        entries.push((label_inv_t(k), lhs_c, c));
    }
    Ok(SeriesReport::compare(&lhs, rhs, entries))
}

/// Bohr–Sommerfeld accessory parameter of the confluent equation against
/// `t ∂_t` of the classical type-D block, from `t¹` down to `t^{-order}`.
pub fn conjecture_b_typed(order: u32, policy: ExecPolicy) -> Result<SeriesReport> {
    compare_bs(HeunEquation::HV, BlockKind::TypeD, order, policy, "t d/dt U[typeD]", inv_t_euler, order)
}

/// Highest `t^{-n}` the type-G comparison reaches with the two published
/// block coefficients.
pub const TYPEG_MAX_ORDER: u32 = 5;

/// Bohr–Sommerfeld accessory parameter of the biconfluent equation against
/// `∂_t` of the classical type-G block.
pub fn conjecture_b_typeg(order: u32, policy: ExecPolicy) -> Result<SeriesReport> {
    let rhs = "d/dt U[typeG]";
    if order > TYPEG_MAX_ORDER {
        return Ok(SeriesReport::failed(
            "E[BS,HIV]",
            rhs,
            format!("type-G block coefficients are known through t^-{}", TYPEG_MAX_ORDER),
        ));
    }
    compare_bs(HeunEquation::HIV, BlockKind::TypeG, order, policy, rhs, inv_t_derivative, 4)
}
