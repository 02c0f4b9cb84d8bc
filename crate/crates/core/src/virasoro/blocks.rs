use std::collections::BTreeMap;
use std::sync::Arc;

use heunblock_algebra::{
    ExecPolicy, FormalSeries, ParameterSpace, RationalFunction, Ring, SeriesVar,
};

use super::linalg::inverse_form;
use super::overlap::{closed_form, whittaker_overlap_rank1};
use super::partition::Partition;
use super::verma::VermaModule;
use crate::error::{HeunError, Result};
use crate::report::SeriesReport;
use crate::symbols::{self as sym, dim_of_momentum, rat, var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockKind {
    Regular,
    Nf3,
    Nf2,
    Nf1,
    Nf0,
    TypeD,
    TypeG,
}

impl BlockKind {
    pub const ALL: [BlockKind; 7] = [
        BlockKind::Regular,
        BlockKind::Nf3,
        BlockKind::Nf2,
        BlockKind::Nf1,
        BlockKind::Nf0,
        BlockKind::TypeD,
        BlockKind::TypeG,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            BlockKind::Regular => "regular",
            BlockKind::Nf3 => "Nf3",
            BlockKind::Nf2 => "Nf2",
            BlockKind::Nf1 => "Nf1",
            BlockKind::Nf0 => "Nf0",
            BlockKind::TypeD => "typeD",
            BlockKind::TypeG => "typeG",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.tag().eq_ignore_ascii_case(s))
    }

    pub fn first_kind(self) -> Option<FirstKind> {
        match self {
            BlockKind::Nf3 => Some(FirstKind::Nf3),
            BlockKind::Nf2 => Some(FirstKind::Nf2),
            BlockKind::Nf1 => Some(FirstKind::Nf1),
            BlockKind::Nf0 => Some(FirstKind::Nf0),
            _ => None,
        }
    }
}

/// Number of flavours of a block of the first kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FirstKind {
    Nf3,
    Nf2,
    Nf1,
    Nf0,
}

impl FirstKind {
    pub const ALL: [FirstKind; 4] = [FirstKind::Nf3, FirstKind::Nf2, FirstKind::Nf1, FirstKind::Nf0];

    pub fn kind(self) -> BlockKind {
        match self {
            FirstKind::Nf3 => BlockKind::Nf3,
            FirstKind::Nf2 => BlockKind::Nf2,
            FirstKind::Nf1 => BlockKind::Nf1,
            FirstKind::Nf0 => BlockKind::Nf0,
        }
    }

    pub fn flavours(self) -> u32 {
        match self {
            FirstKind::Nf3 => 3,
            FirstKind::Nf2 => 2,
            FirstKind::Nf1 => 1,
            FirstKind::Nf0 => 0,
        }
    }

    pub fn from_flavours(n: u32) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.flavours() == n)
    }

    pub fn space(self) -> Arc<ParameterSpace> {
        match self {
            FirstKind::Nf3 => sym::space(&[sym::C, sym::DELTA0, sym::DELTAT, sym::DELTASIGMA, sym::PSTAR]),
            FirstKind::Nf2 => sym::space(&[sym::C, sym::DELTASIGMA, sym::PSTAR, sym::PBIGSTAR]),
            FirstKind::Nf1 => sym::space(&[sym::C, sym::DELTASIGMA, sym::PSTAR]),
            FirstKind::Nf0 => sym::space(&[sym::C, sym::DELTASIGMA]),
        }
    }
}

/// `exp(coefficient · t^power)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExponentialFactor {
    pub coefficient: RationalFunction,
    pub power: i64,
}

/// A block expansion together with its prefactor data.
///
/// Small-`t` kinds are series in `t` whose offset is the exponent of the
/// `t` prefactor. Type D and type G are series in `1/t`; their offset is
/// therefore minus the `t` exponent (see [`BlockSeries::prefactor_exponent`]).
#[derive(Clone, Debug, PartialEq)]
pub struct BlockSeries {
    pub kind: BlockKind,
    pub series: FormalSeries<RationalFunction>,
    pub exponential: Option<ExponentialFactor>,
    /// Role (`Δσ`, `P_*`, …) to symbol name.
    pub binding: BTreeMap<String, String>,
}

impl BlockSeries {
    /// Exponent `α` of the `t^α` prefactor.
    pub fn prefactor_exponent(&self) -> RationalFunction {
        match self.series.variable() {
            SeriesVar::InvT => -self.series.offset(),
            _ => self.series.offset().clone(),
        }
    }

    /// Coefficient of `t^n` (or `t^{-n}` for the large-`t` kinds) inside
    /// the bracket.
    pub fn coefficient(&self, n: i64) -> RationalFunction {
        self.series.coeff_int(n).unwrap_or_else(RationalFunction::zero)
    }
}

fn binding(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

/// Dimensions entering the regular four-point block.
#[derive(Clone, Debug)]
pub struct RegularDims<C: Ring> {
    pub c: C,
    pub delta0: C,
    pub deltat: C,
    pub delta1: C,
    pub deltainf: C,
    pub deltasigma: C,
}

/// Parameters of the blocks of the first kind; fields not used by a given
/// flavour number are ignored.
#[derive(Clone, Debug)]
pub struct FirstKindDims<C: Ring> {
    pub c: C,
    pub deltasigma: C,
    pub delta0: C,
    pub deltat: C,
    pub pstar: C,
    pub pbigstar: C,
}

fn level_value<C: Ring>(
    c: &C,
    deltasigma: &C,
    level: u32,
    left: impl Fn(&Partition) -> C,
    right: impl Fn(&Partition) -> C,
) -> Result<C> {
    let basis = Partition::of_weight(level);
    let g = VermaModule::new(deltasigma.clone(), c.clone()).gram_matrix(level);
    let x: Vec<C> = basis.iter().map(&left).collect();
    let y: Vec<C> = basis.iter().map(&right).collect();
    inverse_form(&g, &x, &y)?.ok_or(HeunError::GramSingular { level })
}

fn collect_levels<C: Ring>(
    order: u32,
    policy: ExecPolicy,
    f: impl Fn(u32) -> Result<C> + Sync + Send,
) -> Result<Vec<C>> {
    let mut out = vec![C::one()];
    for v in policy.map_range(order as usize, |i| f(i as u32 + 1)) {
        out.push(v?);
    }
    Ok(out)
}

/// `[1, F₁, …, F_order]` of the regular block, over any coefficient ring.
pub fn regular_coefficients<C: Ring>(
    d: &RegularDims<C>,
    order: u32,
    policy: ExecPolicy,
) -> Result<Vec<C>> {
    collect_levels(order, policy, |level| {
        level_value(
            &d.c,
            &d.deltasigma,
            level,
            |p| closed_form(&d.deltasigma, &d.delta1, &d.deltainf, p),
            |p| closed_form(&d.deltasigma, &d.deltat, &d.delta0, p),
        )
    })
}

/// `[1, coefficients of t, t², …]` of a block of the first kind.
pub fn first_kind_coefficients<C: Ring>(
    nf: FirstKind,
    d: &FirstKindDims<C>,
    order: u32,
    policy: ExecPolicy,
) -> Result<Vec<C>> {
    let quarter = C::from_rational(&heunblock_algebra::BigRational::new(1.into(), 4.into()));
    let (one, zero) = (C::one(), C::zero());
    collect_levels(order, policy, |level| {
        let left = |p: &Partition| match nf {
            FirstKind::Nf0 => whittaker_overlap_rank1(p, (&one, &zero)),
            _ => whittaker_overlap_rank1(p, (&d.pstar, &quarter)),
        };
        let right = |p: &Partition| match nf {
            FirstKind::Nf3 => closed_form(&d.deltasigma, &d.deltat, &d.delta0, p),
            FirstKind::Nf2 => whittaker_overlap_rank1(p, (&d.pbigstar, &quarter)),
            FirstKind::Nf1 | FirstKind::Nf0 => whittaker_overlap_rank1(p, (&one, &zero)),
        };
        level_value(&d.c, &d.deltasigma, level, left, right)
    })
}

pub fn regular_space() -> Arc<ParameterSpace> {
    sym::space(&[sym::C, sym::DELTA0, sym::DELTAT, sym::DELTA1, sym::DELTAINF, sym::DELTASIGMA])
}

fn t_series(coeffs: Vec<RationalFunction>, order: u32) -> FormalSeries<RationalFunction> {
    FormalSeries::from_coefficients(SeriesVar::T, 0, coeffs, order as i64)
}

/// Regular block with generic symbolic dimensions, through `t^order`.
pub fn regular_block(order: u32, policy: ExecPolicy) -> Result<BlockSeries> {
    let s = regular_space();
    let d = RegularDims {
        c: var(&s, sym::C),
        delta0: var(&s, sym::DELTA0),
        deltat: var(&s, sym::DELTAT),
        delta1: var(&s, sym::DELTA1),
        deltainf: var(&s, sym::DELTAINF),
        deltasigma: var(&s, sym::DELTASIGMA),
    };
    let offset = &(&d.deltasigma - &d.delta0) - &d.deltat;
    let coeffs = regular_coefficients(&d, order, policy)?;
    Ok(BlockSeries {
        kind: BlockKind::Regular,
        series: t_series(coeffs, order).with_offset(offset),
        exponential: None,
        binding: binding(&[
            ("c", sym::C),
            ("Delta_0", sym::DELTA0),
            ("Delta_t", sym::DELTAT),
            ("Delta_1", sym::DELTA1),
            ("Delta_inf", sym::DELTAINF),
            ("Delta_sigma", sym::DELTASIGMA),
        ]),
    })
}

/// Symbolic dimensions of a first-kind block in its own space.
pub fn first_kind_dims(nf: FirstKind) -> FirstKindDims<RationalFunction> {
    let s = nf.space();
    let get = |name: &str| {
        if s.contains(name) {
            var(&s, name)
        } else {
            RationalFunction::zero()
        }
    };
    FirstKindDims {
        c: get(sym::C),
        deltasigma: get(sym::DELTASIGMA),
        delta0: get(sym::DELTA0),
        deltat: get(sym::DELTAT),
        pstar: get(sym::PSTAR),
        pbigstar: get(sym::PBIGSTAR),
    }
}

/// Block of the first kind with `nf` flavours, through `t^order`.
pub fn confluent_block_first_kind(nf: FirstKind, order: u32, policy: ExecPolicy) -> Result<BlockSeries> {
    let d = first_kind_dims(nf);
    let coeffs = first_kind_coefficients(nf, &d, order, policy)?;
    let offset = match nf {
        FirstKind::Nf3 => &(&d.deltasigma - &d.delta0) - &d.deltat,
        _ => d.deltasigma.clone(),
    };
    let mut roles = vec![("c", sym::C), ("Delta_sigma", sym::DELTASIGMA)];
    match nf {
        FirstKind::Nf3 => roles.extend([("Delta_0", sym::DELTA0), ("Delta_t", sym::DELTAT), ("P_*", sym::PSTAR)]),
        FirstKind::Nf2 => roles.extend([("P_*", sym::PSTAR), ("P_bigstar", sym::PBIGSTAR)]),
        FirstKind::Nf1 => roles.push(("P_*", sym::PSTAR)),
        FirstKind::Nf0 => {}
    }
    Ok(BlockSeries {
        kind: nf.kind(),
        series: t_series(coeffs, order).with_offset(offset),
        exponential: None,
        binding: binding(&roles),
    })
}

/// Link of the chain Nf=3 → 2 → 1 → 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainLink {
    ThreeToTwo,
    TwoToOne,
    OneToZero,
}

impl ChainLink {
    pub const ALL: [ChainLink; 3] = [ChainLink::ThreeToTwo, ChainLink::TwoToOne, ChainLink::OneToZero];

    pub fn tag(self) -> &'static str {
        match self {
            ChainLink::ThreeToTwo => "3->2",
            ChainLink::TwoToOne => "2->1",
            ChainLink::OneToZero => "1->0",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.tag() == s)
    }

    pub fn ends(self) -> (FirstKind, FirstKind) {
        match self {
            ChainLink::ThreeToTwo => (FirstKind::Nf3, FirstKind::Nf2),
            ChainLink::TwoToOne => (FirstKind::Nf2, FirstKind::Nf1),
            ChainLink::OneToZero => (FirstKind::Nf1, FirstKind::Nf0),
        }
    }
}

/// Substitutes `subs` into each coefficient, rescales the coefficient of
/// order `n` by `large^{-n}` and sends `large → ∞`.
pub(crate) fn termwise_limit(
    coeffs: &[RationalFunction],
    target: &Arc<ParameterSpace>,
    subs: &[(&str, RationalFunction)],
    large: &str,
    policy: ExecPolicy,
) -> Result<Vec<RationalFunction>> {
    let l = var(target, large);
    let items: Vec<(usize, RationalFunction)> = coeffs.iter().cloned().enumerate().collect();
    policy
        .map(items, |(n, c)| -> Result<RationalFunction> {
            let v = c.substitute(target, subs)?;
            let v = &v * &l.pow(-(n as i64));
            Ok(v.limit_infinity(large)?)
        })
        .into_iter()
        .collect()
}

/// Applies one confluence link to the directly computed upper block and
/// compares with the directly computed lower block through `t^order`.
pub fn confluence_chain_check(link: ChainLink, order: u32, policy: ExecPolicy) -> Result<SeriesReport> {
    let (hi, lo) = link.ends();
    let upper = confluent_block_first_kind(hi, order, policy)?;
    let lower = confluent_block_first_kind(lo, order, policy)?;
    let lhs = format!("limit of {}", hi.kind().tag());
    let rhs = lo.kind().tag().to_string();
    let coeffs: Vec<RationalFunction> = (0..=order as i64).map(|n| upper.coefficient(n)).collect();
    let lo_space = lo.space();
    let (target, subs, large, offset) = match link {
        ChainLink::ThreeToTwo => {
            let target = sym::extend(&lo_space, &[sym::LAMBDA]);
            let (c, l, pb) = (var(&target, sym::C), var(&target, sym::LAMBDA), var(&target, sym::PBIGSTAR));
            let d0 = dim_of_momentum(&c, &(&(&l - &pb) / &rat(2, 1)));
            let dt = dim_of_momentum(&c, &(&(&l + &pb) / &rat(2, 1)));
            // Λ^{Δσ−Δ0−Δt} t^{Δ0+Δt} F(t/Λ) shifts the offset by Δ0 + Δt.
            let off = &(&upper.series.offset().substitute(&target, &[(sym::DELTA0, d0.clone()), (sym::DELTAT, dt.clone())])? + &d0) + &dt;
            (target, vec![(sym::DELTA0, d0), (sym::DELTAT, dt)], sym::LAMBDA, off)
        }
        ChainLink::TwoToOne => {
            (hi.space(), Vec::new(), sym::PBIGSTAR, upper.series.offset().clone())
        }
        ChainLink::OneToZero => (hi.space(), Vec::new(), sym::PSTAR, upper.series.offset().clone()),
    };
    let limited = match termwise_limit(&coeffs, &target, &subs, large, policy) {
        Ok(v) => v,
        Err(e) => return Ok(SeriesReport::failed(&lhs, &rhs, e)),
    };
    let mut entries = vec![(
        "offset".to_string(),
        offset.transfer(&lo_space)?,
        lower.series.offset().clone(),
    )];
    for (n, v) in limited.into_iter().enumerate() {
        let v = match v.transfer(&lo_space) {
            Ok(v) => v,
            Err(e) => return Ok(SeriesReport::failed(&lhs, &rhs, e)),
        };
        entries.push((format!("t^{}", n), v, lower.coefficient(n as i64)));
    }
    Ok(SeriesReport::compare(&lhs, &rhs, entries))
}

pub fn typed_space() -> Arc<ParameterSpace> {
    sym::space(&[sym::C, sym::DELTA0, sym::DELTAT, sym::PSTAR, sym::PNU])
}

/// Type-D block through `t^{-order}`, obtained as the large-`Λ` limit of a
/// regular block whose external and internal momenta grow with `Λ`.
pub fn typed_block(order: u32, policy: ExecPolicy) -> Result<BlockSeries> {
    let out_space = typed_space();
    let s = sym::extend(&out_space, &[sym::LAMBDA]);
    let (c, d0, dt, ps, pn, l) = (
        var(&s, sym::C),
        var(&s, sym::DELTA0),
        var(&s, sym::DELTAT),
        var(&s, sym::PSTAR),
        var(&s, sym::PNU),
        var(&s, sym::LAMBDA),
    );
    let half = rat(1, 2);
    let p1 = &(&l + &ps) * &half;
    let d = RegularDims {
        c: c.clone(),
        delta0: dim_of_momentum(&c, &(&(&l - &ps) * &half)),
        deltat: dt.clone(),
        delta1: dim_of_momentum(&c, &p1),
        deltainf: d0.clone(),
        deltasigma: dim_of_momentum(&c, &(&p1 - &pn)),
    };
    let f = regular_coefficients(&d, order, policy)?;
    let n = order as i64;
    // The block is evaluated at Λ/t: F_k picks up Λ^k (1/t)^k.
    let scaled: Vec<RationalFunction> = f.iter().enumerate().map(|(k, v)| v * &l.pow(k as i64)).collect();
    let block = FormalSeries::from_coefficients(SeriesVar::InvT, 0, scaled, n);
    let alpha = &(&(&ps - &pn) * &(&l + &pn)) + &dt;
    let base = FormalSeries::from_coefficients(SeriesVar::InvT, 0, vec![RationalFunction::one(), -&l], n);
    let prefactor = base.pow_binomial(&alpha)?;
    let product = block.try_mul(&prefactor)?;
    let limited = product.limit_infinity(sym::LAMBDA)?;
    let coeffs: Vec<RationalFunction> = (0..=n)
        .map(|k| limited.coeff_int(k).unwrap().transfer(&out_space))
        .collect::<std::result::Result<_, _>>()?;
    let os = &out_space;
    let (ps, pn) = (var(os, sym::PSTAR), var(os, sym::PNU));
    let exponent = &(&pn * &(&ps - &pn)) * &rat(2, 1);
    Ok(BlockSeries {
        kind: BlockKind::TypeD,
        series: FormalSeries::from_coefficients(SeriesVar::InvT, 0, coeffs, n).with_offset(-&exponent),
        exponential: Some(ExponentialFactor {
            coefficient: &ps - &pn,
            power: 1,
        }),
        binding: binding(&[
            ("c", sym::C),
            ("Delta_0", sym::DELTA0),
            ("Delta_t", sym::DELTAT),
            ("P_*", sym::PSTAR),
            ("P_nu", sym::PNU),
        ]),
    })
}

pub fn typeg_space() -> Arc<ParameterSpace> {
    sym::space(&[sym::C, sym::DELTA0, sym::PBULLET, sym::PNU])
}

const TYPEG_G1: &str = "6*Pnu^3 - 6*Pbullet*Pnu^2 + (Pbullet^2 - 3*Delta0 - (c-1)/8)*Pnu + 2*Pbullet*Delta0";
const TYPEG_G2_REST: &str = "105/4*Pnu^4 - 35*Pbullet*Pnu^3 + (12*Pbullet^2 - 33/2*Delta0 - (13*c-19)/8)*Pnu^2 \
     + (-Pbullet^2 + 18*Delta0 + (19*c-31)/24)*Pbullet*Pnu + (-16*Pbullet^2 + Delta0 + c - 2)*Delta0/4";

/// The first two type-G coefficients `(G₁, G₂)` as published data.
pub fn typeg_published() -> (RationalFunction, RationalFunction) {
    let s = typeg_space();
    let g1 = RationalFunction::parse(TYPEG_G1, &s).expect("static formula parses");
    let rest = RationalFunction::parse(TYPEG_G2_REST, &s).expect("static formula parses");
    let g2 = &(&(&g1 * &g1) * &rat(1, 2)) + &rest;
    (g1, g2)
}

/// Type-G block from the published coefficients: a series in `1/t` with
/// nonzero terms at even powers through `t^{-4}`.
pub fn typeg_block() -> BlockSeries {
    let s = typeg_space();
    let (g1, g2) = typeg_published();
    let z = RationalFunction::zero();
    let coeffs = vec![RationalFunction::one(), z.clone(), g1, z, g2];
    let (d0, pb, pn) = (var(&s, sym::DELTA0), var(&s, sym::PBULLET), var(&s, sym::PNU));
    let alpha = &(&d0 - &(&(&pn * &pn) * &rat(3, 1))) + &(&(&pb * &pn) * &rat(2, 1));
    BlockSeries {
        kind: BlockKind::TypeG,
        series: FormalSeries::from_coefficients(SeriesVar::InvT, 0, coeffs, 4).with_offset(-&alpha),
        exponential: Some(ExponentialFactor {
            coefficient: &pn * &rat(1, 2),
            power: 2,
        }),
        binding: binding(&[
            ("c", sym::C),
            ("Delta_0", sym::DELTA0),
            ("P_bullet", sym::PBULLET),
            ("P_nu", sym::PNU),
        ]),
    }
}

/// Dispatches on the kind. Type G is only available through `t^{-4}`.
pub fn block(kind: BlockKind, order: u32, policy: ExecPolicy) -> Result<BlockSeries> {
    match kind {
        BlockKind::Regular => regular_block(order, policy),
        BlockKind::TypeD => typed_block(order, policy),
        BlockKind::TypeG => {
            let b = typeg_block();
            let keep = (order as i64).min(4);
            Ok(BlockSeries {
                series: b.series.truncate(keep),
                ..b
            })
        }
        k => confluent_block_first_kind(k.first_kind().unwrap(), order, policy),
    }
}
