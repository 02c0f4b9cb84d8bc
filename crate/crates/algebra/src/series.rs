//! Truncated formal series on an integer or half-integer exponent grid.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::Zero;

use crate::error::AlgebraError;
use crate::ratfunc::RationalFunction;
use crate::ring::Ring;

/// The formal variable a series is expanded in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SeriesVar {
    T,
    /// `1/t`
    InvT,
    Hbar,
    B,
    Z,
    Lambda,
}

impl SeriesVar {
    pub fn tag(self) -> &'static str {
        match self {
            SeriesVar::T => "t",
            SeriesVar::InvT => "invt",
            SeriesVar::Hbar => "hbar",
            SeriesVar::B => "b",
            SeriesVar::Z => "z",
            SeriesVar::Lambda => "lambda",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        Some(match s {
            "t" => SeriesVar::T,
            "invt" => SeriesVar::InvT,
            "hbar" => SeriesVar::Hbar,
            "b" => SeriesVar::B,
            "z" => SeriesVar::Z,
            "lambda" => SeriesVar::Lambda,
            _ => return None,
        })
    }
}

/// Spacing of stored exponents.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Grid {
    Integer,
    Half,
}

impl Grid {
    /// Number of grid steps per unit exponent.
    pub fn steps_per_unit(self) -> i64 {
        match self {
            Grid::Integer => 1,
            Grid::Half => 2,
        }
    }

    pub fn step(self) -> Rational64 {
        Rational64::new(1, self.steps_per_unit())
    }
}

/// `x^offset · Σ_k a_k x^{k·step} + log_coefficient · log x`, known for
/// every grid exponent up to and including `truncation_order`.
///
/// Exponents are handled internally as integer multiples of the grid step.
/// Stored coefficients start at the valuation (the first nonzero term);
/// a series that is zero to its known order stores nothing.
#[derive(Clone, PartialEq, Debug)]
pub struct FormalSeries<C: Ring> {
    variable: SeriesVar,
    grid: Grid,
    offset: RationalFunction,
    log_coefficient: Option<RationalFunction>,
    start: i64,
    coeffs: Vec<C>,
    order: i64,
}

impl<C: Ring> FormalSeries<C> {
    /// `coeffs[i]` multiplies `x^{(start + i)·step}`; `order` is in steps.
    pub fn from_steps(
        variable: SeriesVar,
        grid: Grid,
        start: i64,
        coeffs: Vec<C>,
        order: i64,
    ) -> Self {
        let mut coeffs = coeffs;
        let keep = (order - start + 1).max(0) as usize;
        coeffs.truncate(keep);
        let mut s = FormalSeries {
            variable,
            grid,
            offset: RationalFunction::zero(),
            log_coefficient: None,
            start,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    /// Integer-grid series `Σ coeffs[i] x^{start+i}` known through `order`.
    pub fn from_coefficients(variable: SeriesVar, start: i64, coeffs: Vec<C>, order: i64) -> Self {
        Self::from_steps(variable, Grid::Integer, start, coeffs, order)
    }

    pub fn zero(variable: SeriesVar, grid: Grid, order: i64) -> Self {
        Self::from_steps(variable, grid, order + 1, Vec::new(), order)
    }

    pub fn one(variable: SeriesVar, grid: Grid, order: i64) -> Self {
        Self::from_steps(variable, grid, 0, vec![C::one()], order)
    }

    pub fn constant(variable: SeriesVar, grid: Grid, c: C, order: i64) -> Self {
        Self::from_steps(variable, grid, 0, vec![c], order)
    }

    pub fn with_offset(mut self, offset: RationalFunction) -> Self {
        self.offset = offset;
        self
    }

    pub fn with_log_coefficient(mut self, log: Option<RationalFunction>) -> Self {
        self.log_coefficient = log.filter(|l| !l.is_zero());
        self
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.start += lead as i64;
        }
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.start = self.order + 1;
        }
    }

    pub fn variable(&self) -> SeriesVar {
        self.variable
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn offset(&self) -> &RationalFunction {
        &self.offset
    }

    pub fn log_coefficient(&self) -> Option<&RationalFunction> {
        self.log_coefficient.as_ref()
    }

    /// Truncation order in grid steps.
    pub fn order_steps(&self) -> i64 {
        self.order
    }

    pub fn truncation_order(&self) -> Rational64 {
        self.step_power(self.order)
    }

    pub fn step_power(&self, k: i64) -> Rational64 {
        Rational64::new(k, self.grid.steps_per_unit())
    }

    /// First step with a nonzero coefficient, or `order + 1` when none is known.
    pub fn valuation_steps(&self) -> i64 {
        self.start
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.coeffs.first()
    }

    /// Coefficient at grid step `k`; `None` beyond the truncation order.
    pub fn coeff_step(&self, k: i64) -> Option<C> {
        if k > self.order {
            return None;
        }
        let i = k - self.start;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Some(C::zero())
        } else {
            Some(self.coeffs[i as usize].clone())
        }
    }

    /// Coefficient of `x^power`; `None` beyond the truncation order or off the grid.
    pub fn coeff(&self, power: Rational64) -> Option<C> {
        let k = power * Rational64::from_integer(self.grid.steps_per_unit());
        if !k.is_integer() {
            return None;
        }
        self.coeff_step(k.to_integer())
    }

    /// Coefficient of `x^n` on an integer grid (helper for the common case).
    pub fn coeff_int(&self, n: i64) -> Option<C> {
        self.coeff(Rational64::from_integer(n))
    }

    /// Nonzero terms as (grid step, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.start + i as i64, c))
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        let mut s = self.clone();
        s.order = order;
        let keep = (order - s.start + 1).max(0) as usize;
        s.coeffs.truncate(keep);
        s.normalize();
        s
    }

    /// Multiplies by `x^{k·step}`.
    pub fn shift(&self, k: i64) -> Self {
        let mut s = self.clone();
        s.start += k;
        s.order += k;
        s
    }

    pub fn map<D: Ring, F: FnMut(&C) -> D>(&self, mut f: F) -> FormalSeries<D> {
        let coeffs = self.coeffs.iter().map(&mut f).collect();
        let mut s = FormalSeries::from_steps(self.variable, self.grid, self.start, coeffs, self.order);
        s.offset = self.offset.clone();
        s.log_coefficient = self.log_coefficient.clone();
        s
    }

    pub fn try_map<D: Ring, F: FnMut(&C) -> Result<D, AlgebraError>>(
        &self,
        mut f: F,
    ) -> Result<FormalSeries<D>, AlgebraError> {
        let coeffs = self.coeffs.iter().map(&mut f).collect::<Result<Vec<_>, _>>()?;
        let mut s = FormalSeries::from_steps(self.variable, self.grid, self.start, coeffs, self.order);
        s.offset = self.offset.clone();
        s.log_coefficient = self.log_coefficient.clone();
        Ok(s)
    }

    /// Re-expresses an integer-grid series on the half-integer grid.
    pub fn to_half_grid(&self) -> Self {
        if self.grid == Grid::Half {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * 2);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                coeffs.push(C::zero());
            }
            coeffs.push(c.clone());
        }
        let mut s = FormalSeries::from_steps(
            self.variable,
            Grid::Half,
            self.start * 2,
            coeffs,
            self.order * 2 + 1,
        );
        // The odd step just above the old order is only known if it is zero
        // by construction, which it is: integer series have no half powers.
        s.offset = self.offset.clone();
        s.log_coefficient = self.log_coefficient.clone();
        s
    }

    fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.variable != other.variable || self.grid != other.grid {
            return Err(AlgebraError::GridMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add_sub(other, false)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add_sub(other, true)
    }

    fn add_sub(&self, other: &Self, negate: bool) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        if self.offset != other.offset {
            return Err(AlgebraError::GridMismatch);
        }
        let order = self.order.min(other.order);
        let start = self.start.min(other.start);
        let coeffs = (start..=order)
            .map(|k| {
                let a = self.coeff_step(k).unwrap();
                let b = other.coeff_step(k).unwrap();
                if negate {
                    a.sub(&b)
                } else {
                    a.add(&b)
                }
            })
            .collect();
        let log = match (&self.log_coefficient, &other.log_coefficient) {
            (None, None) => None,
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(if negate { -b } else { b.clone() }),
            (Some(a), Some(b)) => Some(if negate { a - b } else { a + b }),
        };
        Ok(FormalSeries::from_steps(self.variable, self.grid, start, coeffs, order)
            .with_offset(self.offset.clone())
            .with_log_coefficient(log))
    }

    /// Relative precision: number of steps known beyond the valuation.
    fn relative_order(&self) -> i64 {
        self.order - self.start
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        if self.log_coefficient.is_some() || other.log_coefficient.is_some() {
            return Err(AlgebraError::LogTermInProduct);
        }
        let start = self.start + other.start;
        let order = start + self.relative_order().min(other.relative_order());
        let len = (order - start + 1).max(0) as usize;
        let mut coeffs = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(FormalSeries::from_steps(self.variable, self.grid, start, coeffs, order)
            .with_offset(&self.offset + &other.offset))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        if self.log_coefficient.is_some() || other.log_coefficient.is_some() {
            return Err(AlgebraError::LogTermInProduct);
        }
        let lead = other
            .coeffs
            .first()
            .ok_or(AlgebraError::LeadingCoefficientZero)?;
        let inv = lead.try_inv().map_err(|e| match e {
            AlgebraError::DivisionByZero => AlgebraError::LeadingCoefficientZero,
            e => e,
        })?;
        let rel = self.relative_order().min(other.relative_order());
        let start = self.start - other.start;
        let order = start + rel;
        let len = (rel + 1).max(0) as usize;
        let mut q: Vec<C> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = self.coeffs.get(n).cloned().unwrap_or_else(C::zero);
            for k in 1..=n {
                if let Some(b) = other.coeffs.get(k) {
                    if !b.is_zero() && !q[n - k].is_zero() {
                        acc = acc.sub(&b.mul(&q[n - k]));
                    }
                }
            }
            q.push(acc.mul(&inv));
        }
        // The numerator may vanish to its known order; keep the pessimistic bound.
        if self.coeffs.is_empty() {
            return Ok(FormalSeries::zero(self.variable, self.grid, self.order - other.start)
                .with_offset(&self.offset - &other.offset));
        }
        Ok(FormalSeries::from_steps(self.variable, self.grid, start, q, order)
            .with_offset(&self.offset - &other.offset))
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
            .with_log_coefficient(self.log_coefficient.as_ref().map(|l| -l))
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Square root with the branch fixed by the leading coefficient's root.
    pub fn sqrt(&self) -> Result<Self, AlgebraError> {
        if self.log_coefficient.is_some() {
            return Err(AlgebraError::LogTermInProduct);
        }
        let lead = self
            .coeffs
            .first()
            .ok_or(AlgebraError::LeadingCoefficientZero)?;
        if self.start % 2 != 0 {
            return Err(AlgebraError::GridMismatch);
        }
        let s0 = lead.try_sqrt()?;
        let inv2 = s0.add(&s0).try_inv()?;
        let rel = self.relative_order();
        let mut s: Vec<C> = Vec::with_capacity(rel as usize + 1);
        s.push(s0);
        for n in 1..=rel as usize {
            let mut acc = self.coeffs.get(n).cloned().unwrap_or_else(C::zero);
            for k in 1..n {
                if !s[k].is_zero() && !s[n - k].is_zero() {
                    acc = acc.sub(&s[k].mul(&s[n - k]));
                }
            }
            s.push(acc.mul(&inv2));
        }
        let start = self.start / 2;
        Ok(
            FormalSeries::from_steps(self.variable, self.grid, start, s, start + rel)
                .with_offset(&self.offset * &RationalFunction::ratio(1, 2)),
        )
    }

    /// `self^alpha` for rational `alpha` when the series is `1 + O(x)`.
    pub fn pow_rational(&self, alpha: &BigRational) -> Result<Self, AlgebraError> {
        self.check_unit()?;
        let u = self.try_sub(&Self::one(self.variable, self.grid, self.order))?;
        let mut result = Self::one(self.variable, self.grid, self.order);
        let mut term = Self::one(self.variable, self.grid, self.order);
        let mut binom = BigRational::from_integer(BigInt::from(1));
        for n in 1..=self.order.max(0) {
            binom = binom * (alpha - BigRational::from_integer(BigInt::from(n - 1)))
                / BigRational::from_integer(BigInt::from(n));
            term = term.try_mul(&u)?;
            if term.is_zero() {
                break;
            }
            result = result.try_add(&term.scale(&C::from_rational(&binom)))?;
        }
        Ok(result)
    }

    fn check_unit(&self) -> Result<(), AlgebraError> {
        if !self.offset.is_zero() || self.log_coefficient.is_some() {
            return Err(AlgebraError::LeadingCoefficientNotOne);
        }
        if self.start != 0 || !self.coeffs[0].is_one() {
            return Err(AlgebraError::LeadingCoefficientNotOne);
        }
        Ok(())
    }

    /// Logarithm. The prefactor `x^{offset + valuation}` becomes the log
    /// coefficient; the remaining unit series must start with 1.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        if self.log_coefficient.is_some() {
            return Err(AlgebraError::LogTermInProduct);
        }
        let lead = self
            .coeffs
            .first()
            .ok_or(AlgebraError::LeadingCoefficientZero)?;
        if !lead.is_one() {
            return Err(AlgebraError::LeadingCoefficientNotOne);
        }
        let logc = &self.offset
            + &RationalFunction::from_rational(&BigRational::new(
                BigInt::from(self.start),
                BigInt::from(self.grid.steps_per_unit()),
            ));
        let rel = self.relative_order().max(0) as usize;
        let a = |n: usize| self.coeffs.get(n).cloned().unwrap_or_else(C::zero);
        let mut l: Vec<C> = vec![C::zero(); rel + 1];
        for n in 1..=rel {
            let mut acc = C::zero();
            for (k, lk) in l.iter().enumerate().take(n).skip(1) {
                let ak = a(n - k);
                if !lk.is_zero() && !ak.is_zero() {
                    acc = acc.add(&lk.mul(&ak).scale_rational(&int(k as i64)));
                }
            }
            l[n] = a(n).sub(&acc.scale_rational(&BigRational::new(1.into(), (n as i64).into())));
        }
        Ok(FormalSeries::from_steps(self.variable, self.grid, 0, l, rel as i64)
            .with_log_coefficient(Some(logc)))
    }

    /// Exponential of a series without constant term; a log coefficient
    /// becomes the offset of the result.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.offset.is_zero() {
            return Err(AlgebraError::NonZeroConstantTerm);
        }
        if self.start <= 0 && !self.coeffs.is_empty() {
            return Err(AlgebraError::NonZeroConstantTerm);
        }
        let order = self.order.max(0) as usize;
        let f = |k: usize| self.coeff_step(k as i64).unwrap_or_else(C::zero);
        let mut e: Vec<C> = Vec::with_capacity(order + 1);
        e.push(C::one());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                let fk = f(k);
                if !fk.is_zero() && !e[n - k].is_zero() {
                    acc = acc.add(&fk.mul(&e[n - k]).scale_rational(&int(k as i64)));
                }
            }
            e.push(acc.scale_rational(&BigRational::new(1.into(), (n as i64).into())));
        }
        Ok(
            FormalSeries::from_steps(self.variable, self.grid, 0, e, order as i64)
                .with_offset(self.log_coefficient.clone().unwrap_or_else(RationalFunction::zero)),
        )
    }

    /// Agreement through a given step: `None` if equal, otherwise the first
    /// differing step.
    pub fn first_mismatch(&self, other: &Self, through: i64) -> Option<i64> {
        let lo = self.start.min(other.start);
        (lo..=through).find(|&k| self.coeff_step(k) != other.coeff_step(k))
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl FormalSeries<RationalFunction> {
    /// `(1 + O(x))^alpha` with a symbolic exponent.
    pub fn pow_binomial(&self, alpha: &RationalFunction) -> Result<Self, AlgebraError> {
        self.check_unit()?;
        let u = self.try_sub(&Self::one(self.variable, self.grid, self.order))?;
        let mut result = Self::one(self.variable, self.grid, self.order);
        let mut term = Self::one(self.variable, self.grid, self.order);
        let mut binom = RationalFunction::one();
        for n in 1..=self.order.max(0) {
            binom = &binom * &(alpha - &RationalFunction::from_i64(n - 1))
                / RationalFunction::from_i64(n);
            term = term.try_mul(&u)?;
            if term.is_zero() {
                break;
            }
            result = result.try_add(&term.scale(&binom))?;
        }
        Ok(result)
    }

    /// `x d/dx`, including the contribution of the symbolic offset.
    pub fn euler_derivative(&self) -> Self {
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            let p = RationalFunction::from_rational(&BigRational::new(
                BigInt::from(self.start + i as i64),
                BigInt::from(self.grid.steps_per_unit()),
            ));
            *c = &*c * &(&p + &self.offset);
        }
        out.normalize();
        out.log_coefficient = None;
        if let Some(l) = &self.log_coefficient {
            // x d/dx (L log x) = L, a constant term.
            let c0 = out.coeff_step(0).unwrap_or_else(RationalFunction::zero);
            let mut coeffs = Vec::new();
            let start = out.start.min(0);
            for k in start..=out.order {
                let mut v = out.coeff_step(k).unwrap();
                if k == 0 {
                    v = &c0 + l;
                }
                coeffs.push(v);
            }
            let mut s = FormalSeries::from_steps(out.variable, out.grid, start, coeffs, out.order);
            s.offset = out.offset.clone();
            return s;
        }
        out
    }

    /// Coefficientwise limit as `symbol → ∞`, including offset and log term.
    pub fn limit_infinity(&self, symbol: &str) -> Result<Self, AlgebraError> {
        let mut s = self.try_map(|c| c.limit_infinity(symbol))?;
        s.offset = self.offset.limit_infinity(symbol)?;
        s.log_coefficient = match &self.log_coefficient {
            None => None,
            Some(l) => Some(l.limit_infinity(symbol)?).filter(|l| !l.is_zero()),
        };
        Ok(s)
    }

    /// Coefficientwise limit as `symbol → 0`.
    pub fn limit_zero(&self, symbol: &str) -> Result<Self, AlgebraError> {
        let mut s = self.try_map(|c| c.limit_zero(symbol))?;
        s.offset = self.offset.limit_zero(symbol)?;
        s.log_coefficient = match &self.log_coefficient {
            None => None,
            Some(l) => Some(l.limit_zero(symbol)?).filter(|l| !l.is_zero()),
        };
        Ok(s)
    }
}

/// Expansion of a rational function around `symbol = 0` as a series in the
/// given tag, the stored exponent being `scale` times the power of `symbol`.
///
/// With `symbol = "b2"` and `scale = 2` this is the small-`b` expansion of a
/// function of `b²`.
pub fn expand_at_zero(
    r: &RationalFunction,
    symbol: &str,
    tag: SeriesVar,
    scale: i64,
    order: i64,
) -> Result<FormalSeries<RationalFunction>, AlgebraError> {
    let space = match r.space() {
        None => {
            return Ok(FormalSeries::constant(tag, Grid::Integer, r.clone(), order * scale));
        }
        Some(s) => s.clone(),
    };
    let i = match space.index_of(symbol) {
        None => return Ok(FormalSeries::constant(tag, Grid::Integer, r.clone(), order * scale)),
        Some(i) => i,
    };
    let as_series = |p: &crate::poly::Polynomial| -> FormalSeries<RationalFunction> {
        let cs: Vec<RationalFunction> = p
            .coefficients_in(i)
            .into_iter()
            .map(|c| RationalFunction::from_polynomial(&space, c))
            .collect();
        let deg = cs.len() as i64;
        let mut stretched = Vec::new();
        for (k, c) in cs.into_iter().enumerate() {
            if k > 0 {
                for _ in 1..scale {
                    stretched.push(RationalFunction::zero());
                }
            }
            stretched.push(c);
        }
        // Polynomials are exact to any order.
        FormalSeries::from_steps(tag, Grid::Integer, 0, stretched, (deg + order + 2) * scale)
    };
    let num = as_series(r.numerator());
    let den = as_series(r.denominator());
    let q = num.try_div(&den)?;
    Ok(q.truncate(order * scale))
}

/// Classical limit of a series in `b`: the `b⁰` coefficient, provided no
/// negative power survives.
pub fn limit_b_zero(series: &FormalSeries<RationalFunction>) -> Result<RationalFunction, AlgebraError> {
    if let Some((k, _)) = series.terms().next() {
        if k < 0 {
            return Err(AlgebraError::PoleInClassicalLimit {
                symbol: series.variable().tag().to_string(),
                order: (-k) as u32,
            });
        }
    }
    series
        .coeff_step(0)
        .ok_or(AlgebraError::LeadingCoefficientZero)
}

impl<C: Ring + fmt::Display> fmt::Display for FormalSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.variable.tag();
        if !self.offset.is_zero() {
            write!(f, "{}^({}) * ", x, self.offset)?;
        }
        write!(f, "[")?;
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{}^{}", c, x, self.step_power(k))?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})]", x, self.step_power(self.order + 1))?;
        if let Some(l) = &self.log_coefficient {
            write!(f, " + ({})*log({})", l, x)?;
        }
        Ok(())
    }
}

impl Zero for FormalSeries<RationalFunction> {
    fn zero() -> Self {
        FormalSeries::zero(SeriesVar::T, Grid::Integer, 0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.log_coefficient.is_none()
    }
}

impl std::ops::Add for FormalSeries<RationalFunction> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).unwrap_or_else(|e| panic!("{}", e))
    }
}
