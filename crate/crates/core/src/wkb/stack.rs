use std::sync::Arc;

use heunblock_algebra::{
    FormalSeries, Grid, Laurent, ParameterSpace, Polynomial, RationalFunction, Ring, SeriesVar,
};

use crate::error::{HeunError, Result};

/// Series in ħ whose coefficients are Laurent polynomials in the coordinate.
pub type HbarSeries = FormalSeries<Laurent<RationalFunction>>;

fn polynomial_in_hbar(
    p: &Polynomial,
    space: &Arc<ParameterSpace>,
    coordinate: usize,
    hbar: usize,
    params: &Arc<ParameterSpace>,
    order: i64,
) -> Result<HbarSeries> {
    let mut coeffs = Vec::new();
    for (h, ph) in p.coefficients_in(hbar).into_iter().enumerate() {
        if h as i64 > order {
            break;
        }
        let laurent = ph
            .coefficients_in(coordinate)
            .into_iter()
            .map(|c| RationalFunction::from_polynomial(space, c).transfer(params))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        coeffs.push(Laurent::new(0, laurent));
    }
    Ok(FormalSeries::from_coefficients(SeriesVar::Hbar, 0, coeffs, order))
}

/// Expands a rational function of `[coordinate, hbar, params..]` in ħ through
/// `order`. The ħ⁰ part of the denominator must be a monomial in the
/// coordinate, so every ħ-coefficient is a Laurent polynomial.
pub fn expand_in_hbar(
    r: &RationalFunction,
    space: &Arc<ParameterSpace>,
    params: &Arc<ParameterSpace>,
    order: i64,
) -> Result<HbarSeries> {
    let r = r.transfer(space)?;
    let (num, den) = match r.space() {
        Some(_) => (r.numerator().clone(), r.denominator().clone()),
        None => {
            let c = Laurent::constant(r.clone());
            return Ok(FormalSeries::constant(SeriesVar::Hbar, Grid::Integer, c, order));
        }
    };
    let n = polynomial_in_hbar(&num, space, 0, 1, params, order)?;
    let d = polynomial_in_hbar(&den, space, 0, 1, params, order)?;
    Ok(n.try_div(&d)?)
}

fn derivative(s: &HbarSeries) -> HbarSeries {
    s.map(|l| l.derivative())
}

/// `S_{-1}, S_0, …` of the WKB ansatz `ψ = exp Σ ħ^n ∫ S_n`.
///
/// `S_n` is kept through `ħ^{order(U) − n − 1}`, which is what its
/// contribution `ħ^n S_n` needs to match the `ħ^{-1} S_{-1}` precision.
#[derive(Clone, Debug)]
pub struct WkbStack {
    pub potential: HbarSeries,
    terms: Vec<HbarSeries>,
}

impl WkbStack {
    pub fn max_index(&self) -> i32 {
        self.terms.len() as i32 - 2
    }

    /// `S_n` for `-1 ≤ n ≤ max_index`.
    pub fn term(&self, n: i32) -> &HbarSeries {
        &self.terms[(n + 1) as usize]
    }

    /// `S_n' + Σ_{k=-1}^{n+1} S_k S_{n-k}`, recomputed by plain multiplication.
    pub fn residual(&self, n: i32) -> Result<HbarSeries> {
        let mut acc = derivative(self.term(n));
        for k in -1..=n + 1 {
            acc = acc.try_add(&self.term(k).try_mul(self.term(n - k))?)?;
        }
        Ok(acc)
    }
}

/// Solves the WKB recurrence for `S_{-1} = √U, S_0, …, S_{max_index}`.
pub fn wkb_stack(u: &HbarSeries, max_index: i32) -> Result<WkbStack> {
    let order = u.order_steps();
    let p = u.sqrt()?;
    let two_p = p.scale(&Laurent::from_i64(2));
    let one = FormalSeries::one(SeriesVar::Hbar, Grid::Integer, order);
    let inv_two_p = one.try_div(&two_p)?;
    let mut terms = vec![p];
    for n in -1..max_index {
        // 2 S_{-1} S_{n+1} = -(S_n' + Σ_{k=0}^{n} S_k S_{n-k})
        let mut rhs = derivative(&terms[(n + 1) as usize]);
        for k in 0..=n {
            rhs = rhs.try_add(&terms[(k + 1) as usize].try_mul(&terms[(n - k + 1) as usize])?)?;
        }
        let next = rhs.neg().try_mul(&inv_two_p)?.truncate(order - (n + 1) as i64 - 1);
        terms.push(next);
    }
    Ok(WkbStack {
        potential: u.clone(),
        terms,
    })
}

/// Residue at the coordinate origin of every ħ-coefficient.
pub fn residues(s: &HbarSeries) -> FormalSeries<RationalFunction> {
    s.map(|l| l.residue())
}

/// Checks that every even `S_{2n}` is residue-free.
pub fn check_even_residues(stack: &WkbStack) -> Result<()> {
    for n in (0..=stack.max_index()).step_by(2) {
        if !residues(stack.term(n)).is_zero() {
            return Err(HeunError::EvenResidueNonzero { index: n as u32 });
        }
    }
    Ok(())
}
