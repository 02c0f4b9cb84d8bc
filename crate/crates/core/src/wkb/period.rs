use std::sync::Arc;

use heunblock_algebra::{ExecPolicy, FormalSeries, Grid, ParameterSpace, RationalFunction, SeriesVar};

use super::catalog::{potential_catalog, HeunEquation, Rescaling};
use super::stack::{check_even_residues, expand_in_hbar, residues, wkb_stack, WkbStack};
use crate::error::{HeunError, Result};
use crate::symbols::{self as sym, var};

type Series = FormalSeries<RationalFunction>;

fn accessory_name(n: usize) -> String {
    format!("E{}", n)
}

/// Highest `E_n` that can reach `ħ^{hbar_order}` in the rescaled potential.
fn last_accessory(rescaling: &Rescaling, hbar_order: i64) -> i64 {
    (hbar_order - rescaling.accessory_hbar_power).div_euclid(-rescaling.t_power_of_hbar)
}

/// Bohr–Sommerfeld period `ν = Σ ħ^{2n-1} ν_{2n-1}` of a rescaled potential
/// under the ansatz `E = κ t + Σ E_n t^{-n}`.
#[derive(Clone, Debug)]
pub struct BsPeriod {
    pub equation: HeunEquation,
    /// Parameters, `nu`, `kappa`, then `E0, E1, …`.
    pub space: Arc<ParameterSpace>,
    pub accessories: usize,
    /// `(2n-1, ν_{2n-1})` with `ν_{2n-1}` a series in ħ.
    pub contributions: Vec<(i32, Series)>,
    /// `Σ ħ^{2n-1} ν_{2n-1}`.
    pub total: Series,
    pub stack: WkbStack,
}

impl BsPeriod {
    pub fn contribution(&self, index: i32) -> Option<&Series> {
        self.contributions.iter().find(|(k, _)| *k == index).map(|(_, s)| s)
    }
}

fn rescaled(eq: HeunEquation) -> Result<Rescaling> {
    Ok(potential_catalog(eq).rescaled()?.clone())
}

/// `ν_{-1}` is computed through `ħ^{hbar_order}`; the other contributions
/// to the same total precision.
pub fn bs_period(eq: HeunEquation, hbar_order: u32, policy: ExecPolicy) -> Result<BsPeriod> {
    let resc = rescaled(eq)?;
    let order = hbar_order as i64;
    let accessories = (last_accessory(&resc, order) + 1).max(0) as usize;
    let mut params: Vec<String> = resc.parameters.iter().map(|s| s.to_string()).collect();
    params.push(sym::NU.into());
    params.push(sym::KAPPA.into());
    params.extend((0..accessories).map(accessory_name));
    let param_space = ParameterSpace::new(params.clone())?;
    let mut names = vec![resc.coordinate.to_string(), sym::HBAR.to_string()];
    names.extend(params);
    let work = ParameterSpace::new(names)?;

    let hbar = var(&work, sym::HBAR);
    let p = resc.t_power_of_hbar;
    let mut e = &var(&work, sym::KAPPA) * &hbar.pow(p);
    for n in 0..accessories {
        e = &e + &(&var(&work, &accessory_name(n)) * &hbar.pow(-p * n as i64));
    }
    let u = resc.potential.substitute(&work, &[(sym::E, e)])?;
    let u = expand_in_hbar(&u, &work, &param_space, order)?;
    let stack = wkb_stack(&u, (order - 1) as i32)?;
    check_even_residues(&stack)?;

    let odd: Vec<i32> = (-1..=stack.max_index()).step_by(2).collect();
    let contributions: Vec<(i32, Series)> =
        policy.map(odd, |n| (n, residues(stack.term(n))));
    let mut total = FormalSeries::zero(SeriesVar::Hbar, Grid::Integer, order - 1);
    for (n, s) in &contributions {
        total = total.try_add(&s.shift(*n as i64))?;
    }
    Ok(BsPeriod {
        equation: eq,
        space: param_space,
        accessories,
        contributions,
        total,
        stack,
    })
}

/// Accessory parameter obtained by making every quantum correction to the
/// period vanish.
#[derive(Clone, Debug)]
pub struct BsInversion {
    pub equation: HeunEquation,
    pub space: Arc<ParameterSpace>,
    pub kappa: RationalFunction,
    /// `E_0, E_1, …`
    pub coefficients: Vec<RationalFunction>,
}

impl BsInversion {
    /// `E` as a series in `1/t`: `κ` at index −1, then `E_n` at index `n`.
    pub fn accessory_series(&self) -> Series {
        let mut coeffs = vec![self.kappa.clone()];
        coeffs.extend(self.coefficients.iter().cloned());
        let order = self.coefficients.len() as i64 - 1;
        FormalSeries::from_coefficients(SeriesVar::InvT, -1, coeffs, order)
    }

    pub fn coefficient(&self, n: usize) -> Option<&RationalFunction> {
        self.coefficients.get(n)
    }
}

/// Space the inverted coefficients are reported in.
pub fn inversion_space(eq: HeunEquation) -> Result<Arc<ParameterSpace>> {
    match eq {
        HeunEquation::HV => Ok(sym::space(&[sym::DELTA0_CL, sym::DELTAT_CL, sym::THETASTAR, sym::NU])),
        HeunEquation::HIV => Ok(sym::space(&[sym::DELTA0_CL, sym::THETABULLET, sym::NU])),
        _ => Err(HeunError::NoBSRescaling(eq.tag().to_string())),
    }
}

/// `ħ` order of `ν_{-1}` needed to fix `E_0..E_n`.
pub fn hbar_order_for(eq: HeunEquation, n: u32) -> Result<u32> {
    match eq {
        HeunEquation::HV => Ok(2 * n + 3),
        HeunEquation::HIV => Ok(n + 2),
        _ => Err(HeunError::NoBSRescaling(eq.tag().to_string())),
    }
}

/// Solves `ν(κ, E_0, …) = ν` order by order in ħ for `κ, E_0, …, E_n`.
pub fn invert_bs(eq: HeunEquation, n: u32, policy: ExecPolicy) -> Result<BsInversion> {
    let period = bs_period(eq, hbar_order_for(eq, n)?, policy)?;
    let space = &period.space;
    let mut unknowns: Vec<String> = vec![sym::KAPPA.to_string()];
    unknowns.extend((0..=n as usize).map(accessory_name));
    let mut solved: Vec<(String, RationalFunction)> = Vec::new();
    let nu = var(space, sym::NU);
    for j in 0..=period.total.order_steps() {
        let raw = period.total.coeff_int(j).unwrap_or_else(RationalFunction::zero);
        let subs: Vec<(&str, RationalFunction)> = solved.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
        let mut c = raw.substitute(space, &subs)?;
        if j == 0 {
            c = &c - &nu;
        }
        if c.is_zero() {
            continue;
        }
        let next = solved.len();
        let nonlinear = HeunError::NonlinearOrderEquation { order: j as u32 };
        if next >= unknowns.len() || unknowns[next + 1..].iter().any(|u| c.depends_on(u)) {
            return Err(nonlinear);
        }
        let u = unknowns[next].as_str();
        if c.numerator().degree_in(space.index_of(u).unwrap()) != 1
            || c.denominator().depends_on(space.index_of(u).unwrap())
        {
            return Err(nonlinear);
        }
        let slope = c.derivative(u);
        let at_zero = c.substitute(space, &[(u, RationalFunction::zero())])?;
        solved.push((u.to_string(), &(-&at_zero) / &slope));
    }
    if solved.len() < unknowns.len() {
        return Err(HeunError::NonlinearOrderEquation {
            order: period.total.order_steps() as u32,
        });
    }
    let target = inversion_space(eq)?;
    let values = solved
        .into_iter()
        .map(|(_, v)| v.transfer(&target))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut values = values.into_iter();
    let kappa = values.next().unwrap();
    Ok(BsInversion {
        equation: eq,
        space: target,
        kappa,
        coefficients: values.collect(),
    })
}

/// The period with a solved accessory series inserted; every ħ-order above
/// zero vanishes and the ħ⁰ term is `ν`.
pub fn back_substitute(period: &BsPeriod, inv: &BsInversion) -> Result<Series> {
    let names: Vec<String> = (0..period.accessories).map(accessory_name).collect();
    let target = sym::extend(&inv.space, &names.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    let mut subs = vec![(sym::KAPPA, inv.kappa.transfer(&target)?)];
    for (name, value) in names.iter().zip(&inv.coefficients) {
        subs.push((name.as_str(), value.transfer(&target)?));
    }
    Ok(period.total.try_map(|c| c.substitute(&target, &subs))?)
}

