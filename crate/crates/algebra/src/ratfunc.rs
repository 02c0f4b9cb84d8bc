//! Exact rational functions in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::error::AlgebraError;
use crate::modgcd::gcd;
use crate::poly::{Exponents, Polynomial};
use crate::space::ParameterSpace;

/// A quotient of integer polynomials over a [`ParameterSpace`].
///
/// Canonical form: numerator and denominator are coprime (including their
/// integer contents) and the denominator's graded-lex leading coefficient is
/// positive. Values that do not depend on any symbol carry no space at all,
/// so constants combine freely with every space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    space: Option<Arc<ParameterSpace>>,
    num: Polynomial,
    den: Polynomial,
}

fn same_space(a: &Arc<ParameterSpace>, b: &Arc<ParameterSpace>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            space: None,
            num: Polynomial::zero(0),
            den: Polynomial::one(0),
        }
    }

    pub fn one() -> Self {
        Self::from_bigint(BigInt::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        RationalFunction {
            space: None,
            num: Polynomial::constant(0, n),
            den: Polynomial::one(0),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        RationalFunction {
            space: None,
            num: Polynomial::constant(0, q.numer().clone()),
            den: Polynomial::constant(0, q.denom().clone()),
        }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn var(space: &Arc<ParameterSpace>, name: &str) -> Result<Self, AlgebraError> {
        let i = space
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownSymbol(name.to_string()))?;
        Ok(RationalFunction {
            space: Some(space.clone()),
            num: Polynomial::variable(space.len(), i),
            den: Polynomial::one(space.len()),
        })
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_polynomials(
        space: &Arc<ParameterSpace>,
        num: Polynomial,
        den: Polynomial,
    ) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let g = gcd(&num, &den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Ok(Self::normalized(Some(space.clone()), n, d))
    }

    pub fn from_polynomial(space: &Arc<ParameterSpace>, num: Polynomial) -> Self {
        let n = space.len();
        Self::normalized(Some(space.clone()), num, Polynomial::one(n))
    }

    /// Sign normalization and constant detection for already coprime parts.
    fn normalized(space: Option<Arc<ParameterSpace>>, num: Polynomial, den: Polynomial) -> Self {
        let (num, den) = if den.is_sign_normalized() {
            (num, den)
        } else {
            (num.neg(), den.neg())
        };
        if num.is_zero() {
            return Self::zero();
        }
        if num.is_constant() && den.is_constant() {
            return RationalFunction {
                space: None,
                num: Polynomial::constant(0, num.constant_value().unwrap()),
                den: Polynomial::constant(0, den.constant_value().unwrap()),
            };
        }
        RationalFunction { space, num, den }
    }

    pub fn space(&self) -> Option<&Arc<ParameterSpace>> {
        self.space.as_ref()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.space.is_none()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.space.is_some() {
            return None;
        }
        Some(BigRational::new(
            self.num.constant_value().unwrap(),
            self.den.constant_value().unwrap(),
        ))
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.as_rational().and_then(|q| q.to_f64())
    }

    /// Names of the symbols this value actually depends on, in space order.
    pub fn symbols(&self) -> Vec<String> {
        match &self.space {
            None => Vec::new(),
            Some(s) => (0..s.len())
                .filter(|&i| self.num.depends_on(i) || self.den.depends_on(i))
                .map(|i| s.name(i).to_string())
                .collect(),
        }
    }

    pub fn depends_on(&self, name: &str) -> bool {
        match &self.space {
            None => false,
            Some(s) => match s.index_of(name) {
                None => false,
                Some(i) => self.num.depends_on(i) || self.den.depends_on(i),
            },
        }
    }

    fn lifted(&self, space: &Arc<ParameterSpace>) -> (Polynomial, Polynomial) {
        match &self.space {
            Some(_) => (self.num.clone(), self.den.clone()),
            None => {
                let n = space.len();
                (
                    Polynomial::constant(n, self.num.constant_value().unwrap()),
                    Polynomial::constant(n, self.den.constant_value().unwrap()),
                )
            }
        }
    }

    fn common_space(&self, other: &Self) -> Result<Option<Arc<ParameterSpace>>, AlgebraError> {
        match (&self.space, &other.space) {
            (None, None) => Ok(None),
            (Some(a), None) => Ok(Some(a.clone())),
            (None, Some(b)) => Ok(Some(b.clone())),
            (Some(a), Some(b)) => {
                if same_space(a, b) {
                    Ok(Some(a.clone()))
                } else {
                    Err(AlgebraError::ParameterSpaceMismatch)
                }
            }
        }
    }

    fn const_pair(&self, other: &Self) -> Option<(BigRational, BigRational)> {
        Some((self.as_rational()?, other.as_rational()?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add_sub(other, false)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add_sub(other, true)
    }

    fn add_sub(&self, other: &Self, negate: bool) -> Result<Self, AlgebraError> {
        if let Some((a, b)) = self.const_pair(other) {
            let r = if negate { a - b } else { a + b };
            return Ok(Self::from_rational(&r));
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(if negate { other.neg_ref() } else { other.clone() });
        }
        let space = self.common_space(other)?.unwrap();
        let (a, b) = self.lifted(&space);
        let (c, d) = other.lifted(&space);
        let c = if negate { c.neg() } else { c };
        if b == d {
            let n = a.add(&c);
            return Self::from_polynomials(&space, n, b);
        }
        if b.is_one() {
            return Ok(Self::normalized(Some(space), a.mul(&d).add(&c), d));
        }
        if d.is_one() {
            return Ok(Self::normalized(Some(space), a.add(&c.mul(&b)), b));
        }
        let g = gcd(&b, &d);
        if g.is_one() {
            let n = a.mul(&d).add(&c.mul(&b));
            return Ok(Self::normalized(Some(space), n, b.mul(&d)));
        }
        let b1 = b.div_exact(&g).unwrap();
        let d1 = d.div_exact(&g).unwrap();
        let n = a.mul(&d1).add(&c.mul(&b1));
        let den = b1.mul(&d);
        let g2 = gcd(&n, &g);
        if g2.is_one() {
            Ok(Self::normalized(Some(space), n, den))
        } else {
            Ok(Self::normalized(
                Some(space),
                n.div_exact(&g2).unwrap(),
                den.div_exact(&g2).unwrap(),
            ))
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if let Some((a, b)) = self.const_pair(other) {
            return Ok(Self::from_rational(&(a * b)));
        }
        if self.is_zero() || other.is_zero() {
            self.common_space(other)?;
            return Ok(Self::zero());
        }
        let space = self.common_space(other)?.unwrap();
        let (a, b) = self.lifted(&space);
        let (c, d) = other.lifted(&space);
        let g1 = gcd(&a, &d);
        let g2 = gcd(&c, &b);
        let (a, d) = if g1.is_one() {
            (a, d)
        } else {
            (a.div_exact(&g1).unwrap(), d.div_exact(&g1).unwrap())
        };
        let (c, b) = if g2.is_one() {
            (c, b)
        } else {
            (c.div_exact(&g2).unwrap(), b.div_exact(&g2).unwrap())
        };
        Ok(Self::normalized(Some(space), a.mul(&c), b.mul(&d)))
    }

    pub fn try_inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(
            self.space.clone(),
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_mul(&other.try_inv()?)
    }

    fn neg_ref(&self) -> Self {
        RationalFunction {
            space: self.space.clone(),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn try_pow(&self, e: i64) -> Result<Self, AlgebraError> {
        if e < 0 {
            return self.try_inv()?.try_pow(-e);
        }
        let e = e as u32;
        Ok(Self::normalized(
            self.space.clone(),
            self.num.pow(e),
            self.den.pow(e),
        ))
    }

    pub fn pow(&self, e: i64) -> Self {
        self.try_pow(e).expect("power of zero with negative exponent")
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        self * &Self::from_i64(k)
    }

    /// Square root for perfect squares: both parts must be squares of
    /// monomials, or the value must be a square rational.
    pub fn try_sqrt(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let root = |p: &Polynomial| -> Option<Polynomial> {
            if p.len() != 1 {
                return None;
            }
            let (e, c) = &p.terms()[0];
            if c.is_negative() || e.iter().any(|&x| x % 2 == 1) {
                return None;
            }
            let r = c.sqrt();
            if &(&r * &r) != c {
                return None;
            }
            Some(Polynomial::monomial(e.iter().map(|x| x / 2).collect(), r))
        };
        match (root(&self.num), root(&self.den)) {
            (Some(n), Some(d)) => Ok(Self::normalized(self.space.clone(), n, d)),
            _ => Err(AlgebraError::NonSquareLeadingCoefficient),
        }
    }

    /// Moves the value into `target`, matching symbols by name.
    pub fn transfer(&self, target: &Arc<ParameterSpace>) -> Result<Self, AlgebraError> {
        let src = match &self.space {
            None => return Ok(self.clone()),
            Some(s) => s,
        };
        if same_space(src, target) {
            return Ok(self.clone());
        }
        let mut map = vec![0usize; src.len()];
        for (i, name) in src.names().iter().enumerate() {
            let used = self.num.depends_on(i) || self.den.depends_on(i);
            match target.index_of(name) {
                Some(j) => map[i] = j,
                None if used => return Err(AlgebraError::UnknownSymbol(name.clone())),
                None => map[i] = 0,
            }
        }
        let n = target.len();
        let num = self.num.remap(n, &map);
        let den = self.den.remap(n, &map);
        // Remapping is injective on the used variables, so coprimality survives.
        Ok(Self::normalized(Some(target.clone()), num, den))
    }

    /// Simultaneous substitution of symbols by values living in `target`.
    /// Symbols that are not substituted are carried over by name.
    pub fn substitute(
        &self,
        target: &Arc<ParameterSpace>,
        subs: &[(&str, RationalFunction)],
    ) -> Result<Self, AlgebraError> {
        let src = match &self.space {
            None => return Ok(self.clone()),
            Some(s) => s.clone(),
        };
        let n = target.len();
        // Each source variable becomes num_i / den_i in the target space.
        let mut images: Vec<(Polynomial, Polynomial)> = Vec::with_capacity(src.len());
        for (i, name) in src.names().iter().enumerate() {
            let used = self.num.depends_on(i) || self.den.depends_on(i);
            if let Some((_, v)) = subs.iter().find(|(s, _)| s == name) {
                if let Some(vs) = &v.space {
                    if !same_space(vs, target) {
                        return Err(AlgebraError::ParameterSpaceMismatch);
                    }
                }
                images.push(v.lifted(target));
            } else if !used {
                images.push((Polynomial::zero(n), Polynomial::one(n)));
            } else {
                let j = target
                    .index_of(name)
                    .ok_or_else(|| AlgebraError::UnknownSymbol(name.clone()))?;
                images.push((Polynomial::variable(n, j), Polynomial::one(n)));
            }
        }
        let degs: Vec<u32> = (0..src.len())
            .map(|i| self.num.degree_in(i).max(self.den.degree_in(i)))
            .collect();
        let num = substitute_poly(&self.num, &images, &degs, n);
        let den = substitute_poly(&self.den, &images, &degs, n);
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::from_polynomials(target, num, den)
    }

    /// Evaluates at a rational point given in space order.
    pub fn eval_rational(&self, point: &[BigRational]) -> Result<BigRational, AlgebraError> {
        let ev = |p: &Polynomial| -> BigRational {
            let mut acc = BigRational::zero();
            for (e, c) in p.terms() {
                let mut t = BigRational::from_integer(c.clone());
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        t *= num_traits::pow(point[i].clone(), k as usize);
                    }
                }
                acc += t;
            }
            acc
        };
        if let Some(s) = &self.space {
            if point.len() != s.len() {
                return Err(AlgebraError::ParameterSpaceMismatch);
            }
        }
        let d = ev(&self.den);
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(ev(&self.num) / d)
    }

    /// Limit as the symbol `name` tends to infinity.
    pub fn limit_infinity(&self, name: &str) -> Result<Self, AlgebraError> {
        let (space, i) = match self.symbol_index(name) {
            None => return Ok(self.clone()),
            Some(x) => x,
        };
        let dn = self.num.degree_in(i);
        let dd = self.den.degree_in(i);
        if dn > dd {
            return Err(AlgebraError::DivergentLimit {
                symbol: name.to_string(),
                excess: dn - dd,
            });
        }
        if dn < dd {
            return Ok(Self::zero());
        }
        let ln = self.num.coefficients_in(i).pop().unwrap();
        let ld = self.den.coefficients_in(i).pop().unwrap();
        Self::from_polynomials(&space, ln, ld)
    }

    /// Limit as the symbol `name` tends to zero.
    pub fn limit_zero(&self, name: &str) -> Result<Self, AlgebraError> {
        let (space, i) = match self.symbol_index(name) {
            None => return Ok(self.clone()),
            Some(x) => x,
        };
        let vn = self.num.valuation_in(i);
        let vd = self.den.valuation_in(i);
        if vn < vd {
            return Err(AlgebraError::PoleInClassicalLimit {
                symbol: name.to_string(),
                order: vd - vn,
            });
        }
        if vn > vd {
            return Ok(Self::zero());
        }
        let ln = self.num.coefficients_in(i).swap_remove(vn as usize);
        let ld = self.den.coefficients_in(i).swap_remove(vd as usize);
        Self::from_polynomials(&space, ln, ld)
    }

    /// Order of vanishing at `name = 0` (negative for poles).
    pub fn valuation_in(&self, name: &str) -> i64 {
        match self.symbol_index(name) {
            None => 0,
            Some((_, i)) => self.num.valuation_in(i) as i64 - self.den.valuation_in(i) as i64,
        }
    }

    /// Degree at infinity in `name`: numerator degree minus denominator degree.
    pub fn degree_in(&self, name: &str) -> i64 {
        match self.symbol_index(name) {
            None => 0,
            Some((_, i)) => self.num.degree_in(i) as i64 - self.den.degree_in(i) as i64,
        }
    }

    fn symbol_index(&self, name: &str) -> Option<(Arc<ParameterSpace>, usize)> {
        let s = self.space.as_ref()?;
        let i = s.index_of(name)?;
        if !self.num.depends_on(i) && !self.den.depends_on(i) {
            return None;
        }
        Some((s.clone(), i))
    }

    /// Partial derivative with respect to `name`.
    pub fn derivative(&self, name: &str) -> Self {
        let (space, i) = match self.symbol_index(name) {
            None => return Self::zero(),
            Some(x) => x,
        };
        let n = self.num.derivative(i).mul(&self.den).sub(&self.num.mul(&self.den.derivative(i)));
        Self::from_polynomials(&space, n, self.den.mul(&self.den)).unwrap()
    }
}

fn substitute_poly(
    p: &Polynomial,
    images: &[(Polynomial, Polynomial)],
    degs: &[u32],
    n: usize,
) -> Polynomial {
    let mut cache: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
    let mut den_cache: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
    let power = |cache: &mut Vec<Vec<Polynomial>>, base: &Polynomial, i: usize, k: u32| {
        let v = &mut cache[i];
        if v.is_empty() {
            v.push(Polynomial::one(n));
        }
        while v.len() <= k as usize {
            let next = v.last().unwrap().mul(base);
            v.push(next);
        }
        v[k as usize].clone()
    };
    let mut terms: Vec<Polynomial> = Vec::with_capacity(p.len());
    for (e, c) in p.terms() {
        let mut t = Polynomial::constant(n, c.clone());
        for (i, &k) in e.iter().enumerate() {
            let (vn, vd) = &images[i];
            if k > 0 {
                t = t.mul(&power(&mut cache, vn, i, k as u32));
            }
            let rest = degs[i] - k as u32;
            if rest > 0 && !vd.is_one() {
                t = t.mul(&power(&mut den_cache, vd, i, rest));
            }
        }
        terms.push(t);
    }
    // Pairwise summation keeps intermediate merges balanced.
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len() / 2 + 1);
        let mut it = terms.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.add(&b)),
                None => next.push(a),
            }
        }
        terms = next;
    }
    terms.pop().unwrap_or_else(|| Polynomial::zero(n))
}

// ---------------------------------------------------------------------------
// operators (panic on parameter space mismatch)

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                self.$f(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$f(&rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$f(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                self.$f(&rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_ref()
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_ref()
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl From<&BigRational> for RationalFunction {
    fn from(q: &BigRational) -> Self {
        Self::from_rational(q)
    }
}

// ---------------------------------------------------------------------------
// canonical string form

pub(crate) fn format_polynomial(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        for (i, &k) in e.iter().enumerate() {
            match k {
                0 => {}
                1 => factors.push(names[i].clone()),
                _ => factors.push(format!("{}^{}", names[i], k)),
            }
        }
        if factors.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

fn is_atomic(p: &Polynomial) -> bool {
    // A bare integer, or a single power product with unit coefficient.
    if p.len() != 1 {
        return false;
    }
    let (e, c) = &p.terms()[0];
    let nv = e.iter().filter(|&&k| k > 0).count();
    (nv == 0 && !c.is_negative()) || (nv == 1 && c.is_one())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let empty: Vec<String> = Vec::new();
        let names = self.space.as_ref().map(|s| s.names()).unwrap_or(&empty);
        let n = format_polynomial(&self.num, names);
        if self.den.is_one() {
            return f.write_str(&n);
        }
        let d = format_polynomial(&self.den, names);
        let n = if self.num.len() > 1 {
            format!("({})", n)
        } else {
            n
        };
        let d = if is_atomic(&self.den) {
            d
        } else {
            format!("({})", d)
        };
        write!(f, "{}/{}", n, d)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monomial helper used by series code: `coeff * name^k`.
pub fn monomial_in(
    space: &Arc<ParameterSpace>,
    name: &str,
    k: u16,
) -> Result<RationalFunction, AlgebraError> {
    let i = space
        .index_of(name)
        .ok_or_else(|| AlgebraError::UnknownSymbol(name.to_string()))?;
    let mut e: Exponents = SmallVec::from_elem(0, space.len());
    e[i] = k;
    Ok(RationalFunction::from_polynomial(
        space,
        Polynomial::monomial(e, BigInt::one()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp() -> Arc<ParameterSpace> {
        ParameterSpace::new(["x", "y", "sigma"]).unwrap()
    }

    #[test]
    fn cancels_on_construction() {
        let s = sp();
        let x = RationalFunction::var(&s, "x").unwrap();
        let one = RationalFunction::one();
        let r = (&(&x * &x) - &one) / (&x - &one);
        assert_eq!(r, &x + &one);
        assert_eq!(r.to_string(), "x+1");
    }

    #[test]
    fn canonical_string() {
        let s = sp();
        let sig = RationalFunction::var(&s, "sigma").unwrap();
        let r = (RationalFunction::from_i64(4) * &sig * &sig - RationalFunction::one())
            / (RationalFunction::from_i64(2) * &sig + RationalFunction::from_i64(3));
        assert_eq!(r.to_string(), "(4*sigma^2-1)/(2*sigma+3)");
        let q = RationalFunction::ratio(-3, 6);
        assert_eq!(q.to_string(), "-1/2");
        let m = &sig / &RationalFunction::from_i64(-2);
        assert_eq!(m.to_string(), "-sigma/2");
    }

    #[test]
    fn constants_drop_their_space() {
        let s = sp();
        let x = RationalFunction::var(&s, "x").unwrap();
        let d = &x - &x;
        assert!(d.space().is_none());
        assert!(d.is_zero());
        assert_eq!(&(&x / &x) + &RationalFunction::zero(), RationalFunction::one());
    }

    #[test]
    fn mismatched_spaces_error() {
        let a = RationalFunction::var(&sp(), "x").unwrap();
        let other = ParameterSpace::new(["x", "z"]).unwrap();
        let b = RationalFunction::var(&other, "x").unwrap();
        assert_eq!(a.try_add(&b), Err(AlgebraError::ParameterSpaceMismatch));
        assert_eq!(
            RationalFunction::one().try_div(&RationalFunction::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn limits() {
        let s = ParameterSpace::new(["Lambda", "b2"]).unwrap();
        let l = RationalFunction::var(&s, "Lambda").unwrap();
        let k = |n| RationalFunction::from_i64(n);
        let r = (k(2) * &l * &l + k(3) * &l) / (&l * &l + k(1));
        assert_eq!(r.limit_infinity("Lambda").unwrap(), k(2));
        assert!(matches!(
            (&l * &l / (&l + k(1))).limit_infinity("Lambda"),
            Err(AlgebraError::DivergentLimit { excess: 1, .. })
        ));
        let b = RationalFunction::var(&s, "b2").unwrap();
        let w = (&b + k(1)) / &b;
        assert!(matches!(
            w.limit_zero("b2"),
            Err(AlgebraError::PoleInClassicalLimit { order: 1, .. })
        ));
        assert_eq!((&b * &w).limit_zero("b2").unwrap(), k(1));
    }

    #[test]
    fn substitution_is_simultaneous() {
        let s = ParameterSpace::new(["x", "y"]).unwrap();
        let x = RationalFunction::var(&s, "x").unwrap();
        let y = RationalFunction::var(&s, "y").unwrap();
        let f = (&x - &y) / (&x + &y + RationalFunction::one());
        let swapped = f.substitute(&s, &[("x", y.clone()), ("y", x.clone())]).unwrap();
        assert_eq!(swapped, (&y - &x) / (&x + &y + RationalFunction::one()));
        let inv = f
            .substitute(&s, &[("x", RationalFunction::one() / &x)])
            .unwrap();
        let expected = (RationalFunction::one() / &x - &y)
            / (RationalFunction::one() / &x + &y + RationalFunction::one());
        assert_eq!(inv, expected);
    }
}
