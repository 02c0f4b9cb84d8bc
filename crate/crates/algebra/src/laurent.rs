//! Finite Laurent polynomials in one coordinate.

use crate::error::AlgebraError;
use crate::ring::Ring;

/// `Σ c_k z^k` over a finite range of integer exponents.
///
/// Stored trimmed: the first and last coefficients are nonzero, and the
/// zero object has no coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Laurent<C: Ring> {
    min: i64,
    coeffs: Vec<C>,
}

impl<C: Ring> Laurent<C> {
    pub fn new(min: i64, coeffs: Vec<C>) -> Self {
        let mut l = Laurent { min, coeffs };
        l.trim();
        l
    }

    pub fn monomial(k: i64, c: C) -> Self {
        Self::new(k, vec![c])
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min = 0;
        }
    }

    pub fn min_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.min)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.min + self.coeffs.len() as i64 - 1)
    }

    pub fn coefficient(&self, k: i64) -> C {
        let i = k - self.min;
        if i < 0 || i >= self.coeffs.len() as i64 {
            C::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as (exponent, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min + i as i64, c))
    }

    /// Coefficient of `z^{-1}`, the residue at the origin.
    pub fn residue(&self) -> C {
        self.coefficient(-1)
    }

    /// Residue at infinity, `-Res_{z=0}` of the same differential.
    pub fn residue_at_infinity(&self) -> C {
        self.residue().neg()
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul(&C::from_i64(self.min + i as i64)))
            .collect();
        Self::new(self.min - 1, coeffs)
    }

    pub fn map<D: Ring, F: FnMut(&C) -> D>(&self, mut f: F) -> Laurent<D> {
        Laurent::new(self.min, self.coeffs.iter().map(&mut f).collect())
    }

    pub fn try_map<D: Ring, F: FnMut(&C) -> Result<D, AlgebraError>>(
        &self,
        mut f: F,
    ) -> Result<Laurent<D>, AlgebraError> {
        let coeffs = self.coeffs.iter().map(&mut f).collect::<Result<_, _>>()?;
        Ok(Laurent::new(self.min, coeffs))
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        if self.coeffs.is_empty() {
            return if negate { other.neg_l() } else { other.clone() };
        }
        if other.coeffs.is_empty() {
            return self.clone();
        }
        let lo = self.min.min(other.min);
        let hi = self.max_exponent().unwrap().max(other.max_exponent().unwrap());
        let coeffs = (lo..=hi)
            .map(|k| {
                let a = self.coefficient(k);
                let b = other.coefficient(k);
                if negate {
                    a.sub(&b)
                } else {
                    a.add(&b)
                }
            })
            .collect();
        Self::new(lo, coeffs)
    }

    fn neg_l(&self) -> Self {
        Laurent {
            min: self.min,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
}

impl<C: Ring> Ring for Laurent<C> {
    fn zero() -> Self {
        Laurent {
            min: 0,
            coeffs: Vec::new(),
        }
    }

    fn one() -> Self {
        Self::constant(C::one())
    }

    fn from_rational(q: &num_rational::BigRational) -> Self {
        Self::constant(C::from_rational(q))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(self.min + other.min, out)
    }

    fn neg(&self) -> Self {
        self.neg_l()
    }

    /// Only monomials are units.
    fn try_inv(&self) -> Result<Self, AlgebraError> {
        match self.coeffs.len() {
            0 => Err(AlgebraError::DivisionByZero),
            1 => Ok(Self::monomial(-self.min, self.coeffs[0].try_inv()?)),
            _ => Err(AlgebraError::NotInvertible),
        }
    }

    fn try_sqrt(&self) -> Result<Self, AlgebraError> {
        match self.coeffs.len() {
            0 => Ok(Self::zero()),
            1 if self.min % 2 == 0 => Ok(Self::monomial(self.min / 2, self.coeffs[0].try_sqrt()?)),
            _ => Err(AlgebraError::NonSquareLeadingCoefficient),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type L = Laurent<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn residue_basics() {
        let p = L::new(0, vec![q(5), q(0), q(1)]);
        assert!(p.residue().is_zero());
        let r = L::monomial(-1, q(7));
        assert_eq!(r.residue(), q(7));
        assert_eq!(r.residue_at_infinity(), q(-7));
    }

    #[test]
    fn derivative_has_no_residue() {
        let p = L::new(-4, vec![q(1), q(2), q(3), q(4), q(5), q(6)]);
        assert!(p.derivative().residue().is_zero());
    }

    #[test]
    fn product_and_trim() {
        let a = L::new(-1, vec![q(1), q(1)]);
        let b = L::new(-1, vec![q(1), q(-1)]);
        // (1/z + 1)(1/z - 1) = 1/z^2 - 1
        assert_eq!(a.mul(&b), L::new(-2, vec![q(1), q(0), q(-1)]));
        assert_eq!(a.sub(&a), L::zero());
    }
}
