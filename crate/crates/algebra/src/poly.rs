//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Terms are kept sorted in descending graded-lexicographic order with no
//! zero coefficients, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 8]>;

/// Graded lexicographic comparison; earlier variables are more significant.
pub fn grlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

pub fn lex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    a.cmp(b)
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Exponents, BigInt)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(SmallVec::from_elem(0, nvars), c)],
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e: Exponents = SmallVec::from_elem(0, nvars);
        e[index] = 1;
        Polynomial {
            nvars,
            terms: vec![(e, BigInt::one())],
        }
    }

    pub fn monomial(exps: Exponents, c: BigInt) -> Self {
        let nvars = exps.len();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(exps, c)],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut acc: HashMap<Exponents, BigInt> = HashMap::new();
        for (e, c) in terms {
            debug_assert_eq!(e.len(), nvars);
            if c.is_zero() {
                continue;
            }
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: HashMap<Exponents, BigInt>) -> Self {
        let mut terms: Vec<(Exponents, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| grlex_cmp(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Exponents, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && !self.terms.is_empty() && self.terms[0].1.is_one()
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> BigInt {
        match self.terms.last() {
            Some((e, c)) if e.iter().all(|&x| x == 0) => c.clone(),
            _ => BigInt::zero(),
        }
    }

    /// Leading term in graded lexicographic order.
    pub fn leading(&self) -> Option<&(Exponents, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Leading term in pure lexicographic order.
    pub fn lex_leading(&self) -> Option<&(Exponents, BigInt)> {
        self.terms.iter().max_by(|a, b| lex_cmp(&a.0, &b.0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .first()
            .map(|(e, _)| e.iter().map(|&x| x as u32).sum())
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e[var] as u32)
            .max()
            .unwrap_or(0)
    }

    /// Lowest power of `var` present (0 for the zero polynomial).
    pub fn valuation_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e[var] as u32)
            .min()
            .unwrap_or(0)
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.iter().any(|(e, _)| e[var] > 0)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match grlex_cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            return large.mul_term(&small.terms[0].0, &small.terms[0].1);
        }
        let mut acc: HashMap<Exponents, BigInt> =
            HashMap::with_capacity(small.len() * large.len() / 2 + 1);
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        Self::from_map(self.nvars, acc)
    }

    pub fn mul_term(&self, exps: &[u16], c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.iter().zip(exps).map(|(x, y)| x + y).collect(), k * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k / c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Positive gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum of the exponents of all terms.
    pub fn monomial_content(&self) -> Exponents {
        let mut m: Exponents = match self.terms.first() {
            Some((e, _)) => e.clone(),
            None => return SmallVec::from_elem(0, self.nvars),
        };
        for (e, _) in &self.terms[1..] {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    pub fn div_monomial(&self, m: &[u16]) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(x, y)| x - y).collect(), c.clone()))
                .collect(),
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self` over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        debug_assert_eq!(self.nvars, divisor.nvars);
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if let Some(c) = divisor.constant_value() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, k) in &self.terms {
                let (q, r) = k.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                terms.push((e.clone(), q));
            }
            return Some(Polynomial {
                nvars: self.nvars,
                terms,
            });
        }
        if divisor.len() == 1 {
            let (de, dc) = &divisor.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, k) in &self.terms {
                if !divides(de, e) {
                    return None;
                }
                let (q, r) = k.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((e.iter().zip(de).map(|(x, y)| x - y).collect(), q));
            }
            return Some(Polynomial {
                nvars: self.nvars,
                terms,
            });
        }
        for v in 0..self.nvars {
            if divisor.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let (lde, ldc) = divisor.terms[0].clone();
        let mut rem = self.clone();
        let mut quotient: Vec<(Exponents, BigInt)> = Vec::new();
        while let Some((re, rc)) = rem.terms.first().cloned() {
            if !divides(&lde, &re) {
                return None;
            }
            let (qc, r) = rc.div_rem(&ldc);
            if !r.is_zero() {
                return None;
            }
            let qe: Exponents = re.iter().zip(&lde).map(|(x, y)| x - y).collect();
            rem = rem.sub(&divisor.mul_term(&qe, &qc));
            quotient.push((qe, qc));
        }
        // Quotient terms were produced in strictly decreasing order.
        Some(Polynomial {
            nvars: self.nvars,
            terms: quotient,
        })
    }

    /// Coefficients with respect to `var`: entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Exponents, BigInt)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            buckets[k].push((e2, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                t.sort_unstable_by(|a, b| grlex_cmp(&b.0, &a.0));
                Polynomial {
                    nvars: self.nvars,
                    terms: t,
                }
            })
            .collect()
    }

    pub fn derivative(&self, var: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
                let mut e2 = e.clone();
                let k = e2[var];
                e2[var] -= 1;
                (e2, c * BigInt::from(k))
            }),
        )
    }

    /// Re-embeds into a space with `nvars` variables; `map[i]` is the new index of variable `i`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Self {
        Self::from_terms(
            nvars,
            self.terms.iter().map(|(e, c)| {
                let mut e2: Exponents = SmallVec::from_elem(0, nvars);
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        e2[map[i]] += k;
                    }
                }
                (e2, c.clone())
            }),
        )
    }

    /// Evaluates `var` at an integer and returns the result in the same variable set.
    pub fn eval_var_int(&self, var: usize, value: &BigInt) -> Self {
        let deg = self.degree_in(var);
        let mut powers = Vec::with_capacity(deg as usize + 1);
        let mut p = BigInt::one();
        for _ in 0..=deg {
            powers.push(p.clone());
            p *= value;
        }
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| {
                let mut e2 = e.clone();
                let k = e2[var] as usize;
                e2[var] = 0;
                (e2, c * &powers[k])
            }),
        )
    }

    pub fn is_sign_normalized(&self) -> bool {
        self.terms.first().map(|t| t.1.is_positive()).unwrap_or(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(n, i)
    }

    fn c(n: usize, v: i64) -> Polynomial {
        Polynomial::constant(n, BigInt::from(v))
    }

    #[test]
    fn grlex_order() {
        // x^2 > x*y > y^2 > x > y > 1
        let e = |a: u16, b: u16| -> Exponents { SmallVec::from_slice(&[a, b]) };
        assert_eq!(grlex_cmp(&e(2, 0), &e(1, 1)), Ordering::Greater);
        assert_eq!(grlex_cmp(&e(1, 1), &e(0, 2)), Ordering::Greater);
        assert_eq!(grlex_cmp(&e(0, 2), &e(1, 0)), Ordering::Greater);
        assert_eq!(grlex_cmp(&e(1, 0), &e(0, 1)), Ordering::Greater);
    }

    #[test]
    fn ring_ops() {
        let (a, b) = (x(2, 0), x(2, 1));
        let s = a.add(&b);
        let d = a.sub(&b);
        let p = s.mul(&d);
        let expected = a.mul(&a).sub(&b.mul(&b));
        assert_eq!(p, expected);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division() {
        let (a, b) = (x(2, 0), x(2, 1));
        let f = a.add(&b).pow(3).mul(&a.sub(&c(2, 2)));
        let q = f.div_exact(&a.add(&b)).unwrap();
        assert_eq!(q, a.add(&b).pow(2).mul(&a.sub(&c(2, 2))));
        assert!(f.div_exact(&a.add(&c(2, 5))).is_none());
        assert!(c(2, 6).scale(&BigInt::from(1)).div_exact(&c(2, 4)).is_none());
    }

    #[test]
    fn coefficients_and_derivative() {
        let (a, b) = (x(2, 0), x(2, 1));
        let f = a.mul(&a).mul(&b).add(&c(2, 3).mul(&b)).add(&c(2, 7));
        let cs = f.coefficients_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], c(2, 3).mul(&b).add(&c(2, 7)));
        assert!(cs[1].is_zero());
        assert_eq!(cs[2], b);
        assert_eq!(f.derivative(0), c(2, 2).mul(&a).mul(&b));
    }

    #[test]
    fn contents() {
        let (a, b) = (x(2, 0), x(2, 1));
        let f = c(2, 6).mul(&a).mul(&b).add(&c(2, 4).mul(&a).mul(&a).mul(&b));
        assert_eq!(f.content(), BigInt::from(2));
        assert_eq!(f.monomial_content().as_slice(), &[1, 1]);
    }
}
