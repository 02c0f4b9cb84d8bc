//! Multivariate polynomial gcd over the integers by dense modular interpolation.
//!
//! Images are computed modulo 62-bit primes. Inside one prime the last
//! active variable is eliminated by evaluation, the smaller problem is
//! solved recursively, and the images are recombined by Newton
//! interpolation. Every candidate is confirmed by exact trial division,
//! both modulo the prime and finally over the integers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::poly::{Exponents, Polynomial};

// ---------------------------------------------------------------------------
// scalar arithmetic modulo p < 2^62

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0);
    powm(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(256);
        let mut n = (1u64 << 62) - 1;
        while out.len() < 256 {
            if is_prime_u64(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

// ---------------------------------------------------------------------------
// dense univariate polynomials modulo p, coefficients low to high, trimmed

type Up = Vec<u64>;

fn up_trim(mut a: Up) -> Up {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn up_deg(a: &Up) -> usize {
    a.len().saturating_sub(1)
}

fn up_eval(a: &Up, x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in a.iter().rev() {
        acc = addm(mulm(acc, x, p), c, p);
    }
    acc
}

fn up_mul(a: &Up, b: &Up, p: u64) -> Up {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y, p), p);
        }
    }
    up_trim(out)
}

fn up_scale(a: &Up, s: u64, p: u64) -> Up {
    if s == 0 {
        return Vec::new();
    }
    a.iter().map(|&c| mulm(c, s, p)).collect()
}

fn up_add_assign(a: &mut Up, b: &Up, p: u64) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x = addm(*x, y, p);
    }
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Returns (quotient, remainder).
fn up_divrem(a: &Up, b: &Up, p: u64) -> (Up, Up) {
    assert!(!b.is_empty(), "univariate division by zero");
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let mut r = a.clone();
    let db = b.len() - 1;
    let inv = invm(b[db], p);
    let mut q = vec![0u64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = mulm(r[i + db], inv, p);
        q[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = subm(r[i + j], mulm(c, bj, p), p);
            }
        }
    }
    r.truncate(db);
    (up_trim(q), up_trim(r))
}

fn up_monic(a: Up, p: u64) -> Up {
    match a.last() {
        None => a,
        Some(&1) => a,
        Some(&lc) => {
            let inv = invm(lc, p);
            up_scale(&a, inv, p)
        }
    }
}

fn up_gcd(a: &Up, b: &Up, p: u64) -> Up {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![1];
        }
        let (_, r) = up_divrem(&x, &y, p);
        x = y;
        y = r;
    }
    up_monic(x, p)
}

fn up_is_one(a: &Up) -> bool {
    a.len() == 1 && a[0] == 1
}

// ---------------------------------------------------------------------------
// sparse multivariate polynomials modulo p, terms sorted lex descending

#[derive(Clone, Debug, PartialEq)]
struct Mp {
    terms: Vec<(Exponents, u64)>,
}

impl Mp {
    fn from_int(poly: &Polynomial, p: u64) -> Mp {
        let mut terms: Vec<(Exponents, u64)> = poly
            .terms()
            .iter()
            .filter_map(|(e, c)| {
                let r = reduce(c, p);
                (r != 0).then(|| (e.clone(), r))
            })
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Mp { terms }
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0)
    }

    fn lead_exps(&self) -> &Exponents {
        &self.terms[0].0
    }

    fn scale(&mut self, s: u64, p: u64) {
        for t in &mut self.terms {
            t.1 = mulm(t.1, s, p);
        }
    }

    fn make_monic(&mut self, p: u64) {
        let lc = self.terms[0].1;
        if lc != 1 {
            self.scale(invm(lc, p), p);
        }
    }

    fn degree_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|t| t.0[v]).max().unwrap_or(0)
    }
}

/// Groups terms by their exponents in variables `0..k-1`, collecting the
/// coefficients of variable `k-1` into dense univariate polynomials.
type Rp = Vec<(Exponents, Up)>;

fn to_recursive(a: &Mp, k: usize) -> Rp {
    let last = k - 1;
    let mut out: Rp = Vec::new();
    for (e, c) in &a.terms {
        let d = e[last] as usize;
        let mut key = e.clone();
        key[last] = 0;
        match out.last_mut() {
            Some((k0, u)) if *k0 == key => {
                if u.len() <= d {
                    u.resize(d + 1, 0);
                }
                u[d] = *c;
            }
            _ => {
                let mut u = vec![0u64; d + 1];
                u[d] = *c;
                out.push((key, u));
            }
        }
    }
    out
}

fn from_recursive(r: &Rp, k: usize) -> Mp {
    let last = k - 1;
    let mut terms = Vec::new();
    for (key, u) in r {
        for d in (0..u.len()).rev() {
            if u[d] != 0 {
                let mut e = key.clone();
                e[last] = d as u16;
                terms.push((e, u[d]));
            }
        }
    }
    Mp { terms }
}

fn rp_content(r: &Rp, p: u64) -> Up {
    let mut g: Up = Vec::new();
    for (_, u) in r {
        g = if g.is_empty() {
            up_monic(u.clone(), p)
        } else {
            up_gcd(&g, u, p)
        };
        if g.len() == 1 {
            return vec![1];
        }
    }
    g
}

fn rp_div_univariate(r: &mut Rp, c: &Up, p: u64) {
    if up_is_one(c) {
        return;
    }
    for (_, u) in r.iter_mut() {
        let (q, rem) = up_divrem(u, c, p);
        debug_assert!(rem.is_empty());
        *u = q;
    }
}

fn rp_eval(r: &Rp, x: u64, p: u64) -> Mp {
    let terms = r
        .iter()
        .filter_map(|(key, u)| {
            let v = up_eval(u, x, p);
            (v != 0).then(|| (key.clone(), v))
        })
        .collect();
    Mp { terms }
}

/// Exact division modulo p; `None` if `b` does not divide `a`.
fn mp_div_exact(a: &Mp, b: &Mp, p: u64) -> Option<Mp> {
    let nv = a.terms.first().map(|t| t.0.len()).unwrap_or(0);
    for v in 0..nv {
        if b.degree_in(v) > a.degree_in(v) {
            return None;
        }
    }
    let (be, bc) = b.terms[0].clone();
    let binv = invm(bc, p);
    let mut rem: BTreeMap<Exponents, u64> = a.terms.iter().cloned().collect();
    let mut quot = Vec::new();
    while let Some((re, rc)) = rem.pop_last() {
        if re.iter().zip(&be).any(|(x, y)| x < y) {
            return None;
        }
        let qe: Exponents = re.iter().zip(&be).map(|(x, y)| x - y).collect();
        let qc = mulm(rc, binv, p);
        for (te, tc) in &b.terms[1..] {
            let e: Exponents = te.iter().zip(&qe).map(|(x, y)| x + y).collect();
            let delta = mulm(*tc, qc, p);
            match rem.get_mut(&e) {
                Some(v) => {
                    *v = subm(*v, delta, p);
                    if *v == 0 {
                        rem.remove(&e);
                    }
                }
                None => {
                    rem.insert(e, subm(0, delta, p));
                }
            }
        }
        quot.push((qe, qc));
    }
    Some(Mp { terms: quot })
}

struct PointStream {
    state: u64,
}

impl PointStream {
    fn new(seed: u64) -> Self {
        PointStream {
            state: seed ^ 0x9e37_79b9_7f4a_7c15,
        }
    }

    fn next(&mut self, p: u64) -> u64 {
        // splitmix64
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^= z >> 31;
        z % p
    }
}

/// Monic (lex leading coefficient 1) gcd of two nonzero polynomials in
/// the variables `0..k`, all other exponents being zero.
fn gcd_modp(a: &Mp, b: &Mp, k: usize, p: u64) -> Mp {
    let nv = a.terms[0].0.len();
    if k == 0 || a.is_constant() || b.is_constant() {
        return Mp {
            terms: vec![(SmallVec::from_elem(0, nv), 1)],
        };
    }
    if k == 1 {
        let ua = to_recursive(a, 1).pop().unwrap().1;
        let ub = to_recursive(b, 1).pop().unwrap().1;
        let g = up_gcd(&ua, &ub, p);
        return from_recursive(&vec![(SmallVec::from_elem(0, nv), g)], 1);
    }
    let last = k - 1;
    let mut ra = to_recursive(a, k);
    let mut rb = to_recursive(b, k);
    let ca = rp_content(&ra, p);
    let cb = rp_content(&rb, p);
    let cont = up_gcd(&ca, &cb, p);
    rp_div_univariate(&mut ra, &ca, p);
    rp_div_univariate(&mut rb, &cb, p);
    let zero_key: Exponents = SmallVec::from_elem(0, nv);
    let cont_mp = |extra: Option<&Rp>| -> Mp {
        match extra {
            None => from_recursive(&vec![(zero_key.clone(), cont.clone())], k),
            Some(h) => {
                let r: Rp = h
                    .iter()
                    .map(|(key, u)| (key.clone(), up_mul(u, &cont, p)))
                    .collect();
                from_recursive(&r, k)
            }
        }
    };
    // Variables 0..k-1 absent from one side: the gcd is the univariate content.
    if ra.len() == 1 && ra[0].0.iter().all(|&e| e == 0)
        || rb.len() == 1 && rb[0].0.iter().all(|&e| e == 0)
    {
        let mut out = cont_mp(None);
        out.make_monic(p);
        return out;
    }
    let lca = ra[0].1.clone();
    let lcb = rb[0].1.clone();
    let g = up_gcd(&lca, &lcb, p);
    let deg_a = ra.iter().map(|(_, u)| up_deg(u)).max().unwrap_or(0);
    let deg_b = rb.iter().map(|(_, u)| up_deg(u)).max().unwrap_or(0);
    let bound = up_deg(&g) + deg_a.min(deg_b);
    let pa = from_recursive(&ra, k);
    let pb = from_recursive(&rb, k);

    let mut points = PointStream::new(p ^ ((k as u64) << 40) ^ (a.terms.len() as u64));
    let mut interp: Option<(Rp, Exponents)> = None;
    let mut modulus: Up = vec![1];
    let mut npts = 0usize;
    loop {
        let alpha = points.next(p);
        let ga = up_eval(&g, alpha, p);
        if ga == 0 || up_eval(&lca, alpha, p) == 0 || up_eval(&lcb, alpha, p) == 0 {
            continue;
        }
        let aa = rp_eval(&ra, alpha, p);
        let ba = rp_eval(&rb, alpha, p);
        let mut img = gcd_modp(&aa, &ba, last, p);
        if img.is_constant() {
            let mut out = cont_mp(None);
            out.make_monic(p);
            return out;
        }
        let lm = img.lead_exps().clone();
        if let Some((_, cur)) = &interp {
            match lm.cmp(cur) {
                Ordering::Greater => continue,
                Ordering::Less => {
                    interp = None;
                    modulus = vec![1];
                    npts = 0;
                }
                Ordering::Equal => {}
            }
        }
        img.scale(ga, p);
        let changed = match &mut interp {
            None => {
                let h: Rp = img
                    .terms
                    .iter()
                    .map(|(e, c)| (e.clone(), vec![*c]))
                    .collect();
                interp = Some((h, lm));
                true
            }
            Some((h, _)) => newton_update(h, &img, &modulus, alpha, p),
        };
        modulus = up_mul(&modulus, &vec![subm(0, alpha, p), 1], p);
        npts += 1;
        if npts > bound || (!changed && npts > 1) {
            let (h, _) = interp.as_ref().unwrap();
            let mut cand = h.clone();
            let hc = rp_content(&cand, p);
            rp_div_univariate(&mut cand, &hc, p);
            let cand_mp = from_recursive(&cand, k);
            if mp_div_exact(&pa, &cand_mp, p).is_some() && mp_div_exact(&pb, &cand_mp, p).is_some()
            {
                let mut out = cont_mp(Some(&cand));
                out.make_monic(p);
                return out;
            }
            if npts > bound {
                interp = None;
                modulus = vec![1];
                npts = 0;
            }
        }
    }
}

/// Updates the interpolant `h` (known modulo `modulus`) so that it also
/// matches `img` at `alpha`. Returns whether anything changed.
fn newton_update(h: &mut Rp, img: &Mp, modulus: &Up, alpha: u64, p: u64) -> bool {
    let qinv = invm(up_eval(modulus, alpha, p), p);
    let mut out: Rp = Vec::with_capacity(h.len().max(img.terms.len()));
    let mut changed = false;
    let old = std::mem::take(h);
    let mut j = 0;
    let fix = |u: &mut Up, target: u64, changed: &mut bool| {
        let cur = up_eval(u, alpha, p);
        let d = mulm(subm(target, cur, p), qinv, p);
        if d != 0 {
            *changed = true;
            let corr = up_scale(modulus, d, p);
            up_add_assign(u, &corr, p);
        }
    };
    let mut old_iter = old.into_iter().peekable();
    while old_iter.peek().is_some() || j < img.terms.len() {
        let ord = match (old_iter.peek(), img.terms.get(j)) {
            (Some((ke, _)), Some((ie, _))) => ke.cmp(ie),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Greater => {
                let (key, mut u) = old_iter.next().unwrap();
                fix(&mut u, 0, &mut changed);
                if !u.is_empty() {
                    out.push((key, u));
                }
            }
            Ordering::Less => {
                let (ie, ic) = &img.terms[j];
                let mut u = Vec::new();
                fix(&mut u, *ic, &mut changed);
                out.push((ie.clone(), u));
                j += 1;
            }
            Ordering::Equal => {
                let (key, mut u) = old_iter.next().unwrap();
                fix(&mut u, img.terms[j].1, &mut changed);
                if !u.is_empty() {
                    out.push((key, u));
                }
                j += 1;
            }
        }
    }
    *h = out;
    changed
}

// ---------------------------------------------------------------------------
// integer level

fn symmetric(c: BigInt, m: &BigInt, half: &BigInt) -> BigInt {
    if &c > half {
        c - m
    } else {
        c
    }
}

/// Greatest common divisor over the integers, normalized to have a
/// positive leading coefficient (graded lexicographic order).
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let n = a.nvars();
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let ic = a.content().gcd(&b.content());
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono: Exponents = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
    let unit = |c: &BigInt| Polynomial::monomial(mono.clone(), c.clone());
    if a.is_constant() || b.is_constant() || a.len() == 1 || b.len() == 1 {
        return unit(&ic);
    }
    let pa = a.div_scalar_exact(&a.content()).div_monomial(&ma);
    let pb = b.div_scalar_exact(&b.content()).div_monomial(&mb);
    if pa.is_constant() || pb.is_constant() {
        return unit(&ic);
    }
    let core = primitive_gcd(&pa, &pb, n);
    normalize_sign(core).mul(&unit(&ic))
}

fn normalize_sign(p: Polynomial) -> Polynomial {
    if p.is_sign_normalized() {
        p
    } else {
        p.neg()
    }
}

/// Gcd of two integer-primitive polynomials without monomial factors.
fn primitive_gcd(a: &Polynomial, b: &Polynomial, n: usize) -> Polynomial {
    if a == b {
        return a.clone();
    }
    if a.len() <= b.len() {
        if b.div_exact(a).is_some() {
            return a.clone();
        }
    } else if a.div_exact(b).is_some() {
        return b.clone();
    }
    // Compress to the variables that actually occur.
    let used: Vec<usize> = (0..n)
        .filter(|&v| a.depends_on(v) || b.depends_on(v))
        .collect();
    let k = used.len();
    let mut fwd = vec![0usize; n];
    for (i, &v) in used.iter().enumerate() {
        fwd[v] = i;
    }
    let ca = a.remap(k, &fwd);
    let cb = b.remap(k, &fwd);
    let g = primitive_gcd_compact(&ca, &cb, k);
    g.remap(n, &used)
}

fn primitive_gcd_compact(a: &Polynomial, b: &Polynomial, k: usize) -> Polynomial {
    let lca = a.lex_leading().unwrap().1.clone();
    let lcb = b.lex_leading().unwrap().1.clone();
    let gamma = lca.gcd(&lcb);
    let one = Polynomial::one(k);

    let mut acc: Option<(BTreeMap<Exponents, BigInt>, BigInt, Exponents)> = None;
    for &p in primes() {
        let pbig = BigInt::from(p);
        if (&lca % &pbig).is_zero() || (&lcb % &pbig).is_zero() {
            continue;
        }
        let ap = Mp::from_int(a, p);
        let bp = Mp::from_int(b, p);
        let mut img = gcd_modp(&ap, &bp, k, p);
        if img.is_constant() {
            return one;
        }
        img.scale(reduce(&gamma, p), p);
        let lm = img.lead_exps().clone();
        let (restart, skip) = match &acc {
            None => (true, false),
            Some((_, _, cur)) => match lm.cmp(cur) {
                Ordering::Greater => (false, true),
                Ordering::Less => (true, false),
                Ordering::Equal => (false, false),
            },
        };
        if skip {
            continue;
        }
        let mut unchanged = false;
        if restart {
            let m: BTreeMap<Exponents, BigInt> = img
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), BigInt::from(*c)))
                .collect();
            let half = &pbig >> 1;
            let m = m
                .into_iter()
                .map(|(e, c)| (e, symmetric(c, &pbig, &half)))
                .collect();
            acc = Some((m, pbig.clone(), lm));
        } else {
            let (m, modulus, _) = acc.as_mut().unwrap();
            let minv = BigInt::from(invm(reduce(modulus, p), p));
            let new_mod = &*modulus * &pbig;
            let half = &new_mod >> 1;
            let img_map: BTreeMap<Exponents, u64> = img.terms.iter().cloned().collect();
            let mut keys: Vec<Exponents> = m.keys().cloned().collect();
            for e in img_map.keys() {
                if !m.contains_key(e) {
                    keys.push(e.clone());
                }
            }
            unchanged = true;
            let mut next = BTreeMap::new();
            for e in keys {
                let old = m.get(&e).cloned().unwrap_or_else(BigInt::zero);
                let target = BigInt::from(img_map.get(&e).copied().unwrap_or(0));
                let diff = (&target - &old).mod_floor(&pbig);
                let t = (diff * &minv).mod_floor(&pbig);
                if !t.is_zero() {
                    unchanged = false;
                }
                let val = symmetric((&old + &*modulus * t).mod_floor(&new_mod), &new_mod, &half);
                if !val.is_zero() {
                    next.insert(e, val);
                }
            }
            *m = next;
            *modulus = new_mod;
        }
        let (m, modulus, _) = acc.as_ref().unwrap();
        let small = {
            let bits = modulus.bits();
            m.values().all(|c| c.bits() + 24 < bits)
        };
        if unchanged || small {
            let cand = Polynomial::from_terms(k, m.iter().map(|(e, c)| (e.clone(), c.clone())));
            let cont = cand.content();
            let mut cand = cand.div_scalar_exact(&cont);
            if cand.leading_coefficient().sign() == Sign::Minus {
                cand = cand.neg();
            }
            if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return cand;
            }
        }
    }
    panic!("modular gcd exhausted its prime table");
}

/// Cofactor-free gcd of many polynomials.
pub fn gcd_many<'a, I>(nvars: usize, polys: I) -> Polynomial
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    let mut g = Polynomial::zero(nvars);
    for p in polys {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}
