use std::collections::HashMap;

use heunblock::algebra::{BigInt, BigRational, ExecPolicy, RationalFunction};
use heunblock::symbols as sym;
use heunblock::virasoro::{
    confluence_chain_check, confluent_block_first_kind, gram_matrix, regular_block, regular_space, typed_block,
    typed_space, ChainLink, FirstKind, Partition,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    let n = rng.gen_range(-40..=40);
    let d = rng.gen_range(1..=13);
    q(n, d)
}

/// `⟨Δ| L_{w_0} L_{w_1} ⋯ |Δ⟩` by commuting positive modes to the right.
struct NormalOrdering {
    c: Q,
    delta: Q,
    memo: HashMap<Vec<i64>, Q>,
}

impl NormalOrdering {
    fn new(c: Q, delta: Q) -> Self {
        NormalOrdering { c, delta, memo: HashMap::new() }
    }

    fn vev(&mut self, w: &[i64]) -> Q {
        if w.is_empty() {
            return Q::one();
        }
        if *w.last().unwrap() > 0 || w[0] < 0 {
            return Q::zero();
        }
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let v = if *w.last().unwrap() == 0 {
            self.vev(&w[..w.len() - 1]) * &self.delta
        } else if w[0] == 0 {
            self.vev(&w[1..]) * &self.delta
        } else {
            let i = (0..w.len() - 1).find(|&i| w[i] > 0 && w[i + 1] <= 0).unwrap();
            let (m, n) = (w[i], w[i + 1]);
            let mut swapped = w.to_vec();
            swapped.swap(i, i + 1);
            let mut v = self.vev(&swapped);
            let mut merged = w[..i].to_vec();
            merged.push(m + n);
            merged.extend_from_slice(&w[i + 2..]);
            v += q(m - n, 1) * self.vev(&merged);
            if m + n == 0 {
                let mut rest = w[..i].to_vec();
                rest.extend_from_slice(&w[i + 2..]);
                v += &self.c * q(m * m * m - m, 12) * self.vev(&rest);
            }
            v
        };
        self.memo.insert(w.to_vec(), v.clone());
        v
    }

    fn gram(&mut self, a: &Partition, b: &Partition) -> Q {
        let mut w: Vec<i64> = a.parts().iter().rev().map(|&k| k as i64).collect();
        w.extend(b.parts().iter().map(|&k| -(k as i64)));
        self.vev(&w)
    }
}

/// Three-point matrix element with the descendant on the side of `inner`:
/// `Π_i (Δσ + Σ_{j>i} λ_j + λ_i Δ_near − Δ_far)`.
fn vertex(p: &Partition, sigma: &Q, near: &Q, far: &Q) -> Q {
    let parts = p.parts();
    let mut v = Q::one();
    for (i, &k) in parts.iter().enumerate() {
        let tail: u32 = parts[i + 1..].iter().sum();
        v *= sigma + q(tail as i64, 1) + q(k as i64, 1) * near - far;
    }
    v
}

fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Vec<Q> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("nonsingular");
        a.swap(col, piv);
        b.swap(col, piv);
        let pivot = a[col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &pivot[col];
                for (x, p) in a[r].iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * p;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    (0..n).map(|i| &b[i] / &a[i][i]).collect()
}

/// Regular block coefficient at level `n` from the oracle Gram matrix.
fn oracle_block(n: u32, p: &[Q; 6]) -> Q {
    let [c, d0, dt, d1, dinf, ds] = p.clone();
    let basis = Partition::of_weight(n);
    let mut no = NormalOrdering::new(c, ds.clone());
    let g: Vec<Vec<Q>> = basis.iter().map(|a| basis.iter().map(|b| no.gram(a, b)).collect()).collect();
    let ket: Vec<Q> = basis.iter().map(|m| vertex(m, &ds, &dt, &d0)).collect();
    let x = solve(g, ket);
    basis.iter().zip(&x).map(|(l, xi)| vertex(l, &ds, &d1, &dinf) * xi).sum()
}

pub fn level_two_gram_matches_display() {
    let s = sym::space(&[sym::C, sym::DELTA0]);
    let (c, d) = (sym::var(&s, sym::C), sym::var(&s, sym::DELTA0));
    let g = gram_matrix(d.clone(), c.clone(), 2);
    let p = |t: &str| RationalFunction::parse(t, &s).unwrap();
    assert_eq!(g[0][0], p("4*Delta0*(2*Delta0+1)"));
    assert_eq!(g[0][1], p("6*Delta0"));
    assert_eq!(g[1][0], p("6*Delta0"));
    assert_eq!(g[1][1], p("4*Delta0+c/2"));
}

pub fn level_three_gram_matches_normal_ordering() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..3 {
        let (c, d) = (random_q(&mut rng), random_q(&mut rng));
        let g = gram_matrix(d.clone(), c.clone(), 3);
        let mut no = NormalOrdering::new(c, d);
        let basis = Partition::of_weight(3);
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                assert_eq!(g[i][j], no.gram(a, b), "{:?} {:?}", a, b);
            }
        }
    }
}

pub fn regular_block_higher_orders_match_oracle() {
    let b = regular_block(4, ExecPolicy::default()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..3 {
        let p: [Q; 6] = std::array::from_fn(|_| random_q(&mut rng));
        for n in 1..=4 {
            let symbolic = b.coefficient(n as i64).eval_rational(&p).unwrap();
            assert_eq!(symbolic, oracle_block(n, &p), "F{}", n);
        }
    }
    assert_eq!(regular_space().len(), 6);
}

pub fn first_kind_blocks_match_published_through_second_order() {
    let p = ExecPolicy::default();
    let cases: [(FirstKind, &str, &str); 4] = [
        (
            FirstKind::Nf3,
            "(Deltasigma-Delta0+Deltat)*Pstar/(2*Deltasigma)",
            "((Deltasigma-Delta0+Deltat)*(Deltasigma-Delta0+Deltat+1)*Pstar^2/(Deltasigma*(1+2*Deltasigma)) \
             + (Delta0+Deltat+(Deltasigma*(Deltasigma-1)-3*(Delta0-Deltat)^2)/(1+2*Deltasigma))*(1+2*Deltasigma-6*Pstar^2) \
             /(16*Deltasigma^2-10*Deltasigma+c*(1+2*Deltasigma)))/4",
        ),
        (
            FirstKind::Nf2,
            "Pstar*Pbigstar/(2*Deltasigma)",
            "(Pbigstar^2*Pstar^2*(c/(4*Deltasigma)+2)-3/4*(Pbigstar^2+Pstar^2)+(1+2*Deltasigma)/8) \
             /(16*Deltasigma^2-10*Deltasigma+c*(1+2*Deltasigma))",
        ),
        (
            FirstKind::Nf1,
            "Pstar/(2*Deltasigma)",
            "(Pstar^2*(c/(4*Deltasigma)+2)-3/4)/(16*Deltasigma^2-10*Deltasigma+c*(1+2*Deltasigma))",
        ),
        (
            FirstKind::Nf0,
            "1/(2*Deltasigma)",
            "(c/(4*Deltasigma)+2)/(16*Deltasigma^2-10*Deltasigma+c*(1+2*Deltasigma))",
        ),
    ];
    for (nf, f1, f2) in cases {
        let s = nf.space();
        let b = confluent_block_first_kind(nf, 2, p).unwrap();
        assert_eq!(b.coefficient(1), RationalFunction::parse(f1, &s).unwrap(), "{:?}", nf);
        assert_eq!(b.coefficient(2), RationalFunction::parse(f2, &s).unwrap(), "{:?}", nf);
    }
}

pub fn first_kind_chain_links_hold_through_third_order() {
    for link in ChainLink::ALL {
        let r = confluence_chain_check(link, 3, ExecPolicy::default()).unwrap();
        assert!(r.passed(), "{:?}", r);
    }
}

const D1: &str = "-4*Pnu^3+6*Pnu^2*Pstar+2*Pnu*(Delta0+Deltat-Pstar^2)-2*Delta0*Pstar";

fn d2(d1: &str) -> String {
    format!(
        "({d1})^2/2 + 2*(Delta0+(Pstar-3*Pnu)*Pnu)*(Deltat-(2*Pstar-3*Pnu)*(Pstar-Pnu)) \
         + (2*(Pstar-2*Pnu)^2+(c-1)/3)*Pnu*(Pstar-Pnu)"
    )
}

fn d3(d1: &str, d2: &str) -> String {
    format!(
        "({d1})*({d2}) - ({d1})^3/3 - (11*Pnu*(Pstar-Pnu)-5/3*Pstar^2+13/6*(Delta0+Deltat))*({d1}) \
         + 11/3*(Deltat-Delta0-2*Pstar*(Pstar-2*Pnu))*((Pstar-Pnu)*Delta0+Pnu*Deltat+Pstar*Pnu*(Pstar-Pnu)) \
         + 2/3*(c-2)*((Pstar-Pnu)*Delta0-Pnu*Deltat) \
         + (66*Pstar^2+17*c-23)*(Pstar-2*Pnu)*(Pstar-Pnu)*Pnu/9"
    )
}

pub fn typed_block_matches_printed_coefficients() {
    let b = typed_block(3, ExecPolicy::default()).unwrap();
    let s = typed_space();
    let p = |t: &str| RationalFunction::parse(t, &s).unwrap();
    let d2 = d2(D1);
    assert_eq!(b.coefficient(1), p(D1));
    assert_eq!(b.coefficient(2), p(&d2));
    assert_eq!(b.coefficient(3), p(&d3(D1, &d2)));
    assert_eq!(b.prefactor_exponent(), p("2*Pnu*(Pstar-Pnu)"));
}
