use std::collections::{BTreeMap, HashMap};

use heunblock_algebra::Ring;

use super::partition::Partition;

/// A vector in the Verma module of highest weight `Δ`, in the ordered
/// descendant basis.
#[derive(Clone, PartialEq, Debug)]
pub struct VermaState<C: Ring> {
    highest_weight: C,
    central_charge: C,
    terms: BTreeMap<Partition, C>,
}

impl<C: Ring> VermaState<C> {
    pub fn highest_weight_vector(delta: C, c: C) -> Self {
        Self::basis(delta, c, Partition::empty())
    }

    /// The basis vector `L_{-λ}|Δ⟩`.
    pub fn basis(delta: C, c: C, p: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, C::one());
        VermaState {
            highest_weight: delta,
            central_charge: c,
            terms,
        }
    }

    pub fn highest_weight(&self) -> &C {
        &self.highest_weight
    }

    pub fn central_charge(&self) -> &C {
        &self.central_charge
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Partition) -> C {
        self.terms.get(p).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common level of all terms, if there is one.
    pub fn level(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Partition::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.is_empty() || self.level().is_some()
    }
}

/// `L_n` applied to `s`, expanded in the ordered descendant basis.
pub fn verma_apply<C: Ring>(n: i64, s: &VermaState<C>) -> VermaState<C> {
    let mut module = VermaModule::new(s.highest_weight.clone(), s.central_charge.clone());
    module.apply_state(n, s)
}

/// Memoized action of Virasoro generators on one Verma module.
pub struct VermaModule<C: Ring> {
    delta: C,
    c: C,
    memo: HashMap<(i64, Partition), Vec<(Partition, C)>>,
}

impl<C: Ring> VermaModule<C> {
    pub fn new(delta: C, c: C) -> Self {
        VermaModule {
            delta,
            c,
            memo: HashMap::new(),
        }
    }

    pub fn delta(&self) -> &C {
        &self.delta
    }

    pub fn central_charge(&self) -> &C {
        &self.c
    }

    pub fn apply_state(&mut self, n: i64, s: &VermaState<C>) -> VermaState<C> {
        let mut acc = BTreeMap::new();
        for (p, a) in &s.terms {
            for (q, b) in self.apply_basis(n, p) {
                accumulate(&mut acc, q, a.mul(&b));
            }
        }
        VermaState {
            highest_weight: self.delta.clone(),
            central_charge: self.c.clone(),
            terms: acc,
        }
    }

    /// `L_n L_{-λ}|Δ⟩` as (partition, coefficient) pairs.
    pub fn apply_basis(&mut self, n: i64, p: &Partition) -> Vec<(Partition, C)> {
        if let Some(v) = self.memo.get(&(n, p.clone())) {
            return v.clone();
        }
        let v = self.compute(n, p);
        self.memo.insert((n, p.clone()), v.clone());
        v
    }

    fn compute(&mut self, n: i64, p: &Partition) -> Vec<(Partition, C)> {
        if n == 0 {
            let e = self.delta.add(&C::from_i64(p.weight() as i64));
            return vec![(p.clone(), e)];
        }
        let first = match p.first() {
            None if n > 0 => return Vec::new(),
            None => return vec![(Partition::new(vec![(-n) as u32]), C::one())],
            Some(f) => f as i64,
        };
        let rest = p.rest();
        let mut acc = BTreeMap::new();
        if n < 0 {
            let m = -n;
            if m >= first {
                return vec![(p.prepend(m as u32), C::one())];
            }
            // L_{-m} L_{-f} X = L_{-f} L_{-m} X + (f - m) L_{-(m+f)} X
            for (q, a) in self.apply_basis(n, &rest) {
                for (r, b) in self.apply_basis(-first, &q) {
                    accumulate(&mut acc, r, a.mul(&b));
                }
            }
            let k = C::from_i64(first - m);
            for (r, b) in self.apply_basis(-(m + first), &rest) {
                accumulate(&mut acc, r, k.mul(&b));
            }
        } else {
            // L_n L_{-f} X = L_{-f} L_n X + (n + f) L_{n-f} X + δ_{n,f} c/12 (n³ - n) X
            for (q, a) in self.apply_basis(n, &rest) {
                for (r, b) in self.apply_basis(-first, &q) {
                    accumulate(&mut acc, r, a.mul(&b));
                }
            }
            let k = C::from_i64(n + first);
            for (r, b) in self.apply_basis(n - first, &rest) {
                accumulate(&mut acc, r, k.mul(&b));
            }
            if n == first {
                let central = self.c.mul(&C::from_i64(n * n * n - n)).mul(&inv12::<C>());
                accumulate(&mut acc, rest, central);
            }
        }
        acc.into_iter().collect()
    }

    /// `⟨Δ| L_{λk} ⋯ L_{λ1} L_{-μ} |Δ⟩`.
    pub fn pairing(&mut self, lambda: &Partition, mu: &Partition) -> C {
        if lambda.weight() != mu.weight() {
            return C::zero();
        }
        let mut state = VermaState::basis(self.delta.clone(), self.c.clone(), mu.clone());
        for &part in lambda.parts() {
            state = self.apply_state(part as i64, &state);
            if state.is_zero() {
                return C::zero();
            }
        }
        state.coefficient(&Partition::empty())
    }

    /// Matrix of pairings between all partitions of `level`, rows and
    /// columns in the order of [`Partition::of_weight`].
    pub fn gram_matrix(&mut self, level: u32) -> Vec<Vec<C>> {
        let basis = Partition::of_weight(level);
        basis
            .iter()
            .map(|l| basis.iter().map(|m| self.pairing(l, m)).collect())
            .collect()
    }
}

fn inv12<C: Ring>() -> C {
    C::from_i64(12).try_inv().expect("12 is invertible")
}

fn accumulate<C: Ring>(acc: &mut BTreeMap<Partition, C>, p: Partition, v: C) {
    if v.is_zero() {
        return;
    }
    match acc.get_mut(&p) {
        Some(x) => {
            let s = x.add(&v);
            if s.is_zero() {
                acc.remove(&p);
            } else {
                *x = s;
            }
        }
        None => {
            acc.insert(p, v);
        }
    }
}

/// Gram matrix of the level-`level` descendants of `|Δ⟩` at central charge `c`.
pub fn gram_matrix<C: Ring>(delta: C, c: C, level: u32) -> Vec<Vec<C>> {
    VermaModule::new(delta, c).gram_matrix(level)
}
