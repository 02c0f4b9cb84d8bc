use std::collections::HashMap;

use heunblock_algebra::Ring;

use super::partition::Partition;
use super::verma::VermaModule;

/// The three dimensions and central charge of a primary vertex operator
/// `V(1): V_{Δ_in} → V_{Δ_out}` of dimension `Δ_vertex`.
#[derive(Clone, Debug)]
pub struct VertexDims<C: Ring> {
    pub out_dim: C,
    pub vertex_dim: C,
    pub in_dim: C,
    pub central_charge: C,
}

/// Matrix elements `⟨Δ_out, λ| V(1) |Δ_in, μ⟩`, normalized by
/// `⟨Δ_out|V(1)|Δ_in⟩ = 1`.
pub struct VertexOverlaps<C: Ring> {
    dims: VertexDims<C>,
    out_module: VermaModule<C>,
    in_module: VermaModule<C>,
    memo: HashMap<(Partition, Partition), C>,
}

impl<C: Ring> VertexOverlaps<C> {
    pub fn new(dims: VertexDims<C>) -> Self {
        let out_module = VermaModule::new(dims.out_dim.clone(), dims.central_charge.clone());
        let in_module = VermaModule::new(dims.in_dim.clone(), dims.central_charge.clone());
        VertexOverlaps {
            dims,
            out_module,
            in_module,
            memo: HashMap::new(),
        }
    }

    /// Exponent of `t` in `⟨Δ_out,λ|V(t)|Δ_in,μ⟩`.
    fn t_degree(&self, bra_level: u32, ket_level: u32) -> C {
        let d = &self.dims;
        d.out_dim
            .sub(&d.vertex_dim)
            .sub(&d.in_dim)
            .add(&C::from_i64(bra_level as i64 - ket_level as i64))
    }

    /// Removes the largest bra part first, moving it through the vertex.
    pub fn bra_first(&mut self, bra: &Partition, ket: &Partition) -> C {
        if let Some(v) = self.memo.get(&(bra.clone(), ket.clone())) {
            return v.clone();
        }
        let v = match bra.first() {
            None => self.ket_closed_form(ket),
            Some(n) => {
                // ⟨λ'| L_n V |μ⟩ = ⟨λ'| V L_n |μ⟩ + (deg + (n+1)Δ_vertex) ⟨λ'|V|μ⟩
                let rest = bra.rest();
                let mut acc = C::zero();
                for (q, a) in self.in_module.apply_basis(n as i64, ket) {
                    acc = acc.add(&a.mul(&self.bra_first(&rest, &q)));
                }
                let k = self
                    .t_degree(rest.weight(), ket.weight())
                    .add(&self.dims.vertex_dim.mul(&C::from_i64(n as i64 + 1)));
                acc.add(&k.mul(&self.bra_first(&rest, ket)))
            }
        };
        self.memo.insert((bra.clone(), ket.clone()), v.clone());
        v
    }

    /// Removes the largest ket part first; the bra side is updated through
    /// the action of `L_m` on the outgoing module.
    pub fn ket_first(&mut self, bra: &Partition, ket: &Partition) -> C {
        match ket.first() {
            None => self.bra_closed_form(bra),
            Some(m) => {
                // ⟨λ| V L_{-m} |μ'⟩ = ⟨λ| L_{-m} V |μ'⟩ - (deg + (1-m)Δ_vertex) ⟨λ|V|μ'⟩
                let rest = ket.rest();
                let mut acc = C::zero();
                for (q, a) in self.out_module.apply_basis(m as i64, bra) {
                    acc = acc.add(&a.mul(&self.ket_first(&q, &rest)));
                }
                let k = self
                    .t_degree(bra.weight(), rest.weight())
                    .add(&self.dims.vertex_dim.mul(&C::from_i64(1 - m as i64)));
                acc.sub(&k.mul(&self.ket_first(bra, &rest)))
            }
        }
    }

    /// `⟨Δ_out| V(1) L_{-μ} |Δ_in⟩ = Π_i (Δ_in + Σ_{j>i} μ_j + μ_i Δ_vertex − Δ_out)`.
    pub fn ket_closed_form(&self, ket: &Partition) -> C {
        closed_form(&self.dims.in_dim, &self.dims.vertex_dim, &self.dims.out_dim, ket)
    }

    /// `⟨Δ_out| L_λ V(1) |Δ_in⟩`, the mirror image of the ket form.
    pub fn bra_closed_form(&self, bra: &Partition) -> C {
        closed_form(&self.dims.out_dim, &self.dims.vertex_dim, &self.dims.in_dim, bra)
    }
}

pub(crate) fn closed_form<C: Ring>(near: &C, vertex: &C, far: &C, p: &Partition) -> C {
    let parts = p.parts();
    let mut acc = C::one();
    let mut tail = 0i64;
    for &part in parts.iter().rev() {
        let f = near
            .add(&C::from_i64(tail))
            .add(&vertex.mul(&C::from_i64(part as i64)))
            .sub(far);
        acc = acc.mul(&f);
        tail += part as i64;
    }
    acc
}

/// `⟨Δ₃, λ| V_{Δ₂}(1) |Δ₁, μ⟩` for a vertex of dimension `Δ₂` at central charge `c`.
pub fn vertex_overlap<C: Ring>(
    bra: &Partition,
    out_dim: C,
    vertex_dim: C,
    ket: &Partition,
    in_dim: C,
    c: C,
) -> C {
    VertexOverlaps::new(VertexDims {
        out_dim,
        vertex_dim,
        in_dim,
        central_charge: c,
    })
    .bra_first(bra, ket)
}

/// Pairing of a rank-one Whittaker vector with eigenvalues `(λ₁, λ₂)` and
/// the descendant labelled by `p`.
pub fn whittaker_overlap_rank1<C: Ring>(p: &Partition, eigenvalues: (&C, &C)) -> C {
    let mut acc = C::one();
    for &part in p.parts() {
        match part {
            1 => acc = acc.mul(eigenvalues.0),
            2 => acc = acc.mul(eigenvalues.1),
            _ => return C::zero(),
        }
    }
    acc
}
