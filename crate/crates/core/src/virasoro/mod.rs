//! Verma modules, vertex and Whittaker overlaps, and the block expansions
//! assembled from them.

mod blocks;
pub mod linalg;
mod overlap;
mod partition;
mod verma;

pub use blocks::{
    block, confluence_chain_check, confluent_block_first_kind, first_kind_coefficients, first_kind_dims,
    regular_block, regular_coefficients, regular_space, typed_block, typed_space, typeg_block,
    typeg_published, typeg_space, BlockKind, BlockSeries, ChainLink, ExponentialFactor, FirstKind,
    FirstKindDims, RegularDims,
};
pub(crate) use blocks::termwise_limit;
pub use overlap::{vertex_overlap, whittaker_overlap_rank1, VertexDims, VertexOverlaps};
pub use partition::Partition;
pub use verma::{gram_matrix, verma_apply, VermaModule, VermaState};
