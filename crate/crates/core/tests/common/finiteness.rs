use heunblock::algebra::ExecPolicy;
use heunblock::correspondence::classical_block;
use heunblock::virasoro::BlockKind;

/// `b² log` of each block has a finite `b → 0` limit at every order checked:
/// no coefficient keeps a pole stronger than `b^{-2}`.
fn assert_finite(kind: BlockKind, order: u32) {
    let w = classical_block(kind, order, ExecPolicy::default())
        .unwrap_or_else(|e| panic!("{:?} order {}: {}", kind, order, e));
    assert_eq!(w.order_steps(), order as i64, "{:?}", kind);
}

pub fn regular_block_through_order_four() {
    assert_finite(BlockKind::Regular, 4);
}

pub fn first_kind_blocks_through_order_four() {
    for kind in [BlockKind::Nf3, BlockKind::Nf2, BlockKind::Nf1, BlockKind::Nf0] {
        assert_finite(kind, 4);
    }
}

pub fn second_kind_type_d_through_order_three() {
    assert_finite(BlockKind::TypeD, 3);
}

pub fn second_kind_type_g_through_order_four() {
    assert_finite(BlockKind::TypeG, 4);
}
