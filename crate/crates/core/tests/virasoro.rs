mod common;

use common::virasoro as checks;

#[test]
fn level_two_gram_matches_display() {
    checks::level_two_gram_matches_display();
}

#[test]
fn level_three_gram_matches_normal_ordering() {
    checks::level_three_gram_matches_normal_ordering();
}

#[test]
fn first_kind_blocks_match_published_through_second_order() {
    checks::first_kind_blocks_match_published_through_second_order();
}

#[test]
fn first_kind_chain_links_hold_through_third_order() {
    checks::first_kind_chain_links_hold_through_third_order();
}
