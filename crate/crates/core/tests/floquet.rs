mod common;

use common::floquet as checks;

#[test]
fn hvi_first_two_q_coefficients() {
    checks::hvi_first_two_q_coefficients();
}

#[test]
fn hv_q_series_and_characteristic() {
    checks::hv_q_series_and_characteristic();
}

#[test]
fn third_kind_expansions_match_published() {
    checks::third_kind_expansions_match_published();
}

#[test]
fn confluence_links_hold_through_third_order() {
    checks::confluence_links_hold_through_third_order();
}

#[test]
fn deeper_ladders_do_not_change_coefficients() {
    checks::deeper_ladders_do_not_change_coefficients();
}

#[test]
fn third_kind_has_no_canonical_dictionary() {
    checks::third_kind_has_no_canonical_dictionary();
}
