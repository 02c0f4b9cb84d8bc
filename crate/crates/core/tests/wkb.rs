mod common;

use common::wkb as checks;

#[test]
fn confluent_period_matches_printed_expansion() {
    checks::confluent_period_matches_printed_expansion();
}

#[test]
fn biconfluent_period_matches_printed_expansion() {
    checks::biconfluent_period_matches_printed_expansion();
}

#[test]
fn leading_higher_contributions() {
    checks::leading_higher_contributions();
}

#[test]
fn confluent_inversion() {
    checks::confluent_inversion();
}

#[test]
fn biconfluent_inversion() {
    checks::biconfluent_inversion();
}

#[test]
fn inversion_kills_quantum_corrections() {
    checks::inversion_kills_quantum_corrections();
}

#[test]
fn catalog_rows_without_rescaling() {
    checks::catalog_rows_without_rescaling();
}
