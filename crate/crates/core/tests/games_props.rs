mod common;

use common::props::games as props;

#[test]
fn classical_matrices_are_exactly_diagonal() {
    props::classical_matrices_are_exactly_diagonal();
}

#[test]
fn trace_form_equals_multilinear_form() {
    props::trace_form_equals_multilinear_form();
}

#[test]
fn phase_is_irrelevant_for_diagonal_payoffs() {
    props::phase_is_irrelevant_for_diagonal_payoffs();
}

#[test]
fn pure_product_payoff_is_an_expectation_value() {
    props::pure_product_payoff_is_an_expectation_value();
}

#[test]
fn quantum_construction_is_hermitian_before_symmetrization() {
    props::quantum_construction_is_hermitian_before_symmetrization();
}

#[test]
fn decomposition_round_trips_in_span() {
    props::decomposition_round_trips_in_span();
}
