mod common;

use common::props::lina as props;

#[test]
fn kron_trace_is_multiplicative() {
    props::kron_trace_is_multiplicative();
}

#[test]
fn partial_trace_matches_index_sum() {
    props::partial_trace_matches_index_sum();
}

#[test]
fn partial_trace_is_linear() {
    props::partial_trace_is_linear();
}

#[test]
fn partial_trace_of_product_recovers_factor() {
    props::partial_trace_of_product_recovers_factor();
}

#[test]
fn eig_reconstructs_and_is_orthonormal() {
    props::eig_reconstructs_and_is_orthonormal();
}

#[test]
fn gibbs_commutes_and_is_a_density() {
    props::gibbs_commutes_and_is_a_density();
}

#[test]
fn gibbs_survives_large_beta() {
    props::gibbs_survives_large_beta();
}

#[test]
fn op_inner_is_positive_definite() {
    props::op_inner_is_positive_definite();
}

#[test]
fn op_inner_is_conjugate_symmetric() {
    props::op_inner_is_conjugate_symmetric();
}
