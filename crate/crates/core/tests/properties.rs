use orthoscope_testkit::suites;

fn run(outcome: suites::Outcome) {
    if let Err(msg) = outcome {
        panic!("{msg}");
    }
}

#[test]
fn residues_sum_to_zero_over_the_projective_line() {
    run(suites::residue_sum_zero(300, 11));
}

#[test]
fn spectrum_residues_match_direct_evaluation() {
    run(suites::residue_oracle_equivalence(200, 12));
}

#[test]
fn residues_match_floating_point_evaluation() {
    run(suites::numeric_residue_crosscheck(200, 13, 1e-9));
}

#[test]
fn hermite_reduction_round_trips() {
    run(suites::hermite_round_trip(300, 14));
}

#[test]
fn dlog_witnesses_are_sound() {
    run(suites::dlog_witness_soundness(100, 15));
}

#[test]
fn dlog_witnesses_are_found_for_products_of_powers() {
    run(suites::dlog_witness_completeness(100, 16));
}

#[test]
fn lie_bracket_is_antisymmetric_and_satisfies_jacobi() {
    run(suites::bracket_algebra(100, 17));
}

#[test]
fn system_derivative_is_a_derivation() {
    run(suites::leibniz(200, 18));
}

#[test]
fn system_dlog_is_a_homomorphism() {
    run(suites::dlog_homomorphism(200, 19));
}

#[test]
fn log_search_status_survives_integer_scaling() {
    run(suites::scaling_invariance(100, 20));
}

#[test]
fn verdicts_survive_affine_coordinate_changes() {
    run(suites::affine_invariance(50, 21));
}

#[test]
fn constructed_fibrations_are_found() {
    run(suites::constructed_no_false_none(100, 22));
}

#[test]
fn lift_verdict_survives_coordinate_changes() {
    run(suites::lift_invariance(50, 23));
}
