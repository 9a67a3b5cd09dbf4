//! Standalone randomized property suites (fixed seeds, ≥ 100 instances).

mod common;

#[test]
fn gf2_rank_kernel_laws() {
    common::gf2_laws(200);
}

#[test]
fn logical_action_is_homomorphism() {
    common::logical_action_homomorphism(120);
}

#[test]
fn group_action_is_consistent() {
    common::group_action_consistency(150);
}

#[test]
fn file_formats_round_trip() {
    common::format_round_trips(120);
}
