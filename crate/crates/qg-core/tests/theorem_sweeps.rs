//! Moderate-bound deterministic sweeps over every structure theorem.
//!
//! The acceptance suite in the CLI crate re-runs these at the published
//! bounds; these runs keep the core crate self-verifying at a fraction of
//! the cost.

use qg_core::linear::{
    cheban_schroeder_check, class_pair_survey, pair_rule, verify_classification, PairRule,
};
use qg_core::parastrophe::{verify_equality_cases, verify_preservation, verify_shift_tables};
use qg_core::qq::verify_round_trip;
use qg_core::search::oracle_vs_closed_form;

#[test]
fn classification_is_sound_at_moderate_bound() {
    let report = verify_classification(51).unwrap();
    assert!(report.pairs_checked > 0);
    assert!(report.class_counts.iter().all(|c| c.instances > 0));
}

#[test]
fn pair_survey_matches_the_rule_catalogue_at_moderate_bound() {
    for entry in class_pair_survey(200) {
        match pair_rule(entry.first, entry.second) {
            Some(PairRule::Empty) => assert!(
                entry.witnesses.is_empty(),
                "({}, {}) should be empty, found {:?}",
                entry.first,
                entry.second,
                entry.witnesses
            ),
            Some(PairRule::Unique { n, a }) => assert_eq!(
                entry.witnesses,
                vec![(n, a)],
                "({}, {}) should have a unique witness",
                entry.first,
                entry.second
            ),
            // Co-occurring pairs (left modular with Stein) are unconstrained.
            None => {}
        }
    }
}

#[test]
fn cheban_and_schroeder_never_occur_at_moderate_bound() {
    let report = cheban_schroeder_check(75).unwrap();
    assert!(report.instances_scanned > 0);
}

#[test]
fn parastrophe_shift_tables_are_exact_at_moderate_bound() {
    let report = verify_shift_tables(75).unwrap();
    assert!(report.parastrophes_checked > 0);
}

#[test]
fn parastrophe_preservation_grid_is_exact_at_moderate_bound() {
    let report = verify_preservation(101).unwrap();
    assert_eq!(report.cells_checked, 40);
}

#[test]
fn equality_cases_are_exact_at_moderate_bound() {
    let report = verify_equality_cases(31).unwrap();
    assert!(report.instances_checked > 0);
}

#[test]
fn qq_round_trip_is_exact_at_moderate_bound() {
    let report = verify_round_trip(31, 17).unwrap();
    assert_eq!(report.structures_checked, 10);
}

#[test]
fn enumeration_oracle_agrees_at_moderate_bound() {
    let report = oracle_vs_closed_form(8).unwrap();
    assert_eq!(report.shift_one_survivors, 0);
}
