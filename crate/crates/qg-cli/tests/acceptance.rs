//! Acceptance gate: one test per criterion, each printing a pass line with
//! its runtime and asserting a hard budget. All comparisons are exact —
//! the arithmetic is integer arithmetic, so there are no tolerances.

use std::time::{Duration, Instant};

use qg_cli::run_catalogue;
use qg_core::identity::{check_identity, quadratical_criteria, IdentityId};
use qg_core::linear::{
    build, class_pair_survey, cheban_schroeder_check, dual_pair_witnesses, pair_rule,
    quadratical_orders, solve_from_k, valid_coefficients, verify_classification, PairRule, QClass,
};
use qg_core::parastrophe::{
    equality_case, parastrophe_coeffs, parastrophe_table, preservation_rule,
    preservation_witnesses, verify_equality_cases, verify_preservation, verify_shift_tables,
    EqualityCase, ParastropheKind, PreservationRule,
};
use qg_core::qq::{verify_round_trip, verify_translation_structures};
use qg_core::search::{are_isomorphic, enumerate, oracle_vs_closed_form};
use qg_core::table::CayleyTable;
use qg_core::zn::{gcd, md};

fn finish(index: u32, slug: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!(
        "acceptance {index:02} {slug}: pass ({:.2}s)",
        elapsed.as_secs_f64()
    );
    assert!(
        elapsed < budget,
        "acceptance {index:02} {slug}: runtime {elapsed:?} exceeds budget {budget:?}"
    );
}

/// Criterion 1 — every named catalogue instance matches its pinned classes,
/// shift constants, commutativity and quasigroup-ness exactly.
#[test]
fn acceptance_01_named_instance_catalogue() {
    let start = Instant::now();
    let verdicts = run_catalogue();
    assert_eq!(verdicts.len(), 11);
    for verdict in &verdicts {
        assert!(
            verdict.pass,
            "{} ({}): {:?}",
            verdict.slug, verdict.formula, verdict.failures
        );
    }
    finish(1, "named-instance-catalogue", start, Duration::from_secs(1));
}

/// Criterion 2 — brute-force enumeration equals the closed form for every
/// n ≤ 9 and k, and the survivors of each (n, k) cell are pairwise
/// isomorphic.
#[test]
fn acceptance_02_enumeration_matches_closed_form() {
    let start = Instant::now();
    let report = oracle_vs_closed_form(9).expect("oracle and closed form agree");
    assert_eq!(report.max_n, 9);
    assert_eq!(report.pairs_checked, 36);
    assert_eq!(report.survivors, 12);
    assert_eq!(report.shift_one_survivors, 0);
    for n in 2..=9usize {
        for k in 1..n {
            let result = enumerate(n, k);
            let expected = usize::from(
                solve_from_k(n as i64, k as i64).is_some() && gcd(k as i64, n as i64) == 1,
            );
            assert_eq!(result.tables.len(), expected, "cell (n, k) = ({n}, {k})");
            for i in 0..result.tables.len() {
                for j in i + 1..result.tables.len() {
                    assert!(
                        are_isomorphic(&result.tables[i], &result.tables[j])
                            .expect("order within bound")
                            .is_some(),
                        "survivors of (n, k) = ({n}, {k}) are not isomorphic"
                    );
                }
            }
        }
    }
    finish(
        2,
        "enumeration-matches-closed-form",
        start,
        Duration::from_secs(30),
    );
}

/// Criterion 3 — no idempotent k-translatable quasigroup of any even order
/// up to 8, for any shift constant.
#[test]
fn acceptance_03_even_order_emptiness() {
    let start = Instant::now();
    for n in [2usize, 4, 6, 8] {
        for k in 1..n {
            let result = enumerate(n, k);
            assert!(
                result.tables.is_empty(),
                "unexpected survivor at even (n, k) = ({n}, {k})"
            );
        }
    }
    finish(3, "even-order-emptiness", start, Duration::from_secs(5));
}

/// Criterion 4 — for all odd n ≤ 101 the polynomial class criteria agree
/// with table-level identity checks, and each class shift formula agrees
/// with the generic solver.
#[test]
fn acceptance_04_classification_soundness() {
    let start = Instant::now();
    let report = verify_classification(101).expect("criteria match identities");
    assert_eq!(report.max_n, 101);
    assert!(report.pairs_checked > 0);
    for count in &report.class_counts {
        assert!(
            count.instances > 0,
            "class {} never occurs up to 101",
            count.class
        );
    }
    finish(
        4,
        "classification-soundness",
        start,
        Duration::from_secs(120),
    );
}

/// Criterion 5 — the four quadratical characterisations agree pairwise on
/// every generated instance with n ≤ 31, and every quadratical instance
/// satisfies k² ≡ −1 (mod n).
#[test]
fn acceptance_05_quadratical_criteria_agreement() {
    let start = Instant::now();
    let mut instances = 0u32;
    let mut quadratical = 0u32;
    for n in (3..=31i64).step_by(2) {
        for k in 1..n {
            let Some((a, b)) = solve_from_k(n, k) else {
                continue;
            };
            if gcd(k, n) != 1 {
                continue; // idempotent and translatable, but not a quasigroup
            }
            let t = build(n, a, b);
            assert!(t.is_quasigroup());
            let criteria = quadratical_criteria(&t, k as usize).expect("shift premise holds");
            assert!(
                criteria.unanimous(),
                "criteria disagree at (n, a, b) = ({n}, {a}, {b}): {criteria:?}"
            );
            let is_quadratical = QClass::Quadratical.criterion_holds(n, a);
            assert_eq!(criteria.property_a, is_quadratical, "(n, a) = ({n}, {a})");
            if is_quadratical {
                quadratical += 1;
                assert_eq!(
                    md(k * k, n),
                    md(-1, n),
                    "k² ≢ −1 at quadratical (n, k) = ({n}, {k})"
                );
            }
            instances += 1;
        }
    }
    assert!(instances > 0);
    assert_eq!(quadratical, 10, "two per quadratical order 5, 13, 17, 25, 29");
    finish(
        5,
        "quadratical-criteria-agreement",
        start,
        Duration::from_secs(60),
    );
}

/// Criterion 6 — the quadratical orders up to 200 are exactly the n ≥ 2
/// whose prime factors are all ≡ 1 (mod 4), cross-validated by direct
/// coefficient sweep.
#[test]
fn acceptance_06_quadratical_orders() {
    let start = Instant::now();
    const EXPECTED: [i64; 28] = [
        5, 13, 17, 25, 29, 37, 41, 53, 61, 65, 73, 85, 89, 97, 101, 109, 113, 125, 137, 145, 149,
        157, 169, 173, 181, 185, 193, 197,
    ];
    let orders = quadratical_orders(200);
    assert_eq!(orders, EXPECTED);

    // Factorization oracle: trial division, every prime factor ≡ 1 (mod 4).
    let factors_all_1_mod_4 = |mut n: i64| -> bool {
        let mut p = 2;
        while p * p <= n {
            while n % p == 0 {
                if p % 4 != 1 {
                    return false;
                }
                n /= p;
            }
            p += 1;
        }
        n == 1 || n % 4 == 1
    };
    for n in 2..=200i64 {
        assert_eq!(
            orders.contains(&n),
            factors_all_1_mod_4(n),
            "factorization oracle disagrees at n = {n}"
        );
    }

    // Coefficient sweep: an order is quadratical exactly when some valid
    // left coefficient satisfies 2a² − 2a + 1 ≡ 0 (mod n).
    let mut n = 3;
    while n <= 200 {
        let exists = valid_coefficients(n).any(|a| QClass::Quadratical.criterion_holds(n, a));
        assert_eq!(exists, orders.contains(&n), "coefficient sweep at n = {n}");
        n += 2;
    }
    finish(6, "quadratical-orders", start, Duration::from_secs(5));
}

/// Criterion 7 — closed-form parastrophe coefficients and shift constants
/// match brute-force parastrophe tables and their translatability scans for
/// every valid pair with odd n ≤ 101.
#[test]
fn acceptance_07_parastrophe_closed_forms() {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut n = 3i64;
    while n <= 101 {
        for a in valid_coefficients(n) {
            let b = md(1 - a, n);
            let t = build(n, a, b);
            for kind in ParastropheKind::ALL {
                let coeffs =
                    parastrophe_coeffs(n, a, b, kind).expect("valid idempotent quasigroup pair");
                let brute = parastrophe_table(&t, kind).expect("quasigroup");
                assert_eq!(
                    build(n, coeffs.a, coeffs.b),
                    brute,
                    "{} coefficients wrong at (n, a) = ({n}, {a})",
                    kind.name()
                );
                let expected_ks: Vec<usize> =
                    coeffs.k_star.map(|k| k as usize).into_iter().collect();
                assert_eq!(
                    brute.translatability().ks,
                    expected_ks,
                    "{} shift wrong at (n, a) = ({n}, {a})",
                    kind.name()
                );
                checked += 1;
            }
        }
        n += 2;
    }
    assert!(checked > 0);
    finish(
        7,
        "parastrophe-closed-forms",
        start,
        Duration::from_secs(120),
    );
}

/// Criterion 8 — the shift catalogues hold as value identities and the
/// preservation catalogue holds with its always/never/specific-instance
/// semantics for n ≤ 200; the quadratical P1 cell is exactly (5, 2) and the
/// right-modular P1 cell covers every instance.
#[test]
fn acceptance_08_shift_and_preservation_catalogues() {
    let start = Instant::now();
    let shift = verify_shift_tables(200).expect("shift catalogues hold");
    assert_eq!(shift.max_n, 200);
    assert!(shift.class_instances > 0);
    let preservation = verify_preservation(200).expect("preservation catalogue holds");
    assert_eq!(preservation.cells_checked, 40);

    assert_eq!(
        preservation_rule(QClass::Quadratical, ParastropheKind::P1),
        PreservationRule::Only { n: 5, a: 2 }
    );
    assert_eq!(
        preservation_witnesses(QClass::Quadratical, ParastropheKind::P1, 200),
        vec![(5, 2)]
    );

    assert_eq!(
        preservation_rule(QClass::RightModular, ParastropheKind::P1),
        PreservationRule::Always
    );
    let mut right_modular_instances = Vec::new();
    let mut n = 3i64;
    while n <= 200 {
        for a in valid_coefficients(n) {
            if QClass::RightModular.criterion_holds(n, a) {
                right_modular_instances.push((n, a));
            }
        }
        n += 2;
    }
    assert!(!right_modular_instances.is_empty());
    assert_eq!(
        preservation_witnesses(QClass::RightModular, ParastropheKind::P1, 200),
        right_modular_instances
    );
    finish(
        8,
        "shift-and-preservation-catalogues",
        start,
        Duration::from_secs(180),
    );
}

/// Criterion 9 — the six-case equality partition of the parastrophe family
/// matches the actual table equalities for all odd n ≤ 51, with (11, 3, 9)
/// landing in the all-distinct case.
#[test]
fn acceptance_09_equality_case_partition() {
    let start = Instant::now();
    let report = verify_equality_cases(51).expect("partition matches tables");
    assert_eq!(report.max_n, 51);
    assert!(report.instances_checked > 0);
    assert_eq!(
        equality_case(11, 3, 9).expect("valid pair"),
        EqualityCase::AllDistinct
    );
    finish(
        9,
        "equality-case-partition",
        start,
        Duration::from_secs(60),
    );
}

/// Criterion 10 — no Cheban and no Schröder instance exists: algebraic
/// sweep over all odd n ≤ 101 plus table-level checks on every enumerated
/// quasigroup with n ≤ 9.
#[test]
fn acceptance_10_cheban_schroeder_nonexistence() {
    let start = Instant::now();
    let report = cheban_schroeder_check(101).expect("no witnesses");
    assert_eq!(report.max_n, 101);
    assert!(report.instances_scanned > 0);

    let mut survivors = 0u32;
    for n in 2..=9usize {
        for k in 1..n {
            for t in enumerate(n, k).tables {
                assert!(
                    !check_identity(&t, IdentityId::Cheban),
                    "Cheban table at (n, k) = ({n}, {k})"
                );
                assert!(
                    !check_identity(&t, IdentityId::Schroeder),
                    "Schröder table at (n, k) = ({n}, {k})"
                );
                survivors += 1;
            }
        }
    }
    assert_eq!(survivors, 12);
    finish(
        10,
        "cheban-schroeder-nonexistence",
        start,
        Duration::from_secs(60),
    );
}

/// Criterion 11 — the class-pair survey up to n ≤ 500 matches the
/// catalogue exactly: 21 pairs empty, 6 pairs with a unique witness, and
/// the one co-occurring pair unconstrained; the dual-pair witness is also
/// unique.
#[test]
fn acceptance_11_class_pair_survey() {
    let start = Instant::now();
    let survey = class_pair_survey(500);
    assert_eq!(survey.len(), 28);
    let mut empty_rules = 0u32;
    let mut unique_rules = 0u32;
    for entry in &survey {
        match pair_rule(entry.first, entry.second) {
            Some(PairRule::Empty) => {
                assert!(
                    entry.witnesses.is_empty(),
                    "{} + {} should be empty, got {:?}",
                    entry.first,
                    entry.second,
                    entry.witnesses
                );
                empty_rules += 1;
            }
            Some(PairRule::Unique { n, a }) => {
                assert_eq!(
                    entry.witnesses,
                    vec![(n, a)],
                    "{} + {} should be uniquely ({n}, {a})",
                    entry.first,
                    entry.second
                );
                unique_rules += 1;
            }
            None => {
                // The one criterion-sharing pair co-occurs everywhere.
                assert_eq!((entry.first, entry.second), (QClass::LeftModular, QClass::Stein));
                assert!(!entry.witnesses.is_empty());
            }
        }
    }
    assert_eq!(empty_rules, 21);
    assert_eq!(unique_rules, 6);
    assert_eq!(
        dual_pair_witnesses(500, QClass::Aro, QClass::C3),
        vec![(31, 27)]
    );
    finish(11, "class-pair-survey", start, Duration::from_secs(120));
}

/// Criterion 12 — the group round-trip: every valid additive structure with
/// n ≤ 101 induces a quadratical quasigroup satisfying the ten laws, the
/// defining law, the interchange laws, the four-variable equality criterion
/// (n ≤ 31), and recovery returns literal addition mod n; translation
/// structures are valid at every base point of every quadratical instance
/// with n ≤ 29.
#[test]
fn acceptance_12_group_round_trip() {
    let start = Instant::now();
    let report = verify_round_trip(101, 31).expect("round trip holds");
    assert_eq!(report.max_n, 101);
    assert_eq!(report.structures_checked, 34);

    let mut tables = 0u32;
    for n in quadratical_orders(29) {
        for a in valid_coefficients(n) {
            if !QClass::Quadratical.criterion_holds(n, a) {
                continue;
            }
            let t = build(n, a, md(1 - a, n));
            let checked = verify_translation_structures(&t).expect("translations are valid");
            assert_eq!(checked, n as u64, "all base points of (n, a) = ({n}, {a})");
            tables += 1;
        }
    }
    assert_eq!(tables, 10, "two instances per order 5, 13, 17, 25, 29");
    finish(12, "group-round-trip", start, Duration::from_secs(180));
}

/// Criterion 13 — the order-8 contrast: the table generated 3-translatably
/// from first row [0, 3, 2, 1, 7, 6, 5, 4] is a quasigroup but not
/// idempotent, and exactly one of its five parastrophes is translatable —
/// the dual, with shift constant k* = 3 inverting k (3·3 ≡ 1 mod 8).
#[test]
fn acceptance_13_order_8_contrast() {
    let start = Instant::now();
    let t = CayleyTable::from_first_row(&[0, 3, 2, 1, 7, 6, 5, 4], 3).expect("well-formed row");
    assert!(t.is_quasigroup());
    assert!((0..8).any(|i| t.get(i, i) != i), "diagonal is idempotent");
    assert_eq!(t.translatability().ks, vec![3]);
    for kind in ParastropheKind::ALL {
        let p = parastrophe_table(&t, kind).expect("quasigroup");
        let expected = if kind == ParastropheKind::P5 {
            vec![3]
        } else {
            vec![]
        };
        assert_eq!(
            p.translatability().ks,
            expected,
            "{} translatability",
            kind.name()
        );
    }
    assert_eq!((3 * 3) % 8, 1, "dual shift inverts the original shift");
    finish(13, "order-8-contrast", start, Duration::from_secs(1));
}
