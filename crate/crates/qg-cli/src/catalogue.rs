//! A fixed catalogue of small named instances with fully pinned expected
//! behaviour, re-verified end to end by `qg check`.
//!
//! Each entry pins everything the library claims about it: the Latin
//! property, idempotency, the unique shift constant, commutativity, the
//! class list, and — where the instance exists to witness something
//! sharper — dual classes, the parastrophe-equality case, or per-parastrophe
//! shifts. A catalogue failure means a library regression, never a flaky
//! input.

use serde::Serialize;

use qg_core::linear::{classify, QClass};
use qg_core::parastrophe::{equality_case, parastrophe_table, EqualityCase, ParastropheKind};
use qg_core::table::CayleyTable;
use qg_core::zn::md;
use qg_core::{build, ClassificationReport};

/// How a catalogue instance is constructed.
#[derive(Debug, Clone, Copy)]
pub enum InstanceKind {
    /// `x·y = (a·x + b·y) mod n`.
    Linear { n: i64, a: i64, b: i64 },
    /// A first row extended downward by the shift rule with constant `k`.
    FirstRow { row: &'static [usize], k: usize },
}

/// One pinned instance together with every expectation it must meet.
#[derive(Debug, Clone, Copy)]
pub struct NamedInstance {
    pub slug: &'static str,
    pub kind: InstanceKind,
    /// Expected Latin property.
    pub quasigroup: bool,
    /// Expected idempotency of the diagonal.
    pub idempotent: bool,
    /// Expected unique shift constant of the table itself, if any.
    pub k: Option<usize>,
    pub commutative: bool,
    /// Expected class list (empty for non-quasigroups).
    pub classes: &'static [QClass],
    /// Expected class list of the dual table, when pinned.
    pub dual_classes: Option<&'static [QClass]>,
    /// Expected parastrophe-equality case, when pinned.
    pub equality: Option<EqualityCase>,
    /// Expected unique shift of each parastrophe P1–P5, when pinned.
    pub parastrophe_ks: Option<[Option<usize>; 5]>,
}

const DEFAULTS: NamedInstance = NamedInstance {
    slug: "",
    kind: InstanceKind::Linear { n: 1, a: 0, b: 1 },
    quasigroup: true,
    idempotent: true,
    k: None,
    commutative: false,
    classes: &[],
    dual_classes: None,
    equality: None,
    parastrophe_ks: None,
};

/// The eleven named instances.
pub const NAMED_INSTANCES: [NamedInstance; 11] = [
    NamedInstance {
        slug: "quadratical-c3-13",
        kind: InstanceKind::Linear { n: 13, a: 3, b: 11 },
        k: Some(8),
        classes: &[QClass::Quadratical, QClass::C3],
        ..DEFAULTS
    },
    NamedInstance {
        slug: "aro-c3-7",
        kind: InstanceKind::Linear { n: 7, a: 2, b: 6 },
        k: Some(2),
        classes: &[QClass::Aro, QClass::C3],
        ..DEFAULTS
    },
    NamedInstance {
        slug: "quadratical-right-modular-5",
        kind: InstanceKind::Linear { n: 5, a: 2, b: 4 },
        k: Some(2),
        classes: &[QClass::Quadratical, QClass::RightModular],
        ..DEFAULTS
    },
    NamedInstance {
        slug: "hexagonal-aro-7",
        kind: InstanceKind::Linear { n: 7, a: 5, b: 3 },
        k: Some(3),
        classes: &[QClass::Hexagonal, QClass::Aro],
        ..DEFAULTS
    },
    NamedInstance {
        slug: "aro-with-c3-dual-31",
        kind: InstanceKind::Linear { n: 31, a: 27, b: 5 },
        k: Some(7),
        classes: &[QClass::Aro],
        dual_classes: Some(&[QClass::C3]),
        ..DEFAULTS
    },
    NamedInstance {
        slug: "hexagonal-commutative-3",
        kind: InstanceKind::Linear { n: 3, a: 2, b: 2 },
        k: Some(2),
        commutative: true,
        classes: &[QClass::Hexagonal],
        ..DEFAULTS
    },
    NamedInstance {
        slug: "golden-section-commutative-5",
        kind: InstanceKind::Linear { n: 5, a: 3, b: 3 },
        k: Some(4),
        commutative: true,
        classes: &[QClass::Gs],
        ..DEFAULTS
    },
    NamedInstance {
        slug: "c3-commutative-7",
        kind: InstanceKind::Linear { n: 7, a: 4, b: 4 },
        k: Some(6),
        commutative: true,
        classes: &[QClass::C3],
        ..DEFAULTS
    },
    NamedInstance {
        slug: "idempotent-non-quasigroup-8",
        kind: InstanceKind::Linear { n: 8, a: 4, b: 5 },
        quasigroup: false,
        k: Some(4),
        classes: &[],
        ..DEFAULTS
    },
    NamedInstance {
        slug: "right-modular-all-distinct-11",
        kind: InstanceKind::Linear { n: 11, a: 3, b: 9 },
        k: Some(7),
        classes: &[QClass::RightModular],
        equality: Some(EqualityCase::AllDistinct),
        ..DEFAULTS
    },
    NamedInstance {
        slug: "non-idempotent-dual-shift-8",
        kind: InstanceKind::FirstRow {
            row: &[0, 3, 2, 1, 7, 6, 5, 4],
            k: 3,
        },
        idempotent: false,
        k: Some(3),
        parastrophe_ks: Some([None, None, None, None, Some(3)]),
        ..DEFAULTS
    },
];

impl NamedInstance {
    /// Builds the instance's table. Infallible: every catalogue entry is
    /// well-formed by construction.
    pub fn table(&self) -> CayleyTable {
        match self.kind {
            InstanceKind::Linear { n, a, b } => build(n, a, b),
            InstanceKind::FirstRow { row, k } => {
                CayleyTable::from_first_row(row, k).expect("catalogue first row is well-formed")
            }
        }
    }

    /// Human-readable construction formula.
    pub fn formula(&self) -> String {
        match self.kind {
            InstanceKind::Linear { n, a, b } => format!("x·y = ({a}x + {b}y) mod {n}"),
            InstanceKind::FirstRow { row, k } => {
                format!("first row {row:?} extended with shift {k}")
            }
        }
    }
}

/// Verdict for one catalogue instance.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceVerdict {
    pub slug: &'static str,
    pub formula: String,
    pub pass: bool,
    /// Mismatch descriptions; empty exactly when `pass`.
    pub failures: Vec<String>,
}

fn expect<T: PartialEq + std::fmt::Debug>(
    failures: &mut Vec<String>,
    what: &str,
    expected: T,
    actual: T,
) {
    if expected != actual {
        failures.push(format!("{what}: expected {expected:?}, got {actual:?}"));
    }
}

fn check_instance(inst: &NamedInstance) -> InstanceVerdict {
    let mut failures = Vec::new();
    let t = inst.table();
    let n = t.n();

    expect(&mut failures, "quasigroup", inst.quasigroup, t.is_quasigroup());
    expect(
        &mut failures,
        "idempotent",
        inst.idempotent,
        (0..n).all(|i| t.get(i, i) == i),
    );
    expect(&mut failures, "shift", inst.k, t.translatability().unique());
    expect(&mut failures, "commutative", inst.commutative, t == t.dual());

    if let InstanceKind::Linear { n, a, b } = inst.kind {
        if n % 2 == 1 {
            match ClassificationReport::for_pair(n, a, b) {
                Ok(report) => {
                    expect(&mut failures, "classes", inst.classes.to_vec(), report.classes);
                    expect(
                        &mut failures,
                        "shift candidate",
                        inst.k.map(|k| k as i64),
                        report.k,
                    );
                    expect(&mut failures, "report quasigroup", inst.quasigroup, report.quasigroup);
                    expect(
                        &mut failures,
                        "report commutative",
                        inst.commutative,
                        report.commutative,
                    );
                }
                Err(e) => failures.push(format!("classification failed: {e}")),
            }
        } else {
            // Even orders must be rejected by classification while the table
            // itself still exhibits its pinned behaviour.
            if ClassificationReport::for_pair(n, a, b).is_ok() {
                failures.push("classification accepted an even order".into());
            }
        }
        if let Some(dual_classes) = inst.dual_classes {
            match classify(n, md(b, n)) {
                Ok(classes) => {
                    expect(&mut failures, "dual classes", dual_classes.to_vec(), classes)
                }
                Err(e) => failures.push(format!("dual classification failed: {e}")),
            }
        }
        if let Some(case) = inst.equality {
            match equality_case(n, a, b) {
                Ok(actual) => expect(&mut failures, "equality case", case, actual),
                Err(e) => failures.push(format!("equality case failed: {e}")),
            }
        }
    }

    if let Some(expected_ks) = inst.parastrophe_ks {
        for (kind, expected) in ParastropheKind::ALL.into_iter().zip(expected_ks) {
            match parastrophe_table(&t, kind) {
                Ok(p) => {
                    let ks = p.translatability().ks;
                    let expected_list: Vec<usize> = expected.into_iter().collect();
                    expect(&mut failures, kind.name(), expected_list, ks);
                }
                Err(e) => failures.push(format!("{} failed: {e}", kind.name())),
            }
        }
        // A translatable dual parastrophe must invert the original shift.
        if let (Some(k), Some(k_star)) = (inst.k, expected_ks[4]) {
            expect(&mut failures, "shift product k·k* mod n", 1, (k * k_star) % n);
        }
    }

    InstanceVerdict {
        slug: inst.slug,
        formula: inst.formula(),
        pass: failures.is_empty(),
        failures,
    }
}

/// Re-verifies the whole catalogue, one verdict per instance.
pub fn run_catalogue() -> Vec<InstanceVerdict> {
    NAMED_INSTANCES.iter().map(check_instance).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_is_clean() {
        for verdict in run_catalogue() {
            assert!(verdict.pass, "{}: {:?}", verdict.slug, verdict.failures);
        }
    }

    #[test]
    fn slugs_are_unique() {
        let mut slugs: Vec<_> = NAMED_INSTANCES.iter().map(|i| i.slug).collect();
        slugs.sort_unstable();
        slugs.dedup();
        assert_eq!(slugs.len(), NAMED_INSTANCES.len());
    }
}
