//! The five parastrophes (conjugates) of a quasigroup.
//!
//! Each parastrophe permutes the roles of the two arguments and the result
//! in `x·y = z`. For linear idempotent quasigroups all five are again
//! linear and idempotent, with closed-form coefficients and shift values;
//! this module carries both the definitional (table-level) constructions
//! and the closed forms, plus sweep functions asserting they agree.

use serde::Serialize;
use thiserror::Error;

use crate::identity::check_identity;
use crate::linear::{build, k_for_class, translatable_k, valid_coefficients, QClass};
use crate::table::CayleyTable;
use crate::zn::{inv, md};

/// The five parastrophes, defined by their characteristic equivalences:
///
/// | kind | `x∘y = z` ⇔ |
/// |---|---|
/// | `P1` | `x·z = y` |
/// | `P2` | `z·y = x` |
/// | `P3` | `z·x = y` |
/// | `P4` | `y·z = x` |
/// | `P5` | `y·x = z` (the dual) |
///
/// `P1`, `P2` and `P5` are involutions; `P3` and `P4` are mutually inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParastropheKind {
    P1,
    P2,
    P3,
    P4,
    P5,
}

impl ParastropheKind {
    /// All five kinds, in order.
    pub const ALL: [ParastropheKind; 5] = [
        ParastropheKind::P1,
        ParastropheKind::P2,
        ParastropheKind::P3,
        ParastropheKind::P4,
        ParastropheKind::P5,
    ];

    /// Stable lowercase name ("p1" … "p5").
    pub fn name(self) -> &'static str {
        match self {
            ParastropheKind::P1 => "p1",
            ParastropheKind::P2 => "p2",
            ParastropheKind::P3 => "p3",
            ParastropheKind::P4 => "p4",
            ParastropheKind::P5 => "p5",
        }
    }

    /// Parses "p1" … "p5" (or "1" … "5").
    pub fn from_name(s: &str) -> Option<ParastropheKind> {
        ParastropheKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name()[1..] == *s)
    }

    /// The defining equivalence, for diagnostics.
    pub fn definition(self) -> &'static str {
        match self {
            ParastropheKind::P1 => "x∘y = z ⇔ x·z = y",
            ParastropheKind::P2 => "x∘y = z ⇔ z·y = x",
            ParastropheKind::P3 => "x∘y = z ⇔ z·x = y",
            ParastropheKind::P4 => "x∘y = z ⇔ y·z = x",
            ParastropheKind::P5 => "x∘y = z ⇔ y·x = z",
        }
    }
}

impl std::fmt::Display for ParastropheKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Errors from parastrophe construction and the verification sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParastropheError {
    /// Parastrophes are only defined for quasigroups.
    #[error("table of order {n} is not a quasigroup")]
    NotAQuasigroup { n: usize },
    /// The coefficient pair is not idempotent (`a + b ≢ 1`).
    #[error("(a, b) = ({a}, {b}) mod {n} is not an idempotent pair")]
    NotIdempotent { n: i64, a: i64, b: i64 },
    /// A coefficient has no modular inverse.
    #[error("(a, b) = ({a}, {b}) mod {n}: both coefficients must be units")]
    NotInvertible { n: i64, a: i64, b: i64 },
    /// A class-specific row was requested for an instance outside the class.
    #[error("(n, a) = ({n}, {a}) does not satisfy the {class} criterion")]
    CriterionViolated { class: QClass, n: i64, a: i64 },
    /// The supplied shift is not the class shift of the instance.
    #[error("shift {k} is not the {class} shift of (n, a) = ({n}, {a})")]
    WrongShift { class: QClass, n: i64, a: i64, k: i64 },
    /// No closed-form shift row exists for this class (left modular
    /// duplicates Stein; C3's entries are not polynomial in `a`).
    #[error("no closed-form shift row for class {class}")]
    UnsupportedClass { class: QClass },
    /// A closed form disagreed with the table-level ground truth.
    #[error("{what} disagrees with the table scan at (n, a) = ({n}, {a}), {kind}")]
    Mismatch {
        what: &'static str,
        kind: ParastropheKind,
        n: i64,
        a: i64,
    },
    /// A preservation-rule cell disagreed with its sweep.
    #[error("preservation cell ({class}, {kind}) violated: witnesses {witnesses:?}")]
    PreservationViolated {
        class: QClass,
        kind: ParastropheKind,
        witnesses: Vec<(i64, i64)>,
    },
    /// The predicted equality case disagreed with the actual tables.
    #[error("equality case {case:?} wrong at (n, a, b) = ({n}, {a}, {b})")]
    EqualityCaseViolated { case: EqualityCase, n: i64, a: i64, b: i64 },
}

/// Builds the parastrophe table cell-by-cell from the defining equivalence.
pub fn parastrophe_table(
    t: &CayleyTable,
    kind: ParastropheKind,
) -> Result<CayleyTable, ParastropheError> {
    if !t.is_quasigroup() {
        return Err(ParastropheError::NotAQuasigroup { n: t.n() });
    }
    let n = t.n();
    // row_inv[x][v] = the z with t[x][z] = v; col_inv[y][v] = the z with
    // t[z][y] = v. Both exist and are unique by the Latin property.
    let mut row_inv = vec![0usize; n * n];
    let mut col_inv = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            row_inv[x * n + t.get(x, y)] = y;
            col_inv[y * n + t.get(x, y)] = x;
        }
    }
    let entry = |x: usize, y: usize| match kind {
        ParastropheKind::P1 => row_inv[x * n + y],
        ParastropheKind::P2 => col_inv[y * n + x],
        ParastropheKind::P3 => col_inv[x * n + y],
        ParastropheKind::P4 => row_inv[y * n + x],
        ParastropheKind::P5 => t.get(y, x),
    };
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| entry(x, y)).collect())
        .collect();
    Ok(CayleyTable::from_rows(&rows).expect("parastrophe rows are well-formed"))
}

/// Closed-form coefficients and shift of one parastrophe of the linear
/// idempotent quasigroup `x·y = (ax + by) mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParastropheCoeffs {
    pub kind: ParastropheKind,
    pub a: i64,
    pub b: i64,
    /// The parastrophe's shift; `None` only for the order-1 table.
    pub k_star: Option<i64>,
}

/// Computes parastrophe coefficients from the source coefficients alone.
///
/// With `a′ = a⁻¹` and `b′ = b⁻¹ (mod n)`, the five parastrophes of
/// `(a, b)` are linear with coefficients
///
/// | kind | `(a*, b*)` | shift `k*` |
/// |---|---|---|
/// | `P1` | `(1 − b′, b′)` | `a` |
/// | `P2` | `(a′, 1 − a′)` | `b′` |
/// | `P3` | `(1 − a′, a′)` | `1 − a` |
/// | `P4` | `(b′, 1 − b′)` | `a′` |
/// | `P5` | `(b, a)` | `1 − a′` |
///
/// (all mod n). Requires both coefficients to be units and the pair to be
/// idempotent; then `build(n, a*, b*)` equals the table-level parastrophe.
pub fn parastrophe_coeffs(
    n: i64,
    a: i64,
    b: i64,
    kind: ParastropheKind,
) -> Result<ParastropheCoeffs, ParastropheError> {
    assert!(n >= 1, "order must be positive");
    let (a, b) = (md(a, n), md(b, n));
    if md(a + b, n) != md(1, n) {
        return Err(ParastropheError::NotIdempotent { n, a, b });
    }
    let (ai, bi) = match (inv(a, n), inv(b, n)) {
        (Some(ai), Some(bi)) => (ai, bi),
        _ => return Err(ParastropheError::NotInvertible { n, a, b }),
    };
    let (astar, bstar, kstar) = match kind {
        ParastropheKind::P1 => (md(1 - bi, n), bi, a),
        ParastropheKind::P2 => (ai, md(1 - ai, n), bi),
        ParastropheKind::P3 => (md(1 - ai, n), ai, md(1 - a, n)),
        ParastropheKind::P4 => (bi, md(1 - bi, n), ai),
        ParastropheKind::P5 => (b, a, md(1 - ai, n)),
    };
    debug_assert_eq!(
        (kstar != 0).then_some(kstar),
        translatable_k(n, astar, bstar),
        "closed-form shift must match the generic solver"
    );
    Ok(ParastropheCoeffs {
        kind,
        a: astar,
        b: bstar,
        k_star: (kstar != 0).then_some(kstar),
    })
}

/// The six possible equality patterns among a linear idempotent quasigroup
/// `Qa` and its five parastrophes `Q1 … Q5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualityCase {
    /// All six tables coincide — only the order-3 commutative instance
    /// (and, degenerately, order 1).
    AllEqual,
    /// `Qa = Q3 = Q4` and `Q1 = Q2 = Q5`, the two groups distinct
    /// (`ab ≡ 1`, `a ≠ b`).
    Q3Q4Split,
    /// `Qa = Q1`, `Q2 = Q3`, `Q4 = Q5`, pairwise distinct
    /// (`(a, b) = (2, n−1)`, `n > 3`).
    Q1Chain,
    /// `Qa = Q2`, `Q1 = Q4`, `Q3 = Q5`, pairwise distinct
    /// (`(a, b) = (n−1, 2)`, `n > 3`).
    Q2Chain,
    /// `Qa = Q5`, `Q1 = Q3`, `Q2 = Q4`, pairwise distinct
    /// (`a = b`, `n > 3`).
    Q5Split,
    /// All six tables pairwise distinct.
    AllDistinct,
}

impl EqualityCase {
    /// The predicted partition of `[Qa, Q1, Q2, Q3, Q4, Q5]` (indices 0–5)
    /// into groups of equal tables.
    pub fn partition(self) -> &'static [&'static [usize]] {
        match self {
            EqualityCase::AllEqual => &[&[0, 1, 2, 3, 4, 5]],
            EqualityCase::Q3Q4Split => &[&[0, 3, 4], &[1, 2, 5]],
            EqualityCase::Q1Chain => &[&[0, 1], &[2, 3], &[4, 5]],
            EqualityCase::Q2Chain => &[&[0, 2], &[1, 4], &[3, 5]],
            EqualityCase::Q5Split => &[&[0, 5], &[1, 3], &[2, 4]],
            EqualityCase::AllDistinct => &[&[0], &[1], &[2], &[3], &[4], &[5]],
        }
    }
}

/// Decides which equality case the instance `(a, b)` over `Z_n` falls in.
///
/// The cases are decided by coefficient conditions, in order: the order-3
/// instance (all equal); `ab ≡ 1` with `a ≠ b`; `(a, b) = (2, n−1)`;
/// `(a, b) = (n−1, 2)`; `a = b`; otherwise all distinct. Exactly one case
/// applies to every valid instance.
pub fn equality_case(n: i64, a: i64, b: i64) -> Result<EqualityCase, ParastropheError> {
    assert!(n >= 1, "order must be positive");
    let (a, b) = (md(a, n), md(b, n));
    if md(a + b, n) != md(1, n) {
        return Err(ParastropheError::NotIdempotent { n, a, b });
    }
    if inv(a, n).is_none() || inv(b, n).is_none() {
        return Err(ParastropheError::NotInvertible { n, a, b });
    }
    Ok(if n <= 3 {
        // n = 3 admits only (2, 2); n = 1 is the point table.
        EqualityCase::AllEqual
    } else if md(a * b, n) == 1 && a != b {
        EqualityCase::Q3Q4Split
    } else if a == 2 && b == n - 1 {
        EqualityCase::Q1Chain
    } else if a == n - 1 && b == 2 {
        EqualityCase::Q2Chain
    } else if a == b {
        EqualityCase::Q5Split
    } else {
        EqualityCase::AllDistinct
    })
}

/// The classes with closed-form shift rows (the six catalogue columns).
const ROW_CLASSES: [QClass; 6] = [
    QClass::Quadratical,
    QClass::Hexagonal,
    QClass::Gs,
    QClass::Aro,
    QClass::Stein,
    QClass::RightModular,
];

/// Closed-form shifts `[Qa, Q1, Q2, Q3, Q4, Q5]` as polynomials in `a`,
/// for an instance of the given class.
///
/// Rows by class (entries mod n):
///
/// | class | Qa | Q1 | Q2 | Q3 | Q4 | Q5 |
/// |---|---|---|---|---|---|---|
/// | quadratical | `1−2a` | `a` | `2a` | `1−a` | `2−2a` | `2a−1` |
/// | hexagonal | `1−a` | `a` | `a` | `1−a` | `1−a` | `a` |
/// | gs | `a+1` | `a` | `−a` | `1−a` | `a−1` | `2−a` |
/// | aro | `−1−2a` | `a` | `2+2a` | `1−a` | `2a` | `1−2a` |
/// | stein | `a−1` | `a` | `2−a` | `1−a` | `3−a` | `a−2` |
/// | right-modular | `−1−a` | `a` | `a+2` | `1−a` | `a+1` | `−a` |
///
/// Left modular duplicates the Stein row (same criterion, same instances);
/// C3's entries involve modular inverses and are not polynomial in `a`;
/// both are rejected with [`ParastropheError::UnsupportedClass`].
pub fn shift_row_by_a(n: i64, a: i64, cls: QClass) -> Result<[i64; 6], ParastropheError> {
    if !ROW_CLASSES.contains(&cls) {
        return Err(ParastropheError::UnsupportedClass { class: cls });
    }
    if !cls.criterion_holds(n, a) {
        return Err(ParastropheError::CriterionViolated {
            class: cls,
            n,
            a: md(a, n),
        });
    }
    let raw: [i64; 6] = match cls {
        QClass::Quadratical => [1 - 2 * a, a, 2 * a, 1 - a, 2 - 2 * a, 2 * a - 1],
        QClass::Hexagonal => [1 - a, a, a, 1 - a, 1 - a, a],
        QClass::Gs => [a + 1, a, -a, 1 - a, a - 1, 2 - a],
        QClass::Aro => [-1 - 2 * a, a, 2 + 2 * a, 1 - a, 2 * a, 1 - 2 * a],
        QClass::Stein => [a - 1, a, 2 - a, 1 - a, 3 - a, a - 2],
        QClass::RightModular => [-1 - a, a, a + 2, 1 - a, a + 1, -a],
        _ => unreachable!("filtered above"),
    };
    Ok(raw.map(|v| md(v, n)))
}

/// Closed-form parastrophe shifts `[Q1, Q2, Q3, Q4, Q5]` as polynomials in
/// the source shift `k` (and `a` where needed).
///
/// Rows by class (entries mod n):
///
/// | class | Q1 | Q2 | Q3 | Q4 | Q5 |
/// |---|---|---|---|---|---|
/// | quadratical | `1−k−a` | `1−k` | `k+a` | `k+1` | `−k` |
/// | hexagonal | `1−k` | `1−k` | `k` | `k` | `1−k` |
/// | gs | `k−1` | `1−k` | `k−2a` | `k−2` | `3−k` |
/// | aro | `−1−k−a` | `1−k` | `k+a+2` | `−1−k` | `k+2` |
/// | stein | `k+1` | `1−k` | `−k` | `2−k` | `k−1` |
/// | right-modular | `−1−k` | `1−k` | `k+2` | `−k` | `k+1` |
///
/// Demands that `k` is the class shift of `(n, a)`; always agrees with
/// [`shift_row_by_a`] after substituting the class's `k`-in-`a` formula.
pub fn shift_row_by_k(
    n: i64,
    a: i64,
    k: i64,
    cls: QClass,
) -> Result<[i64; 5], ParastropheError> {
    if !ROW_CLASSES.contains(&cls) {
        return Err(ParastropheError::UnsupportedClass { class: cls });
    }
    if !cls.criterion_holds(n, a) {
        return Err(ParastropheError::CriterionViolated {
            class: cls,
            n,
            a: md(a, n),
        });
    }
    let expected = k_for_class(n, a, cls).expect("criterion checked above");
    if expected != Some(md(k, n)) {
        return Err(ParastropheError::WrongShift {
            class: cls,
            n,
            a: md(a, n),
            k,
        });
    }
    let raw: [i64; 5] = match cls {
        QClass::Quadratical => [1 - k - a, 1 - k, k + a, k + 1, -k],
        QClass::Hexagonal => [1 - k, 1 - k, k, k, 1 - k],
        QClass::Gs => [k - 1, 1 - k, k - 2 * a, k - 2, 3 - k],
        QClass::Aro => [-1 - k - a, 1 - k, k + a + 2, -1 - k, k + 2],
        QClass::Stein => [k + 1, 1 - k, -k, 2 - k, k - 1],
        QClass::RightModular => [-1 - k, 1 - k, k + 2, -k, k + 1],
        _ => unreachable!("filtered above"),
    };
    Ok(raw.map(|v| md(v, n)))
}

/// When a parastrophe of a class instance lies in the same class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PreservationRule {
    /// Every instance of the class has a same-class parastrophe of this kind.
    Always,
    /// No instance does.
    Never,
    /// Exactly one instance does, at the given `(n, a)`.
    Only { n: i64, a: i64 },
}

/// The closed catalogue: for each class and parastrophe kind, when the
/// parastrophe lies in the same class.
///
/// Each cell is provable by polynomial elimination between the class
/// criterion at `a` and at the parastrophe coefficient `a*`; the sweep
/// [`verify_preservation`] re-derives every cell empirically. Hexagonal
/// parastrophes are always hexagonal; left modular mirrors Stein.
pub fn preservation_rule(cls: QClass, kind: ParastropheKind) -> PreservationRule {
    use ParastropheKind::*;
    use PreservationRule::*;
    use QClass::*;
    match (cls, kind) {
        (Quadratical, P1) => Only { n: 5, a: 2 },
        (Quadratical, P2) => Only { n: 5, a: 4 },
        (Quadratical, P3) => Only { n: 5, a: 4 },
        (Quadratical, P4) => Only { n: 5, a: 2 },
        (Quadratical, P5) => Always,
        (Hexagonal, _) => Always,
        (Gs, P5) => Always,
        (Gs, _) => Never,
        (RightModular, P1) => Always,
        (RightModular, _) => Never,
        (LeftModular | Stein, P2) => Always,
        (LeftModular | Stein, _) => Never,
        (Aro, P1) => Only { n: 7, a: 2 },
        (Aro, P3) => Only { n: 7, a: 5 },
        (Aro, P4) => Only { n: 7, a: 5 },
        (Aro, _) => Never,
        (C3, P1) => Only { n: 7, a: 2 },
        (C3, P2) => Always,
        (C3, P3) => Only { n: 7, a: 2 },
        (C3, P4) => Only { n: 7, a: 4 },
        (C3, P5) => Only { n: 7, a: 4 },
    }
}

/// Sweeps all instances of `cls` with odd `3 ≤ n ≤ max_n`, collecting those
/// whose `kind`-parastrophe lies in `cls` as well (by the closed-form
/// parastrophe coefficient).
pub fn preservation_witnesses(cls: QClass, kind: ParastropheKind, max_n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut n = 3;
    while n <= max_n {
        for a in valid_coefficients(n) {
            if !cls.criterion_holds(n, a) {
                continue;
            }
            let c = parastrophe_coeffs(n, a, md(1 - a, n), kind)
                .expect("valid coefficients are invertible");
            if cls.criterion_holds(n, c.a) {
                out.push((n, a));
            }
        }
        n += 2;
    }
    out
}

/// Counts from a clean shift-table sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShiftTableReport {
    pub max_n: i64,
    pub class_instances: u64,
    pub parastrophes_checked: u64,
}

/// Verifies all closed-form shift rows against ground truth for every
/// class instance with odd `3 ≤ n ≤ max_n`: the `a`-row and `k`-row agree,
/// their entries match the generic coefficient formulas, and each entry is
/// the exact translatability of the actual parastrophe table.
pub fn verify_shift_tables(max_n: i64) -> Result<ShiftTableReport, ParastropheError> {
    let mut report = ShiftTableReport {
        max_n,
        class_instances: 0,
        parastrophes_checked: 0,
    };
    let mut n = 3;
    while n <= max_n {
        for a in valid_coefficients(n) {
            let b = md(1 - a, n);
            let mut built: Option<CayleyTable> = None;
            for cls in ROW_CLASSES {
                if !cls.criterion_holds(n, a) {
                    continue;
                }
                report.class_instances += 1;
                let row_a = shift_row_by_a(n, a, cls)?;
                let k = k_for_class(n, a, cls)
                    .expect("criterion holds")
                    .expect("positive order has a shift");
                if row_a[0] != k {
                    return Err(ParastropheError::Mismatch {
                        what: "source shift entry",
                        kind: ParastropheKind::P1,
                        n,
                        a,
                    });
                }
                let row_k = shift_row_by_k(n, a, k, cls)?;
                let t = built.get_or_insert_with(|| build(n, a, b));
                for (i, kind) in ParastropheKind::ALL.into_iter().enumerate() {
                    report.parastrophes_checked += 1;
                    if row_k[i] != row_a[i + 1] {
                        return Err(ParastropheError::Mismatch {
                            what: "k-row vs a-row",
                            kind,
                            n,
                            a,
                        });
                    }
                    let c = parastrophe_coeffs(n, a, b, kind)?;
                    if c.k_star != Some(row_a[i + 1]) {
                        return Err(ParastropheError::Mismatch {
                            what: "row vs generic coefficient shift",
                            kind,
                            n,
                            a,
                        });
                    }
                    let pt = parastrophe_table(t, kind)?;
                    if pt != build(n, c.a, c.b) {
                        return Err(ParastropheError::Mismatch {
                            what: "coefficient table vs definitional table",
                            kind,
                            n,
                            a,
                        });
                    }
                    if pt.translatability().ks != vec![row_a[i + 1] as usize] {
                        return Err(ParastropheError::Mismatch {
                            what: "row vs brute-force translatability",
                            kind,
                            n,
                            a,
                        });
                    }
                }
            }
        }
        n += 2;
    }
    Ok(report)
}

/// Counts from a clean preservation sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PreservationReport {
    pub max_n: i64,
    pub cells_checked: u64,
    pub witnesses_total: u64,
}

/// Verifies every preservation-rule cell against its witness sweep for odd
/// `3 ≤ n ≤ max_n`, and confirms each witness at table level (the actual
/// parastrophe table satisfies the class's defining identity).
pub fn verify_preservation(max_n: i64) -> Result<PreservationReport, ParastropheError> {
    let mut report = PreservationReport {
        max_n,
        cells_checked: 0,
        witnesses_total: 0,
    };
    for cls in QClass::ALL {
        // All instances of the class in range, for the "always" cells.
        let mut instances = Vec::new();
        let mut n = 3;
        while n <= max_n {
            for a in valid_coefficients(n) {
                if cls.criterion_holds(n, a) {
                    instances.push((n, a));
                }
            }
            n += 2;
        }
        for kind in ParastropheKind::ALL {
            report.cells_checked += 1;
            let witnesses = preservation_witnesses(cls, kind, max_n);
            report.witnesses_total += witnesses.len() as u64;
            let ok = match preservation_rule(cls, kind) {
                PreservationRule::Always => witnesses == instances,
                PreservationRule::Never => witnesses.is_empty(),
                PreservationRule::Only { n, a } => {
                    if n <= max_n {
                        witnesses == vec![(n, a)]
                    } else {
                        witnesses.is_empty()
                    }
                }
            };
            if !ok {
                return Err(ParastropheError::PreservationViolated {
                    class: cls,
                    kind,
                    witnesses,
                });
            }
            for &(n, a) in &witnesses {
                let pt = parastrophe_table(&build(n, a, 1 - a), kind)?;
                if !check_identity(&pt, cls.identity()) {
                    return Err(ParastropheError::PreservationViolated {
                        class: cls,
                        kind,
                        witnesses: vec![(n, a)],
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Counts from a clean equality-case sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub max_n: i64,
    pub instances_checked: u64,
}

/// Verifies, for every valid instance with odd `3 ≤ n ≤ max_n`, that the
/// predicted equality case matches the actual pattern of equalities among
/// the source table and its five parastrophes.
pub fn verify_equality_cases(max_n: i64) -> Result<EqualityReport, ParastropheError> {
    let mut report = EqualityReport {
        max_n,
        instances_checked: 0,
    };
    let mut n = 3;
    while n <= max_n {
        for a in valid_coefficients(n) {
            report.instances_checked += 1;
            let b = md(1 - a, n);
            let case = equality_case(n, a, b)?;
            let t = build(n, a, b);
            let mut tables = vec![t.clone()];
            for kind in ParastropheKind::ALL {
                tables.push(parastrophe_table(&t, kind)?);
            }
            let agree = |i: usize, j: usize| tables[i] == tables[j];
            let predicted = case.partition();
            let mut ok = true;
            // Within-group equality...
            for group in predicted {
                ok &= group.windows(2).all(|w| agree(w[0], w[1]));
            }
            // ...and cross-group inequality.
            for (gi, gx) in predicted.iter().enumerate() {
                for gy in predicted.iter().skip(gi + 1) {
                    ok &= !agree(gx[0], gy[0]);
                }
            }
            if !ok {
                return Err(ParastropheError::EqualityCaseViolated { case, n, a, b });
            }
        }
        n += 2;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::classify;

    #[test]
    fn parastrophes_satisfy_their_defining_equivalences() {
        let t = build(7, 5, 3);
        for kind in ParastropheKind::ALL {
            let p = parastrophe_table(&t, kind).unwrap();
            for x in 0..7 {
                for y in 0..7 {
                    let z = p.get(x, y);
                    let holds = match kind {
                        ParastropheKind::P1 => t.get(x, z) == y,
                        ParastropheKind::P2 => t.get(z, y) == x,
                        ParastropheKind::P3 => t.get(z, x) == y,
                        ParastropheKind::P4 => t.get(y, z) == x,
                        ParastropheKind::P5 => t.get(y, x) == z,
                    };
                    assert!(holds, "{kind} at ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn conjugacy_composition_structure() {
        let t = build(11, 3, 9);
        let p = |t: &CayleyTable, k| parastrophe_table(t, k).unwrap();
        use ParastropheKind::*;
        assert_eq!(p(&t, P5), t.dual());
        assert_eq!(p(&p(&t, P1), P1), t);
        assert_eq!(p(&p(&t, P2), P2), t);
        assert_eq!(p(&p(&t, P5), P5), t);
        assert_eq!(p(&p(&t, P3), P4), t);
        assert_eq!(p(&p(&t, P4), P3), t);
        // P1/P4 and P2/P3 are mutual duals.
        assert_eq!(p(&t, P1), p(&t, P4).dual());
        assert_eq!(p(&t, P2), p(&t, P3).dual());
    }

    #[test]
    fn closed_form_coefficients_match_named_examples() {
        let c = parastrophe_coeffs(11, 3, 9, ParastropheKind::P1).unwrap();
        assert_eq!((c.a, c.b, c.k_star), (7, 5, Some(3)));
        let c = parastrophe_coeffs(13, 3, 11, ParastropheKind::P5).unwrap();
        assert_eq!((c.a, c.b, c.k_star), (11, 3, Some(5)));
        let c = parastrophe_coeffs(3, 2, 2, ParastropheKind::P2).unwrap();
        assert_eq!((c.a, c.b, c.k_star), (2, 2, Some(2)));
        assert_eq!(
            parastrophe_table(&build(13, 3, 11), ParastropheKind::P1).unwrap(),
            build(13, 8, 6)
        );
        assert_eq!(
            parastrophe_coeffs(9, 3, 7, ParastropheKind::P1),
            Err(ParastropheError::NotInvertible { n: 9, a: 3, b: 7 })
        );
        assert_eq!(
            parastrophe_coeffs(7, 3, 3, ParastropheKind::P1),
            Err(ParastropheError::NotIdempotent { n: 7, a: 3, b: 3 })
        );
    }

    #[test]
    fn closed_form_coefficients_match_tables_on_a_sweep() {
        let mut n = 3;
        while n <= 31 {
            for a in valid_coefficients(n) {
                let b = md(1 - a, n);
                let t = build(n, a, b);
                for kind in ParastropheKind::ALL {
                    let c = parastrophe_coeffs(n, a, b, kind).unwrap();
                    assert_eq!(
                        parastrophe_table(&t, kind).unwrap(),
                        build(n, c.a, c.b),
                        "({n},{a}) {kind}"
                    );
                }
            }
            n += 2;
        }
    }

    #[test]
    fn equality_cases_match_named_examples() {
        use EqualityCase::*;
        assert_eq!(equality_case(3, 2, 2).unwrap(), AllEqual);
        assert_eq!(equality_case(1, 0, 0).unwrap(), AllEqual);
        assert_eq!(equality_case(11, 3, 9).unwrap(), AllDistinct);
        assert_eq!(equality_case(5, 3, 3).unwrap(), Q5Split);
        assert_eq!(equality_case(7, 5, 3).unwrap(), Q3Q4Split);
        assert_eq!(equality_case(9, 2, 8).unwrap(), Q1Chain);
        assert_eq!(equality_case(9, 8, 2).unwrap(), Q2Chain);
    }

    #[test]
    fn shift_rows_match_named_examples() {
        assert_eq!(
            shift_row_by_a(13, 3, QClass::Quadratical).unwrap(),
            [8, 3, 6, 11, 9, 5]
        );
        assert_eq!(
            shift_row_by_a(7, 5, QClass::Hexagonal).unwrap(),
            [3, 5, 5, 3, 3, 5]
        );
        assert_eq!(shift_row_by_a(5, 3, QClass::Gs).unwrap(), [4, 3, 2, 3, 2, 4]);
        assert_eq!(
            shift_row_by_k(13, 3, 8, QClass::Quadratical).unwrap(),
            [3, 6, 11, 9, 5]
        );
        assert_eq!(
            shift_row_by_k(13, 3, 7, QClass::Quadratical),
            Err(ParastropheError::WrongShift {
                class: QClass::Quadratical,
                n: 13,
                a: 3,
                k: 7
            })
        );
        assert_eq!(
            shift_row_by_a(7, 4, QClass::C3),
            Err(ParastropheError::UnsupportedClass { class: QClass::C3 })
        );
    }

    #[test]
    fn preservation_rules_match_named_cells() {
        use ParastropheKind::*;
        use PreservationRule::*;
        assert_eq!(
            preservation_rule(QClass::Quadratical, P1),
            Only { n: 5, a: 2 }
        );
        assert_eq!(preservation_rule(QClass::RightModular, P1), Always);
        assert_eq!(preservation_rule(QClass::Gs, P5), Always);
        assert_eq!(preservation_rule(QClass::Gs, P1), Never);
        for kind in ParastropheKind::ALL {
            assert_eq!(preservation_rule(QClass::Hexagonal, kind), Always);
            assert_eq!(
                preservation_rule(QClass::LeftModular, kind),
                preservation_rule(QClass::Stein, kind)
            );
        }
        assert_eq!(
            preservation_witnesses(QClass::Quadratical, P1, 200),
            vec![(5, 2)]
        );
    }

    #[test]
    fn sweeps_are_clean_at_small_bounds() {
        assert!(verify_shift_tables(31).unwrap().class_instances > 0);
        assert!(verify_preservation(51).unwrap().witnesses_total > 0);
        assert!(verify_equality_cases(25).unwrap().instances_checked > 0);
    }

    #[test]
    fn parastrophe_rejects_non_quasigroups() {
        let bad = build(8, 4, 5);
        assert_eq!(
            parastrophe_table(&bad, ParastropheKind::P1),
            Err(ParastropheError::NotAQuasigroup { n: 8 })
        );
    }

    #[test]
    fn quadratical_p2_fixed_point_is_the_triple_class_instance() {
        // The lone quadratical instance with a quadratical P2 parastrophe
        // is (5, 4) — the same instance that is also Stein and left modular.
        assert_eq!(
            preservation_witnesses(QClass::Quadratical, ParastropheKind::P2, 300),
            vec![(5, 4)]
        );
        assert_eq!(
            classify(5, 4).unwrap(),
            vec![QClass::Quadratical, QClass::LeftModular, QClass::Stein]
        );
    }
}
