//! Exhaustive groupoid-identity checks.
//!
//! [`check_identity`] evaluates a named identity on a [`CayleyTable`] by
//! brute quantification over all element tuples (arity 1–4), with early exit
//! on the first counterexample. There is no algebraic shortcut in this
//! module; it is the ground-truth side against which every closed-form
//! criterion elsewhere in the crate is validated.
//!
//! [`quadratical_criteria`] evaluates four independently stated conditions
//! that each characterise quadratical quasigroups among k-translatable
//! quasigroups; on any such quasigroup the four answers must agree.

use serde::Serialize;
use thiserror::Error;

use crate::table::CayleyTable;
use crate::zn::md;

/// Names of the groupoid identities this crate can check exhaustively.
///
/// The defining equations (universally quantified over the listed variables):
///
/// | tag | equation |
/// |---|---|
/// | `Idempotent` | `x·x = x` |
/// | `PropertyA` | `xy·x = zx·yz` |
/// | `Elastic` | `x·yx = xy·x` |
/// | `StrongElastic` | `x·yx = xy·x = yx·y` |
/// | `Bookend` | `yx·xy = x` |
/// | `LeftDistributive` | `x·yz = xy·xz` |
/// | `RightDistributive` | `xy·z = xz·yz` |
/// | `Medial` | `xy·zw = xz·yw` |
/// | `Alterable` | `xy = zw ⇒ yz = wx` |
/// | `Eq8` | `x(y·yx) = (xy·x)y` |
/// | `Eq9` | `(xy·y)x = y(x·yx)` |
/// | `Hexagonal` | `x·yx = y` |
/// | `Gs1` | `x(xy·z)·z = y` |
/// | `Gs2` | `x·(x·yz)z = y` |
/// | `Stein` | `x·xy = yx` |
/// | `LeftModular` | `x·yz = z·yx` |
/// | `RightModular` | `xy·z = zy·x` |
/// | `C3` | `(xy·y)y = x` |
/// | `Aro` | `xy·y = yx·x` |
/// | `Cheban` | `x(xy·z) = (y·zx)x` |
/// | `Schroeder` | `xy·yx = x` |
///
/// `Alterable` is stated as an implication; the reverse implication follows
/// by instantiating the forward one at `(y, z, w, x)`, so checking one
/// direction over all quadruples checks the biconditional.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Idempotent,
    PropertyA,
    Elastic,
    StrongElastic,
    Bookend,
    LeftDistributive,
    RightDistributive,
    Medial,
    Alterable,
    Eq8,
    Eq9,
    Hexagonal,
    Gs1,
    Gs2,
    Stein,
    LeftModular,
    RightModular,
    C3,
    Aro,
    Cheban,
    Schroeder,
}

impl IdentityId {
    /// Every supported identity, in declaration order.
    pub const ALL: [IdentityId; 21] = [
        IdentityId::Idempotent,
        IdentityId::PropertyA,
        IdentityId::Elastic,
        IdentityId::StrongElastic,
        IdentityId::Bookend,
        IdentityId::LeftDistributive,
        IdentityId::RightDistributive,
        IdentityId::Medial,
        IdentityId::Alterable,
        IdentityId::Eq8,
        IdentityId::Eq9,
        IdentityId::Hexagonal,
        IdentityId::Gs1,
        IdentityId::Gs2,
        IdentityId::Stein,
        IdentityId::LeftModular,
        IdentityId::RightModular,
        IdentityId::C3,
        IdentityId::Aro,
        IdentityId::Cheban,
        IdentityId::Schroeder,
    ];

    /// The ten laws satisfied by every quadratical quasigroup, in the
    /// traditional order (idempotency, elasticity, strong elasticity,
    /// bookend, both distributivities, mediality, the two four-variable
    /// product laws, alterability).
    pub const QUADRATICAL_LAWS: [IdentityId; 10] = [
        IdentityId::Idempotent,
        IdentityId::Elastic,
        IdentityId::StrongElastic,
        IdentityId::Bookend,
        IdentityId::LeftDistributive,
        IdentityId::RightDistributive,
        IdentityId::Medial,
        IdentityId::Eq8,
        IdentityId::Eq9,
        IdentityId::Alterable,
    ];

    /// Stable kebab-case name, used in CLI and JSON output.
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Idempotent => "idempotent",
            IdentityId::PropertyA => "property-a",
            IdentityId::Elastic => "elastic",
            IdentityId::StrongElastic => "strong-elastic",
            IdentityId::Bookend => "bookend",
            IdentityId::LeftDistributive => "left-distributive",
            IdentityId::RightDistributive => "right-distributive",
            IdentityId::Medial => "medial",
            IdentityId::Alterable => "alterable",
            IdentityId::Eq8 => "eq8",
            IdentityId::Eq9 => "eq9",
            IdentityId::Hexagonal => "hexagonal",
            IdentityId::Gs1 => "gs1",
            IdentityId::Gs2 => "gs2",
            IdentityId::Stein => "stein",
            IdentityId::LeftModular => "left-modular",
            IdentityId::RightModular => "right-modular",
            IdentityId::C3 => "c3",
            IdentityId::Aro => "aro",
            IdentityId::Cheban => "cheban",
            IdentityId::Schroeder => "schroeder",
        }
    }

    /// The defining equation, for diagnostics.
    pub fn equation(self) -> &'static str {
        match self {
            IdentityId::Idempotent => "x·x = x",
            IdentityId::PropertyA => "xy·x = zx·yz",
            IdentityId::Elastic => "x·yx = xy·x",
            IdentityId::StrongElastic => "x·yx = xy·x = yx·y",
            IdentityId::Bookend => "yx·xy = x",
            IdentityId::LeftDistributive => "x·yz = xy·xz",
            IdentityId::RightDistributive => "xy·z = xz·yz",
            IdentityId::Medial => "xy·zw = xz·yw",
            IdentityId::Alterable => "xy = zw ⇒ yz = wx",
            IdentityId::Eq8 => "x(y·yx) = (xy·x)y",
            IdentityId::Eq9 => "(xy·y)x = y(x·yx)",
            IdentityId::Hexagonal => "x·yx = y",
            IdentityId::Gs1 => "x(xy·z)·z = y",
            IdentityId::Gs2 => "x·(x·yz)z = y",
            IdentityId::Stein => "x·xy = yx",
            IdentityId::LeftModular => "x·yz = z·yx",
            IdentityId::RightModular => "xy·z = zy·x",
            IdentityId::C3 => "(xy·y)y = x",
            IdentityId::Aro => "xy·y = yx·x",
            IdentityId::Cheban => "x(xy·z) = (y·zx)x",
            IdentityId::Schroeder => "xy·yx = x",
        }
    }
}

/// Checks a single identity exhaustively over all element tuples.
pub fn check_identity(t: &CayleyTable, id: IdentityId) -> bool {
    let n = t.n();
    let e = t.entries();
    let op = |x: usize, y: usize| e[x * n + y];
    match id {
        IdentityId::Idempotent => (0..n).all(|x| op(x, x) == x),
        IdentityId::PropertyA => all3(n, |x, y, z| {
            op(op(x, y), x) == op(op(z, x), op(y, z))
        }),
        IdentityId::Elastic => all2(n, |x, y| op(x, op(y, x)) == op(op(x, y), x)),
        IdentityId::StrongElastic => all2(n, |x, y| {
            let m = op(op(x, y), x);
            op(x, op(y, x)) == m && m == op(op(y, x), y)
        }),
        IdentityId::Bookend => all2(n, |x, y| op(op(y, x), op(x, y)) == x),
        IdentityId::LeftDistributive => all3(n, |x, y, z| {
            op(x, op(y, z)) == op(op(x, y), op(x, z))
        }),
        IdentityId::RightDistributive => all3(n, |x, y, z| {
            op(op(x, y), z) == op(op(x, z), op(y, z))
        }),
        IdentityId::Medial => {
            // xy·zw = xz·yw, with the inner loop reduced to row lookups.
            for x in 0..n {
                for y in 0..n {
                    let p = op(x, y);
                    let row_y = &e[y * n..(y + 1) * n];
                    for z in 0..n {
                        let q = op(x, z);
                        let row_p = &e[p * n..(p + 1) * n];
                        let row_q = &e[q * n..(q + 1) * n];
                        let row_z = &e[z * n..(z + 1) * n];
                        for w in 0..n {
                            if row_p[row_z[w]] != row_q[row_y[w]] {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        }
        IdentityId::Alterable => {
            // xy = zw ⇒ yz = wx; one direction implies the converse.
            for x in 0..n {
                let col_x: Vec<usize> = (0..n).map(|w| op(w, x)).collect();
                for y in 0..n {
                    let pxy = op(x, y);
                    for z in 0..n {
                        let pyz = op(y, z);
                        let row_z = &e[z * n..(z + 1) * n];
                        for w in 0..n {
                            if row_z[w] == pxy && pyz != col_x[w] {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        }
        IdentityId::Eq8 => all2(n, |x, y| {
            op(x, op(y, op(y, x))) == op(op(op(x, y), x), y)
        }),
        IdentityId::Eq9 => all2(n, |x, y| {
            op(op(op(x, y), y), x) == op(y, op(x, op(y, x)))
        }),
        IdentityId::Hexagonal => all2(n, |x, y| op(x, op(y, x)) == y),
        IdentityId::Gs1 => all3(n, |x, y, z| op(op(x, op(op(x, y), z)), z) == y),
        IdentityId::Gs2 => all3(n, |x, y, z| op(x, op(op(x, op(y, z)), z)) == y),
        IdentityId::Stein => all2(n, |x, y| op(x, op(x, y)) == op(y, x)),
        IdentityId::LeftModular => all3(n, |x, y, z| op(x, op(y, z)) == op(z, op(y, x))),
        IdentityId::RightModular => all3(n, |x, y, z| op(op(x, y), z) == op(op(z, y), x)),
        IdentityId::C3 => all2(n, |x, y| op(op(op(x, y), y), y) == x),
        IdentityId::Aro => all2(n, |x, y| op(op(x, y), y) == op(op(y, x), x)),
        IdentityId::Cheban => all3(n, |x, y, z| {
            op(x, op(op(x, y), z)) == op(op(y, op(z, x)), x)
        }),
        IdentityId::Schroeder => all2(n, |x, y| op(op(x, y), op(y, x)) == x),
    }
}

fn all2(n: usize, f: impl Fn(usize, usize) -> bool) -> bool {
    for x in 0..n {
        for y in 0..n {
            if !f(x, y) {
                return false;
            }
        }
    }
    true
}

fn all3(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !f(x, y, z) {
                    return false;
                }
            }
        }
    }
    true
}

/// Error raised by [`quadratical_criteria`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    /// The table does not repeat its rows with the given shift.
    #[error("table is not {k}-translatable")]
    NotTranslatable { k: usize },
}

/// The four equivalent characterisations of quadratical quasigroups among
/// k-translatable quasigroups, evaluated independently:
///
/// * `property_a` — the defining identity `xy·x = zx·yz` holds;
/// * `index_congruence` — `x + k(z·x) ≡ (y·z) + k(x·y) (mod n)` for all
///   `x, y, z`;
/// * `multiplied_congruence` — `(z·x) + k(y·z) ≡ kx + (x·y) (mod n)` for all
///   `x, y, z`, together with `k² ≡ −1 (mod n)`;
/// * `idempotent_medial_shift` — the table is idempotent and medial and
///   `k² ≡ −1 (mod n)`.
///
/// On a k-translatable quasigroup the four booleans agree; each is computed
/// from scratch so the agreement is checkable, not built in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadraticalCriteria {
    pub property_a: bool,
    pub index_congruence: bool,
    pub multiplied_congruence: bool,
    pub idempotent_medial_shift: bool,
}

impl QuadraticalCriteria {
    /// The four answers in declaration order.
    pub fn values(self) -> [bool; 4] {
        [
            self.property_a,
            self.index_congruence,
            self.multiplied_congruence,
            self.idempotent_medial_shift,
        ]
    }

    /// Whether all four answers coincide.
    pub fn unanimous(self) -> bool {
        let v = self.values();
        v.iter().all(|&b| b == v[0])
    }
}

/// Evaluates the four quadratical characterisations on a table known to be a
/// k-translatable quasigroup.
///
/// Errors with [`CriteriaError::NotTranslatable`] when the shift premise
/// fails; the quasigroup premise is the caller's responsibility (the four
/// conditions are only guaranteed to agree on quasigroups).
pub fn quadratical_criteria(
    t: &CayleyTable,
    k: usize,
) -> Result<QuadraticalCriteria, CriteriaError> {
    if !t.is_k_translatable(k) {
        return Err(CriteriaError::NotTranslatable { k });
    }
    let n = t.n();
    let ni = n as i64;
    let ki = k as i64;
    let e = t.entries();
    let op = |x: usize, y: usize| e[x * n + y] as i64;

    let shift_squared = md(ki * ki + 1, ni) == 0;

    let index_congruence = all3(n, |x, y, z| {
        md(x as i64 + ki * op(z, x), ni) == md(op(y, z) + ki * op(x, y), ni)
    });
    let multiplied_congruence = shift_squared
        && all3(n, |x, y, z| {
            md(op(z, x) + ki * op(y, z), ni) == md(ki * x as i64 + op(x, y), ni)
        });
    Ok(QuadraticalCriteria {
        property_a: check_identity(t, IdentityId::PropertyA),
        index_congruence,
        multiplied_congruence,
        idempotent_medial_shift: shift_squared
            && check_identity(t, IdentityId::Idempotent)
            && check_identity(t, IdentityId::Medial),
    })
}
