//! The equivalence between additive structures on `Z_n` and quadratical
//! quasigroups.
//!
//! An *additive structure* is `(Z_n, +, λ, ρ)` with automorphism
//! multipliers `λx = lx`, `ρx = rx` satisfying `ρx + λx = x` and
//! `λρx + λρx = x`. It induces a quadratical quasigroup
//! `x ⊕ y = ρx + λy`; conversely, a quadratical quasigroup equipped with
//! commuting automorphisms satisfying four axioms recovers a commutative
//! group `x ⊙ y = ρ⁻¹x · λ⁻¹y`. The two constructions are mutually
//! inverse, and this module verifies every step at table level.

use serde::Serialize;
use thiserror::Error;

use crate::identity::{check_identity, IdentityId};
use crate::linear::{build, recover_linear, QClass};
use crate::table::CayleyTable;
use crate::zn::{gcd, md};

/// Errors from structure validation and the round-trip sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QqError {
    /// `(n, l, r)` violates an additive-structure invariant.
    #[error("({n}, {l}, {r}) is not a valid additive structure")]
    InvalidAStructure { n: i64, l: i64, r: i64 },
    /// The supplied maps are not commuting automorphisms of the table.
    #[error("the supplied maps are not commuting automorphisms of the table")]
    InvalidAutomorphisms,
    /// A quasigroup-side axiom failed. Axioms are numbered 1–4: exchange
    /// (`xy·λz = ρx·yz`), companion product (`λx·ρx = x`), inverse
    /// symmetry (`ρ⁻¹x·λ⁻¹y = ρ⁻¹y·λ⁻¹x`), inverse solvability
    /// (`∀x,y ∃w: ρ⁻¹x·λ⁻¹w = y`).
    #[error("quasigroup-side axiom {index} violated")]
    AxiomViolated { index: u8 },
    /// The table is not a quadratical quasigroup.
    #[error("table is not a quadratical quasigroup")]
    NotQuadratical,
    /// The table is not translatable by the supplied shift.
    #[error("table is not {k}-translatable")]
    NotTranslatable { k: usize },
    /// A verification sweep found a violated contract.
    #[error("round trip failed at (n, l, r) = ({n}, {l}, {r}): {what}")]
    RoundTripFailed { n: i64, l: i64, r: i64, what: &'static str },
}

/// An additive structure `(Z_n, +, λ, ρ)` with `λx = lx`, `ρx = rx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AStructure {
    pub n: i64,
    pub l: i64,
    pub r: i64,
}

/// Checks the additive-structure invariants: `n` odd, both multipliers
/// units mod `n`, `(l + r) ≡ 1` (so `ρx + λx = x`) and `2lr ≡ 1` (so
/// `λρx + λρx = x`).
pub fn validate_astructure(n: i64, l: i64, r: i64) -> bool {
    if n < 1 || n % 2 == 0 {
        return false;
    }
    let (l, r) = (md(l, n), md(r, n));
    gcd(l, n) == 1
        && gcd(r, n) == 1
        && md(l + r, n) == md(1, n)
        && md(2 * l * r, n) == md(1, n)
}

impl AStructure {
    /// Validates and canonicalizes the multipliers.
    pub fn new(n: i64, l: i64, r: i64) -> Result<Self, QqError> {
        if validate_astructure(n, l, r) {
            Ok(AStructure {
                n,
                l: md(l, n),
                r: md(r, n),
            })
        } else {
            Err(QqError::InvalidAStructure { n, l, r })
        }
    }

    /// The halving constant: `lr ≡ (n+1)/2`, the unique element whose
    /// double is 1. Every element `x` halves to `λρx = lrx`.
    pub fn halving(&self) -> i64 {
        md(self.l * self.r, self.n)
    }

    /// The multiplier maps `(λ, ρ)` as permutations of `{0..n−1}`.
    pub fn multiplier_maps(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n;
        let map = |m: i64| (0..n).map(|x| md(m * x, n) as usize).collect();
        (map(self.l), map(self.r))
    }
}

/// All valid additive structures over `Z_n`, ordered by `l`.
pub fn astructures(n: i64) -> Vec<AStructure> {
    (0..n.max(1))
        .filter_map(|l| AStructure::new(n, l, md(1 - l, n.max(1))).ok())
        .collect()
}

/// The plain addition table of `Z_n`.
pub fn addition_table(n: usize) -> CayleyTable {
    let rows: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
    CayleyTable::from_rows(&rows).expect("addition rows are well-formed")
}

/// The induced quasigroup `x ⊕ y = ρx + λy = (r·x + l·y) mod n`; always
/// idempotent and quadratical for a valid structure.
pub fn induced_quasigroup(s: &AStructure) -> CayleyTable {
    build(s.n, s.r, s.l)
}

/// A table equipped with a candidate automorphism pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QqStructure {
    pub table: CayleyTable,
    pub lam: Vec<usize>,
    pub rho: Vec<usize>,
}

/// The canonical quasigroup-side structure of an additive structure: the
/// induced quasigroup together with the multiplier maps.
pub fn qq_structure(s: &AStructure) -> QqStructure {
    let (lam, rho) = s.multiplier_maps();
    QqStructure {
        table: induced_quasigroup(s),
        lam,
        rho,
    }
}

/// The translation maps `(L_s, R_s)` at `s`: `L_s(x) = s·x` (row `s`) and
/// `R_s(x) = x·s` (column `s`).
pub fn translation_maps(t: &CayleyTable, s: usize) -> (Vec<usize>, Vec<usize>) {
    let n = t.n();
    assert!(s < n, "translation element out of range");
    let lam = (0..n).map(|x| t.get(s, x)).collect();
    let rho = (0..n).map(|x| t.get(x, s)).collect();
    (lam, rho)
}

/// The quasigroup-side structure built from the translations at `s`.
pub fn translation_structure(t: &CayleyTable, s: usize) -> QqStructure {
    let (lam, rho) = translation_maps(t, s);
    QqStructure {
        table: t.clone(),
        lam,
        rho,
    }
}

/// Outcome of checking the four quasigroup-side axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QqAxioms {
    /// Axiom 1: `xy·λz = ρx·yz`.
    pub exchange: bool,
    /// Axiom 2: `λx·ρx = x`.
    pub companion: bool,
    /// Axiom 3: `ρ⁻¹x·λ⁻¹y = ρ⁻¹y·λ⁻¹x` (false if a map is not bijective).
    pub symmetry: bool,
    /// Axiom 4: `∀x,y ∃w: ρ⁻¹x·λ⁻¹w = y` (false if a map is not bijective).
    pub solvability: bool,
}

impl QqAxioms {
    /// The four verdicts in axiom order.
    pub fn values(self) -> [bool; 4] {
        [self.exchange, self.companion, self.symmetry, self.solvability]
    }

    /// True iff every axiom holds.
    pub fn all_hold(self) -> bool {
        self.values().into_iter().all(|b| b)
    }

    /// The 1-based index of the first violated axiom, if any.
    pub fn first_violated(self) -> Option<u8> {
        self.values().iter().position(|&b| !b).map(|i| i as u8 + 1)
    }
}

fn invert_permutation(p: &[usize]) -> Option<Vec<usize>> {
    let n = p.len();
    let mut inv = vec![usize::MAX; n];
    for (i, &v) in p.iter().enumerate() {
        if v >= n || inv[v] != usize::MAX {
            return None;
        }
        inv[v] = i;
    }
    Some(inv)
}

/// Exhaustively checks the four quasigroup-side axioms on any table with
/// any pair of self-maps (not just linear ones).
pub fn check_qq_axioms(t: &CayleyTable, lam: &[usize], rho: &[usize]) -> QqAxioms {
    let n = t.n();
    assert_eq!(lam.len(), n, "λ must map every element");
    assert_eq!(rho.len(), n, "ρ must map every element");
    assert!(
        lam.iter().chain(rho.iter()).all(|&v| v < n),
        "maps must stay in range"
    );
    let exchange = (0..n).all(|x| {
        (0..n).all(|y| {
            let xy = t.get(x, y);
            (0..n).all(|z| t.get(xy, lam[z]) == t.get(rho[x], t.get(y, z)))
        })
    });
    let companion = (0..n).all(|x| t.get(lam[x], rho[x]) == x);
    let (symmetry, solvability) = match (invert_permutation(lam), invert_permutation(rho)) {
        (Some(linv), Some(rinv)) => {
            let symmetry = (0..n)
                .all(|x| (x + 1..n).all(|y| t.get(rinv[x], linv[y]) == t.get(rinv[y], linv[x])));
            let solvability = (0..n).all(|x| {
                let mut seen = vec![false; n];
                for w in 0..n {
                    seen[t.get(rinv[x], linv[w])] = true;
                }
                seen.into_iter().all(|b| b)
            });
            (symmetry, solvability)
        }
        _ => (false, false),
    };
    QqAxioms {
        exchange,
        companion,
        symmetry,
        solvability,
    }
}

/// Recovers the group table `x ⊙ y = ρ⁻¹x · λ⁻¹y` after validating that
/// `λ, ρ` are commuting automorphisms and the four axioms hold. When the
/// input is a genuine quasigroup-side structure the result is a
/// commutative group.
pub fn recovered_group(q: &QqStructure) -> Result<CayleyTable, QqError> {
    let t = &q.table;
    let n = t.n();
    let (linv, rinv) = match (invert_permutation(&q.lam), invert_permutation(&q.rho)) {
        (Some(l), Some(r)) => (l, r),
        _ => return Err(QqError::InvalidAutomorphisms),
    };
    let automorphic = |m: &[usize]| {
        (0..n).all(|x| (0..n).all(|y| m[t.get(x, y)] == t.get(m[x], m[y])))
    };
    let commute = (0..n).all(|x| q.lam[q.rho[x]] == q.rho[q.lam[x]]);
    if !(automorphic(&q.lam) && automorphic(&q.rho) && commute) {
        return Err(QqError::InvalidAutomorphisms);
    }
    if let Some(index) = check_qq_axioms(t, &q.lam, &q.rho).first_violated() {
        return Err(QqError::AxiomViolated { index });
    }
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| t.get(rinv[x], linv[y])).collect())
        .collect();
    Ok(CayleyTable::from_rows(&rows).expect("recovered rows are well-formed"))
}

/// True iff the table is a commutative group (quasigroup, symmetric,
/// associative, with a two-sided identity).
pub fn is_commutative_group(t: &CayleyTable) -> bool {
    let n = t.n();
    t.is_quasigroup()
        && (0..n).all(|x| (x + 1..n).all(|y| t.get(x, y) == t.get(y, x)))
        && group_identity(t).is_some()
        && (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = t.get(x, y);
                (0..n).all(|z| t.get(xy, z) == t.get(x, t.get(y, z)))
            })
        })
}

/// The two-sided identity element, if one exists.
pub fn group_identity(t: &CayleyTable) -> Option<usize> {
    let n = t.n();
    (0..n).find(|&e| (0..n).all(|x| t.get(e, x) == x && t.get(x, e) == x))
}

/// Searches for a relabelling exhibiting the table as `(Z_n, +)`: a
/// permutation `p` with `p[0]` the identity, `p[i] = p[i−1]·g` for a
/// generator `g`, and `t[p[i]][p[j]] = p[(i+j) mod n]` throughout.
pub fn zn_relabelling(t: &CayleyTable) -> Option<Vec<usize>> {
    let n = t.n();
    let e = group_identity(t)?;
    'candidates: for g in 0..n {
        let mut p = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut cur = e;
        for _ in 0..n {
            if seen[cur] {
                continue 'candidates;
            }
            seen[cur] = true;
            p.push(cur);
            cur = t.get(cur, g);
        }
        let additive =
            (0..n).all(|i| (0..n).all(|j| t.get(p[i], p[j]) == p[(i + j) % n]));
        if additive {
            return Some(p);
        }
    }
    None
}

/// Checks the two additive-structure laws on a recovered group table:
/// `ρx ⊙ λx = x` and `λρx ⊙ λρx = x`.
pub fn astructure_laws_hold(group: &CayleyTable, lam: &[usize], rho: &[usize]) -> bool {
    let n = group.n();
    (0..n).all(|x| group.get(rho[x], lam[x]) == x)
        && (0..n).all(|x| {
            let half = lam[rho[x]];
            group.get(half, half) == x
        })
}

/// For a quasigroup-side structure on a quadratical table, `ρx·λx` is the
/// same element `s` for every `x`, and `λ, ρ` are exactly the translations
/// `L_s, R_s`. Returns that companion element, or `None` if the property
/// fails.
pub fn companion_element(q: &QqStructure) -> Option<usize> {
    let t = &q.table;
    let n = t.n();
    if n == 0 {
        return None;
    }
    let s = t.get(q.rho[0], q.lam[0]);
    if !(0..n).all(|x| t.get(q.rho[x], q.lam[x]) == s) {
        return None;
    }
    let (lam_s, rho_s) = translation_maps(t, s);
    (q.lam == lam_s && q.rho == rho_s).then_some(s)
}

/// Exhaustively checks the two interchange laws tying the induced
/// quasigroup `⊕` to addition and to the recovered group `⊙`:
/// `(x⊕y)+(z⊕w) = (x+z)⊕(y+w)` and `(x⊕y)⊙(z⊕w) = (x⊙z)⊕(y⊙w)`.
pub fn interchange_laws_hold(s: &AStructure) -> bool {
    let n = s.n as usize;
    let e = induced_quasigroup(s);
    let odot = recovered_group(&qq_structure(s))
        .expect("induced structures satisfy the quasigroup-side axioms");
    for x in 0..n {
        for y in 0..n {
            let exy = e.get(x, y);
            for z in 0..n {
                let xz = odot.get(x, z);
                let sum_xz = (x + z) % n;
                for w in 0..n {
                    let ezw = e.get(z, w);
                    if (exy + ezw) % n != e.get(sum_xz, (y + w) % n) {
                        return false;
                    }
                    if odot.get(exy, ezw) != e.get(xz, odot.get(y, w)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Exhaustively checks the four-variable equality criterion: `x⊕y = z⊕w`
/// holds iff both `x+(w⊕y) = z+(y⊕w)` and `y+(x⊕z) = w+(z⊕x)` hold.
pub fn sum_equality_criterion_holds(s: &AStructure) -> bool {
    let n = s.n as usize;
    let e = induced_quasigroup(s);
    for x in 0..n {
        for y in 0..n {
            let exy = e.get(x, y);
            for z in 0..n {
                for w in 0..n {
                    let lhs = exy == e.get(z, w);
                    let rhs = (x + e.get(w, y)) % n == (z + e.get(y, w)) % n
                        && (y + e.get(x, z)) % n == (w + e.get(z, x)) % n;
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Decides whether a k-translatable quadratical table is induced by `Z_n`:
/// some cyclic renumbering of it equals `build(n, a, 1−a)` with
/// `2a² − 2a + 1 ≡ 0`. Errors if the table is not quadratical or not
/// k-translatable.
pub fn z_n_induction_check(t: &CayleyTable, k: usize) -> Result<bool, QqError> {
    if !(t.is_quasigroup()
        && check_identity(t, IdentityId::Idempotent)
        && check_identity(t, IdentityId::PropertyA))
    {
        return Err(QqError::NotQuadratical);
    }
    if !t.is_k_translatable(k) {
        return Err(QqError::NotTranslatable { k });
    }
    let n = t.n() as i64;
    let mut cur = t.clone();
    for _ in 0..t.n() {
        if let Some((a, b)) = recover_linear(&cur) {
            if b == md(1 - a, n) && QClass::Quadratical.criterion_holds(n, a) {
                return Ok(true);
            }
        }
        cur = cur.cyclic_reorder();
    }
    Ok(false)
}

/// Counts from a clean round-trip sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RoundTripReport {
    pub max_n: i64,
    /// Cap on the order for the quartic-cost equality criterion.
    pub quadruple_cap: i64,
    pub structures_checked: u64,
}

/// Verifies the full equivalence for every valid additive structure with
/// odd `n ≤ max_n`: the induced quasigroup passes the ten quadratical laws
/// and the defining law, the canonical structure satisfies all four
/// axioms, recovery returns literal `Z_n` addition satisfying the
/// additive-side laws, the interchange laws hold, and (up to
/// `quadruple_cap`) the four-variable equality criterion holds.
pub fn verify_round_trip(max_n: i64, quadruple_cap: i64) -> Result<RoundTripReport, QqError> {
    let mut report = RoundTripReport {
        max_n,
        quadruple_cap,
        structures_checked: 0,
    };
    let mut n = 3;
    while n <= max_n {
        for s in astructures(n) {
            report.structures_checked += 1;
            let fail = |what: &'static str| QqError::RoundTripFailed {
                n,
                l: s.l,
                r: s.r,
                what,
            };
            let e = induced_quasigroup(&s);
            if !e.is_quasigroup() {
                return Err(fail("induced table is not a quasigroup"));
            }
            for law in IdentityId::QUADRATICAL_LAWS {
                if !check_identity(&e, law) {
                    return Err(fail("a quadratical law fails on the induced table"));
                }
            }
            if !check_identity(&e, IdentityId::PropertyA) {
                return Err(fail("induced table is not quadratical"));
            }
            if md(2 * s.halving(), n) != 1 {
                return Err(fail("halving constant does not double to 1"));
            }
            let q = qq_structure(&s);
            let odot = recovered_group(&q)?;
            if odot != addition_table(n as usize) {
                return Err(fail("recovery does not return literal addition"));
            }
            if !is_commutative_group(&odot) {
                return Err(fail("recovered table is not a commutative group"));
            }
            if !astructure_laws_hold(&odot, &q.lam, &q.rho) {
                return Err(fail("additive-side laws fail on the recovered group"));
            }
            if zn_relabelling(&odot).is_none() {
                return Err(fail("recovered group admits no cyclic relabelling"));
            }
            if companion_element(&q) != Some(0) {
                return Err(fail("multiplier maps are not the translations at 0"));
            }
            if !interchange_laws_hold(&s) {
                return Err(fail("an interchange law fails"));
            }
            if n <= quadruple_cap && !sum_equality_criterion_holds(&s) {
                return Err(fail("the four-variable equality criterion fails"));
            }
        }
        n += 2;
    }
    Ok(report)
}

/// Verifies, for every element `s` of a quadratical table, that the
/// translation maps at `s` form a valid quasigroup-side structure: all
/// four axioms hold, the recovered table is a commutative group isomorphic
/// to `Z_n`, the companion element is `s` itself, and `(x·s)·(s·x) = s`
/// pointwise. Returns the number of elements checked.
pub fn verify_translation_structures(t: &CayleyTable) -> Result<u64, QqError> {
    if !(t.is_quasigroup()
        && check_identity(t, IdentityId::Idempotent)
        && check_identity(t, IdentityId::PropertyA))
    {
        return Err(QqError::NotQuadratical);
    }
    let n = t.n();
    for s in 0..n {
        let q = translation_structure(t, s);
        let odot = recovered_group(&q)?;
        if !is_commutative_group(&odot) || zn_relabelling(&odot).is_none() {
            return Err(QqError::RoundTripFailed {
                n: n as i64,
                l: s as i64,
                r: s as i64,
                what: "translation recovery is not a cyclic group",
            });
        }
        if companion_element(&q) != Some(s) {
            return Err(QqError::RoundTripFailed {
                n: n as i64,
                l: s as i64,
                r: s as i64,
                what: "companion element is not the translation element",
            });
        }
        if !(0..n).all(|x| t.get(t.get(x, s), t.get(s, x)) == s) {
            return Err(QqError::RoundTripFailed {
                n: n as i64,
                l: s as i64,
                r: s as i64,
                what: "mirrored companion product is not constant",
            });
        }
    }
    Ok(n as u64)
}

/// Orders `1 < n ≤ limit` admitting at least one valid additive structure.
/// Always equals the quadratical orders below the same limit.
pub fn astructure_orders(limit: i64) -> Vec<i64> {
    (2..=limit).filter(|&n| !astructures(n).is_empty()).collect()
}
