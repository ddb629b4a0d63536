//! Exact arithmetic in the ring `Z_n` of residues modulo `n`.
//!
//! Every quantity in this crate is an integer residue; coefficients are kept
//! as `i64` so that intermediate polynomial values (degree ≤ 3 in values
//! < n ≤ a few thousand) never overflow and can be reduced with [`md`].

use num_integer::Integer;

/// Canonical residue of `v` modulo `n`, in `0..n`. Requires `n >= 1`.
#[inline]
pub fn md(v: i64, n: i64) -> i64 {
    debug_assert!(n >= 1, "modulus must be positive, got {n}");
    v.rem_euclid(n)
}

/// Greatest common divisor (always non-negative).
#[inline]
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Whether `a` is a unit of `Z_n`, i.e. `gcd(a, n) = 1`.
#[inline]
pub fn is_unit(a: i64, n: i64) -> bool {
    gcd(md(a, n), n) == 1
}

/// Multiplicative inverse of `a` modulo `n`, when `gcd(a, n) = 1`.
///
/// In the degenerate ring `Z_1` the single element `0` is its own inverse.
pub fn inv(a: i64, n: i64) -> Option<i64> {
    debug_assert!(n >= 1, "modulus must be positive, got {n}");
    let e = md(a, n).extended_gcd(&n);
    (e.gcd == 1).then(|| md(e.x, n))
}
