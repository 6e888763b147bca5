//! Counting of Schreier-type sets with a fixed arithmetic gap, and the
//! recursively grown Turán-style graph families whose edge counts produce the
//! same numbers.
//!
//! The crate is organised around cross-checking. [`schreier`] computes
//! `Sr(n, p, q)` by exhaustive enumeration, by a closed-form partial sum and
//! by a first-difference formula; [`graph`] grows the graph families
//! `M(n, p)`, `M(n, p, q)` and `T(n, p, q)` vertex by vertex; [`verify`] runs
//! every route against every other and reports disagreements instead of
//! panicking; [`io`] serialises graphs, OEIS b-files and CSV tables.

pub mod graph;
pub mod io;
pub mod schreier;
pub mod verify;

/// Remainder range used when splitting `n` into `quotient * modulus + remainder`.
///
/// The growth rules of the graph constructions index their cases with a
/// remainder in `1..=modulus`, while the difference formulas use the plain
/// Euclidean remainder in `0..modulus`. The two conventions disagree exactly
/// at multiples of the modulus, which is where off-by-one bugs breed, so every
/// decomposition in this crate goes through [`quot_rem`] with the convention
/// spelled out.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Remainder {
    /// Remainder in `0..modulus` (ordinary Euclidean division).
    ZeroBased,
    /// Remainder in `1..=modulus`; requires `n >= 1`.
    OneBased,
}

/// Splits `n` as `(quotient, remainder)` under the given convention.
///
/// Panics if `modulus` is zero, or if `n` is zero with [`Remainder::OneBased`].
pub fn quot_rem(n: u64, modulus: u64, convention: Remainder) -> (u64, u64) {
    assert!(modulus >= 1, "modulus must be positive");
    match convention {
        Remainder::ZeroBased => (n / modulus, n % modulus),
        Remainder::OneBased => {
            assert!(n >= 1, "one-based remainder needs n >= 1");
            let k = (n - 1) % modulus + 1;
            ((n - k) / modulus, k)
        }
    }
}
