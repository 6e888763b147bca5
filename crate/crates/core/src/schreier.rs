//! Counting of gap-constrained Schreier-type sets.
//!
//! `Sr(n, p, q)` is the number of sets `F ⊆ {1, .., n}` that are singletons
//! or arithmetic progressions with common difference `q`, subject to the
//! slack condition `p · min F ≥ |F|`. Three independent routes compute it:
//!
//! * [`sr_bruteforce`] — exhaustive enumeration, the reference oracle;
//! * [`sr_partial_sum`] — the closed form `1 + Σ_{i<n} ⌊p(i+q+1)/(pq+1)⌋`;
//! * [`sr_difference`] — the case-split first difference
//!   `Sr(n+1, p, q) − Sr(n, p, q)`.
//!
//! All arithmetic is exact: counts are `u64`, floors are integer division,
//! and products that could overflow are checked.

use std::fmt;

use crate::{quot_rem, Remainder};

/// Parameter triple of one counting problem: universe bound `n`, slack
/// factor `p`, progression difference `q`. All three are at least 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SchreierParams {
    n: u64,
    p: u64,
    q: u64,
}

impl SchreierParams {
    /// Panics if any component is zero.
    pub fn new(n: u64, p: u64, q: u64) -> Self {
        assert!(n >= 1 && p >= 1 && q >= 1, "parameters must be positive");
        Self { n, p, q }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for SchreierParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, p={}, q={})", self.n, self.p, self.q)
    }
}

/// A nonempty set of positive integers that is a singleton or an arithmetic
/// progression: `{start, start+diff, .., start+(len−1)·diff}`.
///
/// Singletons are the same set no matter which difference they were written
/// with, so the constructor normalises `diff` to 1 whenever `len == 1`; two
/// representations of one set always compare equal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ApSet {
    start: u64,
    len: u64,
    diff: u64,
}

impl ApSet {
    /// Panics if `start`, `len` or `diff` is zero.
    pub fn new(start: u64, len: u64, diff: u64) -> Self {
        assert!(start >= 1, "smallest element must be positive");
        assert!(len >= 1, "the empty set is not representable");
        assert!(diff >= 1, "difference must be positive");
        let diff = if len == 1 { 1 } else { diff };
        Self { start, len, diff }
    }

    pub fn singleton(value: u64) -> Self {
        Self::new(value, 1, 1)
    }

    /// Smallest element.
    pub fn min_element(&self) -> u64 {
        self.start
    }

    /// Largest element, `start + (len−1)·diff`.
    pub fn max_element(&self) -> u64 {
        self.start + (self.len - 1) * self.diff
    }

    /// Cardinality.
    pub fn len(&self) -> u64 {
        self.len
    }

    /// Common difference (1 for singletons).
    pub fn diff(&self) -> u64 {
        self.diff
    }

    pub fn is_singleton(&self) -> bool {
        self.len == 1
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(move |i| self.start + i * self.diff)
    }
}

impl fmt::Display for ApSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// A multi-element set was checked against parameters with a different
/// progression difference; the caller mixed two families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilyMismatch {
    pub expected: u64,
    pub found: u64,
}

impl fmt::Display for FamilyMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "set has difference {} but the parameters use difference {}",
            self.found, self.expected
        )
    }
}

impl std::error::Error for FamilyMismatch {}

/// Whether `f` is counted by `Sr(n, p, q)`: all elements in `[n]` and
/// `p · min F ≥ |F|`.
///
/// Singletons pass the family check for every `q`; a set with more than one
/// element and a difference other than `params.q` is rejected as an error
/// rather than counted as inadmissible.
pub fn is_admissible(f: &ApSet, params: &SchreierParams) -> Result<bool, FamilyMismatch> {
    if !f.is_singleton() && f.diff() != params.q() {
        return Err(FamilyMismatch {
            expected: params.q(),
            found: f.diff(),
        });
    }
    let slack = params
        .p()
        .checked_mul(f.min_element())
        .expect("overflow computing p * min F");
    Ok(f.max_element() <= params.n() && slack >= f.len())
}

/// Every admissible set, exactly once, in lexicographic `(start, length)`
/// order.
///
/// The stream is never empty: all singletons `{1}, .., {n}` are admissible.
pub fn enumerate_admissible(params: SchreierParams) -> impl Iterator<Item = ApSet> {
    let SchreierParams { n, p, q } = params;
    (1..=n).flat_map(move |start| {
        // Longest progression from `start` that stays within [n], then the
        // slack bound p * start on the cardinality.
        let fit = (n - start) / q + 1;
        let slack = p.saturating_mul(start);
        (1..=fit.min(slack)).map(move |len| ApSet::new(start, len, q))
    })
}

/// `Sr(n, p, q)` by exhaustive enumeration. Reference oracle for every other
/// computation path in the crate.
pub fn sr_bruteforce(params: &SchreierParams) -> u64 {
    enumerate_admissible(*params).count() as u64
}

/// `Sr(n, p, q)` as `1 + Σ_{i=1}^{n−1} ⌊p(i+q+1)/(pq+1)⌋`.
pub fn sr_partial_sum(params: &SchreierParams) -> u64 {
    let (n, p, q) = (params.n(), params.p(), params.q());
    let modulus = p.checked_mul(q).and_then(|pq| pq.checked_add(1)).expect("overflow computing pq + 1");
    let mut total: u64 = 1;
    for i in 1..n {
        let numerator = p
            .checked_mul(i + q + 1)
            .expect("overflow computing p(i + q + 1)");
        total = total
            .checked_add(numerator / modulus)
            .expect("overflow accumulating partial sum");
    }
    total
}

/// The forward step `Sr(n+1, p, q) − Sr(n, p, q)`.
///
/// Writes `n = (pq+1)ℓ + k` with `0 ≤ k ≤ pq` and returns
/// `⌊(n−ℓ−1)/q⌋ + 1` when `(p−1)q < k`, else `⌊(n−ℓ)/q⌋ + 1`. Always equals
/// the closed floor `⌊p(n+q+1)/(pq+1)⌋`.
pub fn sr_difference(n: u64, p: u64, q: u64) -> u64 {
    assert!(n >= 1 && p >= 1 && q >= 1, "parameters must be positive");
    let modulus = p.checked_mul(q).and_then(|pq| pq.checked_add(1)).expect("overflow computing pq + 1");
    let (ell, k) = quot_rem(n, modulus, Remainder::ZeroBased);
    if k > (p - 1) * q {
        // k >= 1 here, so n - ell >= pq*ell + 1 >= 1.
        (n - ell - 1) / q + 1
    } else {
        (n - ell) / q + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Sr(n, 2, 2) for n = 1..=19, fixed reference values.
    const SR_2_2_PREFIX: [u64; 19] = [
        1, 2, 4, 6, 8, 11, 14, 18, 22, 26, 31, 36, 42, 48, 54, 61, 68, 76, 84,
    ];

    /// Independent oracle: walk all 2^n subsets of [n], test family
    /// membership and slack directly on the element list. Exercises the
    /// definition without the (start, length) parameterisation.
    fn sr_subset_oracle(n: u64, p: u64, q: u64) -> u64 {
        assert!(n <= 20);
        let mut count = 0u64;
        for mask in 1u32..(1 << n) {
            let elems: Vec<u64> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
            let in_family = elems.len() == 1
                || elems.windows(2).all(|w| w[1] - w[0] == q);
            if in_family && p * elems[0] >= elems.len() as u64 {
                count += 1;
            }
        }
        count
    }

    /// Independent oracle for q = 1: count intervals [a, b] ⊆ [1, n] with
    /// p·a ≥ b − a + 1.
    fn sr_interval_oracle(n: u64, p: u64) -> u64 {
        let mut count = 0u64;
        for a in 1..=n {
            for b in a..=n {
                if p * a >= b - a + 1 {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    #[should_panic]
    fn params_reject_zero() {
        SchreierParams::new(3, 0, 1);
    }

    #[test]
    fn singleton_is_difference_free() {
        assert_eq!(ApSet::new(3, 1, 5), ApSet::singleton(3));
        assert_eq!(ApSet::new(3, 1, 5).diff(), 1);
    }

    #[test]
    fn apset_extremes_and_elements() {
        let f = ApSet::new(2, 3, 2);
        assert_eq!(f.min_element(), 2);
        assert_eq!(f.max_element(), 6);
        assert_eq!(f.len(), 3);
        assert_eq!(f.elements().collect::<Vec<_>>(), vec![2, 4, 6]);
        assert_eq!(f.to_string(), "{2, 4, 6}");
    }

    #[test]
    fn admissibility_examples() {
        let one = SchreierParams::new(1, 1, 1);
        assert_eq!(is_admissible(&ApSet::singleton(1), &one), Ok(true));

        let p522 = SchreierParams::new(5, 2, 2);
        assert_eq!(is_admissible(&ApSet::new(2, 2, 2), &p522), Ok(true));

        let p311 = SchreierParams::new(3, 1, 1);
        assert_eq!(is_admissible(&ApSet::new(1, 2, 1), &p311), Ok(false));
    }

    #[test]
    fn admissibility_rejects_mixed_difference() {
        let params = SchreierParams::new(9, 2, 2);
        let err = is_admissible(&ApSet::new(1, 2, 3), &params).unwrap_err();
        assert_eq!(err, FamilyMismatch { expected: 2, found: 3 });
        // Singletons carry no difference and are never rejected.
        assert_eq!(is_admissible(&ApSet::new(4, 1, 3), &params), Ok(true));
    }

    #[test]
    fn enumeration_smallest_universe() {
        let got: Vec<_> = enumerate_admissible(SchreierParams::new(1, 1, 1)).collect();
        assert_eq!(got, vec![ApSet::singleton(1)]);
    }

    #[test]
    fn enumeration_intervals_in_three() {
        let got: Vec<_> = enumerate_admissible(SchreierParams::new(3, 1, 1)).collect();
        // Lexicographic (start, length) order.
        assert_eq!(
            got,
            vec![
                ApSet::singleton(1),
                ApSet::singleton(2),
                ApSet::new(2, 2, 1),
                ApSet::singleton(3),
            ]
        );
    }

    #[test]
    fn enumeration_gap_two_in_three() {
        let got: Vec<_> = enumerate_admissible(SchreierParams::new(3, 2, 2)).collect();
        assert_eq!(
            got,
            vec![
                ApSet::singleton(1),
                ApSet::new(1, 2, 2),
                ApSet::singleton(2),
                ApSet::singleton(3),
            ]
        );
    }

    #[test]
    fn bruteforce_known_values() {
        for p in 1..=4 {
            for q in 1..=4 {
                assert_eq!(sr_bruteforce(&SchreierParams::new(1, p, q)), 1);
            }
        }
        assert_eq!(sr_bruteforce(&SchreierParams::new(3, 1, 1)), 4);
        assert_eq!(sr_bruteforce(&SchreierParams::new(6, 2, 2)), 11);
        assert_eq!(sr_bruteforce(&SchreierParams::new(19, 2, 2)), 84);
    }

    #[test]
    fn bruteforce_matches_subset_oracle() {
        for n in 1..=14 {
            for p in 1..=3 {
                for q in 1..=3 {
                    let params = SchreierParams::new(n, p, q);
                    assert_eq!(
                        sr_bruteforce(&params),
                        sr_subset_oracle(n, p, q),
                        "mismatch at {params}"
                    );
                }
            }
        }
    }

    #[test]
    fn gap_one_matches_interval_oracle() {
        for n in 1..=60 {
            for p in 1..=5 {
                assert_eq!(
                    sr_bruteforce(&SchreierParams::new(n, p, 1)),
                    sr_interval_oracle(n, p),
                    "mismatch at n={n} p={p}"
                );
            }
        }
    }

    #[test]
    fn partial_sum_base_and_known_value() {
        for p in 1..=5 {
            for q in 1..=5 {
                assert_eq!(sr_partial_sum(&SchreierParams::new(1, p, q)), 1);
            }
        }
        // 1 + ⌊8/5⌋ + ⌊10/5⌋ + ⌊12/5⌋ = 6
        assert_eq!(sr_partial_sum(&SchreierParams::new(4, 2, 2)), 6);
    }

    #[test]
    fn partial_sum_matches_bruteforce_spot() {
        let params = SchreierParams::new(10, 3, 4);
        assert_eq!(sr_partial_sum(&params), sr_bruteforce(&params));
    }

    #[test]
    fn reference_prefix_reproduced() {
        for (i, expected) in SR_2_2_PREFIX.iter().enumerate() {
            let params = SchreierParams::new(i as u64 + 1, 2, 2);
            assert_eq!(sr_partial_sum(&params), *expected);
            assert_eq!(sr_bruteforce(&params), *expected);
        }
    }

    #[test]
    fn difference_known_values() {
        assert_eq!(sr_difference(1, 2, 2), 1);
        assert_eq!(sr_difference(5, 2, 2), 3);
        assert_eq!(sr_difference(7, 1, 1), 4);
    }

    #[test]
    fn difference_matches_bruteforce_and_floor() {
        for p in 1..=4 {
            for q in 1..=4 {
                for n in 1..=60 {
                    let diff = sr_difference(n, p, q);
                    let bf = sr_bruteforce(&SchreierParams::new(n + 1, p, q))
                        - sr_bruteforce(&SchreierParams::new(n, p, q));
                    assert_eq!(diff, bf, "case split vs brute force at n={n} p={p} q={q}");
                    assert_eq!(diff, p * (n + q + 1) / (p * q + 1), "case split vs closed floor");
                }
            }
        }
    }

    #[test]
    fn gap_one_difference_matches_ceiling_form() {
        // For q = 1 the case split reduces to n+2 − ⌈(n+2)/(p+1)⌉.
        for p in 1..=8u64 {
            for n in 1..=120u64 {
                let ceil = (n + 2).div_ceil(p + 1);
                assert_eq!(sr_difference(n, p, 1), n + 2 - ceil, "mismatch at n={n} p={p}");
            }
        }
    }

    #[test]
    fn counts_strictly_increase() {
        for p in 1..=3 {
            for q in 1..=3 {
                for n in 1..=40 {
                    assert!(sr_difference(n, p, q) >= 1);
                    assert!(
                        sr_bruteforce(&SchreierParams::new(n + 1, p, q))
                            > sr_bruteforce(&SchreierParams::new(n, p, q))
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn enumeration_is_sorted_unique_admissible(n in 1u64..80, p in 1u64..7, q in 1u64..7) {
            let params = SchreierParams::new(n, p, q);
            let sets: Vec<_> = enumerate_admissible(params).collect();
            prop_assert_eq!(sets.len() as u64, sr_bruteforce(&params));
            for w in sets.windows(2) {
                prop_assert!(w[0] < w[1], "stream out of order or duplicated");
            }
            for f in &sets {
                prop_assert_eq!(is_admissible(f, &params), Ok(true));
            }
        }

        #[test]
        fn partial_sum_matches_bruteforce(n in 1u64..120, p in 1u64..7, q in 1u64..7) {
            let params = SchreierParams::new(n, p, q);
            prop_assert_eq!(sr_partial_sum(&params), sr_bruteforce(&params));
        }
    }
}
