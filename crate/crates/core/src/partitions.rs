//! Integer-partition primitives.
//!
//! Everything else in the crate is built on three small pieces of partition
//! combinatorics: admissibility of a pair `(A, B)` at level `k` and rank `n`,
//! the decrement sets `S^τ_j` (all ways to decrease `j` distinct parts of `τ`
//! by one), and the consecutive entry blocks `U_j` / `V_j` cut out of
//! `{1, …, ℓ}` by the parts of a partition.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty sequence is the unique partition of 0. All equality and ordering
/// is on the canonical weakly decreasing form; constructors reject anything
/// else rather than sorting silently.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Error produced when parsing or validating a would-be partition.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParsePartitionError {
    /// The input contained no parts at all.
    #[error("empty partition literal; write at least one part")]
    Empty,
    /// A part failed to parse as a positive integer.
    #[error("invalid part {0:?}: parts must be positive integers")]
    InvalidPart(String),
    /// A zero part appeared.
    #[error("parts must be ≥ 1 (got 0)")]
    ZeroPart,
    /// Parts were not weakly decreasing.
    #[error("parts must be weakly decreasing (got {0} before {1})")]
    Unsorted(usize, usize),
}

impl Partition {
    /// Creates a partition from weakly decreasing positive parts.
    ///
    /// # Panics
    ///
    /// Panics if the parts are not weakly decreasing or contain a zero.
    pub fn new(parts: Vec<usize>) -> Self {
        match Self::try_new(parts) {
            Ok(p) => p,
            Err(e) => panic!("invalid partition: {e}"),
        }
    }

    /// Fallible variant of [`Partition::new`].
    pub fn try_new(parts: Vec<usize>) -> Result<Self, ParsePartitionError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(ParsePartitionError::Unsorted(w[0], w[1]));
            }
        }
        if parts.contains(&0) {
            return Err(ParsePartitionError::ZeroPart);
        }
        Ok(Self { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The partition `(1, 1, …, 1)` with `m` parts.
    pub fn ones(m: usize) -> Self {
        Self { parts: vec![1; m] }
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `l(·)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True iff this is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts `|·|`.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The largest part, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `i`-th part (0-based), or 0 past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Containment of Young diagrams: every part of `other` fits under the
    /// corresponding part of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.get(i) <= self.get(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    /// Parses comma-separated descending parts, e.g. `"4,3,3"`. Non-sorted
    /// input is rejected rather than sorted, to catch typos.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(ParsePartitionError::Empty);
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: usize = tok
                .parse()
                .map_err(|_| ParsePartitionError::InvalidPart(tok.to_string()))?;
            parts.push(p);
        }
        Self::try_new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::try_new(parts).map_err(D::Error::custom)
    }
}

/// Why a pair `(A, B, ell)` fails to be admissible at level `k`, rank `n`.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AdmissibilityError {
    /// `|A|` or `|B|` differs from `ell`.
    #[error("|A| = {a_sum} and |B| = {b_sum} must both equal ell = {ell}")]
    SumMismatch {
        /// Sum of the parts of `A`.
        a_sum: usize,
        /// Sum of the parts of `B`.
        b_sum: usize,
        /// The common size both must equal.
        ell: usize,
    },
    /// The largest parts together exceed the level.
    #[error("largest parts a₁ + b₁ = {a1} + {b1} exceed the level k = {k}")]
    LevelExceeded {
        /// Largest part of `A`.
        a1: usize,
        /// Largest part of `B`.
        b1: usize,
        /// The level.
        k: usize,
    },
    /// The lengths together exceed the rank parameter.
    #[error("lengths l(A) + l(B) = {r} + {q} exceed n = {n}")]
    LengthExceeded {
        /// Length of `A`.
        r: usize,
        /// Length of `B`.
        q: usize,
        /// The rank parameter.
        n: usize,
    },
}

/// Checks admissibility of `(A, B, ell)` at level `k` and rank `n`,
/// reporting the first violated constraint.
pub fn check_admissible_pair(
    a: &Partition,
    b: &Partition,
    ell: usize,
    k: usize,
    n: usize,
) -> Result<(), AdmissibilityError> {
    if a.sum() != ell || b.sum() != ell {
        return Err(AdmissibilityError::SumMismatch {
            a_sum: a.sum(),
            b_sum: b.sum(),
            ell,
        });
    }
    if a.largest() + b.largest() > k {
        return Err(AdmissibilityError::LevelExceeded {
            a1: a.largest(),
            b1: b.largest(),
            k,
        });
    }
    if a.len() + b.len() > n {
        return Err(AdmissibilityError::LengthExceeded {
            r: a.len(),
            q: b.len(),
            n,
        });
    }
    Ok(())
}

/// True iff `|A| = |B| = ell`, `a₁ + b₁ ≤ k` and `l(A) + l(B) ≤ n`.
pub fn is_admissible_pair(a: &Partition, b: &Partition, ell: usize, k: usize, n: usize) -> bool {
    check_admissible_pair(a, b, ell, k, n).is_ok()
}

/// The decrement set `S^τ_j`: every partition of `|τ| − j` obtained by
/// choosing `j` distinct part-positions of `τ`, decreasing each chosen part
/// by 1, discarding zeros and resorting. Distinct position choices can
/// collide after sorting; the result has set semantics.
///
/// # Panics
///
/// Panics if `j > l(τ)` (there is no way to choose `j` distinct parts).
pub fn decrement_set(tau: &Partition, j: usize) -> BTreeSet<Partition> {
    assert!(
        j <= tau.len(),
        "cannot decrement {j} distinct parts of {tau}, which has only {} parts",
        tau.len()
    );
    // Group equal parts into runs. Decrementing t copies of a value is the
    // same outcome no matter which t positions within the run are chosen, and
    // distinct per-run count vectors always produce distinct multisets, so
    // enumerating count vectors visits every element of S^τ_j exactly once.
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for &p in tau.parts() {
        match runs.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => runs.push((p, 1)),
        }
    }

    let mut out = BTreeSet::new();
    let mut chosen = vec![0usize; runs.len()];
    fn go(
        runs: &[(usize, usize)],
        idx: usize,
        remaining: usize,
        chosen: &mut [usize],
        out: &mut BTreeSet<Partition>,
    ) {
        if idx == runs.len() {
            if remaining == 0 {
                let mut parts: Vec<usize> = Vec::new();
                for (i, &(v, c)) in runs.iter().enumerate() {
                    parts.extend(std::iter::repeat_n(v, c - chosen[i]));
                    if v > 1 {
                        parts.extend(std::iter::repeat_n(v - 1, chosen[i]));
                    }
                }
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let fresh = out.insert(Partition::new(parts));
                debug_assert!(fresh, "run-count enumeration produced a duplicate");
            }
            return;
        }
        let (_, c) = runs[idx];
        for t in 0..=c.min(remaining) {
            chosen[idx] = t;
            go(runs, idx + 1, remaining - t, chosen, out);
        }
        chosen[idx] = 0;
    }
    go(&runs, 0, j, &mut chosen, &mut out);
    out
}

/// Consecutive blocks of `{1, …, m}` with prescribed widths: block 0 is
/// `{1, …, p₁}`, block 1 is the next `p₂` values, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    // Inclusive (start, end) value bounds per block, 1-based.
    bounds: Vec<(usize, usize)>,
}

impl BlockPartition {
    /// Number of blocks.
    pub fn count(&self) -> usize {
        self.bounds.len()
    }

    /// Total number of values covered.
    pub fn total(&self) -> usize {
        self.bounds.last().map_or(0, |&(_, e)| e)
    }

    /// The value range of block `j` (0-based block index; 1-based values).
    pub fn block(&self, j: usize) -> RangeInclusive<usize> {
        let (s, e) = self.bounds[j];
        s..=e
    }

    /// The 0-based index of the block containing `value`.
    ///
    /// # Panics
    ///
    /// Panics if `value` is outside `1..=total()`.
    pub fn block_of(&self, value: usize) -> usize {
        self.bounds
            .iter()
            .position(|&(s, e)| s <= value && value <= e)
            .unwrap_or_else(|| panic!("value {value} outside 1..={}", self.total()))
    }

    /// True iff `x` and `y` lie in the same block.
    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of(x) == self.block_of(y)
    }
}

/// Cuts `{1, …, |P|}` into consecutive blocks whose widths are the parts of
/// `P`: the blocks `U_j` (or `V_j`) used by the tableau and permutation
/// constraints.
///
/// # Panics
///
/// Panics if `P` is empty.
pub fn blocks(p: &Partition) -> BlockPartition {
    assert!(!p.is_empty(), "blocks of the empty partition are undefined");
    let mut bounds = Vec::with_capacity(p.len());
    let mut start = 1;
    for &w in p.parts() {
        bounds.push((start, start + w - 1));
        start += w;
    }
    BlockPartition { bounds }
}

/// All partitions of `m` with every part ≤ `max_part` and at most `max_len`
/// parts, in descending lexicographic order.
pub fn partitions_bounded(m: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn go(m: usize, max_part: usize, max_len: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if m == 0 {
            out.push(Partition::new(acc.clone()));
            return;
        }
        if max_len == 0 || max_part == 0 {
            return;
        }
        for p in (1..=max_part.min(m)).rev() {
            // Even with all remaining slots at size p we must be able to reach m.
            if p * (max_len - 1) + p < m {
                continue;
            }
            acc.push(p);
            go(m - p, p, max_len - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    go(m, max_part, max_len, &mut acc, &mut out);
    out
}

/// All partitions of `m`, in descending lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    partitions_bounded(m, m.max(1), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn new_accepts_weakly_decreasing() {
        assert_eq!(p(&[4, 3, 3]).parts(), &[4, 3, 3]);
        assert_eq!(Partition::empty().len(), 0);
        assert_eq!(p(&[2, 2, 1]).sum(), 5);
        assert_eq!(p(&[2, 2, 1]).largest(), 2);
        assert_eq!(Partition::empty().largest(), 0);
    }

    #[test]
    #[should_panic(expected = "invalid partition")]
    fn new_rejects_increasing() {
        p(&[3, 4]);
    }

    #[test]
    #[should_panic(expected = "invalid partition")]
    fn new_rejects_zero() {
        p(&[2, 0]);
    }

    #[test]
    fn parse_round_trips() {
        assert_eq!("4,3,3".parse::<Partition>().unwrap(), p(&[4, 3, 3]));
        assert_eq!("1".parse::<Partition>().unwrap(), p(&[1]));
        assert_eq!(
            "3,4".parse::<Partition>(),
            Err(ParsePartitionError::Unsorted(3, 4))
        );
        assert_eq!("".parse::<Partition>(), Err(ParsePartitionError::Empty));
        assert!(matches!(
            "2,x".parse::<Partition>(),
            Err(ParsePartitionError::InvalidPart(_))
        ));
        assert_eq!("2,0".parse::<Partition>(), Err(ParsePartitionError::ZeroPart));
    }

    #[test]
    fn display_and_json_forms() {
        assert_eq!(p(&[3, 2, 1]).to_string(), "(3, 2, 1)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(serde_json::to_string(&p(&[4, 3, 3])).unwrap(), "[4,3,3]");
        let back: Partition = serde_json::from_str("[4,3,3]").unwrap();
        assert_eq!(back, p(&[4, 3, 3]));
        assert!(serde_json::from_str::<Partition>("[3,4]").is_err());
    }

    #[test]
    fn containment_is_componentwise() {
        assert!(p(&[3, 2]).contains(&p(&[2, 2])));
        assert!(p(&[3, 2]).contains(&Partition::empty()));
        assert!(!p(&[3]).contains(&p(&[1, 1])));
        assert!(p(&[2, 1]).contains(&p(&[2, 1])));
    }

    #[test]
    fn admissibility_examples() {
        // A large worked pair, a minimal pair, and a level violation.
        assert!(is_admissible_pair(
            &p(&[4, 3, 3]),
            &p(&[3, 2, 2, 1, 1, 1]),
            10,
            7,
            12
        ));
        assert!(is_admissible_pair(&p(&[1]), &p(&[1]), 1, 2, 2));
        assert!(!is_admissible_pair(
            &p(&[4, 3, 3]),
            &p(&[4, 2, 2, 1, 1]),
            10,
            7,
            12
        ));
        assert_eq!(
            check_admissible_pair(&p(&[4, 3, 3]), &p(&[4, 2, 2, 1, 1]), 10, 7, 12),
            Err(AdmissibilityError::LevelExceeded { a1: 4, b1: 4, k: 7 })
        );
        // Length violation: 1+4 > 4.
        assert_eq!(
            check_admissible_pair(&p(&[4]), &p(&[1, 1, 1, 1]), 4, 7, 4),
            Err(AdmissibilityError::LengthExceeded { r: 1, q: 4, n: 4 })
        );
        // Size mismatch.
        assert!(!is_admissible_pair(&p(&[2]), &p(&[1]), 2, 7, 12));
    }

    #[test]
    fn decrement_set_known_value() {
        let got = decrement_set(&p(&[3, 2, 2, 1]), 2);
        let want: BTreeSet<Partition> = [
            p(&[2, 2, 1, 1]),
            p(&[2, 2, 2]),
            p(&[3, 1, 1, 1]),
            p(&[3, 2, 1]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn decrement_set_edges() {
        let tau = p(&[3, 2, 2, 1]);
        assert_eq!(
            decrement_set(&tau, 0),
            [tau.clone()].into_iter().collect::<BTreeSet<_>>()
        );
        assert_eq!(
            decrement_set(&p(&[1, 1, 1]), 3),
            [Partition::empty()].into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    #[should_panic(expected = "cannot decrement")]
    fn decrement_set_rejects_too_many() {
        decrement_set(&p(&[2, 1]), 3);
    }

    /// Brute-force oracle: shapes reachable from τ by removing one box from
    /// each of `j` distinct rows, in some order, with every intermediate
    /// shape a valid partition.
    fn row_removal_shapes(tau: &Partition, j: usize) -> BTreeSet<Partition> {
        fn weakly_decreasing(v: &[usize]) -> bool {
            v.windows(2).all(|w| w[0] >= w[1])
        }
        fn go(
            v: &mut Vec<usize>,
            used: &mut Vec<bool>,
            remaining: usize,
            out: &mut BTreeSet<Partition>,
        ) {
            if remaining == 0 {
                let parts: Vec<usize> = v.iter().copied().filter(|&x| x > 0).collect();
                out.insert(Partition::new(parts));
                return;
            }
            for i in 0..v.len() {
                if used[i] || v[i] == 0 {
                    continue;
                }
                v[i] -= 1;
                if weakly_decreasing(v) {
                    used[i] = true;
                    go(v, used, remaining - 1, out);
                    used[i] = false;
                }
                v[i] += 1;
            }
        }
        let mut out = BTreeSet::new();
        let mut v = tau.parts().to_vec();
        let mut used = vec![false; v.len()];
        go(&mut v, &mut used, j, &mut out);
        out
    }

    /// Second oracle, straight from the definition: decrement every j-subset
    /// of part positions, sort, drop zeros, merge duplicates.
    fn position_subset_shapes(tau: &Partition, j: usize) -> BTreeSet<Partition> {
        let l = tau.len();
        let mut out = BTreeSet::new();
        for mask in 0..(1u32 << l) {
            if mask.count_ones() as usize != j {
                continue;
            }
            let mut parts: Vec<usize> = tau
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask & (1 << i) != 0 { v - 1 } else { v })
                .filter(|&v| v > 0)
                .collect();
            parts.sort_unstable_by(|x, y| y.cmp(x));
            out.insert(Partition::new(parts));
        }
        out
    }

    #[test]
    fn decrement_set_matches_both_oracles_up_to_size_8() {
        for m in 0..=8 {
            for tau in partitions_of(m) {
                for j in 0..=tau.len() {
                    let fast = decrement_set(&tau, j);
                    assert_eq!(
                        fast,
                        row_removal_shapes(&tau, j),
                        "row-removal mismatch at tau={tau}, j={j}"
                    );
                    assert_eq!(
                        fast,
                        position_subset_shapes(&tau, j),
                        "position-subset mismatch at tau={tau}, j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn blocks_examples() {
        let u = blocks(&p(&[4, 3, 3]));
        assert_eq!(u.count(), 3);
        assert_eq!(u.block(0), 1..=4);
        assert_eq!(u.block(1), 5..=7);
        assert_eq!(u.block(2), 8..=10);
        assert_eq!(u.block_of(6), 1);
        assert!(u.same_block(8, 10));
        assert!(!u.same_block(4, 5));

        let v = blocks(&p(&[3, 2, 2, 1, 1, 1]));
        assert_eq!(v.count(), 6);
        assert_eq!(v.block(0), 1..=3);
        assert_eq!(v.block(1), 4..=5);
        assert_eq!(v.block(2), 6..=7);
        assert_eq!(v.block(3), 8..=8);
        assert_eq!(v.block(5), 10..=10);

        let single = blocks(&p(&[1]));
        assert_eq!(single.count(), 1);
        assert_eq!(single.block(0), 1..=1);
    }

    #[test]
    fn partition_enumeration_is_complete_and_ordered() {
        let all5 = partitions_of(5);
        assert_eq!(all5.len(), 7);
        let mut sorted = all5.clone();
        sorted.sort_by(|x, y| y.cmp(x));
        assert_eq!(all5, sorted, "descending lexicographic order");

        let bounded = partitions_bounded(5, 2, 3);
        assert_eq!(bounded, vec![p(&[2, 2, 1])]);
        assert_eq!(partitions_bounded(0, 3, 3), vec![Partition::empty()]);
        assert!(partitions_bounded(5, 1, 3).is_empty());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..=6, 0..=8).prop_map(|mut v| {
            v.sort_unstable_by(|x, y| y.cmp(x));
            Partition::new(v)
        })
    }

    proptest! {
        #[test]
        fn decrement_set_elements_are_valid(tau in arb_partition(), j in 0usize..=8) {
            prop_assume!(j <= tau.len());
            for mu in decrement_set(&tau, j) {
                prop_assert_eq!(mu.sum(), tau.sum() - j);
                prop_assert!(mu.len() <= tau.len());
                prop_assert!(mu.largest() <= tau.largest());
                prop_assert!(tau.contains(&mu), "{} not inside {}", mu, tau);
            }
        }

        #[test]
        fn containment_is_transitive(a in arb_partition(), b in arb_partition(), c in arb_partition()) {
            if a.contains(&b) && b.contains(&c) {
                prop_assert!(a.contains(&c));
            }
        }
    }
}
