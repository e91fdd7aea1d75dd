//! Multiplicity method 4: pattern-avoiding permutations with block-order
//! constraints, connected to tableau pairs by the RSK correspondence.
//!
//! The counted objects are permutations `w` of `{1, …, ℓ}` with no strictly
//! decreasing subsequence of length `k + 1`, whose values within each
//! `U`-block (widths from `A`) occur in decreasing order left to right, and
//! whose letters within each `V`-block of positions (widths from `B`) are
//! decreasing. [`rsk_forward`] (Schensted row insertion) carries these
//! permutations bijectively onto the tableau pairs of method 3;
//! [`rsk_reverse`] bumps the pairs back out.

use serde::{Deserialize, Serialize};

use crate::partitions::{blocks, Partition};
use crate::tableaux::{StandardYoungTableau, SytPair};

/// A permutation of `{1, …, ℓ}` in one-line notation: `word[i]` is the image
/// of `i + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates and wraps a one-line word.
    ///
    /// # Panics
    ///
    /// Panics if the word is empty or is not a bijection on `1..=len`.
    pub fn new(word: Vec<usize>) -> Self {
        let ell = word.len();
        assert!(ell >= 1, "a permutation must have at least one letter");
        let mut seen = vec![false; ell + 1];
        for &x in &word {
            assert!(
                (1..=ell).contains(&x),
                "letter {x} is outside 1..={ell}"
            );
            assert!(!seen[x], "letter {x} appears twice");
            seen[x] = true;
        }
        Self { word }
    }

    /// The one-line word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Number of letters.
    #[allow(clippy::len_without_is_empty)] // never empty by construction
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// `positions[v]` is the 1-based position of letter `v` (index 0 unused).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.word.len() + 1];
        for (i, &x) in self.word.iter().enumerate() {
            pos[x] = i + 1;
        }
        pos
    }

    /// One line of space-separated letters ending in a newline. With
    /// `zero_for_largest`, the letter `ℓ` prints as `0` — a display
    /// convention for ten-letter words; the stored word is unchanged.
    pub fn render(&self, zero_for_largest: bool) -> String {
        let ell = self.len();
        let line: Vec<String> = self
            .word
            .iter()
            .map(|&x| {
                if zero_for_largest && x == ell {
                    "0".to_string()
                } else {
                    x.to_string()
                }
            })
            .collect();
        let mut out = line.join(" ");
        out.push('\n');
        out
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let words: Vec<String> = self.word.iter().map(usize::to_string).collect();
        write!(f, "{}", words.join(" "))
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let word = Vec::<usize>::deserialize(deserializer)?;
        let ell = word.len();
        if ell == 0 {
            return Err(serde::de::Error::custom("empty permutation"));
        }
        let mut seen = vec![false; ell + 1];
        for &x in &word {
            if !(1..=ell).contains(&x) || seen[x] {
                return Err(serde::de::Error::custom(format!(
                    "not a permutation of 1..={ell}: letter {x}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self { word })
    }
}

/// Schensted row insertion: inserts `w₁, …, w_ℓ` into `M` (each incoming
/// value replaces the smallest entry larger than it, bumping that entry into
/// the next row, appending at the row end when nothing is larger) and records
/// the growth cell of step `t` in `N` with label `t`. Inverse of
/// [`rsk_reverse`].
pub fn rsk_forward(w: &Permutation) -> SytPair {
    let mut m_rows: Vec<Vec<usize>> = Vec::new();
    let mut n_rows: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in w.word().iter().enumerate() {
        let mut carry = x;
        let mut row = 0;
        loop {
            if row == m_rows.len() {
                m_rows.push(vec![carry]);
                n_rows.push(vec![i + 1]);
                break;
            }
            let idx = m_rows[row].partition_point(|&e| e < carry);
            if idx == m_rows[row].len() {
                m_rows[row].push(carry);
                n_rows[row].push(i + 1);
                break;
            }
            std::mem::swap(&mut carry, &mut m_rows[row][idx]);
            row += 1;
        }
    }
    SytPair {
        m: StandardYoungTableau::new(m_rows),
        n: StandardYoungTableau::new(n_rows),
    }
}

/// Reverse RSK bumping: for `t = ℓ` down to `1`, removes entry `t` from `N`
/// (it must sit at an outer corner), ejects the same cell of `M` upward —
/// each step the incoming value replaces the largest entry smaller than it —
/// and sets `w_t` to the value that leaves row 1. Inverse of [`rsk_forward`].
///
/// # Panics
///
/// Panics if the tableaux differ in shape, are not standard on `1..=ℓ`, or
/// an entry of `N` is not removable at an outer corner.
pub fn rsk_reverse(pair: &SytPair) -> Permutation {
    assert_eq!(pair.m.shape(), pair.n.shape(), "tableaux must share a shape");
    assert!(
        pair.m.is_standard() && pair.n.is_standard(),
        "both tableaux must be standard on 1..=ell"
    );
    let mut m_rows: Vec<Vec<usize>> = pair.m.rows().to_vec();
    let mut n_rows: Vec<Vec<usize>> = pair.n.rows().to_vec();
    let ell = pair.m.size();
    let mut word = vec![0usize; ell];
    for t in (1..=ell).rev() {
        let (i, j) = find_entry(&n_rows, t);
        assert!(
            j + 1 == n_rows[i].len() && (i + 1 == n_rows.len() || n_rows[i + 1].len() <= j),
            "entry {t} of the recording tableau is not at an outer corner"
        );
        n_rows[i].pop();
        let mut carry = m_rows[i].pop().expect("shapes agree");
        if n_rows[i].is_empty() {
            n_rows.pop();
            m_rows.pop();
        }
        for row in m_rows[..i].iter_mut().rev() {
            let idx = row.partition_point(|&e| e < carry);
            assert!(idx > 0, "no smaller entry to replace while bumping {carry} upward");
            std::mem::swap(&mut carry, &mut row[idx - 1]);
        }
        word[t - 1] = carry;
    }
    Permutation::new(word)
}

fn find_entry(rows: &[Vec<usize>], entry: usize) -> (usize, usize) {
    for (i, row) in rows.iter().enumerate() {
        if let Ok(j) = row.binary_search(&entry) {
            return (i, j);
        }
    }
    panic!("entry {entry} not present");
}

/// Length of the longest strictly decreasing subsequence, by patience piles:
/// scanning left to right, each letter lands on the leftmost pile whose top
/// is not larger (starting a new pile otherwise), and the pile tops stay
/// strictly decreasing; the pile count is the answer.
pub fn longest_decreasing_subsequence(w: &Permutation) -> usize {
    let mut tops: Vec<usize> = Vec::new();
    for &x in w.word() {
        place_on_piles(&mut tops, x);
    }
    tops.len()
}

/// One patience-pile step; returns the undo token for [`unplace_from_piles`].
fn place_on_piles(tops: &mut Vec<usize>, x: usize) -> Option<(usize, usize)> {
    let idx = tops.partition_point(|&t| t > x);
    if idx == tops.len() {
        tops.push(x);
        None
    } else {
        let old = tops[idx];
        tops[idx] = x;
        Some((idx, old))
    }
}

fn unplace_from_piles(tops: &mut Vec<usize>, undo: Option<(usize, usize)>) {
    match undo {
        None => {
            tops.pop();
        }
        Some((idx, old)) => tops[idx] = old,
    }
}

/// True iff (i) within each `U`-block of `A`, larger values occur at earlier
/// positions of `w` (each block's values read left to right are decreasing),
/// and (ii) within each `V`-block of positions from `B`, the letters of `w`
/// are decreasing.
///
/// # Panics
///
/// Panics unless `|A| = |B| = ℓ`.
pub fn satisfies_block_constraints(w: &Permutation, a: &Partition, b: &Partition) -> bool {
    let ell = w.len();
    assert!(
        a.sum() == ell && b.sum() == ell,
        "need |A| = |B| = {ell}, got A={a}, B={b}"
    );
    let u = blocks(a);
    let v = blocks(b);
    let pos = w.positions();
    for x in 1..ell {
        if u.same_block(x, x + 1) && pos[x] < pos[x + 1] {
            return false;
        }
    }
    let word = w.word();
    for i in 1..ell {
        if v.same_block(i, i + 1) && word[i - 1] < word[i] {
            return false;
        }
    }
    true
}

/// Shared backtracking over positions left to right: at each position the
/// candidates are the largest remaining value of each `U`-block (the block
/// conditions force every block's values to appear largest first), filtered
/// by the `V`-descent rule, with patience piles bounding the longest
/// decreasing subsequence by `k` incrementally.
fn search_words(
    a: &Partition,
    b: &Partition,
    ell: usize,
    k: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    assert!(
        !a.is_empty() && !b.is_empty() && a.sum() == ell && b.sum() == ell,
        "need |A| = |B| = ell ≥ 1, got A={a}, B={b}, ell={ell}"
    );
    let u = blocks(a);
    let v = blocks(b);
    // next_value[j]: the largest not-yet-placed value of U-block j, walking
    // down to the block's start as values are consumed.
    let mut next_value: Vec<usize> = (0..u.count()).map(|j| *u.block(j).end()).collect();
    let starts: Vec<usize> = (0..u.count()).map(|j| *u.block(j).start()).collect();
    let mut word: Vec<usize> = Vec::with_capacity(ell);
    let mut tops: Vec<usize> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        pos: usize,
        ell: usize,
        k: usize,
        v: &crate::partitions::BlockPartition,
        starts: &[usize],
        next_value: &mut Vec<usize>,
        word: &mut Vec<usize>,
        tops: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if pos > ell {
            visit(word);
            return;
        }
        let descent_bound = if pos > 1 && v.same_block(pos - 1, pos) {
            word[pos - 2]
        } else {
            usize::MAX
        };
        for j in 0..starts.len() {
            let x = next_value[j];
            if x < starts[j] || x >= descent_bound {
                continue;
            }
            let undo = place_on_piles(tops, x);
            if tops.len() <= k {
                next_value[j] -= 1;
                word.push(x);
                go(pos + 1, ell, k, v, starts, next_value, word, tops, visit);
                word.pop();
                next_value[j] += 1;
            }
            unplace_from_piles(tops, undo);
        }
    }
    go(
        1,
        ell,
        k,
        &v,
        &starts,
        &mut next_value,
        &mut word,
        &mut tops,
        visit,
    );
}

/// All counted permutations for `(A, B, ell, k)`, sorted lexicographically.
///
/// # Panics
///
/// Panics if `A` or `B` is empty or their sizes differ from `ell`.
pub fn enumerate_constrained_avoiding(
    a: &Partition,
    b: &Partition,
    ell: usize,
    k: usize,
) -> Vec<Permutation> {
    let mut out = Vec::new();
    search_words(a, b, ell, k, &mut |word| {
        out.push(Permutation::new(word.to_vec()));
    });
    out.sort();
    out
}

/// `|enumerate_constrained_avoiding(A, B, ell, k)|` without materializing
/// the words.
///
/// # Panics
///
/// Panics under the same conditions as [`enumerate_constrained_avoiding`].
pub fn count_constrained_avoiding(a: &Partition, b: &Partition, ell: usize, k: usize) -> u64 {
    let mut total = 0u64;
    search_words(a, b, ell, k, &mut |_| total += 1);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::tableaux::is_valid_syt_pair;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn syt(rows: &[&[usize]]) -> StandardYoungTableau {
        StandardYoungTableau::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn golden_word() -> Permutation {
        Permutation::new(vec![10, 9, 4, 7, 3, 6, 2, 8, 1, 5])
    }

    fn worked_pair() -> SytPair {
        SytPair {
            m: syt(&[&[1, 5, 8], &[2, 6], &[3, 7], &[4], &[9], &[10]]),
            n: syt(&[&[1, 4, 8], &[2, 6], &[3, 10], &[5], &[7], &[9]]),
        }
    }

    fn all_permutations(ell: usize) -> Vec<Permutation> {
        fn go(remaining: &mut Vec<usize>, word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if remaining.is_empty() {
                out.push(Permutation::new(word.clone()));
                return;
            }
            for i in 0..remaining.len() {
                let x = remaining.remove(i);
                word.push(x);
                go(remaining, word, out);
                word.pop();
                remaining.insert(i, x);
            }
        }
        let mut out = Vec::new();
        go(&mut (1..=ell).collect(), &mut Vec::new(), &mut out);
        out
    }

    #[test]
    #[should_panic(expected = "appears twice")]
    fn permutation_rejects_repeats() {
        Permutation::new(vec![1, 1]);
    }

    #[test]
    #[should_panic(expected = "outside 1..=")]
    fn permutation_rejects_out_of_range() {
        Permutation::new(vec![1, 3]);
    }

    #[test]
    fn forward_insertion_matches_the_worked_pair() {
        assert_eq!(rsk_forward(&golden_word()), worked_pair());
    }

    #[test]
    fn reverse_bumping_recovers_the_golden_word() {
        assert_eq!(rsk_reverse(&worked_pair()), golden_word());
    }

    #[test]
    fn trivial_cases() {
        let single = Permutation::new(vec![1]);
        let pair = rsk_forward(&single);
        assert_eq!(pair.m, syt(&[&[1]]));
        assert_eq!(pair.n, syt(&[&[1]]));
        assert_eq!(rsk_reverse(&pair), single);

        let identity = Permutation::new((1..=5).collect());
        let pair = rsk_forward(&identity);
        assert_eq!(pair.m, syt(&[&[1, 2, 3, 4, 5]]));
        assert_eq!(pair.n, syt(&[&[1, 2, 3, 4, 5]]));

        let reversed = Permutation::new((1..=4).rev().collect());
        let pair = rsk_forward(&reversed);
        assert_eq!(pair.m, syt(&[&[1], &[2], &[3], &[4]]));
        assert_eq!(pair.n, syt(&[&[1], &[2], &[3], &[4]]));
    }

    #[test]
    fn round_trip_all_short_words() {
        for ell in 1..=5 {
            for w in all_permutations(ell) {
                let pair = rsk_forward(&w);
                assert_eq!(pair.m.shape(), pair.n.shape());
                assert!(pair.m.is_standard() && pair.n.is_standard());
                assert_eq!(rsk_reverse(&pair), w, "round trip failed for {w}");
            }
        }
    }

    #[test]
    fn decreasing_subsequence_examples() {
        assert_eq!(longest_decreasing_subsequence(&golden_word()), 6);
        assert_eq!(
            longest_decreasing_subsequence(&Permutation::new((1..=6).collect())),
            1
        );
        assert_eq!(
            longest_decreasing_subsequence(&Permutation::new((1..=6).rev().collect())),
            6
        );
        assert_eq!(
            longest_decreasing_subsequence(&Permutation::new(vec![3, 1, 2])),
            2
        );
    }

    #[test]
    fn decreasing_subsequence_equals_insertion_row_count() {
        for ell in 1..=5 {
            for w in all_permutations(ell) {
                assert_eq!(
                    longest_decreasing_subsequence(&w),
                    rsk_forward(&w).m.shape().len(),
                    "Schensted row count mismatch for {w}"
                );
            }
        }
    }

    #[test]
    fn insertion_rows_track_value_positions() {
        // Consecutive values x, x+1: x+1 lands strictly below x in the
        // insertion tableau exactly when x+1 precedes x in the word.
        for ell in 2..=5 {
            for w in all_permutations(ell) {
                let pair = rsk_forward(&w);
                let pos = w.positions();
                for x in 1..ell {
                    let below = pair.m.find(x + 1).unwrap().0 > pair.m.find(x).unwrap().0;
                    assert_eq!(
                        below,
                        pos[x + 1] < pos[x],
                        "value row order vs positions failed for {w} at {x}"
                    );
                }
            }
        }
    }

    #[test]
    fn recording_rows_track_descents() {
        // Positions i, i+1: a descent w_i > w_{i+1} happens exactly when
        // i + 1 sits strictly below i in the recording tableau.
        for ell in 2..=5 {
            for w in all_permutations(ell) {
                let pair = rsk_forward(&w);
                for i in 1..ell {
                    let below = pair.n.find(i + 1).unwrap().0 > pair.n.find(i).unwrap().0;
                    let descent = w.word()[i - 1] > w.word()[i];
                    assert_eq!(
                        below, descent,
                        "recording row order vs descents failed for {w} at {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn block_constraint_examples() {
        assert!(satisfies_block_constraints(
            &golden_word(),
            &p(&[4, 3, 3]),
            &p(&[3, 2, 2, 1, 1, 1])
        ));
        // Singleton blocks constrain nothing.
        for w in all_permutations(3) {
            assert!(satisfies_block_constraints(&w, &p(&[1, 1, 1]), &p(&[1, 1, 1])));
        }
        // U-block {1, 2} must appear largest first.
        assert!(!satisfies_block_constraints(
            &Permutation::new(vec![1, 2]),
            &p(&[2]),
            &p(&[1, 1])
        ));
        // V-block {1, 2} of positions must carry a descent.
        assert!(!satisfies_block_constraints(
            &Permutation::new(vec![1, 2]),
            &p(&[1, 1]),
            &p(&[2])
        ));
    }

    #[test]
    fn counts_match_brute_force() {
        for ell in 1..=5usize {
            for a in partitions_of(ell) {
                for b in partitions_of(ell) {
                    for k in 1..=3 {
                        let expected = all_permutations(ell)
                            .into_iter()
                            .filter(|w| {
                                longest_decreasing_subsequence(w) <= k
                                    && satisfies_block_constraints(w, &a, &b)
                            })
                            .count() as u64;
                        assert_eq!(
                            count_constrained_avoiding(&a, &b, ell, k),
                            expected,
                            "count mismatch at A={a}, B={b}, k={k}"
                        );
                        let listed = enumerate_constrained_avoiding(&a, &b, ell, k);
                        assert_eq!(listed.len() as u64, expected);
                        assert!(listed.windows(2).all(|w| w[0] < w[1]), "sorted, distinct");
                    }
                }
            }
        }
    }

    #[test]
    fn catalan_counts() {
        let expected = [1u64, 2, 5, 14, 42];
        for (i, &c) in expected.iter().enumerate() {
            let ell = i + 1;
            let ones = Partition::ones(ell);
            assert_eq!(count_constrained_avoiding(&ones, &ones, ell, 2), c);
        }
    }

    #[test]
    fn headline_count_is_488() {
        let a = p(&[4, 3, 3]);
        let b = p(&[3, 2, 2, 1, 1, 1]);
        assert_eq!(count_constrained_avoiding(&a, &b, 10, 7), 488);
        let all = enumerate_constrained_avoiding(&a, &b, 10, 7);
        assert_eq!(all.len(), 488);
        assert!(all.contains(&golden_word()));
    }

    #[test]
    fn forward_insertion_lands_in_the_tableau_pair_set() {
        for ell in 1..=5usize {
            for a in partitions_of(ell) {
                for b in partitions_of(ell) {
                    for k in 1..=3 {
                        let words = enumerate_constrained_avoiding(&a, &b, ell, k);
                        let mut images: Vec<SytPair> =
                            words.iter().map(rsk_forward).collect();
                        images.sort();
                        images.dedup();
                        assert_eq!(images.len(), words.len(), "RSK must stay injective");
                        for pair in &images {
                            assert!(is_valid_syt_pair(pair, &a, &b, ell, k));
                        }
                        let direct = crate::tableaux::enumerate_syt_pairs(&a, &b, ell, k);
                        assert_eq!(
                            images, direct,
                            "RSK image differs from pair enumeration at A={a}, B={b}, k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn renders_with_and_without_zero_convention() {
        assert_eq!(golden_word().render(false), "10 9 4 7 3 6 2 8 1 5\n");
        assert_eq!(golden_word().render(true), "0 9 4 7 3 6 2 8 1 5\n");
        assert_eq!(golden_word().to_string(), "10 9 4 7 3 6 2 8 1 5");
    }

    #[test]
    fn serializes_as_plain_array() {
        let w = Permutation::new(vec![2, 1]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[2,1]");
        let back: Permutation = serde_json::from_str("[2,1]").unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<Permutation>("[1,3]").is_err());
    }
}
