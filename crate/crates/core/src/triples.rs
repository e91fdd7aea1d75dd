//! Multiplicity method 2: chains of partitions through decrement sets.
//!
//! A triple `(P, Q, τ)` consists of a core partition `τ ⊢ ℓ` together with two
//! chains descending from it: `P₁ ∈ S^τ_{a₁}, P₂ ∈ S^{P₁}_{a₂}, …` ending in
//! the all-ones column `(1^{a_r})`, and symmetrically a `Q`-chain driven by
//! `B`. The number of such triples is the weight multiplicity. Because the
//! two chains interact only through `τ`, the count factors as
//! `Σ_τ (#P-chains) · (#Q-chains)`, which [`count_triples`] exploits with a
//! memoized recursion while [`enumerate_triples`] materializes the whole set.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::partitions::{decrement_set, partitions_bounded, Partition};

/// A triple `(P, Q, τ)`: the shape `τ` plus the two decrement chains.
///
/// `P` has length `l(A) − 1` and `Q` has length `l(B) − 1`; the chains start
/// implicitly at `P₀ = Q₀ = τ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiplicityTriple {
    /// The common starting shape of both chains, a partition of `ℓ`.
    pub tau: Partition,
    /// The chain `P₁, …, P_{r−1}` descending from `τ` along `A`.
    #[serde(rename = "P")]
    pub p: Vec<Partition>,
    /// The chain `Q₁, …, Q_{q−1}` descending from `τ` along `B`.
    #[serde(rename = "Q")]
    pub q: Vec<Partition>,
}

/// Steps of a single decrement chain: from `prev`, stage `i` (1-based) picks
/// an element of `S^{prev}_{parts[i−1]}`; after stage `len−1` the resulting
/// shape must equal the all-ones partition of the last part.
fn chain_is_valid(tau: &Partition, chain: &[Partition], parts: &[usize]) -> bool {
    let r = parts.len();
    if chain.len() + 1 != r {
        return false;
    }
    let mut prev = tau;
    for (i, next) in chain.iter().enumerate() {
        let j = parts[i];
        if j > prev.len() || !decrement_set(prev, j).contains(next) {
            return false;
        }
        prev = next;
    }
    *prev == Partition::ones(parts[r - 1])
}

/// True iff `(t.tau, t.p, t.q)` is a valid triple for `(A, B, ell, k)`:
/// `τ ⊢ ℓ` with at most `k` parts and `τ₁ ≤ min{l(A), l(B)}`, the `P`-chain
/// steps through decrement sets along the parts of `A` to `(1^{a_r})`, and
/// the `Q`-chain does the same along `B`.
pub fn is_valid_triple(
    t: &MultiplicityTriple,
    a: &Partition,
    b: &Partition,
    ell: usize,
    k: usize,
) -> bool {
    if a.is_empty() || b.is_empty() || a.sum() != ell || b.sum() != ell {
        return false;
    }
    if t.tau.sum() != ell || t.tau.len() > k || t.tau.largest() > a.len().min(b.len()) {
        return false;
    }
    chain_is_valid(&t.tau, &t.p, a.parts()) && chain_is_valid(&t.tau, &t.q, b.parts())
}

/// Extends a partial chain in all valid ways, collecting complete chains.
fn collect_chains(
    prev: &Partition,
    stage: usize,
    parts: &[usize],
    acc: &mut Vec<Partition>,
    out: &mut Vec<Vec<Partition>>,
) {
    let r = parts.len();
    if stage == r {
        if *prev == Partition::ones(parts[r - 1]) {
            out.push(acc.clone());
        }
        return;
    }
    let j = parts[stage - 1];
    if j > prev.len() {
        return;
    }
    for next in decrement_set(prev, j) {
        acc.push(next.clone());
        collect_chains(&next, stage + 1, parts, acc, out);
        acc.pop();
    }
}

/// All valid triples for `(A, B, ell, k)`, sorted by `(τ, P, Q)`.
///
/// # Panics
///
/// Panics if `A` or `B` is empty or their sizes differ from `ell` (valid
/// inputs have `ℓ ≥ 1`).
pub fn enumerate_triples(
    a: &Partition,
    b: &Partition,
    ell: usize,
    k: usize,
) -> Vec<MultiplicityTriple> {
    assert!(
        !a.is_empty() && !b.is_empty() && a.sum() == ell && b.sum() == ell,
        "need |A| = |B| = ell ≥ 1, got A={a}, B={b}, ell={ell}"
    );
    let mut out = Vec::new();
    for tau in partitions_bounded(ell, a.len().min(b.len()), k) {
        let mut p_chains = Vec::new();
        collect_chains(&tau, 1, a.parts(), &mut Vec::new(), &mut p_chains);
        if p_chains.is_empty() {
            continue;
        }
        let mut q_chains = Vec::new();
        collect_chains(&tau, 1, b.parts(), &mut Vec::new(), &mut q_chains);
        for p in &p_chains {
            for q in &q_chains {
                out.push(MultiplicityTriple {
                    tau: tau.clone(),
                    p: p.clone(),
                    q: q.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// Number of completions of a chain currently at `prev` before `stage`,
/// memoized on `(stage, prev)`.
fn count_chains(
    prev: &Partition,
    stage: usize,
    parts: &[usize],
    memo: &mut HashMap<(usize, Partition), u64>,
) -> u64 {
    let r = parts.len();
    if stage == r {
        return u64::from(*prev == Partition::ones(parts[r - 1]));
    }
    if let Some(&c) = memo.get(&(stage, prev.clone())) {
        return c;
    }
    let j = parts[stage - 1];
    let mut total = 0;
    if j <= prev.len() {
        for next in decrement_set(prev, j) {
            total += count_chains(&next, stage + 1, parts, memo);
        }
    }
    memo.insert((stage, prev.clone()), total);
    total
}

/// `|enumerate_triples(A, B, ell, k)|` computed without materializing the
/// set: the two chains from a fixed `τ` are independent, so the total is
/// `Σ_τ (#P-chains from τ) · (#Q-chains from τ)`.
///
/// # Panics
///
/// Panics under the same conditions as [`enumerate_triples`].
pub fn count_triples(a: &Partition, b: &Partition, ell: usize, k: usize) -> u64 {
    assert!(
        !a.is_empty() && !b.is_empty() && a.sum() == ell && b.sum() == ell,
        "need |A| = |B| = ell ≥ 1, got A={a}, B={b}, ell={ell}"
    );
    let mut memo_a = HashMap::new();
    let mut memo_b = HashMap::new();
    let mut total = 0;
    for tau in partitions_bounded(ell, a.len().min(b.len()), k) {
        let pc = count_chains(&tau, 1, a.parts(), &mut memo_a);
        if pc == 0 {
            continue;
        }
        total += pc * count_chains(&tau, 1, b.parts(), &mut memo_b);
    }
    total
}
