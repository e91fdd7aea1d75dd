//! Maximal dominant weights of the level-`k` module `V(kΛ₀)`.
//!
//! A weight below `kΛ₀` is recorded by the coefficient vector of the simple
//! roots `α₀, …, α_{n−1}` subtracted from `kΛ₀`. The maximal dominant weights
//! are exactly the vectors produced by [`lambda_coefficients`] over admissible
//! partition pairs, plus `kΛ₀` itself; [`enumerate_max_dominant`] lists them
//! and [`is_dominant`] re-checks dominance from first principles.

use serde::{Deserialize, Serialize};

use crate::partitions::{is_admissible_pair, partitions_bounded, Partition};

/// Coefficients `(m₀, …, m_{n−1})` of the simple roots `α₀, …, α_{n−1}` in
/// `kΛ₀ − μ`; the rank parameter `n` is the length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlphaVector {
    coeffs: Vec<usize>,
}

impl AlphaVector {
    /// Wraps a coefficient vector; the length is the rank parameter `n`.
    ///
    /// # Panics
    ///
    /// Panics on an empty vector.
    pub fn new(coeffs: Vec<usize>) -> Self {
        assert!(!coeffs.is_empty(), "alpha vector needs at least one entry");
        Self { coeffs }
    }

    /// The zero vector of length `n` (the weight `kΛ₀` itself).
    pub fn zero(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    /// The rank parameter `n`.
    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficients `(m₀, …, m_{n−1})`.
    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    /// The coefficient of `α_i`.
    pub fn get(&self, i: usize) -> usize {
        self.coeffs[i]
    }

    /// Total number of simple roots counted with multiplicity — the number of
    /// boxes any crystal element of this weight must carry.
    pub fn sum(&self) -> usize {
        self.coeffs.iter().sum()
    }

    /// True iff all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl std::fmt::Display for AlphaVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Debug for AlphaVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

/// A maximal dominant weight `kΛ₀ − Σ m_i α_i` of `V(kΛ₀)`, tagged with the
/// admissible pair that produced it (`A`, `B` are absent exactly for the
/// highest weight `kΛ₀`, where `ell = 0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalDominantWeight {
    /// Rank parameter.
    pub n: usize,
    /// Level.
    pub k: usize,
    /// Common size of `A` and `B` (0 for the highest weight).
    pub ell: usize,
    /// First partition of the admissible pair, absent when `ell = 0`.
    #[serde(rename = "A", skip_serializing_if = "Option::is_none", default)]
    pub a: Option<Partition>,
    /// Second partition of the admissible pair, absent when `ell = 0`.
    #[serde(rename = "B", skip_serializing_if = "Option::is_none", default)]
    pub b: Option<Partition>,
    /// Simple-root coefficients of `kΛ₀` minus this weight.
    pub alpha: AlphaVector,
}

impl MaximalDominantWeight {
    /// True iff this record is the highest weight `kΛ₀` itself.
    pub fn is_highest_weight(&self) -> bool {
        self.ell == 0
    }
}

/// Simple-root coefficient vector of the weight attached to an admissible
/// pair: entry 0 is `ℓ`; entries `1 ≤ i ≤ q−1` carry the tail sums
/// `b_{i+1} + ⋯ + b_q` of `B`; entries `n−i` for `1 ≤ i ≤ r−1` carry the tail
/// sums `a_{i+1} + ⋯ + a_r` of `A`; everything else is 0.
///
/// # Panics
///
/// Panics if `|A| ≠ ell`, `|B| ≠ ell`, or `l(A) + l(B) > n` (the `B`-range
/// and `A`-range of indices would collide).
pub fn lambda_coefficients(a: &Partition, b: &Partition, ell: usize, n: usize) -> AlphaVector {
    assert!(
        a.sum() == ell && b.sum() == ell,
        "|A| = {} and |B| = {} must both equal ell = {ell}",
        a.sum(),
        b.sum()
    );
    assert!(
        a.len() + b.len() <= n,
        "l(A) + l(B) = {} + {} exceeds n = {n}; index ranges would collide",
        a.len(),
        b.len()
    );
    let mut coeffs = vec![0usize; n];
    coeffs[0] = ell;
    let q = b.len();
    #[allow(clippy::needless_range_loop)]
    for i in 1..q {
        coeffs[i] = b.parts()[i..].iter().sum();
    }
    let r = a.len();
    for i in 1..r {
        coeffs[n - i] = a.parts()[i..].iter().sum();
    }
    AlphaVector::new(coeffs)
}

/// True iff `kΛ₀ − Σ m_i α_i` is dominant: the pairing with every simple
/// coroot `h_i` is non-negative, i.e. `k·[i=0] − (2m_i − m_{i−1} − m_{i+1}) ≥ 0`
/// with indices mod `n`.
pub fn is_dominant(alpha: &AlphaVector, k: usize) -> bool {
    let n = alpha.n();
    let m = |i: usize| alpha.get(i % n) as i64;
    (0..n).all(|i| {
        let level = if i == 0 { k as i64 } else { 0 };
        level - (2 * m(i) - m((i + n - 1) % n) - m(i + 1)) >= 0
    })
}

/// Largest `ℓ` admitting an admissible pair whose largest parts are exactly
/// `a1` and `b1` at rank `n`, or `0` if no size works at all.
///
/// A partition of `ℓ` with largest part exactly `a1` needs at least
/// `⌈ℓ/a1⌉` parts (and that many suffice once `ℓ ≥ a1`), so a pair exists
/// iff `ℓ ≥ max{a1, b1}` and `⌈ℓ/a1⌉ + ⌈ℓ/b1⌉ ≤ n`. The left side is
/// monotone in `ℓ`, so the maximum is found by binary search. Used to
/// terminate enumeration loops; membership is always re-checked per pair.
pub fn ell_upper_bound(a1: usize, b1: usize, n: usize) -> usize {
    assert!(a1 >= 1 && b1 >= 1, "largest parts must be ≥ 1");
    assert!(n >= 2, "rank parameter must be ≥ 2");
    let feasible = |ell: usize| ell.div_ceil(a1) + ell.div_ceil(b1) <= n;
    let mut lo = a1.max(b1);
    if !feasible(lo) {
        return 0;
    }
    // ⌈ℓ/a1⌉ ≤ n forces ℓ ≤ a1·n, so the answer lies in [lo, a1·n].
    let mut hi = a1 * n;
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Enumerates the maximal dominant weights of `V(kΛ₀)`: the highest weight
/// `kΛ₀` (as the `ell = 0` record) together with `kΛ₀ − Σ m_i α_i` for every
/// admissible pair `(A, B)` of every size `ℓ ≥ 1`. Output is deduplicated by
/// alpha vector and sorted by `(ell, A, B)`.
///
/// # Panics
///
/// Panics unless `n ≥ 2` and `k ≥ 1`.
pub fn enumerate_max_dominant(n: usize, k: usize) -> Vec<MaximalDominantWeight> {
    assert!(n >= 2, "rank parameter must be ≥ 2");
    assert!(k >= 1, "level must be ≥ 1");

    let mut out = vec![MaximalDominantWeight {
        n,
        k,
        ell: 0,
        a: None,
        b: None,
        alpha: AlphaVector::zero(n),
    }];

    // Admissible pairs need a₁ + b₁ ≤ k with both parts ≥ 1, so every ℓ is
    // covered by the largest per-(a₁,b₁) bound.
    let mut cap = 0;
    for a1 in 1..k {
        for b1 in 1..=(k - a1) {
            cap = cap.max(ell_upper_bound(a1, b1, n));
        }
    }

    let mut seen = std::collections::BTreeSet::new();
    seen.insert(AlphaVector::zero(n));
    for ell in 1..=cap {
        for a in partitions_bounded(ell, k.saturating_sub(1), n.saturating_sub(1)) {
            let a1 = a.largest();
            for b in partitions_bounded(ell, k - a1, n - a.len()) {
                debug_assert!(is_admissible_pair(&a, &b, ell, k, n));
                let alpha = lambda_coefficients(&a, &b, ell, n);
                if seen.insert(alpha.clone()) {
                    out.push(MaximalDominantWeight {
                        n,
                        k,
                        ell,
                        a: Some(a.clone()),
                        b: Some(b),
                        alpha,
                    });
                }
            }
        }
    }

    out.sort_by(|x, y| {
        (x.ell, &x.a, &x.b)
            .cmp(&(y.ell, &y.a, &y.b))
    });
    out
}
