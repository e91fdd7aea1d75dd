//! Multiplicity method 1: the nested-diagram crystal model.
//!
//! A weight space of `V(kΛ₀)` is realized by `k`-tuples of extended Young
//! diagrams `Y₁ ⊇ Y₂ ⊇ ⋯ ⊇ Y_k ⊇ Y₁[n]` subject to a column condition, with
//! boxes colored by `(column − row) mod n`; the number of tuples whose color
//! census matches the weight's root coefficients is the multiplicity.
//! [`enumerate_weight_space`] searches this model directly (the slow oracle),
//! and [`crystal_to_triple`] / [`triple_to_crystal`] are the two directions
//! of the bijection with decrement-chain triples, realized by reading off and
//! replaying per-diagram diagonal box counts.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::partitions::{is_admissible_pair, Partition};
use crate::triples::{is_valid_triple, MultiplicityTriple};
use crate::weights::AlphaVector;

/// An extended Young diagram of charge 0, stored as its weakly decreasing
/// column depths (trailing zero columns trimmed).
///
/// The box in column `c`, row `r` (both 1-based, rows growing downward) has
/// color `(c − r) mod n`; the boxes with `c − r = t` form the `t`-th
/// diagonal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedYoungDiagram {
    depths: Vec<usize>,
}

impl ExtendedYoungDiagram {
    /// Builds a diagram from column depths, trimming trailing zeros.
    ///
    /// # Panics
    ///
    /// Panics if the depths are not weakly decreasing.
    pub fn new(mut depths: Vec<usize>) -> Self {
        assert!(
            depths.windows(2).all(|w| w[0] >= w[1]),
            "column depths must be weakly decreasing, got {depths:?}"
        );
        while depths.last() == Some(&0) {
            depths.pop();
        }
        Self { depths }
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        Self { depths: Vec::new() }
    }

    /// Builds a diagram from row lengths top to bottom (the transpose view).
    ///
    /// # Panics
    ///
    /// Panics if the row lengths are not weakly decreasing.
    pub fn from_row_lengths(rows: &[usize]) -> Self {
        assert!(
            rows.windows(2).all(|w| w[0] >= w[1]),
            "row lengths must be weakly decreasing, got {rows:?}"
        );
        let width = rows.first().copied().unwrap_or(0);
        let depths = (0..width)
            .map(|i| rows.iter().take_while(|&&len| len > i).count())
            .collect();
        Self::new(depths)
    }

    /// Depth of column `i` (0-based); 0 past the end.
    pub fn depth(&self, i: usize) -> usize {
        self.depths.get(i).copied().unwrap_or(0)
    }

    /// The stored depths.
    pub fn depths(&self) -> &[usize] {
        &self.depths
    }

    /// Number of nonzero columns.
    pub fn width(&self) -> usize {
        self.depths.len()
    }

    /// Total number of boxes.
    pub fn boxes(&self) -> usize {
        self.depths.iter().sum()
    }

    /// True iff the diagram has no boxes.
    pub fn is_empty(&self) -> bool {
        self.depths.is_empty()
    }

    /// Number of boxes per color class mod `n` (indexed by color).
    pub fn color_counts(&self, n: usize) -> Vec<usize> {
        assert!(n >= 2, "rank parameter must be ≥ 2");
        let mut counts = vec![0usize; n];
        for (i, &d) in self.depths.iter().enumerate() {
            for r in 1..=d {
                let color = (i as i64 + 1 - r as i64).rem_euclid(n as i64) as usize;
                counts[color] += 1;
            }
        }
        counts
    }

    /// Number of boxes on the diagonal `c − r = t`.
    pub fn diagonal_count(&self, t: i64) -> usize {
        if t >= 0 {
            let t = t as usize;
            (1..)
                .take_while(|&r| t + r <= self.width())
                .filter(|&r| self.depth(t + r - 1) >= r)
                .count()
        } else {
            let s = (-t) as usize;
            (1..=self.width()).filter(|&c| self.depth(c - 1) >= c + s).count()
        }
    }

    /// The diagram shifted down by `n` (depths reduced by `n`, possibly below
    /// zero); containment against it must use signed depths.
    pub fn shift(&self, n: usize) -> ShiftedDiagram {
        ShiftedDiagram {
            depths: self.depths.clone(),
            n,
        }
    }

    /// True iff `inner` fits inside `self` column by column.
    pub fn contains(&self, inner: &ExtendedYoungDiagram) -> bool {
        (0..inner.width()).all(|i| self.depth(i) >= inner.depth(i))
    }

    /// True iff the shifted diagram fits inside `self` in signed depths.
    /// Beyond the shifted diagram's support its signed depth is `−n < 0`, so
    /// only the stored columns need checking.
    pub fn contains_shifted(&self, inner: &ShiftedDiagram) -> bool {
        (0..inner.depths.len()).all(|i| self.depth(i) as i64 >= inner.signed_depth(i))
    }
}

impl std::fmt::Debug for ExtendedYoungDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.depths.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// An extended Young diagram shifted down by `n`: column `i` has signed
/// depth `d_i − n`, which is negative wherever the base diagram is shallow.
#[derive(Clone, PartialEq, Eq)]
pub struct ShiftedDiagram {
    depths: Vec<usize>,
    n: usize,
}

impl ShiftedDiagram {
    /// Signed depth of column `i`: base depth minus `n`.
    pub fn signed_depth(&self, i: usize) -> i64 {
        self.depths.get(i).copied().unwrap_or(0) as i64 - self.n as i64
    }

    /// The shift amount.
    pub fn n(&self) -> usize {
        self.n
    }
}

/// A `k`-tuple of nested extended Young diagrams over rank `n` — one element
/// of the level-`k` crystal when it passes [`is_crystal_element`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrystalElement {
    n: usize,
    diagrams: Vec<ExtendedYoungDiagram>,
}

impl CrystalElement {
    /// Wraps a diagram tuple; membership is NOT checked here — use
    /// [`is_crystal_element`] on the slice first when in doubt.
    ///
    /// # Panics
    ///
    /// Panics on an empty tuple or `n < 2`.
    pub fn new(diagrams: Vec<ExtendedYoungDiagram>, n: usize) -> Self {
        assert!(!diagrams.is_empty(), "a crystal element needs k ≥ 1 diagrams");
        assert!(n >= 2, "rank parameter must be ≥ 2");
        Self { n, diagrams }
    }

    /// The diagrams `Y₁, …, Y_k`.
    pub fn diagrams(&self) -> &[ExtendedYoungDiagram] {
        &self.diagrams
    }

    /// The level `k`.
    pub fn k(&self) -> usize {
        self.diagrams.len()
    }

    /// The rank parameter `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total boxes across the tuple.
    pub fn boxes(&self) -> usize {
        self.diagrams.iter().map(ExtendedYoungDiagram::boxes).sum()
    }

    /// The root-coefficient vector of `kΛ₀` minus this element's weight:
    /// entry `j` is the number of color-`j` boxes across all diagrams.
    pub fn weight_of(&self) -> AlphaVector {
        let mut total = vec![0usize; self.n];
        for d in &self.diagrams {
            for (c, count) in d.color_counts(self.n).into_iter().enumerate() {
                total[c] += count;
            }
        }
        AlphaVector::new(total)
    }

    /// Text rendering of the tuple with one colored grid per diagram.
    pub fn render(&self) -> String {
        let cell = (self.n - 1).to_string().len();
        let mut out = String::new();
        for (j, d) in self.diagrams.iter().enumerate() {
            out.push_str(&format!("Y{}:\n", j + 1));
            if d.is_empty() {
                out.push_str("(empty)\n");
                continue;
            }
            for r in 1..=d.depth(0) {
                let row: Vec<String> = (0..d.width())
                    .filter(|&i| d.depth(i) >= r)
                    .map(|i| {
                        let color = (i as i64 + 1 - r as i64).rem_euclid(self.n as i64);
                        format!("{color:>cell$}")
                    })
                    .collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

impl std::fmt::Debug for CrystalElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.diagrams.iter()).finish()
    }
}

impl Serialize for CrystalElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.diagrams.len()))?;
        for d in &self.diagrams {
            seq.serialize_element(d.depths())?;
        }
        seq.end()
    }
}

/// Checks membership of a `k`-tuple in the level-`k` crystal: the nesting
/// chain `Y₁ ⊇ ⋯ ⊇ Y_k ⊇ Y₁[n]`, and for every column `i` some `j` with
/// `Y_{j+1}` strictly shallower at `i` than `Y_j` is at `i + 1` (in signed
/// depths, reading `Y_{k+1}` as `Y₁[n]`). Columns past the width of `Y₁`
/// satisfy the condition automatically through the shifted diagram.
///
/// # Panics
///
/// Panics if the slice length differs from `k`.
pub fn is_crystal_element(diagrams: &[ExtendedYoungDiagram], k: usize, n: usize) -> bool {
    assert_eq!(diagrams.len(), k, "expected a tuple of exactly k diagrams");
    assert!(k >= 1, "level must be ≥ 1");
    assert!(n >= 2, "rank parameter must be ≥ 2");

    for w in diagrams.windows(2) {
        if !w[0].contains(&w[1]) {
            return false;
        }
    }
    if !diagrams[k - 1].contains_shifted(&diagrams[0].shift(n)) {
        return false;
    }

    // Signed depth of Y_{idx+1} at column `col`, with idx = k meaning Y₁[n].
    let signed = |idx: usize, col: usize| -> i64 {
        if idx == k {
            diagrams[0].depth(col) as i64 - n as i64
        } else {
            diagrams[idx].depth(col) as i64
        }
    };
    for i in 0..=diagrams[0].width() {
        if !(0..k).any(|j| signed(j + 1, i) < signed(j, i + 1)) {
            return false;
        }
    }
    true
}

/// All subdiagrams of `prev` whose color census fits inside `budget`.
fn subdiagrams_within(prev: &ExtendedYoungDiagram, n: usize, budget: &[usize]) -> Vec<ExtendedYoungDiagram> {
    fn go(
        prev: &ExtendedYoungDiagram,
        n: usize,
        col: usize,
        max_depth: usize,
        budget: &mut [usize],
        acc: &mut Vec<usize>,
        out: &mut Vec<ExtendedYoungDiagram>,
    ) {
        // End the diagram at this column (all later depths zero).
        out.push(ExtendedYoungDiagram::new(acc.clone()));
        let lim = max_depth.min(prev.depth(col));
        let mut consumed = Vec::new();
        for d in 1..=lim {
            let color = (col as i64 + 1 - d as i64).rem_euclid(n as i64) as usize;
            if budget[color] == 0 {
                break;
            }
            budget[color] -= 1;
            consumed.push(color);
            acc.push(d);
            go(prev, n, col + 1, d, budget, acc, out);
            acc.pop();
        }
        for c in consumed {
            budget[c] += 1;
        }
    }
    let mut out = Vec::new();
    let mut budget = budget.to_vec();
    go(prev, n, 0, usize::MAX, &mut budget, &mut Vec::new(), &mut out);
    out
}

fn search_levels(
    n: usize,
    k: usize,
    level: usize,
    prev: &ExtendedYoungDiagram,
    remaining: &[usize],
    chosen: &mut Vec<ExtendedYoungDiagram>,
    found: &mut Vec<CrystalElement>,
) {
    let levels_after = k - level;
    for d in subdiagrams_within(prev, n, remaining) {
        let counts = d.color_counts(n);
        let rem: Vec<usize> = remaining.iter().zip(&counts).map(|(&r, &c)| r - c).collect();
        if level == k {
            if rem.iter().any(|&x| x != 0) {
                continue;
            }
        } else if (0..n).any(|c| rem[c] > levels_after * counts[c]) {
            // The later diagrams all fit inside d, so their color counts are
            // bounded by d's; the leftover budget must be coverable.
            continue;
        }
        chosen.push(d.clone());
        if level == k {
            if is_crystal_element(chosen, k, n) {
                found.push(CrystalElement::new(chosen.clone(), n));
            }
        } else {
            search_levels(n, k, level + 1, &d, &rem, chosen, found);
        }
        chosen.pop();
    }
}

/// Brute-force enumeration of an entire weight space: every `k`-tuple passing
/// [`is_crystal_element`] whose color census equals `target`, in canonical
/// (depth-lexicographic) order. Exponential in general — this is the oracle
/// the fast methods are validated against.
pub fn enumerate_weight_space(n: usize, k: usize, target: &AlphaVector) -> Vec<CrystalElement> {
    assert!(n >= 2, "rank parameter must be ≥ 2");
    assert!(k >= 1, "level must be ≥ 1");
    assert_eq!(target.n(), n, "target vector length must equal n");

    let budget = target.coeffs().to_vec();
    let total: usize = budget.iter().sum();

    // A diagram of width > t has a box on diagonal t (its column t+1, row 1),
    // so the first zero-budget color among positive diagonals caps the width
    // of Y₁; negative diagonals likewise cap its depth.
    let cap_w = (1..=total)
        .find(|&t| budget[t % n] == 0)
        .unwrap_or(total)
        .min(total);
    let cap_d = (1..=total)
        .find(|&s| budget[(n - s % n) % n] == 0)
        .unwrap_or(total)
        .min(total);
    let cap = ExtendedYoungDiagram::new(vec![cap_d; cap_w]);

    let mut found = Vec::new();
    search_levels(n, k, 1, &cap, &budget, &mut Vec::new(), &mut found);
    found.sort();
    found
}

/// Reads the per-diagram counts of diagonal `t` across a tuple as a
/// partition (the counts are weakly decreasing by nesting).
fn diagonal_partition(y: &CrystalElement, t: i64) -> Partition {
    let counts: Vec<usize> = y.diagrams().iter().map(|d| d.diagonal_count(t)).collect();
    assert!(
        counts.windows(2).all(|w| w[0] >= w[1]),
        "diagonal {t} counts {counts:?} are not weakly decreasing — tuple is not nested"
    );
    Partition::new(counts.into_iter().filter(|&c| c > 0).collect())
}

/// Reads a crystal element off as a decrement-chain triple: `τ_j` is the
/// number of diagonal-0 boxes of `Y_j`, `(P_i)_j` the diagonal `−i` count,
/// and `(Q_m)_j` the diagonal `m` count.
///
/// # Panics
///
/// Panics if the tuple carries boxes outside the diagonal range determined by
/// `(A, B)`, or if the resulting triple is not valid for `(A, B)` — either
/// way the tuple was not a crystal element of the expected weight.
pub fn crystal_to_triple(y: &CrystalElement, a: &Partition, b: &Partition) -> MultiplicityTriple {
    let (r, q) = (a.len(), b.len());
    assert!(
        r >= 1 && q >= 1 && a.sum() == b.sum(),
        "need non-empty A and B of equal size, got A={a}, B={b}"
    );
    let ell = a.sum();

    let tau = diagonal_partition(y, 0);
    let p: Vec<Partition> = (1..r).map(|i| diagonal_partition(y, -(i as i64))).collect();
    let q_chain: Vec<Partition> = (1..q).map(|m| diagonal_partition(y, m as i64)).collect();

    let counted: usize = tau.sum()
        + p.iter().map(Partition::sum).sum::<usize>()
        + q_chain.iter().map(Partition::sum).sum::<usize>();
    assert_eq!(
        counted,
        y.boxes(),
        "tuple has boxes outside diagonals −{}..{} — not of weight (A={a}, B={b})",
        r - 1,
        q - 1
    );

    let t = MultiplicityTriple {
        tau,
        p,
        q: q_chain,
    };
    assert!(
        is_valid_triple(&t, a, b, ell, y.k()),
        "diagonal counts {t:?} do not form a valid triple for A={a}, B={b}"
    );
    t
}

/// Rebuilds the unique crystal element whose per-diagram diagonal counts
/// match the triple: diagram `Y_j` gets `τ_j` boxes on diagonal 0, `(P_i)_j`
/// on diagonal `−i`, and `(Q_m)_j` on diagonal `m`. Inverse of
/// [`crystal_to_triple`].
///
/// # Panics
///
/// Panics if the triple is not valid for `(A, B, k)`, the pair is not
/// admissible at `(k, n)`, or the reconstruction fails to invert (impossible
/// for valid inputs; kept as a hard self-check).
pub fn triple_to_crystal(
    t: &MultiplicityTriple,
    a: &Partition,
    b: &Partition,
    k: usize,
    n: usize,
) -> CrystalElement {
    let ell = a.sum();
    assert!(
        is_valid_triple(t, a, b, ell, k),
        "not a valid triple for A={a}, B={b}, k={k}: {t:?}"
    );
    assert!(
        is_admissible_pair(a, b, ell, k, n),
        "(A={a}, B={b}, ell={ell}) is not admissible at k={k}, n={n}"
    );
    let (r, q) = (a.len(), b.len());

    let mut diagrams = Vec::with_capacity(k);
    for j in 0..k {
        // Prescribed count on diagonal `td` for this diagram.
        let count_at = |td: i64| -> usize {
            if td == 0 {
                t.tau.get(j)
            } else if td < 0 {
                let i = (-td) as usize;
                if i < r {
                    t.p[i - 1].get(j)
                } else {
                    0
                }
            } else {
                let m = td as usize;
                if m < q {
                    t.q[m - 1].get(j)
                } else {
                    0
                }
            }
        };
        // Diagonal t ≥ 0 occupies rows 1..count, diagonal t < 0 columns
        // 1..count; read the column depths off. Width ≤ q and depth ≤ r.
        let mut depths = Vec::new();
        for c in 1..=q {
            let mut d = 0;
            for rho in 1..=r {
                let td = c as i64 - rho as i64;
                let present = if td >= 0 { rho <= count_at(td) } else { c <= count_at(td) };
                if present {
                    d = rho;
                } else {
                    break;
                }
            }
            if d == 0 {
                break;
            }
            depths.push(d);
        }
        diagrams.push(ExtendedYoungDiagram::new(depths));
    }

    assert!(
        is_crystal_element(&diagrams, k, n),
        "reconstructed tuple fails crystal membership for {t:?}"
    );
    let y = CrystalElement::new(diagrams, n);
    assert_eq!(
        &crystal_to_triple(&y, a, b),
        t,
        "reconstruction did not invert the diagonal-count map"
    );
    y
}
