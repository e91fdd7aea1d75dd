//! Multiplicity method 3: pairs of standard Young tableaux with block
//! conditions, and the jeu de taquin machinery connecting them to triples.
//!
//! The counted objects are pairs `(M, N)` of same-shape standard Young
//! tableaux on `{1, …, ℓ}` with at most `k` rows and first row at most
//! `min{l(A), l(B)}`, such that the entries of each consecutive block `U_j`
//! (widths from `A`) occupy strictly increasing rows of `M`, and likewise the
//! `V_j` blocks (widths from `B`) in `N`. The bijection with decrement-chain
//! triples runs through Schützenberger slides: [`reverse_insert`] grows a
//! tableau one hole at a time ([`triple_to_syt_pair`]), and [`rectify`]
//! shrinks it back, logging exit corners so every slide is reversible
//! ([`syt_pair_to_triple`]).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::partitions::{blocks, Partition};
use crate::triples::{is_valid_triple, MultiplicityTriple};

/// A Young tableau: strictly increasing rows and columns, distinct entries.
///
/// Entries need not be `1..=size` — intermediate tableaux in the slide
/// constructions carry arbitrary strictly increasing entry sets; use
/// [`StandardYoungTableau::is_standard`] to check for the full range.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StandardYoungTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardYoungTableau {
    /// Validates and wraps rows (top to bottom).
    ///
    /// # Panics
    ///
    /// Panics on empty rows, non-staircase row lengths, non-increasing rows
    /// or columns, or duplicate entries.
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        assert!(rows.iter().all(|r| !r.is_empty()), "rows must be non-empty");
        assert!(
            rows.windows(2).all(|w| w[0].len() >= w[1].len()),
            "row lengths must be weakly decreasing"
        );
        let mut seen = std::collections::HashSet::new();
        for (i, row) in rows.iter().enumerate() {
            assert!(
                row.windows(2).all(|w| w[0] < w[1]),
                "row {} is not strictly increasing: {row:?}",
                i + 1
            );
            for (j, &e) in row.iter().enumerate() {
                assert!(seen.insert(e), "duplicate entry {e}");
                if i > 0 {
                    assert!(
                        rows[i - 1][j] < e,
                        "column {} is not strictly increasing at row {}",
                        j + 1,
                        i + 1
                    );
                }
            }
        }
        Self { rows }
    }

    /// The rows, top to bottom.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The shape (row lengths).
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// True iff the entry set is exactly `{1, …, size}`.
    pub fn is_standard(&self) -> bool {
        let mut entries: Vec<usize> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        entries == (1..=self.size()).collect::<Vec<_>>()
    }

    /// Position `(row, col)` of an entry, 0-based.
    pub fn find(&self, entry: usize) -> Option<(usize, usize)> {
        for (i, row) in self.rows.iter().enumerate() {
            if let Ok(j) = row.binary_search(&entry) {
                return Some((i, j));
            }
        }
        None
    }

    /// Grid rendering: right-aligned entries, single-space separated, one
    /// row per line, ending with a newline.
    pub fn render(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Debug for StandardYoungTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

/// A skew tableau: a staircase of cells in which the holes (unfilled cells)
/// form a straight shape in the top-left corner, and the filled cells
/// strictly increase along rows and columns.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewTableau {
    cells: Vec<Vec<Option<usize>>>,
}

impl SkewTableau {
    /// Validates and wraps a cell grid (`None` is a hole).
    ///
    /// # Panics
    ///
    /// Panics if rows are empty or not a staircase, holes are not a
    /// top-left-justified straight shape, or filled cells break the strict
    /// row/column increase.
    pub fn new(cells: Vec<Vec<Option<usize>>>) -> Self {
        assert!(cells.iter().all(|r| !r.is_empty()), "rows must be non-empty");
        assert!(
            cells.windows(2).all(|w| w[0].len() >= w[1].len()),
            "row lengths must be weakly decreasing"
        );
        let mut prev_holes = usize::MAX;
        for (i, row) in cells.iter().enumerate() {
            let holes = row.iter().take_while(|c| c.is_none()).count();
            assert!(
                row[holes..].iter().all(Option::is_some),
                "holes must form a prefix of row {}",
                i + 1
            );
            assert!(
                holes <= prev_holes,
                "hole counts must weakly decrease down rows"
            );
            prev_holes = holes;
            for (j, cell) in row.iter().enumerate() {
                let Some(e) = cell else { continue };
                if j + 1 < row.len() {
                    assert!(
                        row[j + 1].is_none() || row[j + 1].unwrap() > *e,
                        "row {} is not strictly increasing",
                        i + 1
                    );
                }
                if i > 0 {
                    if let Some(above) = cells[i - 1][j] {
                        assert!(
                            above < *e,
                            "column {} is not strictly increasing at row {}",
                            j + 1,
                            i + 1
                        );
                    }
                }
            }
        }
        Self { cells }
    }

    /// Builds a hole-free skew tableau from a straight tableau.
    pub fn from_tableau(t: &StandardYoungTableau) -> Self {
        Self::new(
            t.rows()
                .iter()
                .map(|row| row.iter().copied().map(Some).collect())
                .collect(),
        )
    }

    /// Builds a skew tableau from outer/inner shapes and the filled entries
    /// of each row (left to right, after the holes).
    ///
    /// # Panics
    ///
    /// Panics if the row contents do not match `outer ∖ inner`.
    pub fn with_inner(outer: &Partition, inner: &Partition, entry_rows: &[Vec<usize>]) -> Self {
        assert!(outer.contains(inner), "inner shape must fit inside outer");
        assert_eq!(entry_rows.len(), outer.len(), "one entry row per outer row");
        let cells = entry_rows
            .iter()
            .enumerate()
            .map(|(i, entries)| {
                let holes = inner.get(i);
                assert_eq!(
                    holes + entries.len(),
                    outer.get(i),
                    "row {} entries do not fill outer ∖ inner",
                    i + 1
                );
                let mut row: Vec<Option<usize>> = vec![None; holes];
                row.extend(entries.iter().copied().map(Some));
                row
            })
            .collect();
        Self::new(cells)
    }

    /// The cell grid.
    pub fn cells(&self) -> &[Vec<Option<usize>>] {
        &self.cells
    }

    /// The outer shape (row lengths).
    pub fn outer_shape(&self) -> Partition {
        Partition::new(self.cells.iter().map(Vec::len).collect())
    }

    /// The inner (hole) shape.
    pub fn inner_shape(&self) -> Partition {
        Partition::new(
            self.cells
                .iter()
                .map(|row| row.iter().take_while(|c| c.is_none()).count())
                .filter(|&h| h > 0)
                .collect(),
        )
    }

    /// Positions of all holes, row-major, 0-based.
    pub fn hole_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if cell.is_none() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True iff there are no holes.
    pub fn is_straight(&self) -> bool {
        self.cells.iter().flatten().all(Option::is_some)
    }

    /// Converts to a straight tableau.
    ///
    /// # Panics
    ///
    /// Panics if any hole remains.
    pub fn to_tableau(&self) -> StandardYoungTableau {
        StandardYoungTableau::new(
            self.cells
                .iter()
                .map(|row| row.iter().map(|c| c.expect("hole in straight conversion")).collect())
                .collect(),
        )
    }

    /// Grid rendering like [`StandardYoungTableau::render`], holes as `.`.
    pub fn render(&self) -> String {
        let width = self
            .cells
            .iter()
            .flatten()
            .flatten()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &self.cells {
            let line: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Some(e) => format!("{e:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A same-shape tableau pair `(M, N)` — one counted object of method 3.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SytPair {
    /// The tableau carrying the `U`-block (row-order) condition from `A`.
    #[serde(rename = "M")]
    pub m: StandardYoungTableau,
    /// The tableau carrying the `V`-block condition from `B`.
    #[serde(rename = "N")]
    pub n: StandardYoungTableau,
}

fn entry_at(cells: &[Vec<Option<usize>>], i: usize, j: usize) -> Option<usize> {
    cells.get(i).and_then(|row| row.get(j)).copied().flatten()
}

fn in_shape(cells: &[Vec<Option<usize>>], i: usize, j: usize) -> bool {
    cells.get(i).is_some_and(|row| j < row.len())
}

/// Bottom-most hole that is an inside corner: neither the cell to its right
/// nor the one below is a hole.
fn bottom_inside_corner(cells: &[Vec<Option<usize>>]) -> Option<(usize, usize)> {
    for i in (0..cells.len()).rev() {
        for j in (0..cells[i].len()).rev() {
            if cells[i][j].is_none() {
                let right_hole = in_shape(cells, i, j + 1) && cells[i][j + 1].is_none();
                let below_hole = in_shape(cells, i + 1, j) && cells[i + 1][j].is_none();
                if !right_hole && !below_hole {
                    return Some((i, j));
                }
            }
        }
    }
    None
}

/// Rectifies a skew tableau by Schützenberger forward slides: repeatedly
/// takes the bottom-most inside corner of the hole region, slides the smaller
/// of the entries right of / below the hole into it until the hole reaches an
/// outside corner, and removes that corner. Returns the straight tableau and
/// the 1-based exit rows in removal order — the data needed to replay the
/// slides backwards with [`reverse_insert`].
pub fn rectify(t: &SkewTableau) -> (StandardYoungTableau, Vec<usize>) {
    let mut cells = t.cells().to_vec();
    let mut log = Vec::new();
    while let Some((mut i, mut j)) = bottom_inside_corner(&cells) {
        loop {
            let right = entry_at(&cells, i, j + 1);
            let below = entry_at(&cells, i + 1, j);
            let take_right = match (right, below) {
                (None, None) => {
                    assert!(
                        !in_shape(&cells, i, j + 1) && !in_shape(&cells, i + 1, j),
                        "slide blocked by an adjacent hole — malformed skew tableau"
                    );
                    break;
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(rv), Some(bv)) => rv < bv,
            };
            if take_right {
                cells[i][j] = right;
                cells[i][j + 1] = None;
                j += 1;
            } else {
                cells[i][j] = below;
                cells[i + 1][j] = None;
                i += 1;
            }
        }
        // The hole is an outside corner: last in its row, with no row below
        // reaching this column.
        assert_eq!(j + 1, cells[i].len(), "exit cell must end its row");
        cells[i].pop();
        if cells[i].is_empty() {
            assert_eq!(i + 1, cells.len(), "only the last row can empty out");
            cells.pop();
        }
        log.push(i + 1);
    }
    let straight = SkewTableau::new(cells);
    (straight.to_tableau(), log)
}

/// Reverse slide: appends a hole at the end of the given 1-based row (which
/// must keep the staircase shape valid; `row` may be one past the last row)
/// and slides the larger of the entries left of / above the hole into it
/// until both neighbours are holes or absent — undoing one [`rectify`]
/// removal when replayed at its logged exit row.
///
/// # Panics
///
/// Panics if appending at `row` would break the staircase shape.
pub fn reverse_insert(t: &SkewTableau, row: usize) -> SkewTableau {
    assert!(row >= 1, "rows are 1-based");
    let mut cells = t.cells().to_vec();
    let r = row - 1;
    assert!(
        r <= cells.len(),
        "row {row} is more than one past the last row"
    );
    if r == cells.len() {
        cells.push(Vec::new());
    }
    if r > 0 {
        assert!(
            cells[r - 1].len() > cells[r].len(),
            "appending at row {row} would break the staircase shape"
        );
    }
    cells[r].push(None);
    let (mut i, mut j) = (r, cells[r].len() - 1);
    loop {
        let left = if j > 0 { entry_at(&cells, i, j - 1) } else { None };
        let above = if i > 0 { entry_at(&cells, i - 1, j) } else { None };
        let take_left = match (left, above) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(lv), Some(av)) => lv > av,
        };
        if take_left {
            cells[i][j] = left;
            cells[i][j - 1] = None;
            j -= 1;
        } else {
            cells[i][j] = above;
            cells[i - 1][j] = None;
            i -= 1;
        }
    }
    SkewTableau::new(cells)
}

/// Rows (0-based) of every entry currently in the grid.
fn entry_rows(t: &SkewTableau) -> HashMap<usize, usize> {
    let mut out = HashMap::new();
    for (i, row) in t.cells().iter().enumerate() {
        for cell in row.iter().flatten() {
            out.insert(*cell, i);
        }
    }
    out
}

/// Consecutive entries that sit in strictly increasing rows must keep that
/// order across a slide; violating it would break the block conditions.
fn assert_row_order_preserved(before: &HashMap<usize, usize>, after: &SkewTableau) {
    let after_rows = entry_rows(after);
    for (&e, &row) in before {
        if let Some(&next_row) = before.get(&(e + 1)) {
            if row < next_row {
                assert!(
                    after_rows[&e] < after_rows[&(e + 1)],
                    "slide reordered consecutive entries {e} and {} across rows",
                    e + 1
                );
            }
        }
    }
}

/// Builds one tableau of the pair: seeds the last block as a single column,
/// then replays the decrement chain backwards, one [`reverse_insert`] per
/// grown row, labelling the holes left in column 1 with the next block.
fn build_side(tau: &Partition, chain: &[Partition], widths: &Partition) -> StandardYoungTableau {
    let r = widths.len();
    let u = blocks(widths);

    let seed_block: Vec<usize> = u.block(r - 1).collect();
    let mut cur = StandardYoungTableau::new(seed_block.iter().map(|&e| vec![e]).collect());

    for i in (1..r).rev() {
        let target = if i == 1 { tau } else { &chain[i - 2] };
        let from = &chain[i - 1];
        let grown_rows: Vec<usize> = (0..target.len())
            .filter(|&row| {
                let diff = target.get(row) - from.get(row);
                assert!(diff <= 1, "chain shapes must differ by at most one cell per row");
                diff == 1
            })
            .map(|row| row + 1)
            .collect();
        let width = widths.get(i - 1);
        assert_eq!(
            grown_rows.len(),
            width,
            "chain step {i} must grow exactly a_i = {width} rows"
        );

        let mut work = SkewTableau::from_tableau(&cur);
        for &row in &grown_rows {
            let before = entry_rows(&work);
            work = reverse_insert(&work, row);
            assert_row_order_preserved(&before, &work);
        }

        let expected_holes: Vec<(usize, usize)> = (0..width).map(|t| (t, 0)).collect();
        assert_eq!(
            work.hole_positions(),
            expected_holes,
            "reverse insertions must leave their holes at the top of column 1"
        );

        let labels: Vec<usize> = u.block(i - 1).collect();
        let mut cells = work.cells().to_vec();
        for (t, &label) in labels.iter().enumerate() {
            cells[t][0] = Some(label);
        }
        cur = SkewTableau::new(cells).to_tableau();
        assert_eq!(&cur.shape(), target, "chain step {i} produced the wrong shape");
    }
    cur
}

/// Builds the tableau pair of a triple: `M` from the `P`-chain and the
/// `U`-blocks of `A`, `N` from the `Q`-chain and the `V`-blocks of `B`.
/// Inverse of [`syt_pair_to_triple`].
///
/// # Panics
///
/// Panics if the triple is not valid for `(A, B)`, or if any internal slide
/// invariant fails (impossible for valid triples; kept as hard checks).
pub fn triple_to_syt_pair(t: &MultiplicityTriple, a: &Partition, b: &Partition) -> SytPair {
    let ell = a.sum();
    assert!(
        is_valid_triple(t, a, b, ell, t.tau.len()),
        "not a valid triple for A={a}, B={b}: {t:?}"
    );
    let pair = SytPair {
        m: build_side(&t.tau, &t.p, a),
        n: build_side(&t.tau, &t.q, b),
    };
    debug_assert!(is_valid_syt_pair(&pair, a, b, ell, t.tau.len()));
    pair
}

/// Undoes one block of [`build_side`]: checks the block entries sit at the
/// top of column 1, removes them, rectifies, and records the shape.
fn strip_side(t: &StandardYoungTableau, widths: &Partition) -> Vec<Partition> {
    let r = widths.len();
    let u = blocks(widths);
    let mut shapes = Vec::new();
    let mut cur = t.clone();
    for j in 1..r {
        let width = widths.get(j - 1);
        for (idx, e) in u.block(j - 1).enumerate() {
            let pos = cur.find(e);
            assert_eq!(
                pos,
                Some((idx, 0)),
                "entry {e} of block {j} must sit at row {} of column 1, found {pos:?}",
                idx + 1
            );
        }
        let mut cells: Vec<Vec<Option<usize>>> = cur
            .rows()
            .iter()
            .map(|row| row.iter().copied().map(Some).collect())
            .collect();
        for row in cells.iter_mut().take(width) {
            row[0] = None;
        }
        let (next, log) = rectify(&SkewTableau::new(cells));
        debug_assert!(
            log.windows(2).all(|w| w[0] > w[1]),
            "exit rows {log:?} should strictly decrease when unwinding a chain step"
        );
        shapes.push(next.shape());
        cur = next;
    }
    assert_eq!(
        cur.shape(),
        Partition::ones(widths.get(r - 1)),
        "after stripping all earlier blocks, the last block must form a column"
    );
    shapes
}

/// Reads a tableau pair back as a triple: `τ` is the common shape; the
/// `P`-chain records the shapes left as the `U`-blocks of `M` are stripped
/// and rectified away, and the `Q`-chain does the same for `N`. Inverse of
/// [`triple_to_syt_pair`].
///
/// # Panics
///
/// Panics if the pair is not a valid member of the counted set for `(A, B)`.
pub fn syt_pair_to_triple(pair: &SytPair, a: &Partition, b: &Partition) -> MultiplicityTriple {
    let ell = a.sum();
    let k = pair.m.shape().len();
    assert!(
        is_valid_syt_pair(pair, a, b, ell, k),
        "pair is not in the counted set for A={a}, B={b}"
    );
    let t = MultiplicityTriple {
        tau: pair.m.shape(),
        p: strip_side(&pair.m, a),
        q: strip_side(&pair.n, b),
    };
    assert!(
        is_valid_triple(&t, a, b, ell, k),
        "stripped shapes do not form a valid triple: {t:?}"
    );
    t
}

/// True iff the entries of every consecutive block sit in strictly
/// increasing rows of the tableau (blocks of consecutive integers with the
/// given widths).
fn block_rows_increase(t: &StandardYoungTableau, widths: &Partition) -> bool {
    let u = blocks(widths);
    let mut row_of = HashMap::new();
    for (i, row) in t.rows().iter().enumerate() {
        for &e in row {
            row_of.insert(e, i);
        }
    }
    (0..u.count()).all(|j| {
        let rows: Vec<usize> = u.block(j).map(|e| row_of[&e]).collect();
        rows.windows(2).all(|w| w[0] < w[1])
    })
}

/// Membership test for the counted set: same shape, `ell` cells, at most `k`
/// rows, first row at most `min{l(A), l(B)}`, both tableaux standard, and
/// the `U`/`V` block conditions in `M` and `N` respectively.
pub fn is_valid_syt_pair(
    pair: &SytPair,
    a: &Partition,
    b: &Partition,
    ell: usize,
    k: usize,
) -> bool {
    if a.is_empty() || b.is_empty() || a.sum() != ell || b.sum() != ell {
        return false;
    }
    let shape = pair.m.shape();
    if pair.n.shape() != shape
        || shape.sum() != ell
        || shape.len() > k
        || shape.largest() > a.len().min(b.len())
    {
        return false;
    }
    if !pair.m.is_standard() || !pair.n.is_standard() {
        return false;
    }
    block_rows_increase(&pair.m, a) && block_rows_increase(&pair.n, b)
}

/// All standard fillings of `shape` whose blocks (widths from `widths`) sit
/// in strictly increasing rows: DFS placing `1, …, ℓ` in order, restricting
/// an entry to rows strictly below its predecessor when they share a block.
fn block_fillings(shape: &Partition, widths: &Partition) -> Vec<StandardYoungTableau> {
    let ell = shape.sum();
    let u = blocks(widths);
    let mut lens = vec![0usize; shape.len()];
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        entry: usize,
        ell: usize,
        shape: &Partition,
        u: &crate::partitions::BlockPartition,
        prev_row: usize,
        lens: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardYoungTableau>,
    ) {
        if entry > ell {
            out.push(StandardYoungTableau::new(
                rows.iter().filter(|r| !r.is_empty()).cloned().collect(),
            ));
            return;
        }
        let same_block = entry > 1 && u.same_block(entry - 1, entry);
        for i in 0..shape.len() {
            if lens[i] >= shape.get(i) || (i > 0 && lens[i - 1] == lens[i]) {
                continue;
            }
            if same_block && i <= prev_row {
                continue;
            }
            lens[i] += 1;
            rows[i].push(entry);
            go(entry + 1, ell, shape, u, i, lens, rows, out);
            rows[i].pop();
            lens[i] -= 1;
        }
    }
    go(1, ell, shape, &u, usize::MAX, &mut lens, &mut rows, &mut out);
    out
}

/// All pairs in the counted set for `(A, B, ell, k)`, sorted canonically:
/// shapes are enumerated with the `τ` bounds, and the `M`- and `N`-fillings
/// of a shape are independent, so the set is a product per shape.
///
/// # Panics
///
/// Panics if `A` or `B` is empty or their sizes differ from `ell`.
pub fn enumerate_syt_pairs(a: &Partition, b: &Partition, ell: usize, k: usize) -> Vec<SytPair> {
    assert!(
        !a.is_empty() && !b.is_empty() && a.sum() == ell && b.sum() == ell,
        "need |A| = |B| = ell ≥ 1, got A={a}, B={b}, ell={ell}"
    );
    let mut out = Vec::new();
    for shape in crate::partitions::partitions_bounded(ell, a.len().min(b.len()), k) {
        let ms = block_fillings(&shape, a);
        if ms.is_empty() {
            continue;
        }
        let ns = block_fillings(&shape, b);
        for m in &ms {
            for n in &ns {
                out.push(SytPair {
                    m: m.clone(),
                    n: n.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// `|enumerate_syt_pairs(A, B, ell, k)|` without materializing the pairs:
/// the per-shape filling counts multiply.
///
/// # Panics
///
/// Panics under the same conditions as [`enumerate_syt_pairs`].
pub fn count_syt_pairs(a: &Partition, b: &Partition, ell: usize, k: usize) -> u64 {
    assert!(
        !a.is_empty() && !b.is_empty() && a.sum() == ell && b.sum() == ell,
        "need |A| = |B| = ell ≥ 1, got A={a}, B={b}, ell={ell}"
    );
    let mut total = 0u64;
    for shape in crate::partitions::partitions_bounded(ell, a.len().min(b.len()), k) {
        let mcount = block_fillings(&shape, a).len() as u64;
        if mcount == 0 {
            continue;
        }
        total += mcount * block_fillings(&shape, b).len() as u64;
    }
    total
}
