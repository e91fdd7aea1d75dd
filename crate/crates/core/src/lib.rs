//! # maxmult
//!
//! Maximal dominant weights of the level-`k` highest-weight module `V(kΛ0)`
//! of affine `sl(n)`, and the multiplicity of each such weight, computed by
//! four independent combinatorial methods that are cross-validated against
//! one another.
//!
//! The maximal dominant weights are classified by *admissible pairs* of
//! partitions `(A, B)` of a common size `ℓ`: pairs with `a₁ + b₁ ≤ k` and
//! `l(A) + l(B) ≤ n`. Each pair determines a weight `kΛ0 − λ`, where `λ` is a
//! non-negative combination of the simple roots `α₀, …, α_{n−1}` whose
//! coefficients are tail sums of `A` and `B` (see [`lambda_coefficients`]).
//! The multiplicity of that weight is computed by:
//!
//! 1. **crystal** — brute-force enumeration of the weight space inside the
//!    nested-tuple model of the level-`k` crystal: `k`-tuples of extended
//!    Young diagrams `Y₁ ⊇ ⋯ ⊇ Y_k ⊇ Y₁[n]` with a column condition
//!    ([`enumerate_weight_space`]). Slowest; serves as the oracle.
//! 2. **triples** — counting chains of partitions linked by decrement sets
//!    `S^τ_j` ([`count_triples`]); the fast dynamic-programming path.
//! 3. **tableaux** — counting pairs `(M, N)` of same-shape standard Young
//!    tableaux whose consecutive entry blocks sit in strictly increasing rows
//!    ([`count_syt_pairs`]); built on jeu de taquin slides.
//! 4. **rsk** — counting permutations of `[ℓ]` avoiding a decreasing pattern
//!    of length `k + 1`, subject to block order constraints, via the RSK
//!    correspondence ([`count_constrained_avoiding`]).
//!
//! Explicit bijections connect the four pictures ([`crystal_to_triple`],
//! [`triple_to_syt_pair`], [`rsk_reverse`] and their inverses), so all four
//! counts agree instance by instance; the test suite checks this exhaustively
//! on small ranks and spot-checks a large worked example of multiplicity 488.
//!
//! ## Modules
//!
//! | module | contents |
//! |--------|----------|
//! | [`partitions`] | partition type, admissibility, decrement sets, entry blocks |
//! | [`weights`] | root-coefficient vectors, dominance, weight enumeration |
//! | [`crystal`] | extended Young diagrams, membership, weight-space search |
//! | [`triples`] | partition-chain triples `(P, Q, τ)` and their counting |
//! | [`tableaux`] | standard/skew tableaux, jeu de taquin, tableau-pair counting |
//! | [`rsk`] | RSK insertion/reverse bumping, pattern-avoiding counting |
//!
//! ## Example
//!
//! ```
//! use maxmult::{count_triples, Partition};
//!
//! // A = B = (1,1,1) at level k = 2: the multiplicity is the Catalan number C₃.
//! let a = Partition::new(vec![1, 1, 1]);
//! assert_eq!(count_triples(&a, &a, 3, 2), 5);
//! ```

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod crystal;
pub mod partitions;
pub mod rsk;
pub mod tableaux;
pub mod triples;
pub mod weights;

pub use crystal::{
    crystal_to_triple, enumerate_weight_space, is_crystal_element, triple_to_crystal,
    CrystalElement, ExtendedYoungDiagram, ShiftedDiagram,
};
pub use partitions::{
    blocks, check_admissible_pair, decrement_set, is_admissible_pair, partitions_bounded,
    partitions_of, AdmissibilityError, BlockPartition, ParsePartitionError, Partition,
};
pub use rsk::{
    count_constrained_avoiding, enumerate_constrained_avoiding, longest_decreasing_subsequence,
    rsk_forward, rsk_reverse, satisfies_block_constraints, Permutation,
};
pub use tableaux::{
    count_syt_pairs, enumerate_syt_pairs, is_valid_syt_pair, rectify, reverse_insert,
    syt_pair_to_triple, triple_to_syt_pair, SkewTableau, StandardYoungTableau, SytPair,
};
pub use triples::{count_triples, enumerate_triples, is_valid_triple, MultiplicityTriple};
pub use weights::{
    ell_upper_bound, enumerate_max_dominant, is_dominant, lambda_coefficients, AlphaVector,
    MaximalDominantWeight,
};
