//! Spectral toolkit for the alpha-index of small graphs.
//!
//! For a graph with adjacency matrix `A` and degree diagonal `D`, the convex
//! family `A_alpha = alpha * D + (1 - alpha) * A` interpolates between the
//! adjacency matrix at `alpha = 0` and the degree diagonal at `alpha = 1`;
//! `2 * A_{1/2}` is the signless Laplacian. The alpha-index of a connected
//! graph is the spectral radius `rho_alpha` of `A_alpha`, and for
//! `alpha < 1` it comes with a strictly positive Perron eigenvector.
//!
//! The crate is organized in layers:
//!
//! - [`graph`]: bitset graphs on at most 32 vertices, the graph families
//!   under study (complete graphs with a deleted edge, bugs, path-kites,
//!   pendent-path and pendent-tree attachments), isomorphism testing,
//!   exhaustive enumeration, and graph6 / edge-list codecs.
//! - [`spectral`]: `A_alpha` assembly plus two independent Perron solvers,
//!   a shifted power iteration and a cyclic Jacobi eigensolver, together
//!   with the decay ratio `gamma` and the closed form for the alpha-index
//!   of a complete graph missing one edge.
//! - [`pendent`]: how Perron entries fall off along a pendent path:
//!   geometric decay, a two-coefficient closed form for the entries, lower
//!   bounds on entry ratios, and the ratio comparison between two paths.
//! - [`report`]: margin and verdict bookkeeping for inequality claims.
//! - [`verify`]: exhaustive small-order verification of the extremal
//!   statements (diameter bound, clique bound, bug balancing, path and tree
//!   flattening) with serializable reports.
//! - [`conjecture`]: scans of the open balance conjectures and the search
//!   for reversal examples on trees.
//! - [`corpus`]: deterministic seeded test corpora.
//!
//! Numeric layers are generic over the scalar through [`Real`]; the aliases
//! below pin `f64` for everyday use.

pub mod conjecture;
pub mod corpus;
pub mod graph;
pub mod pendent;
pub mod report;
mod scalar;
pub mod spectral;
pub mod verify;

pub use scalar::Real;

pub use report::EPSILON_STRICT;
pub use spectral::DEFAULT_TOLERANCE;

/// [`spectral::AlphaMatrix`] over `f64`.
pub type AlphaMatrix64 = spectral::AlphaMatrix<f64>;
/// [`spectral::SpectralResult`] over `f64`.
pub type SpectralResult64 = spectral::SpectralResult<f64>;
/// [`spectral::Gamma`] over `f64`.
pub type Gamma64 = spectral::Gamma<f64>;
/// [`pendent::PathEntryModel`] over `f64`.
pub type PathEntryModel64 = pendent::PathEntryModel<f64>;
/// [`report::InequalityReport`] over `f64`.
pub type InequalityReport64 = report::InequalityReport<f64>;
