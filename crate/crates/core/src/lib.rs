//! Spectral and degree-based invariants of directed graphs.
//!
//! The crate computes the energy of a digraph (the sum of the singular values
//! of its adjacency matrix), the outer and inner energy of each vertex (the
//! diagonals of `(AAᵗ)^½` and `(AᵗA)^½`), and the digraph Randić index
//!
//! ```text
//! R(G) = ½ Σ_{(v,w) ∈ E} 1 / √(d⁺(v) d⁻(w))
//! ```
//!
//! and certifies the chain `2R(G) ≤ E(G) ≤ 2√Δ(G)·R(G)`. Both equality cases
//! are recognised structurally:
//!
//! * `E = 2R` exactly when the arcs split into complete source-to-sink
//!   bipartite parts ([`classify::classify_lower_equality`]);
//! * `E = 2√Δ·R` exactly when every weak component is a directed path, a
//!   directed cycle or an isolated vertex ([`classify::classify_upper_equality`]).
//!
//! The bipartite double `B(G)` ([`hermitian::double`]) gives an independent
//! route to both the energy and the Randić index, and [`oracle`] sweeps every
//! digraph on up to five vertices checking all of the above.

pub mod classify;
pub mod cli;
pub mod densela;
pub mod digraph;
mod dsu;
pub mod energy;
mod error;
pub mod hermitian;
pub mod oracle;
pub mod randic;

pub use classify::{ComponentKind, SplitPart, Splitting};
pub use densela::{DenseMatrix, SymEigen};
pub use digraph::{DegreeProfile, Digraph};
pub use energy::EnergyReport;
pub use error::{Error, Result};
pub use hermitian::{BipartiteDouble, UndirectedGraph};
pub use randic::BoundsCertificate;

/// Absolute tolerance used for bound checks on {0,1} adjacency matrices.
pub const DEFAULT_TOL: f64 = 1e-9;
