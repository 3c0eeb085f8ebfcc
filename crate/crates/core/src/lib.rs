//! Exact mutual-visibility computations on small graphs.
//!
//! A set `X` of vertices is a *mutual-visibility set* when every two of its
//! vertices are joined by a shortest path with no other vertex of `X` on it.
//! This crate computes the largest such sets (μ), their independent variant
//! (μ_i), the independence number (α) and the general position number (gp),
//! builds the graph families these invariants are studied on, reduces μ of
//! `K_m □ K_n` to Zarankiewicz numbers, and checks the known structural
//! results about μ on exhaustively enumerated instances.
//!
//! ```
//! use mutvis::{constructions, solvers};
//!
//! let c8 = constructions::cycle(8).unwrap();
//! let r = solvers::solve_mu(&c8, &solvers::SolverConfig::default()).unwrap();
//! assert_eq!(r.value, 3);
//! ```

pub mod cli;
pub mod constructions;
pub mod distance;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod product;
pub mod solvers;
pub mod theorems;
pub mod vertex_set;
pub mod visibility;
pub mod zarankiewicz;

pub use distance::{all_pairs_distances, is_isometric_subgraph, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::Graph;
pub use product::{cartesian_product, corona, ProductLabeling};
pub use solvers::{Invariant, SolveResult, SolveStatus, SolverConfig};
pub use vertex_set::VertexSet;
