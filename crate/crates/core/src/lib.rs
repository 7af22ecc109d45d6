//! Exact densest-k-subgraph solvers for outerplanar and b-outerplanar graphs.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line front end and timing live in the `dks` crate.
//!
//! Two dynamic programs are provided:
//!
//! * [`outerplanar`] folds edge tables over the face tree of an outerplanar
//!   embedding in `O(n k^2)`.
//! * [`bouter`] computes boundary-subset tables over slices of a leveled,
//!   triangulated plane graph in `O(n k^2 8^b)`.
//!
//! [`oracle`] is the brute-force reference both are checked against.
#![no_std]

extern crate alloc;

pub mod bouter;
pub mod convolve;
pub mod embedding;
pub mod error;
pub mod gen;
pub mod graph;
pub mod levels;
pub mod oracle;
pub mod outerplanar;
pub mod planarity;
pub mod plane;
pub mod ptas;
pub mod slices;
pub mod solve;
pub mod tree;
pub mod value;

pub use error::{Error, Result};
pub use graph::{EdgeKind, Graph, VertexSet};
pub use solve::{solve, SolveReport};
