//! Exact equivariant cohomology of moment graphs.
//!
//! A moment graph is a finite directed acyclic graph whose edges carry
//! nonzero degree-one forms in `Q[t1..tk]`. A class assigns to every vertex
//! a homogeneous polynomial such that across each edge the difference of the
//! endpoint values is divisible by the edge direction. These classes form a
//! graded ring under vertex-wise operations; this crate computes bases,
//! Hilbert series, Betti numbers, flow-up generators and structure constants
//! for that ring, exactly over the rationals.
//!
//! Modules:
//! - [`polyring`]: sparse multivariate polynomials and linear forms over
//!   arbitrary-precision rationals.
//! - [`momentgraph`]: the graph type, validation, orientation and order
//!   helpers.
//! - [`builtins`]: ready-made example graphs (projective spaces, flag and
//!   Grassmannian graphs, and a few small hand-built graphs).
//! - [`dslio`]: a small text format, a JSON format, and Graphviz export.
//! - [`cohomology`]: the actual computations.

pub mod builtins;
pub mod cohomology;
pub mod dslio;
mod linalg;
pub mod momentgraph;
pub mod polyring;
