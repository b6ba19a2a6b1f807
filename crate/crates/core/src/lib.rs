//! Exact verification and search for graphical designs.
//!
//! A vertex subset `D` of a graph *averages* an eigenvector `φ` when the mean
//! of `φ` over `D` equals its mean over all vertices. This crate builds the
//! Hamming, Johnson, symmetric-group Cayley and Mycielskian graphs, decides
//! design membership exactly where the structure allows it, checks the
//! combinatorial objects that designs correspond to (orthogonal arrays,
//! Hadamard matrices, block designs, t-wise uniform permutation sets, cosets)
//! and searches for small designs.

pub mod error;
pub mod exact;
pub mod graph;
pub mod hamming;
pub mod io;
pub mod johnson;
pub mod mycielski;
pub mod report;
pub mod repro;
pub mod search;
pub mod symmetric;
pub mod util;

pub use error::{Error, Result};
