//! Exact integer homology of étale groupoids.
//!
//! The crate computes homology of shifts-of-finite-type groupoids from their
//! adjacency matrices, long exact sequences of chain complexes, Moore
//! complexes of finite transformation groupoids, and the homology of the
//! octagonal and Penrose tiling groupoids via stepwise long exact sequences.
//! Everything is over the integers and every group is reported in canonical
//! invariant-factor form.

pub mod fgab;
pub mod zlinalg;
pub mod chain;
pub mod exactseq;
pub mod sft;
pub mod hyperplane;
pub mod cli;
