//! One-dimensional hyperplane systems, interval and parallelogram classes,
//! and the stepwise computation of the octagonal and Penrose tiling groupoids.
//!
//! Lengths live in the module `Z + Zθ` for a fixed quadratic irrational `θ`;
//! classes of parallelograms are computed from their side lengths alone.

mod pipeline;
mod quad;
mod system;

use num_bigint::BigInt;
use thiserror::Error;

pub use pipeline::{
    duplication_cokernel, les_step, octagonal_pipeline, penrose_pipeline, BoundarySource, LesStep, Membership,
    Pipeline, PipelineStep,
};
pub use quad::{QuadMod, Theta};
pub use system::{
    boundary_class, generator_names, interval_class, one_dim_homology, parallelogram_class, tensor_names, H0Class,
    OneDimSystem, Sign, SignedParallelogram,
};

use crate::chain::ChainError;
use crate::exactseq::ExactSeqError;
use crate::fgab::{FgAbGroup, FgabError, GradedGroup};
use crate::zlinalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperplaneError {
    #[error("θ must be irrational: {0}")]
    RationalTheta(String),
    #[error("{0} generators are linearly dependent")]
    Degenerate(&'static str),
    #[error("translation group is not contained in the cut set")]
    TranslationsNotInCuts,
    #[error("interval classes need a single orbit of cuts, index is {0}")]
    MultiOrbit(BigInt),
    #[error("length {0} is not a translation")]
    NotATranslation(QuadMod),
    #[error("quotient homology {0} is nonzero above degree 1")]
    QuotientTooLong(GradedGroup),
    #[error("boundary map does not go from H_1(quotient) to H_0(previous)")]
    BoundaryMismatch,
    #[error("graded piece in degree {degree} has torsion {group}")]
    Torsion { degree: usize, group: FgAbGroup },
    #[error("class {0:?} is not in the image of the previous boundary")]
    ClassNotInImage(Vec<BigInt>),
    #[error(transparent)]
    Sequence(#[from] ExactSeqError),
    #[error(transparent)]
    Group(#[from] FgabError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
