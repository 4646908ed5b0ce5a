//! Chain complexes of free Z-modules, their homology and long exact
//! sequences, and Moore complexes of finite transformation groupoids.

mod complex;
mod les;
mod nerve;

use thiserror::Error;

pub use complex::{kunneth_free, ChainComplex, ChainMap};
pub use les::SubcomplexInclusion;
pub use nerve::{boundaries_square_to_zero, groupoid_homology, moore_complex, FiniteTransformationGroupoid};

use crate::exactseq::ExactSeqError;
use crate::fgab::{FgAbGroup, FgabError};
use crate::zlinalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("a chain complex needs at least one degree")]
    Empty,
    #[error("{degrees} degrees need {} boundary matrices, got {boundaries}", degrees - 1)]
    BoundaryCount { degrees: usize, boundaries: usize },
    #[error("matrix in degree {degree} has shape {found:?}, expected {expected:?}")]
    BoundaryShape {
        degree: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("boundary does not square to zero: ∂{} ∘ ∂{0} ≠ 0", .0 - 1)]
    BoundarySquare(usize),
    #[error("degree {degree} out of range 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("chain map has the wrong number of degrees")]
    ChainMapLength,
    #[error("maps do not commute with the boundary in degree {0}")]
    NotAChainMap(usize),
    #[error("subcomplex needs {expected} bases, got {found}")]
    SubcomplexLength { expected: usize, found: usize },
    #[error("sub-lattice in degree {0} is not a saturated basis")]
    NotSaturated(usize),
    #[error("sub-lattices are not closed under ∂{0}")]
    NotClosed(usize),
    #[error("Künneth formula needs free input; {side} factor has {group} in degree {degree}")]
    TorsionInKunneth {
        side: &'static str,
        degree: usize,
        group: FgAbGroup,
    },
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("the nerve must be truncated at degree 1 or higher")]
    TruncationTooLow,
    #[error(transparent)]
    Group(#[from] FgabError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Sequence(#[from] ExactSeqError),
}
