//! Finitely generated abelian groups in canonical form and the maps between them.

mod group;
mod hom;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

pub use group::FgAbGroup;
pub use hom::{hom_kernel_image_cokernel, GroupHom, Subquotient};

use crate::zlinalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FgabError {
    #[error("relation matrix has {rows} rows but {generators} generators were declared")]
    PresentationShape { generators: usize, rows: usize },
    #[error("element has {found} coordinates, group has {expected} generators")]
    ElementLength { expected: usize, found: usize },
    #[error("map matrix has shape {found:?}, expected {expected:?}")]
    MapShape {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("map is not well defined: generator {generator} has order {order} but its image does not")]
    IllDefined { generator: usize, order: BigInt },
    #[error("maps do not compose: target and source groups differ")]
    Composition,
    #[error("denominator lattice is not contained in the numerator lattice")]
    NotASubgroup,
    #[error("vector does not lie in the numerator lattice")]
    NotInNumerator,
    #[error("cannot parse group `{0}`")]
    Syntax(String),
    #[error("graded piece in degree {degree} has torsion {group}; only free pieces are supported")]
    TorsionInput { degree: usize, group: FgAbGroup },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A graded family of groups in degrees `0..=N`, zero above `N`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct GradedGroup {
    pieces: Vec<FgAbGroup>,
}

impl GradedGroup {
    /// Trailing trivial pieces are dropped so that equal families compare equal.
    pub fn new(mut pieces: Vec<FgAbGroup>) -> Self {
        while pieces.last().is_some_and(FgAbGroup::is_trivial) {
            pieces.pop();
        }
        Self { pieces }
    }

    /// Free groups of the given ranks.
    pub fn free(ranks: &[usize]) -> Self {
        Self::new(ranks.iter().map(|&r| FgAbGroup::free(r)).collect())
    }

    pub fn get(&self, degree: usize) -> FgAbGroup {
        self.pieces.get(degree).cloned().unwrap_or_default()
    }

    /// One past the highest nonzero degree.
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn pieces(&self) -> &[FgAbGroup] {
        &self.pieces
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.pieces.iter().map(FgAbGroup::free_rank).collect()
    }

    pub fn is_free(&self) -> bool {
        self.pieces.iter().all(FgAbGroup::is_free)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        Self::new(
            (0..n)
                .map(|d| self.get(d).direct_sum(&other.get(d)))
                .collect(),
        )
    }

    /// Degreewise `copies`-fold direct sum.
    pub fn power(&self, copies: usize) -> Self {
        Self::new(self.pieces.iter().map(|g| g.power(copies)).collect())
    }

    /// `H_0 = …` lines covering degrees `0..max(len, min_degrees)`.
    pub fn render(&self, min_degrees: usize) -> String {
        let n = self.len().max(min_degrees);
        (0..n)
            .map(|d| format!("H_{d} = {}\n", self.get(d)))
            .collect()
    }
}

impl fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pieces.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl FromIterator<FgAbGroup> for GradedGroup {
    fn from_iter<T: IntoIterator<Item = FgAbGroup>>(iter: T) -> Self {
        Self::new(iter.into_iter().collect())
    }
}
