//! Exact integer matrix algebra.
//!
//! Everything downstream (group presentations, homology, exactness checks)
//! reduces to the Smith and Hermite normal forms implemented here. All
//! arithmetic is on [`BigInt`]; there is no overflow and no floating point.

mod hermite;
mod matrix;
mod smith;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use hermite::{hermite_normal_form, Hermite};
pub use matrix::{int_vec, IntMatrix};
pub use smith::{smith_normal_form, Smith};

use crate::fgab::FgAbGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected {rows}x{cols} = {} entries, found {found}", rows * cols)]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("matrix of shape {0:?} is not square")]
    NotSquare((usize, usize)),
}

/// Z-basis of `{x : Mx = 0}` as the columns of the result.
///
/// The basis is saturated: `Zⁿ / span` is torsion-free.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    s.v.column_range(s.rank()..m.cols())
}

/// `Z^rows / column-lattice(M)` in canonical form.
pub fn cokernel(m: &IntMatrix) -> FgAbGroup {
    let s = smith_normal_form(m);
    let free = m.rows() - s.rank();
    let torsion = s
        .invariant_factors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect::<Vec<_>>();
    FgAbGroup::from_canonical_parts(free, torsion)
}

/// Decides whether `v` lies in the Z-span of the columns of `m`.
///
/// Returns a witness `x` with `m·x = v` when it does.
pub fn lattice_contains(m: &IntMatrix, v: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if v.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch {
            op: "lattice_contains",
            left: m.shape(),
            right: (v.len(), 1),
        });
    }
    Ok(solve_with(&smith_normal_form(m), v))
}

fn solve_with(s: &Smith, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let y = s.u.mul_vec(v).expect("shape checked");
    let r = s.rank();
    if y[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut z = vec![BigInt::zero(); s.v.rows()];
    for i in 0..r {
        let (q, rem) = y[i].div_rem(&s.d[(i, i)]);
        if !rem.is_zero() {
            return None;
        }
        z[i] = q;
    }
    Some(s.v.mul_vec(&z).expect("shape checked"))
}

/// Solves `M·X = B` column by column over Z; `None` if some column has no integer solution.
pub fn solve(m: &IntMatrix, b: &IntMatrix) -> Result<Option<IntMatrix>, LinalgError> {
    if m.rows() != b.rows() {
        return Err(LinalgError::DimensionMismatch {
            op: "solve",
            left: m.shape(),
            right: b.shape(),
        });
    }
    let s = smith_normal_form(m);
    let mut cols = Vec::with_capacity(b.cols());
    for c in b.columns() {
        match solve_with(&s, &c) {
            Some(x) => cols.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(IntMatrix::from_columns(m.cols(), &cols)))
}

/// A basis (linearly independent columns) of the column lattice of `m`.
pub fn column_lattice_basis(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let r = s.rank();
    let mut b = s.u_inv.column_range(0..r);
    for j in 0..r {
        let d = &s.d[(j, j)];
        for i in 0..b.rows() {
            b[(i, j)] *= d;
        }
    }
    b
}

/// Basis of the saturation `(span M ⊗ Q) ∩ Z^rows` of the column lattice.
pub fn saturate(m: &IntMatrix) -> IntMatrix {
    // x is in the saturation iff it is orthogonal to every y with yᵀM = 0.
    let left_kernel = kernel_basis(&m.transpose());
    kernel_basis(&left_kernel.transpose())
}

/// `true` iff the column lattice is primitive (has torsion-free quotient).
pub fn is_saturated(m: &IntMatrix) -> bool {
    smith_normal_form(m)
        .invariant_factors()
        .iter()
        .all(One::is_one)
}

/// Canonical key of a column lattice: the nonzero rows of the HNF of `mᵀ`.
pub fn column_lattice_key(m: &IntMatrix) -> IntMatrix {
    hermite_normal_form(&m.transpose()).nonzero_rows()
}

/// Equality of the column lattices of two matrices with the same row count.
pub fn same_column_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.rows() == b.rows() && column_lattice_key(a) == column_lattice_key(b)
}

pub fn is_unimodular(m: &IntMatrix) -> bool {
    m.determinant().map(|d| d.abs().is_one()).unwrap_or(false)
}

/// Inverse of a unimodular matrix.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    if !m.is_square() || !is_unimodular(m) {
        return None;
    }
    solve(m, &IntMatrix::identity(m.rows())).ok().flatten()
}
