use num_bigint::BigInt;
use num_traits::Zero;

use super::{FgAbGroup, FgabError};
use crate::zlinalg::{self, IntMatrix};

/// A subquotient `N / D` of `Zⁿ` (with `D ⊆ N`) together with the coordinate
/// change between the ambient lattice and the canonical generators of `N / D`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    group: FgAbGroup,
    /// Ambient basis of the numerator lattice, `n × k`.
    basis: IntMatrix,
    /// Numerator coordinates to canonical generator coordinates, `g × k`.
    to_group: IntMatrix,
    /// Canonical generators in numerator coordinates, `k × g`.
    from_group: IntMatrix,
}

impl Subquotient {
    /// `span(numerator) / span(denominator)`; the denominator must lie in the numerator.
    pub fn new(numerator: &IntMatrix, denominator: &IntMatrix) -> Result<Self, FgabError> {
        let basis = zlinalg::column_lattice_basis(numerator);
        let y = zlinalg::solve(&basis, denominator)?.ok_or(FgabError::NotASubgroup)?;
        let s = zlinalg::smith_normal_form(&y);
        let k = basis.cols();
        let r = s.rank();
        let mut order: Vec<usize> = (r..k).collect();
        let mut torsion = Vec::new();
        for i in 0..r {
            let d = &s.d[(i, i)];
            if d > &BigInt::from(1) {
                order.push(i);
                torsion.push(d.clone());
            }
        }
        Ok(Self {
            group: FgAbGroup::from_canonical_parts(k - r, torsion),
            to_group: s.u.select_rows(&order),
            from_group: s.u_inv.select_columns(&order),
            basis,
        })
    }

    /// `Zⁿ / span(relations)`.
    pub fn cokernel_of(relations: &IntMatrix) -> Result<Self, FgabError> {
        Self::new(&IntMatrix::identity(relations.rows()), relations)
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Ambient representatives of the canonical generators, one per column.
    pub fn representatives(&self) -> IntMatrix {
        &self.basis * &self.from_group
    }

    /// Canonical coordinates of the class of an ambient vector of the numerator.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Vec<BigInt>, FgabError> {
        let c = zlinalg::lattice_contains(&self.basis, v)?.ok_or(FgabError::NotInNumerator)?;
        Ok(self.group.normalize(&self.to_group.mul_vec(&c)?))
    }

    /// Applies [`Subquotient::coordinates`] to each column.
    pub fn coordinate_matrix(&self, vs: &IntMatrix) -> Result<IntMatrix, FgabError> {
        let cols = vs
            .columns()
            .map(|c| self.coordinates(&c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntMatrix::from_columns(self.group.num_generators(), &cols))
    }
}

/// A homomorphism between canonical groups, given on generator tuples.
///
/// Column `j` of `matrix` is the image of source generator `j` in target
/// coordinates (torsion coordinates reduced).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self, FgabError> {
        let expected = (target.num_generators(), source.num_generators());
        if matrix.shape() != expected {
            return Err(FgabError::MapShape {
                expected,
                found: matrix.shape(),
            });
        }
        for j in source.free_rank()..source.num_generators() {
            let d = source.generator_order(j);
            let image: Vec<BigInt> = matrix.column(j).iter().map(|x| x * &d).collect();
            if !target.is_zero_element(&image)? {
                return Err(FgabError::IllDefined { generator: j, order: d });
            }
        }
        let cols: Vec<_> = matrix.columns().map(|c| target.normalize(&c)).collect();
        let matrix = IntMatrix::from_columns(target.num_generators(), &cols);
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(group: &FgAbGroup) -> Self {
        Self {
            source: group.clone(),
            target: group.clone(),
            matrix: IntMatrix::identity(group.num_generators()),
        }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.num_generators(), source.num_generators()),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>, FgabError> {
        Ok(self.target.normalize(&self.matrix.mul_vec(v)?))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom, FgabError> {
        if self.target != next.source {
            return Err(FgabError::Composition);
        }
        GroupHom::new(
            self.source.clone(),
            next.target.clone(),
            &next.matrix * &self.matrix,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.columns().all(|c| {
            self.target
                .is_zero_element(&c)
                .expect("column length matches target")
        })
    }

    /// Lift of the image to the free cover of the target: columns span `F(Z^s) + R_target`.
    pub fn image_lift(&self) -> IntMatrix {
        self.matrix
            .hcat(&self.target.relation_matrix())
            .expect("row counts agree")
    }

    /// Lift of the kernel to the free cover of the source:
    /// a basis of `{x : F·x ∈ R_target}`, which contains `R_source`.
    pub fn kernel_lift(&self) -> IntMatrix {
        let k = zlinalg::kernel_basis(&self.image_lift());
        k.row_range(0..self.source.num_generators())
    }

    /// `(ker f, im f, coker f)` in canonical form.
    pub fn kernel_image_cokernel(&self) -> (FgAbGroup, FgAbGroup, FgAbGroup) {
        let kernel = Subquotient::new(&self.kernel_lift(), &self.source.relation_matrix())
            .expect("source relations lie in the kernel lift");
        let image = Subquotient::new(&self.image_lift(), &self.target.relation_matrix())
            .expect("target relations lie in the image lift");
        let cokernel = Subquotient::cokernel_of(&self.image_lift()).expect("square identity");
        (
            kernel.group().clone(),
            image.group().clone(),
            cokernel.group().clone(),
        )
    }

    /// `true` iff the map has the zero matrix after reduction.
    pub fn is_trivially_zero(&self) -> bool {
        self.matrix.entries().iter().all(Zero::is_zero)
    }
}

/// Free function form of [`GroupHom::kernel_image_cokernel`].
pub fn hom_kernel_image_cokernel(f: &GroupHom) -> (FgAbGroup, FgAbGroup, FgAbGroup) {
    f.kernel_image_cokernel()
}
