use super::{ChainComplex, ChainError, ChainMap};
use crate::exactseq::ExactSequence;
use crate::fgab::{FgAbGroup, GroupHom};
use crate::zlinalg::{self, IntMatrix};

/// A subcomplex given by saturated sub-lattice bases in every degree.
///
/// Saturation keeps the quotient complex free. For every degree the basis
/// `Sₙ` is completed to a unimodular matrix `[Sₙ | Qₙ]`; the last rows of its
/// inverse form the projection `Pₙ` onto quotient coordinates.
#[derive(Clone, Debug)]
pub struct SubcomplexInclusion {
    ambient: ChainComplex,
    bases: Vec<IntMatrix>,
    complements: Vec<IntMatrix>,
    projections: Vec<IntMatrix>,
    sub: ChainComplex,
    quotient: ChainComplex,
}

impl SubcomplexInclusion {
    pub fn new(ambient: ChainComplex, bases: Vec<IntMatrix>) -> Result<Self, ChainError> {
        let top = ambient.top_degree();
        if bases.len() != top + 1 {
            return Err(ChainError::SubcomplexLength {
                expected: top + 1,
                found: bases.len(),
            });
        }
        let mut complements = Vec::new();
        let mut projections = Vec::new();
        for (n, s) in bases.iter().enumerate() {
            if s.rows() != ambient.rank(n) {
                return Err(ChainError::BoundaryShape {
                    degree: n,
                    expected: (ambient.rank(n), s.cols()),
                    found: s.shape(),
                });
            }
            if s.rank() != s.cols() || !zlinalg::is_saturated(s) {
                return Err(ChainError::NotSaturated(n));
            }
            let (q, p) = complete_basis(s);
            complements.push(q);
            projections.push(p);
        }

        let mut sub_boundaries = Vec::new();
        let mut quot_boundaries = Vec::new();
        for n in 1..=top {
            let image = &ambient.boundary(n) * &bases[n];
            let b = zlinalg::solve(&bases[n - 1], &image)?.ok_or(ChainError::NotClosed(n))?;
            sub_boundaries.push(b);
            quot_boundaries.push(&(&projections[n - 1] * &ambient.boundary(n)) * &complements[n]);
        }
        let sub = ChainComplex::new(bases.iter().map(IntMatrix::cols).collect(), sub_boundaries)?;
        let quotient = ChainComplex::new(
            projections.iter().map(IntMatrix::rows).collect(),
            quot_boundaries,
        )?;
        Ok(Self {
            ambient,
            bases,
            complements,
            projections,
            sub,
            quotient,
        })
    }

    pub fn ambient(&self) -> &ChainComplex {
        &self.ambient
    }

    pub fn sub(&self) -> &ChainComplex {
        &self.sub
    }

    pub fn quotient(&self) -> &ChainComplex {
        &self.quotient
    }

    pub fn basis(&self, n: usize) -> &IntMatrix {
        &self.bases[n]
    }

    /// Ambient lift of the quotient basis in degree `n`.
    pub fn complement(&self, n: usize) -> &IntMatrix {
        &self.complements[n]
    }

    pub fn inclusion(&self) -> ChainMap {
        ChainMap::new(self.sub.clone(), self.ambient.clone(), self.bases.clone())
            .expect("sub-lattices are closed under the boundary")
    }

    pub fn projection(&self) -> ChainMap {
        ChainMap::new(
            self.ambient.clone(),
            self.quotient.clone(),
            self.projections.clone(),
        )
        .expect("projection commutes with the induced boundary")
    }

    /// The connecting map `Hₙ(quotient) → Hₙ₋₁(sub)` for `n ≥ 1`.
    pub fn connecting_map(&self, n: usize) -> Result<GroupHom, ChainError> {
        let g = self.quotient.homology(n)?.num_generators();
        self.connecting_map_with_offsets(n, &IntMatrix::zeros(self.bases[n].cols(), g))
    }

    /// Like [`SubcomplexInclusion::connecting_map`], but shifts the lift of each
    /// quotient generator by `Sₙ · offsets[:, j]`. The result does not depend on
    /// the offsets; this entry point exists to check exactly that.
    pub fn connecting_map_with_offsets(&self, n: usize, offsets: &IntMatrix) -> Result<GroupHom, ChainError> {
        if n == 0 {
            return Err(ChainError::DegreeOutOfRange { degree: 0, top: 0 });
        }
        let hq = self.quotient.homology_data(n)?;
        let hs = self.sub.homology_data(n - 1)?;
        let reps = hq.representatives();
        let lifts = zlinalg::solve(&self.projections[n], &reps)?
            .expect("projections are surjective")
            .try_add(&(&self.bases[n] * offsets))?;
        let boundary = &self.ambient.boundary(n) * &lifts;
        let in_sub = zlinalg::solve(&self.bases[n - 1], &boundary)?
            .expect("boundary of a relative cycle lies in the subcomplex");
        let m = hs.coordinate_matrix(&in_sub)?;
        Ok(GroupHom::new(hq.group().clone(), hs.group().clone(), m)?)
    }

    /// `0 → H_N(sub) → H_N(ambient) → H_N(quot) → H_{N−1}(sub) → … → H₀(quot) → 0`.
    pub fn long_exact_sequence(&self) -> Result<ExactSequence, ChainError> {
        let inc = self.inclusion();
        let proj = self.projection();
        let zero = FgAbGroup::trivial();
        let top = self.ambient.top_degree();
        let mut groups = vec![zero.clone(), self.sub.homology(top)?];
        let mut maps = vec![Some(GroupHom::zero(&zero, &groups[1]))];
        for n in (0..=top).rev() {
            let i = inc.induced(n)?;
            let p = proj.induced(n)?;
            groups.push(i.target().clone());
            maps.push(Some(i));
            groups.push(p.target().clone());
            maps.push(Some(p));
            if n > 0 {
                let d = self.connecting_map(n)?;
                groups.push(d.target().clone());
                maps.push(Some(d));
            }
        }
        let last = groups.last().expect("nonempty").clone();
        maps.push(Some(GroupHom::zero(&last, &zero)));
        groups.push(zero);
        Ok(ExactSequence::new(groups, maps)?)
    }
}

/// For a saturated basis `S` (`r × s`) returns `(Q, P)` with `[S | Q]`
/// unimodular and `P` the last `r − s` rows of its inverse.
fn complete_basis(s: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let r = s.rows();
    let k = s.cols();
    let smith = zlinalg::smith_normal_form(s);
    let q = smith.u_inv.column_range(k..r);
    let t = s.hcat(&q).expect("row counts agree");
    let t_inv = zlinalg::unimodular_inverse(&t).expect("saturated basis completes to a unimodular matrix");
    (q, t_inv.row_range(k..r))
}
