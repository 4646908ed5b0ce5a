use super::ChainError;
use crate::fgab::{FgAbGroup, GradedGroup, GroupHom, Subquotient};
use crate::zlinalg::{self, IntMatrix};

/// A bounded complex `0 ← C₀ ← C₁ ← … ← C_N ← 0` of free Z-modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    /// `boundaries[n]` is `∂ₙ : C_n → C_{n−1}`; `boundaries[0]` is the `0 × rank₀` zero map.
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// `boundaries[k]` is `∂_{k+1}`, a `ranks[k] × ranks[k+1]` matrix.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, ChainError> {
        if ranks.is_empty() {
            return Err(ChainError::Empty);
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(ChainError::BoundaryCount {
                degrees: ranks.len(),
                boundaries: boundaries.len(),
            });
        }
        let mut all = Vec::with_capacity(ranks.len());
        all.push(IntMatrix::zeros(0, ranks[0]));
        for (k, b) in boundaries.into_iter().enumerate() {
            let n = k + 1;
            if b.shape() != (ranks[n - 1], ranks[n]) {
                return Err(ChainError::BoundaryShape {
                    degree: n,
                    expected: (ranks[n - 1], ranks[n]),
                    found: b.shape(),
                });
            }
            all.push(b);
        }
        for n in 2..ranks.len() {
            if !(&all[n - 1] * &all[n]).is_zero() {
                return Err(ChainError::BoundarySquare(n));
            }
        }
        Ok(Self {
            ranks,
            boundaries: all,
        })
    }

    /// Highest degree `N` carrying a module.
    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks.get(n).copied().unwrap_or(0)
    }

    /// `∂ₙ`; zero maps at `n = 0` and `n > N`.
    pub fn boundary(&self, n: usize) -> IntMatrix {
        match self.boundaries.get(n) {
            Some(b) => b.clone(),
            None => IntMatrix::zeros(self.rank(n - 1), self.rank(n)),
        }
    }

    fn check_degree(&self, n: usize) -> Result<(), ChainError> {
        if n > self.top_degree() {
            return Err(ChainError::DegreeOutOfRange {
                degree: n,
                top: self.top_degree(),
            });
        }
        Ok(())
    }

    /// `Ker ∂ₙ / Im ∂ₙ₊₁` with cycle representatives for its generators.
    pub fn homology_data(&self, n: usize) -> Result<Subquotient, ChainError> {
        self.check_degree(n)?;
        let cycles = zlinalg::kernel_basis(&self.boundary(n));
        Ok(Subquotient::new(&cycles, &self.boundary(n + 1))?)
    }

    pub fn homology(&self, n: usize) -> Result<FgAbGroup, ChainError> {
        Ok(self.homology_data(n)?.group().clone())
    }

    /// Homology in every degree `0..=N`.
    pub fn all_homology(&self) -> GradedGroup {
        (0..=self.top_degree())
            .map(|n| self.homology(n).expect("degree in range"))
            .collect()
    }

    /// `Σ (−1)ⁿ rank Cₙ`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(n, &r)| if n % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// A degreewise family of matrices commuting with the boundaries.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    maps: Vec<IntMatrix>,
}

impl ChainMap {
    pub fn new(source: ChainComplex, target: ChainComplex, maps: Vec<IntMatrix>) -> Result<Self, ChainError> {
        if source.top_degree() != target.top_degree() || maps.len() != source.ranks.len() {
            return Err(ChainError::ChainMapLength);
        }
        for (n, f) in maps.iter().enumerate() {
            if f.shape() != (target.rank(n), source.rank(n)) {
                return Err(ChainError::BoundaryShape {
                    degree: n,
                    expected: (target.rank(n), source.rank(n)),
                    found: f.shape(),
                });
            }
            if n > 0 && &maps[n - 1] * &source.boundary(n) != &target.boundary(n) * f {
                return Err(ChainError::NotAChainMap(n));
            }
        }
        Ok(Self {
            source,
            target,
            maps,
        })
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn degree(&self, n: usize) -> &IntMatrix {
        &self.maps[n]
    }

    /// The induced map `Hₙ(source) → Hₙ(target)`.
    pub fn induced(&self, n: usize) -> Result<GroupHom, ChainError> {
        let hs = self.source.homology_data(n)?;
        let ht = self.target.homology_data(n)?;
        let images = &self.maps[n] * &hs.representatives();
        let m = ht.coordinate_matrix(&images)?;
        Ok(GroupHom::new(hs.group().clone(), ht.group().clone(), m)?)
    }
}

/// Degreewise `⊕_{p+q=n} A_p ⊗ B_q` for free graded groups.
pub fn kunneth_free(a: &GradedGroup, b: &GradedGroup) -> Result<GradedGroup, ChainError> {
    for (name, g) in [("left", a), ("right", b)] {
        if let Some((degree, piece)) = g.pieces().iter().enumerate().find(|(_, p)| !p.is_free()) {
            return Err(ChainError::TorsionInKunneth {
                side: name,
                degree,
                group: piece.clone(),
            });
        }
    }
    if a.is_empty() || b.is_empty() {
        return Ok(GradedGroup::default());
    }
    let top = a.len() + b.len() - 1;
    let pieces = (0..top)
        .map(|n| {
            (0..=n)
                .map(|p| a.get(p).tensor(&b.get(n - p)))
                .fold(FgAbGroup::trivial(), |acc, g| acc.direct_sum(&g))
        })
        .collect();
    Ok(GradedGroup::new(pieces))
}
