use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::FgabError;
use crate::zlinalg::{self, IntMatrix};

/// A finitely generated abelian group `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` in invariant-factor form.
///
/// Every `dᵢ ≥ 2` and `dᵢ | dᵢ₊₁`, so two values are isomorphic exactly when
/// they compare equal.
///
/// Elements are integer coordinate vectors over the generator tuple: the `r`
/// free generators first, then one generator per torsion factor in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_invariants(0, [order.into()])
    }

    /// Builds a group from already-canonical parts; the chain is validated.
    pub(crate) fn from_canonical_parts(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        debug_assert!(torsion.iter().all(|d| d > &BigInt::one()));
        debug_assert!(torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        Self { free_rank, torsion }
    }

    /// `Z^free ⊕ ⊕ Z/dᵢ` for arbitrary `dᵢ`, canonicalized. A factor `0`
    /// contributes a free summand, `±1` contributes nothing.
    pub fn from_invariants<I: IntoIterator<Item = BigInt>>(free: usize, factors: I) -> Self {
        let factors: Vec<BigInt> = factors.into_iter().map(|d| d.abs()).collect();
        let n = factors.len();
        let rel = IntMatrix::diagonal(n, n, factors);
        let c = zlinalg::cokernel(&rel);
        Self {
            free_rank: free + c.free_rank,
            torsion: c.torsion,
        }
    }

    /// `Z^generators / column-lattice(relations)`.
    pub fn from_presentation(relations: &IntMatrix, generators: usize) -> Result<Self, FgabError> {
        if relations.rows() != generators {
            return Err(FgabError::PresentationShape {
                generators,
                rows: relations.rows(),
            });
        }
        Ok(zlinalg::cokernel(relations))
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of a finite group; `None` if the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Number of generators in the fixed generator convention.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of generator `i` (`0` for free generators).
    pub fn generator_order(&self, i: usize) -> BigInt {
        if i < self.free_rank {
            BigInt::zero()
        } else {
            self.torsion[i - self.free_rank].clone()
        }
    }

    /// Relation matrix of the standard presentation: one column `dᵢ·eᵢ` per torsion generator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let g = self.num_generators();
        let mut m = IntMatrix::zeros(g, self.torsion.len());
        for (k, d) in self.torsion.iter().enumerate() {
            m[(self.free_rank + k, k)] = d.clone();
        }
        m
    }

    /// Reduces torsion coordinates into `[0, dᵢ)`.
    pub fn normalize(&self, v: &[BigInt]) -> Vec<BigInt> {
        v.iter()
            .enumerate()
            .map(|(i, x)| {
                if i < self.free_rank {
                    x.clone()
                } else {
                    x.mod_floor(&self.torsion[i - self.free_rank])
                }
            })
            .collect()
    }

    /// Whether a coordinate vector represents the zero element.
    pub fn is_zero_element(&self, v: &[BigInt]) -> Result<bool, FgabError> {
        if v.len() != self.num_generators() {
            return Err(FgabError::ElementLength {
                expected: self.num_generators(),
                found: v.len(),
            });
        }
        Ok(zlinalg::lattice_contains(&self.relation_matrix(), v)?.is_some())
    }

    /// `A ⊕ B`, with torsion re-merged into a divisibility chain.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_invariants(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// `A ⊗ B` over Z.
    pub fn tensor(&self, other: &Self) -> Self {
        let free = self.free_rank * other.free_rank;
        let mut factors = Vec::new();
        for d in &self.torsion {
            factors.extend(std::iter::repeat_n(d.clone(), other.free_rank));
        }
        for e in &other.torsion {
            factors.extend(std::iter::repeat_n(e.clone(), self.free_rank));
        }
        for d in &self.torsion {
            for e in &other.torsion {
                factors.push(d.gcd(e));
            }
        }
        Self::from_invariants(free, factors)
    }

    pub fn power(&self, copies: usize) -> Self {
        (0..copies).fold(Self::trivial(), |acc, _| acc.direct_sum(self))
    }
}

/// Pretty-print format `Z^r (+) Z/d1 (+) Z/d2 ...`, or `0` for the trivial group.
impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" (+) "))
    }
}

/// Parses the pretty-print format; also accepts bare `Z` and non-canonical
/// summands such as `Z/2 (+) Z/3`, which are canonicalized.
impl FromStr for FgAbGroup {
    type Err = FgabError;

    fn from_str(s: &str) -> Result<Self, FgabError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let bad = || FgabError::Syntax(s.to_string());
        let mut free = 0usize;
        let mut factors = Vec::new();
        for part in s.split("(+)") {
            let part = part.trim();
            if part == "Z" {
                free += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                free += r.trim().parse::<usize>().map_err(|_| bad())?;
            } else if let Some(d) = part.strip_prefix("Z/") {
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() || d.is_negative() {
                    return Err(bad());
                }
                factors.push(d);
            } else if part == "0" {
                continue;
            } else {
                return Err(bad());
            }
        }
        Ok(Self::from_invariants(free, factors))
    }
}
