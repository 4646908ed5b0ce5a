//! Exact sequences of finitely generated abelian groups.
//!
//! A sequence may carry unknown maps. Unknown slots keep sequences whose maps
//! are only described at the level of groups representable; they can still
//! be checked for necessary conditions such as the alternating rank sum, but
//! [`ExactSequence::verify_exactness`] refuses them.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::fgab::{FgAbGroup, FgabError, GroupHom};
use crate::zlinalg::{self, IntMatrix, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactSeqError {
    #[error("sequence with {groups} groups needs {} maps, got {maps}", groups.saturating_sub(1))]
    MapCount { groups: usize, maps: usize },
    #[error("map {index} does not go from group {index} to group {}", index + 1)]
    Mismatch { index: usize },
    #[error("map {0} is unknown; exactness cannot be decided")]
    UnknownMap(usize),
    #[error("extension undetermined: quotient {0} is not free")]
    ExtensionUndetermined(FgAbGroup),
    #[error(transparent)]
    Group(#[from] FgabError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequence {
    groups: Vec<FgAbGroup>,
    maps: Vec<Option<GroupHom>>,
}

impl ExactSequence {
    /// `maps[i]: groups[i] → groups[i+1]`; `None` marks an unknown map.
    pub fn new(groups: Vec<FgAbGroup>, maps: Vec<Option<GroupHom>>) -> Result<Self, ExactSeqError> {
        if maps.len() + 1 != groups.len() && !(groups.is_empty() && maps.is_empty()) {
            return Err(ExactSeqError::MapCount {
                groups: groups.len(),
                maps: maps.len(),
            });
        }
        for (i, m) in maps.iter().enumerate() {
            if let Some(m) = m {
                if m.source() != &groups[i] || m.target() != &groups[i + 1] {
                    return Err(ExactSeqError::Mismatch { index: i });
                }
            }
        }
        Ok(Self { groups, maps })
    }

    /// A sequence whose maps are all unknown.
    pub fn with_unknown_maps(groups: Vec<FgAbGroup>) -> Self {
        let maps = vec![None; groups.len().saturating_sub(1)];
        Self { groups, maps }
    }

    pub fn groups(&self) -> &[FgAbGroup] {
        &self.groups
    }

    pub fn maps(&self) -> &[Option<GroupHom>] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn all_maps_known(&self) -> bool {
        self.maps.iter().all(Option::is_some)
    }

    /// `Σ (−1)ⁱ rank(groups[i])`.
    pub fn rank_alternating_sum(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let r = g.free_rank() as i64;
                if i % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// Decides `Im(maps[i-1]) = Ker(maps[i])` at every interior node.
    pub fn verify_exactness(&self) -> Result<ExactnessReport, ExactSeqError> {
        let maps: Vec<&GroupHom> = self
            .maps
            .iter()
            .enumerate()
            .map(|(i, m)| m.as_ref().ok_or(ExactSeqError::UnknownMap(i)))
            .collect::<Result<_, _>>()?;
        let mut nodes = Vec::new();
        for i in 1..self.groups.len().saturating_sub(1) {
            nodes.push(check_node(i, maps[i - 1], maps[i])?);
        }
        Ok(ExactnessReport { nodes })
    }
}

fn check_node(index: usize, incoming: &GroupHom, outgoing: &GroupHom) -> Result<NodeVerdict, ExactSeqError> {
    let image = incoming.image_lift();
    let kernel = outgoing.kernel_lift();
    let group = incoming.target();
    for c in incoming.matrix().columns() {
        if zlinalg::lattice_contains(&kernel, &c)?.is_none() {
            return Ok(NodeVerdict {
                index,
                exact: false,
                witness: Some(Witness::ImageNotInKernel(group.normalize(&c))),
            });
        }
    }
    for c in kernel.columns() {
        if zlinalg::lattice_contains(&image, &c)?.is_none() {
            return Ok(NodeVerdict {
                index,
                exact: false,
                witness: Some(Witness::KernelNotInImage(group.normalize(&c))),
            });
        }
    }
    debug_assert!(zlinalg::same_column_lattice(&image, &kernel));
    Ok(NodeVerdict {
        index,
        exact: true,
        witness: None,
    })
}

/// An element of the middle group certifying a failure of exactness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// In the image of the incoming map but not killed by the outgoing map.
    ImageNotInKernel(Vec<BigInt>),
    /// Killed by the outgoing map but not in the image of the incoming map.
    KernelNotInImage(Vec<BigInt>),
}

impl Witness {
    pub fn element(&self) -> &[BigInt] {
        match self {
            Self::ImageNotInKernel(v) | Self::KernelNotInImage(v) => v,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeVerdict {
    pub index: usize,
    pub exact: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub nodes: Vec<NodeVerdict>,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.nodes.iter().all(|n| n.exact)
    }

    pub fn first_failure(&self) -> Option<&NodeVerdict> {
        self.nodes.iter().find(|n| !n.exact)
    }
}

impl fmt::Display for ExactnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.nodes {
            match &n.witness {
                None => writeln!(f, "node {}: exact", n.index)?,
                Some(w) => {
                    let (kind, v) = match w {
                        Witness::ImageNotInKernel(v) => ("image not in kernel", v),
                        Witness::KernelNotInImage(v) => ("kernel not in image", v),
                    };
                    let v: Vec<String> = v.iter().map(ToString::to_string).collect();
                    writeln!(f, "node {}: NOT exact ({kind}), witness ({})", n.index, v.join(", "))?;
                }
            }
        }
        writeln!(f, "verdict: {}", if self.is_exact() { "exact" } else { "not exact" })
    }
}

/// The middle term of `0 → C → X → F → 0` when `F` is free (the sequence splits).
pub fn solve_split(sub: &FgAbGroup, quotient: &FgAbGroup) -> Result<FgAbGroup, ExactSeqError> {
    if !quotient.is_free() {
        return Err(ExactSeqError::ExtensionUndetermined(quotient.clone()));
    }
    Ok(sub.direct_sum(quotient))
}

/// Convenience for sequence-file writers: a map given by a literal matrix.
pub fn map(source: &FgAbGroup, target: &FgAbGroup, m: IntMatrix) -> Result<GroupHom, ExactSeqError> {
    Ok(GroupHom::new(source.clone(), target.clone(), m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlinalg::int_vec;

    fn g(s: &str) -> FgAbGroup {
        s.parse().unwrap()
    }

    fn seq(mult: i64) -> ExactSequence {
        let z = g("Z");
        let z2 = g("Z/2");
        let zero = g("0");
        ExactSequence::new(
            vec![zero.clone(), z.clone(), z.clone(), z2.clone(), zero.clone()],
            vec![
                Some(GroupHom::zero(&zero, &z)),
                Some(map(&z, &z, IntMatrix::from_rows(&[[mult]])).unwrap()),
                Some(map(&z, &z2, IntMatrix::from_rows(&[[1]])).unwrap()),
                Some(GroupHom::zero(&z2, &zero)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn short_exact_times_two() {
        let r = seq(2).verify_exactness().unwrap();
        assert!(r.is_exact());
        assert_eq!(r.nodes.len(), 3);
    }

    #[test]
    fn times_one_fails_in_middle() {
        let r = seq(1).verify_exactness().unwrap();
        let bad = r.first_failure().unwrap();
        assert_eq!(bad.index, 2);
        assert_eq!(bad.witness.as_ref().unwrap().element(), int_vec(&[1]).as_slice());
        assert_eq!(r.nodes.iter().filter(|n| !n.exact).count(), 1);
    }

    #[test]
    fn zero_groups_exact() {
        let zero = g("0");
        let s = ExactSequence::new(
            vec![zero.clone(); 4],
            vec![Some(GroupHom::zero(&zero, &zero)); 3],
        )
        .unwrap();
        assert!(s.verify_exactness().unwrap().is_exact());
    }

    #[test]
    fn kernel_not_in_image_witness() {
        // 0 -> Z -> Z^2 (first factor) -> Z (second + first) -> 0 fails: ker contains (1,-1).
        let z = g("Z");
        let z2 = g("Z^2");
        let zero = g("0");
        let s = ExactSequence::new(
            vec![zero.clone(), z.clone(), z2.clone(), z.clone(), zero.clone()],
            vec![
                Some(GroupHom::zero(&zero, &z)),
                Some(map(&z, &z2, IntMatrix::from_rows(&[[1], [1]])).unwrap()),
                Some(map(&z2, &z, IntMatrix::from_rows(&[[1, 1]])).unwrap()),
                Some(GroupHom::zero(&z, &zero)),
            ],
        )
        .unwrap();
        let r = s.verify_exactness().unwrap();
        let bad = r.first_failure().unwrap();
        assert_eq!(bad.index, 2);
        assert!(matches!(bad.witness, Some(Witness::ImageNotInKernel(_))));
        assert_eq!(s.rank_alternating_sum(), 0);
    }

    #[test]
    fn unknown_maps_refused() {
        let s = ExactSequence::with_unknown_maps(vec![g("0"), g("Z"), g("Z"), g("0")]);
        assert_eq!(s.verify_exactness(), Err(ExactSeqError::UnknownMap(0)));
        assert_eq!(s.rank_alternating_sum(), 0);
    }

    #[test]
    fn rank_sums() {
        // Nonzero, so the sequence cannot be exact; the sign follows 0-based indexing.
        let s = ExactSequence::with_unknown_maps(vec![g("0"), g("Z^2"), g("Z"), g("0")]);
        assert_eq!(s.rank_alternating_sum(), -1);
        let s = ExactSequence::with_unknown_maps(vec![g("0"), g("Z/3"), g("Z/3"), g("0")]);
        assert_eq!(s.rank_alternating_sum(), 0);
    }

    #[test]
    fn mismatched_maps_rejected() {
        let z = g("Z");
        let r = ExactSequence::new(vec![z.clone(), g("Z^2")], vec![Some(GroupHom::identity(&z))]);
        assert_eq!(r, Err(ExactSeqError::Mismatch { index: 0 }));
        let r = ExactSequence::new(vec![z.clone(), z.clone()], vec![]);
        assert!(matches!(r, Err(ExactSeqError::MapCount { .. })));
    }

    #[test]
    fn split_solving() {
        assert_eq!(solve_split(&g("Z^3"), &g("Z^3")).unwrap(), g("Z^6"));
        assert_eq!(solve_split(&g("0"), &g("Z")).unwrap(), g("Z"));
        assert!(matches!(
            solve_split(&g("Z/2"), &g("Z/2")),
            Err(ExactSeqError::ExtensionUndetermined(_))
        ));
        let x = solve_split(&g("Z^1 (+) Z/4"), &g("Z^2")).unwrap();
        assert_eq!(x.free_rank(), 3);
        assert_eq!(x.torsion(), g("Z/4").torsion());
    }
}
