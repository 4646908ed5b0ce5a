use num_bigint::BigInt;
use num_traits::Zero;

use super::{ChainComplex, ChainError};
use crate::fgab::GradedGroup;
use crate::zlinalg::IntMatrix;

/// The transformation groupoid `Γ ⋉ X` of a finite group acting on a finite set.
///
/// An arrow is a pair `(g, x)` going from `x` to `g·x`; composition is
/// `(h, g·x)(g, x) = (hg, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTransformationGroupoid {
    table: Vec<Vec<usize>>,
    identity: usize,
    points: usize,
    action: Vec<Vec<usize>>,
}

impl FiniteTransformationGroupoid {
    /// `table[g][h]` is the index of `gh`; `action[g][x]` is `g·x`.
    pub fn new(table: Vec<Vec<usize>>, points: usize, action: Vec<Vec<usize>>) -> Result<Self, ChainError> {
        let k = table.len();
        let bad = |what: String| Err(ChainError::InvalidGroupoid(what));
        if k == 0 {
            return bad("group must have at least one element".into());
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != k {
                return bad(format!("multiplication table row {g} has {} entries, expected {k}", row.len()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= k) {
                return bad(format!("multiplication table entry {x} out of range"));
            }
        }
        let Some(identity) = (0..k).find(|&e| (0..k).all(|g| table[e][g] == g && table[g][e] == g)) else {
            return bad("multiplication table has no identity".into());
        };
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("multiplication is not associative at ({a}, {b}, {c})"));
                    }
                }
            }
            if !(0..k).any(|b| table[a][b] == identity) {
                return bad(format!("element {a} has no inverse"));
            }
        }
        if action.len() != k {
            return bad(format!("action has {} lines, expected one per group element ({k})", action.len()));
        }
        for (g, perm) in action.iter().enumerate() {
            let mut seen = vec![false; points];
            if perm.len() != points
                || perm.iter().any(|&y| y >= points || std::mem::replace(&mut seen[y], true))
            {
                return bad(format!("action of element {g} is not a permutation of {points} points"));
            }
        }
        if (0..points).any(|x| action[identity][x] != x) {
            return bad("identity does not act trivially".into());
        }
        for g in 0..k {
            for h in 0..k {
                if (0..points).any(|x| action[table[g][h]][x] != action[g][action[h][x]]) {
                    return bad(format!("action is not compatible with multiplication at ({g}, {h})"));
                }
            }
        }
        Ok(Self {
            table,
            identity,
            points,
            action,
        })
    }

    /// A group acting on a single point.
    pub fn group(table: Vec<Vec<usize>>) -> Result<Self, ChainError> {
        let k = table.len();
        Self::new(table, 1, vec![vec![0]; k])
    }

    /// `Z/n` acting on `points` points through the rotation `x ↦ x + step (mod points)`.
    pub fn cyclic(order: usize, points: usize, step: usize) -> Result<Self, ChainError> {
        let table = (0..order)
            .map(|a| (0..order).map(|b| (a + b) % order).collect())
            .collect();
        let action = (0..order)
            .map(|a| (0..points).map(|x| (x + a * step) % points.max(1)).collect())
            .collect();
        Self::new(table, points, action)
    }

    /// The pair groupoid on `{0, 1}`: `Z/2` swapping two points.
    pub fn pair_groupoid_on_two_points() -> Self {
        Self::cyclic(2, 2, 1).expect("swap action is valid")
    }

    pub fn group_order(&self) -> usize {
        self.table.len()
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `|G⁽ⁿ⁾| = |Γ|ⁿ · |X|`.
    pub fn nerve_size(&self, n: usize) -> usize {
        self.group_order().pow(n as u32) * self.points
    }

    fn encode(&self, elements: &[usize], anchor: usize) -> usize {
        let k = self.group_order();
        elements.iter().fold(0, |acc, &g| acc * k + g) * self.points + anchor
    }

    fn decode(&self, n: usize, mut index: usize) -> (Vec<usize>, usize) {
        let k = self.group_order();
        let anchor = index % self.points;
        index /= self.points;
        let mut elements = vec![0; n];
        for slot in elements.iter_mut().rev() {
            *slot = index % k;
            index /= k;
        }
        (elements, anchor)
    }

    /// Index of the `i`-th face of the composable string with index `index` in degree `n`.
    ///
    /// Strings are `(g₁, …, gₙ; x)` where `x` is the source of the last arrow.
    /// `d₀` drops the first arrow, `dₙ` drops the last one (moving the anchor
    /// to its range), and `dᵢ` composes arrows `i` and `i+1`. In degree 1 this
    /// gives `d₀ = source` and `d₁ = range`.
    fn face(&self, n: usize, i: usize, index: usize) -> usize {
        let (g, x) = self.decode(n, index);
        if i == 0 {
            self.encode(&g[1..], x)
        } else if i == n {
            self.encode(&g[..n - 1], self.action[g[n - 1]][x])
        } else {
            let mut h = Vec::with_capacity(n - 1);
            h.extend_from_slice(&g[..i - 1]);
            h.push(self.table[g[i - 1]][g[i]]);
            h.extend_from_slice(&g[i + 1..]);
            self.encode(&h, x)
        }
    }

    /// `∂ₙ = Σᵢ (−1)ⁱ d_{i*}` as a `|G⁽ⁿ⁻¹⁾| × |G⁽ⁿ⁾|` matrix.
    pub fn boundary_matrix(&self, n: usize) -> IntMatrix {
        assert!(n >= 1, "boundary is defined from degree 1");
        let mut m = IntMatrix::zeros(self.nerve_size(n - 1), self.nerve_size(n));
        for col in 0..self.nerve_size(n) {
            for i in 0..=n {
                let row = self.face(n, i, col);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m[(row, col)] += BigInt::from(sign);
            }
        }
        m
    }
}

/// The Moore complex `C_c(G⁽ⁿ⁾, Z)` truncated at `max_degree`.
pub fn moore_complex(g: &FiniteTransformationGroupoid, max_degree: usize) -> Result<ChainComplex, ChainError> {
    if max_degree == 0 {
        return Err(ChainError::TruncationTooLow);
    }
    let ranks = (0..=max_degree).map(|n| g.nerve_size(n)).collect();
    let boundaries = (1..=max_degree).map(|n| g.boundary_matrix(n)).collect();
    ChainComplex::new(ranks, boundaries)
}

/// Groupoid homology in degrees `< max_degree`; the top degree of the
/// truncated complex lacks its incoming boundary and is not reported.
pub fn groupoid_homology(g: &FiniteTransformationGroupoid, max_degree: usize) -> Result<GradedGroup, ChainError> {
    let c = moore_complex(g, max_degree)?;
    let pieces = (0..max_degree)
        .map(|n| c.homology(n))
        .collect::<Result<Vec<_>, _>>()?;
    // Keep the reported length stable even if top pieces vanish.
    Ok(GradedGroup::new(pieces))
}

/// `∂ₙ₋₁ ∘ ∂ₙ = 0` for every degree up to `max_degree`.
pub fn boundaries_square_to_zero(g: &FiniteTransformationGroupoid, max_degree: usize) -> bool {
    (2..=max_degree).all(|n| {
        (&g.boundary_matrix(n - 1) * &g.boundary_matrix(n))
            .entries()
            .iter()
            .all(Zero::is_zero)
    })
}
