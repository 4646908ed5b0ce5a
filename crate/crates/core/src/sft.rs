//! Homology of SFT groupoids and the six-term sequences of the doubled graphs.
//!
//! For an irreducible, non-permutation adjacency matrix `B` the groupoid of
//! the one-sided shift has `H₀ = Coker(I − Bᵗ)`, `H₁ = Ker(I − Bᵗ)` and
//! vanishing higher homology.
//!
//! The doubled graphs carry two six-term exact sequences whose maps are only
//! known through Kakutani equivalences, so they are represented with unknown
//! maps plus the consistency checks that can be decided from the groups.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactseq::ExactSequence;
use crate::fgab::{FgAbGroup, GradedGroup};
use crate::zlinalg::{self, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SftError {
    #[error("adjacency matrix must be square, got {0:?}")]
    NotSquare((usize, usize)),
    #[error("graph has no vertices")]
    Empty,
    #[error("adjacency matrix has a negative entry")]
    Negative,
    #[error("axiom violated: irreducible (no path from vertex {from} to vertex {to})")]
    Reducible { from: usize, to: usize },
    #[error("axiom violated: adjacency matrix is a permutation matrix")]
    Permutation,
    #[error("edge {edge} references vertex {vertex}, but the graph has {vertices} vertices")]
    EdgeOutOfRange {
        edge: usize,
        vertex: usize,
        vertices: usize,
    },
}

/// Checks the standing hypotheses on an adjacency matrix.
pub fn check_adjacency(b: &IntMatrix) -> Result<(), SftError> {
    if !b.is_square() {
        return Err(SftError::NotSquare(b.shape()));
    }
    let n = b.rows();
    if n == 0 {
        return Err(SftError::Empty);
    }
    if b.entries().iter().any(|x| x < &BigInt::zero()) {
        return Err(SftError::Negative);
    }
    // Warshall closure on the support of B.
    let mut reach: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| !b[(i, j)].is_zero()).collect())
        .collect();
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                let via = reach[k].clone();
                for (r, v) in reach[i].iter_mut().zip(via) {
                    *r |= v;
                }
            }
        }
    }
    for (i, row) in reach.iter().enumerate() {
        if let Some(j) = row.iter().position(|&r| !r) {
            return Err(SftError::Reducible { from: i, to: j });
        }
    }
    let one = BigInt::one();
    let row_sums_one = (0..n).all(|i| b.row(i).iter().sum::<BigInt>() == one);
    let col_sums_one = (0..n).all(|j| b.column(j).iter().sum::<BigInt>() == one);
    let binary = b.entries().iter().all(|x| x <= &one);
    if row_sums_one && col_sums_one && binary {
        return Err(SftError::Permutation);
    }
    Ok(())
}

/// A finite directed graph, with edges stored as `(initial, terminal)` pairs (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl DirectedGraph {
    /// Builds a graph and checks irreducibility and the non-permutation condition.
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, SftError> {
        let g = Self::unchecked(vertices, edges)?;
        check_adjacency(&g.adjacency())?;
        Ok(g)
    }

    fn unchecked(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, SftError> {
        for (e, &(i, t)) in edges.iter().enumerate() {
            for v in [i, t] {
                if v >= vertices {
                    return Err(SftError::EdgeOutOfRange {
                        edge: e,
                        vertex: v,
                        vertices,
                    });
                }
            }
        }
        Ok(Self { vertices, edges })
    }

    /// The graph with `B(ξ, η)` parallel edges from `ξ` to `η`.
    pub fn from_adjacency(b: &IntMatrix) -> Result<Self, SftError> {
        check_adjacency(b)?;
        let n = b.rows();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let count: usize = b[(i, j)].clone().try_into().expect("small multiplicity");
                edges.extend(std::iter::repeat_n((i, j), count));
            }
        }
        Ok(Self { vertices: n, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `B(ξ, η) = #{e : i(e) = ξ, t(e) = η}`.
    pub fn adjacency(&self) -> IntMatrix {
        let mut b = IntMatrix::zeros(self.vertices, self.vertices);
        for &(i, t) in &self.edges {
            b[(i, t)] += BigInt::one();
        }
        b
    }

    /// The graphs `(𝒱, ℰ)` and `(𝒲, ℱ)`.
    ///
    /// `(𝒱, ℰ)` adds two loops `(v, p)`, `p ∈ Z/2`, at each vertex. `(𝒲, ℱ)`
    /// has vertices `V × Z/2` (index `v + p·|V|`) and edges `ℰ × Z/2`, where
    /// `(e, q)` runs from `(i(e), q)` to `(t(e), q)` and `(v, p, q)` runs from
    /// `(v, q)` to `(v, p + q)`.
    pub fn doubled(&self) -> (DirectedGraph, DirectedGraph) {
        let n = self.vertices;
        let mut loops_added = self.edges.clone();
        for v in 0..n {
            loops_added.push((v, v));
            loops_added.push((v, v));
        }
        let mut doubled_edges = Vec::new();
        for q in 0..2 {
            for &(i, t) in &self.edges {
                doubled_edges.push((i + q * n, t + q * n));
            }
            for v in 0..n {
                for p in 0..2 {
                    doubled_edges.push((v + q * n, v + ((p + q) % 2) * n));
                }
            }
        }
        (
            DirectedGraph {
                vertices: n,
                edges: loops_added,
            },
            DirectedGraph {
                vertices: 2 * n,
                edges: doubled_edges,
            },
        )
    }
}

/// `(H₀, H₁) = (Coker(I − Bᵗ), Ker(I − Bᵗ))`.
pub fn sft_homology(b: &IntMatrix) -> Result<GradedGroup, SftError> {
    check_adjacency(b)?;
    let m = IntMatrix::identity(b.rows()).try_sub(&b.transpose()).expect("square");
    let h0 = zlinalg::cokernel(&m);
    let h1 = FgAbGroup::free(zlinalg::kernel_basis(&m).cols());
    Ok(GradedGroup::new(vec![h0, h1]))
}

/// Adjacency matrices `(B + 2I, [[B+I, I], [I, B+I]])` of the doubled graphs,
/// read off from the constructed edge sets.
pub fn doubled_graphs(g: &DirectedGraph) -> (IntMatrix, IntMatrix) {
    let (v, w) = g.doubled();
    (v.adjacency(), w.adjacency())
}

/// Which of the two six-term sequences to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SixTermMode {
    /// From the factor map of the doubled graphs: `Bᵗ+I` first.
    Factor,
    /// From the subgroupoid inclusion: `Bᵗ−I` first.
    Sub,
}

/// Decidable necessary conditions on a six-term sequence with unknown maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub rank_sum: i64,
    /// `(rank Ker(block), rank Ker(Bᵗ+I), rank Ker(Bᵗ−I))`.
    pub kernel_ranks: (usize, usize, usize),
    /// `(det(block), det(Bᵗ+I), det(Bᵗ−I))`.
    pub determinants: (BigInt, BigInt, BigInt),
    /// `(|Coker(block)|, |Coker(Bᵗ+I)|, |Coker(Bᵗ−I)|)` when all three are finite.
    pub orders: Option<(BigInt, BigInt, BigInt)>,
}

impl ConsistencyReport {
    pub fn rank_sum_ok(&self) -> bool {
        self.rank_sum == 0
    }

    pub fn rank_split_ok(&self) -> bool {
        let (k, p, m) = self.kernel_ranks;
        k == p + m
    }

    pub fn determinant_ok(&self) -> bool {
        let (d, p, m) = &self.determinants;
        d == &(p * m)
    }

    /// Vacuously true when some cokernel is infinite.
    pub fn order_ok(&self) -> bool {
        self.orders.as_ref().is_none_or(|(c, p, m)| c == &(p * m))
    }

    pub fn all_pass(&self) -> bool {
        self.rank_sum_ok() && self.rank_split_ok() && self.determinant_ok() && self.order_ok()
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check rank-sum: {} (alternating sum {})", verdict(self.rank_sum_ok()), self.rank_sum)?;
        let (k, p, m) = self.kernel_ranks;
        writeln!(
            f,
            "check rank-split: {} (rank Ker block {k} = {p} + {m})",
            verdict(self.rank_split_ok())
        )?;
        let (d, dp, dm) = &self.determinants;
        writeln!(
            f,
            "check determinant: {} (det block {d} = {dp} * {dm})",
            verdict(self.determinant_ok())
        )?;
        match &self.orders {
            Some((c, p, m)) => writeln!(
                f,
                "check order: {} (|Coker block| {c} = {p} * {m})",
                verdict(self.order_ok())
            ),
            None => writeln!(f, "check order: n/a (infinite cokernel)"),
        }
    }
}

/// A six-term sequence with unknown maps and its consistency report.
#[derive(Clone, Debug)]
pub struct SixTerm {
    pub sequence: ExactSequence,
    pub report: ConsistencyReport,
}

/// `[[Bᵗ, I], [I, Bᵗ]]`.
pub fn block_matrix(b: &IntMatrix) -> IntMatrix {
    let bt = b.transpose();
    let id = IntMatrix::identity(b.rows());
    let top = bt.hcat(&id).expect("square");
    let bottom = id.hcat(&bt).expect("square");
    top.vcat(&bottom).expect("same width")
}

/// The six groups `Ker X → Ker block → Ker Y → Coker X → Coker block → Coker Y`,
/// where `(X, Y) = (Bᵗ+I, Bᵗ−I)` for [`SixTermMode::Factor`] and swapped for
/// [`SixTermMode::Sub`].
pub fn six_term(g: &DirectedGraph, mode: SixTermMode) -> SixTerm {
    let b = g.adjacency();
    let n = b.rows();
    let bt = b.transpose();
    let id = IntMatrix::identity(n);
    let plus = bt.try_add(&id).expect("square");
    let minus = bt.try_sub(&id).expect("square");
    let block = block_matrix(&b);

    let (first, last) = match mode {
        SixTermMode::Factor => (&plus, &minus),
        SixTermMode::Sub => (&minus, &plus),
    };
    let ker = |m: &IntMatrix| FgAbGroup::free(zlinalg::kernel_basis(m).cols());
    let groups = vec![
        ker(first),
        ker(&block),
        ker(last),
        zlinalg::cokernel(first),
        zlinalg::cokernel(&block),
        zlinalg::cokernel(last),
    ];
    let sequence = ExactSequence::with_unknown_maps(groups);

    let det = |m: &IntMatrix| m.determinant().expect("square");
    let coker_plus = zlinalg::cokernel(&plus);
    let coker_minus = zlinalg::cokernel(&minus);
    let coker_block = zlinalg::cokernel(&block);
    let orders = match (coker_block.order(), coker_plus.order(), coker_minus.order()) {
        (Some(c), Some(p), Some(m)) => Some((c, p, m)),
        _ => None,
    };
    let report = ConsistencyReport {
        rank_sum: sequence.rank_alternating_sum(),
        kernel_ranks: (
            ker(&block).free_rank(),
            ker(&plus).free_rank(),
            ker(&minus).free_rank(),
        ),
        determinants: (det(&block), det(&plus), det(&minus)),
        orders,
    };
    SixTerm { sequence, report }
}

pub fn factor_six_term(g: &DirectedGraph) -> SixTerm {
    six_term(g, SixTermMode::Factor)
}

pub fn subgroupoid_six_term(g: &DirectedGraph) -> SixTerm {
    six_term(g, SixTermMode::Sub)
}
