//! Random generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use gpdhom::chain::{ChainComplex, FiniteTransformationGroupoid};
use gpdhom::fgab::FgAbGroup;
use gpdhom::zlinalg::{self, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries = (0..rows * cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    IntMatrix::new(rows, cols, entries).unwrap()
}

/// A product of random elementary row operations.
pub fn random_unimodular(rng: &mut StdRng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let q = rng.gen_range(-2i64..=2);
        let e = IntMatrix::identity(n).try_add(&elementary(n, i, j, q)).unwrap();
        m = &e * &m;
        if rng.gen_bool(0.2) {
            m = m.select_rows(&swap(n, i, j));
        }
    }
    m
}

fn elementary(n: usize, i: usize, j: usize, q: i64) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|c| if r == i && c == j { q } else { 0 }).collect())
        .collect();
    IntMatrix::from_rows_with_cols(&rows, n)
}

fn swap(n: usize, i: usize, j: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.swap(i, j);
    idx
}

/// Determinant by cofactor expansion; independent of the library's elimination.
pub fn laplace_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * laplace_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors `d_k = D_k / D_{k−1}` where `D_k` is the gcd of all `k × k` minors.
pub fn determinantal_invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut factors = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = BigInt::zero();
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let minor: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| m[(r, c)].clone()).collect()).collect();
                g = g.gcd(&laplace_det(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        factors.push(&g / &prev);
        prev = g;
    }
    factors
}

/// `Z^rows / span(M)` from the determinantal divisors.
pub fn oracle_cokernel(m: &IntMatrix) -> FgAbGroup {
    let factors = determinantal_invariant_factors(m);
    let free = m.rows() - factors.len();
    FgAbGroup::from_invariants(free, factors.into_iter().map(|d| d.abs()))
}

/// Homology of the cyclic group `Z/k` from the periodic resolution
/// `Z ←0− Z ←k− Z ←0− Z ←k− …`, degrees `0..n`.
pub fn cyclic_group_homology_oracle(k: i64, n: usize) -> Vec<FgAbGroup> {
    let boundaries = (1..=n)
        .map(|d| IntMatrix::from_rows(&[[if d % 2 == 0 { k } else { 0 }]]))
        .collect();
    let c = ChainComplex::new(vec![1; n + 1], boundaries).unwrap();
    (0..n).map(|d| c.homology(d).unwrap()).collect()
}

/// A bounded complex with `∂ₙ₊₁ = kernel_basis(∂ₙ)·R`.
pub fn random_complex(rng: &mut StdRng, max_len: usize, max_rank: usize) -> ChainComplex {
    let len = rng.gen_range(1..=max_len);
    let ranks: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=max_rank)).collect();
    let mut boundaries = Vec::new();
    for n in 1..len {
        let b = if n == 1 {
            random_matrix(rng, ranks[0], ranks[1], 3)
        } else {
            let prev: &IntMatrix = &boundaries[n - 2];
            let k = zlinalg::kernel_basis(prev);
            let r = random_matrix(rng, k.cols(), ranks[n], 2);
            &k * &r
        };
        boundaries.push(b);
    }
    ChainComplex::new(ranks, boundaries).unwrap()
}

/// Random saturated sub-lattices `Sₙ` with `∂Sₙ ⊆ Sₙ₋₁`, built from degree 0 up.
pub fn random_saturated_subcomplex(rng: &mut StdRng, c: &ChainComplex) -> Vec<IntMatrix> {
    let mut bases: Vec<IntMatrix> = Vec::new();
    for n in 0..=c.top_degree() {
        // Everything whose boundary lands in the sub-lattice one degree down.
        let allowed = if n == 0 {
            IntMatrix::identity(c.rank(0))
        } else {
            let prev = &bases[n - 1];
            let neg = prev.scale(&BigInt::from(-1));
            let k = zlinalg::kernel_basis(&c.boundary(n).hcat(&neg).unwrap());
            zlinalg::saturate(&k.row_range(0..c.rank(n)))
        };
        let pick = rng.gen_range(0..=allowed.cols());
        let r = random_matrix(rng, allowed.cols(), pick, 2);
        bases.push(zlinalg::saturate(&(&allowed * &r)));
    }
    bases
}

/// Cyclic groups and `Z/2 × Z/2` as multiplication tables.
pub fn small_groups() -> Vec<Vec<Vec<usize>>> {
    let cyclic = |k: usize| -> Vec<Vec<usize>> { (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect() };
    let klein = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    vec![cyclic(1), cyclic(2), cyclic(3), cyclic(4), klein]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every action of the group `table` on `points` points, by brute force.
pub fn all_actions(table: &[Vec<usize>], points: usize) -> Vec<FiniteTransformationGroupoid> {
    let perms = permutations(points);
    let k = table.len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    loop {
        let action: Vec<Vec<usize>> = choice.iter().map(|&c| perms[c].clone()).collect();
        if let Ok(g) = FiniteTransformationGroupoid::new(table.to_vec(), points, action) {
            out.push(g);
        }
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            choice[i] += 1;
            if choice[i] < perms.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// All irreducible non-permutation matrices would be too many; draw random
/// ones with `n ≤ max_n` and entries in `0..=max_entry` until `count` pass.
pub fn random_sft_matrices(rng: &mut StdRng, count: usize, max_n: usize, max_entry: i64) -> Vec<IntMatrix> {
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(1..=max_n);
        let entries = (0..n * n).map(|_| BigInt::from(rng.gen_range(0..=max_entry))).collect();
        let b = IntMatrix::new(n, n, entries).unwrap();
        if gpdhom::sft::check_adjacency(&b).is_ok() {
            out.push(b);
        }
    }
    out
}
