use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// A Smith decomposition `U·M·V = D` together with `U⁻¹` and `V⁻¹`.
///
/// `D` is diagonal with `d₁ | d₂ | … | d_r` positive and zeros afterwards.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    rank: usize,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal entries `d₁ | … | d_r`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Tracks a matrix under elementary row/column operations while maintaining
/// the transforms on both sides and their inverses.
struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn new(m: &IntMatrix) -> Self {
        Self {
            a: m.clone(),
            u: IntMatrix::identity(m.rows()),
            u_inv: IntMatrix::identity(m.rows()),
            v: IntMatrix::identity(m.cols()),
            v_inv: IntMatrix::identity(m.cols()),
        }
    }

    // row_i += q row_j
    fn row_add(&mut self, i: usize, j: usize, q: &BigInt) {
        self.a.add_row_multiple(i, j, q);
        self.u.add_row_multiple(i, j, q);
        self.u_inv.add_col_multiple(j, i, &-q);
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    // col_i += q col_j
    fn col_add(&mut self, i: usize, j: usize, q: &BigInt) {
        self.a.add_col_multiple(i, j, q);
        self.v.add_col_multiple(i, j, q);
        self.v_inv.add_row_multiple(j, i, &-q);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// Position of the smallest nonzero |entry| in the trailing block at `t`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => x.abs() < self.a[b].abs(),
                };
                if better {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// Clears row and column `t` outside the pivot and enforces that the pivot
    /// divides the remaining block.
    fn settle(&mut self, t: usize) -> bool {
        let Some((pi, pj)) = self.min_pivot(t) else {
            return false;
        };
        self.row_swap(t, pi);
        self.col_swap(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..self.a.rows() {
                if self.a[(i, t)].is_zero() {
                    continue;
                }
                let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                self.row_add(i, t, &-q);
                if !self.a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..self.a.cols() {
                if self.a[(t, j)].is_zero() {
                    continue;
                }
                let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                self.col_add(j, t, &-q);
                if !self.a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                self.bring_smallest_of_cross(t);
                continue;
            }
            // Row and column are clear; check divisibility of the rest.
            let p = self.a[(t, t)].clone();
            let offender = (t + 1..self.a.rows()).find(|&i| {
                (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(&p))
            });
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    self.row_add(t, i, &one);
                }
                None => break,
            }
        }
        if self.a[(t, t)].is_negative() {
            self.row_negate(t);
        }
        true
    }

    /// Moves the smallest nonzero entry of row `t` / column `t` onto the diagonal.
    fn bring_smallest_of_cross(&mut self, t: usize) {
        let mut best = (t, t);
        for i in t + 1..self.a.rows() {
            let x = &self.a[(i, t)];
            if !x.is_zero() && x.abs() < self.a[best].abs() {
                best = (i, t);
            }
        }
        for j in t + 1..self.a.cols() {
            let x = &self.a[(t, j)];
            if !x.is_zero() && x.abs() < self.a[best].abs() {
                best = (t, j);
            }
        }
        if best.0 != t {
            self.row_swap(t, best.0);
        }
        if best.1 != t {
            self.col_swap(t, best.1);
        }
    }
}

/// Smith normal form of an arbitrary integer matrix (zero and non-square included).
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let mut r = Reducer::new(m);
    let steps = m.rows().min(m.cols());
    let mut rank = 0;
    for t in 0..steps {
        if !r.settle(t) {
            break;
        }
        rank += 1;
    }
    Smith {
        u: r.u,
        d: r.a,
        v: r.v,
        u_inv: r.u_inv,
        v_inv: r.v_inv,
        rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> Smith {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(m.rows()));
        assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(m.cols()));
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
    }

    #[test]
    fn two_one_one_two() {
        let s = check(&IntMatrix::from_rows(&[[2, 1], [1, 2]]));
        assert_eq!(s.d, IntMatrix::from_rows(&[[1, 0], [0, 3]]));
    }

    #[test]
    fn unimodular_input() {
        let s = check(&IntMatrix::from_rows(&[[0, -1], [-1, 1]]));
        assert_eq!(s.d, IntMatrix::identity(2));
    }

    #[test]
    fn divisibility_needs_fixup() {
        // diag(2, 3) is not in Smith form; the result must be diag(1, 6).
        let s = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn empty_and_zero() {
        assert_eq!(check(&IntMatrix::zeros(0, 3)).rank(), 0);
        assert_eq!(check(&IntMatrix::zeros(3, 0)).rank(), 0);
        assert_eq!(check(&IntMatrix::zeros(2, 3)).rank(), 0);
    }

    #[test]
    fn rectangular() {
        let s = check(&IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]));
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        let s = check(&IntMatrix::from_rows(&[[2], [0], [0], [-1]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1)]);
    }
}
