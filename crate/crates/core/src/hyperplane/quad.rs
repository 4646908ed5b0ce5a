use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, Zero};

use super::HyperplaneError;

/// A quadratic irrational `θ = (p + q√d) / r` with `d` not a perfect square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Theta {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    r: BigInt,
}

impl Theta {
    pub fn new(p: i64, q: i64, d: i64, r: i64) -> Result<Self, HyperplaneError> {
        if d <= 1 || (d as u64).sqrt().pow(2) == d as u64 {
            return Err(HyperplaneError::RationalTheta(format!("d = {d} is a perfect square or < 2")));
        }
        if q == 0 || r == 0 {
            return Err(HyperplaneError::RationalTheta(format!("q = {q}, r = {r}")));
        }
        let (p, q, r) = if r < 0 { (-p, -q, -r) } else { (p, q, r) };
        Ok(Self {
            p: p.into(),
            q: q.into(),
            d: d.into(),
            r: r.into(),
        })
    }

    /// `1/√2`, with `2θ² = 1`.
    pub fn octagonal() -> Self {
        Self::new(0, 1, 2, 2).expect("valid")
    }

    /// `(√5 − 1)/2`, with `θ² = 1 − θ`.
    pub fn penrose() -> Self {
        Self::new(-1, 1, 5, 2).expect("valid")
    }

    /// Exact sign of `a + bθ`.
    pub fn sign(&self, x: &QuadMod) -> Ordering {
        // r·(a + bθ) = (a·r + b·p) + (b·q)·√d with r > 0.
        let rational = &x.a * &self.r + &x.b * &self.p;
        let irrational = &x.b * &self.q;
        sign_of_surd(&rational, &irrational, &self.d)
    }

    /// `θ` as a float, for display only.
    pub fn approx(&self) -> f64 {
        let f = |x: &BigInt| x.to_string().parse::<f64>().unwrap_or(f64::NAN);
        (f(&self.p) + f(&self.q) * f(&self.d).sqrt()) / f(&self.r)
    }
}

/// Sign of `x + y√d` for non-square `d > 0`.
fn sign_of_surd(x: &BigInt, y: &BigInt, d: &BigInt) -> Ordering {
    let sx = x.cmp(&BigInt::zero());
    let sy = y.cmp(&BigInt::zero());
    if sy == Ordering::Equal {
        return sx;
    }
    if sx == Ordering::Equal || sx == sy {
        return sy;
    }
    // Opposite signs: the larger of x² and y²d wins; they are never equal.
    match (x * x).cmp(&(y * y * d)) {
        Ordering::Greater => sx,
        _ => sy,
    }
}

/// An element `a + bθ` of the module `Z + Zθ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuadMod {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadMod {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into() }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn theta() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        Self {
            a: &self.a * &k,
            b: &self.b * &k,
        }
    }

    pub fn coords(&self) -> [BigInt; 2] {
        [self.a.clone(), self.b.clone()]
    }
}

impl Add for &QuadMod {
    type Output = QuadMod;
    fn add(self, rhs: &QuadMod) -> QuadMod {
        QuadMod {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QuadMod {
    type Output = QuadMod;
    fn sub(self, rhs: &QuadMod) -> QuadMod {
        QuadMod {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &QuadMod {
    type Output = QuadMod;
    fn neg(self) -> QuadMod {
        QuadMod {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Add for QuadMod {
    type Output = QuadMod;
    fn add(self, rhs: QuadMod) -> QuadMod {
        &self + &rhs
    }
}

impl Sub for QuadMod {
    type Output = QuadMod;
    fn sub(self, rhs: QuadMod) -> QuadMod {
        &self - &rhs
    }
}

impl Neg for QuadMod {
    type Output = QuadMod;
    fn neg(self) -> QuadMod {
        -&self
    }
}

/// `2 - 2θ`, `-1 + 2θ`, `θ`, `0`.
impl fmt::Display for QuadMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let theta_term = |b: &BigInt| match b.abs() {
            x if x == BigInt::from(1) => "θ".to_string(),
            x => format!("{x}θ"),
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => {
                let sign = if self.b.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}", theta_term(&self.b))
            }
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{} {sign} {}", self.a, theta_term(&self.b))
            }
        }
    }
}
