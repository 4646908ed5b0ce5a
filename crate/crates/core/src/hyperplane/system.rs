use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::quad::{QuadMod, Theta};
use super::HyperplaneError;
use crate::fgab::GradedGroup;
use crate::zlinalg::{self, IntMatrix};

const GREEK: [&str; 12] = ["α", "β", "γ", "δ", "ε", "ζ", "η", "ι", "κ", "λ", "μ", "ν"];

/// Names `α, β, γ, …` for the first `n` generators of an `H₀`.
pub fn generator_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| GREEK.get(i).map_or_else(|| format!("g{i}"), |s| s.to_string()))
        .collect()
}

fn quad_matrix(gens: &[QuadMod; 2]) -> IntMatrix {
    IntMatrix::from_columns(2, &[gens[0].coords().to_vec(), gens[1].coords().to_vec()])
}

/// A one-dimensional hyperplane system `(R, M, {{c} : c ∈ C})` with `M ⊆ C ⊂ Z + Zθ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimSystem {
    theta: Theta,
    translations: [QuadMod; 2],
    cuts: [QuadMod; 2],
    index: BigInt,
}

impl OneDimSystem {
    pub fn new(theta: Theta, translations: [QuadMod; 2], cuts: [QuadMod; 2]) -> Result<Self, HyperplaneError> {
        let c = quad_matrix(&cuts);
        let m = quad_matrix(&translations);
        if c.determinant()?.is_zero() {
            return Err(HyperplaneError::Degenerate("cut set"));
        }
        if m.determinant()?.is_zero() {
            return Err(HyperplaneError::Degenerate("translation group"));
        }
        // Columns of `x` express the translation generators in the cut basis.
        let x = zlinalg::solve(&c, &m)?.ok_or(HyperplaneError::TranslationsNotInCuts)?;
        let index = x.determinant()?.abs();
        Ok(Self {
            theta,
            translations,
            cuts,
            index,
        })
    }

    /// `M = C = ⟨1, √2⟩` over `θ = 1/√2`.
    pub fn denjoy() -> Self {
        let gens = [QuadMod::one(), QuadMod::new(0, 2)];
        Self::new(Theta::octagonal(), gens.clone(), gens).expect("valid")
    }

    /// The reduced octagonal system: `M = ⟨1, 2θ⟩`, `C = Z + Zθ`, `θ = 1/√2`.
    pub fn octagonal_reduced() -> Self {
        Self::new(
            Theta::octagonal(),
            [QuadMod::one(), QuadMod::new(0, 2)],
            [QuadMod::one(), QuadMod::theta()],
        )
        .expect("valid")
    }

    /// `M = C = ⟨1, θ⟩` over the golden `θ = (√5 − 1)/2`.
    pub fn penrose() -> Self {
        let gens = [QuadMod::one(), QuadMod::theta()];
        Self::new(Theta::penrose(), gens.clone(), gens).expect("valid")
    }

    pub fn theta(&self) -> &Theta {
        &self.theta
    }

    pub fn translations(&self) -> &[QuadMod; 2] {
        &self.translations
    }

    pub fn cuts(&self) -> &[QuadMod; 2] {
        &self.cuts
    }

    /// `[C : M]`, the number of `M`-orbits in `C`.
    pub fn index(&self) -> &BigInt {
        &self.index
    }

    /// `(Z^{1+[C:M]}, Z)`.
    pub fn homology(&self) -> GradedGroup {
        let k: usize = (&self.index).try_into().expect("index fits in usize");
        GradedGroup::free(&[1 + k, 1])
    }

    /// `α, β, …` for the generators of `H₀`.
    pub fn generator_names(&self) -> Vec<String> {
        generator_names(self.homology().get(0).free_rank())
    }

    pub fn is_positive(&self, x: &QuadMod) -> bool {
        self.theta.sign(x) == Ordering::Greater
    }

    /// Coordinates of `ℓ` in the translation basis, if `ℓ ∈ M`.
    pub fn translation_coordinates(&self, l: &QuadMod) -> Option<Vec<BigInt>> {
        zlinalg::lattice_contains(&quad_matrix(&self.translations), &l.coords())
            .expect("two coordinates")
    }
}

/// `H₀` and `H₁` of a one-dimensional system, with generator names.
pub fn one_dim_homology(s: &OneDimSystem) -> (GradedGroup, Vec<String>) {
    (s.homology(), s.generator_names())
}

/// An element of `H₀` of a one-dimensional system, in the named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H0Class {
    pub coefficients: Vec<BigInt>,
}

impl H0Class {
    pub fn names(&self) -> Vec<String> {
        generator_names(self.coefficients.len())
    }
}

/// `2α - β`, `-α + β`, `0`.
impl fmt::Display for H0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.coefficients, &self.names())
    }
}

pub(crate) fn write_combination(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt], names: &[String]) -> fmt::Result {
    let mut first = true;
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let sign = match (first, c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let mag = c.abs();
        if mag.is_one() {
            write!(f, "{sign}{name}")?;
        } else {
            write!(f, "{sign}{mag}{name}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// The class of an interval of length `ℓ`: writing `ℓ = a·u + b·v` in the
/// translation basis `(u, v)` gives `a·α + b·β`.
///
/// Only single-orbit systems (`C = M`) are supported.
pub fn interval_class(s: &OneDimSystem, l: &QuadMod) -> Result<H0Class, HyperplaneError> {
    if !s.index().is_one() {
        return Err(HyperplaneError::MultiOrbit(s.index().clone()));
    }
    let coefficients = s
        .translation_coordinates(l)
        .ok_or_else(|| HyperplaneError::NotATranslation(l.clone()))?;
    Ok(H0Class { coefficients })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn factor(self) -> BigInt {
        match self {
            Sign::Plus => BigInt::one(),
            Sign::Minus => -BigInt::one(),
        }
    }
}

/// A parallelogram with sides along the two axes, entering a class with a sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedParallelogram {
    pub side1: QuadMod,
    pub side2: QuadMod,
    pub sign: Sign,
}

impl SignedParallelogram {
    pub fn new(side1: QuadMod, side2: QuadMod, sign: Sign) -> Self {
        Self { side1, side2, sign }
    }

    /// Both sides have positive length.
    pub fn is_proper(&self, s1: &OneDimSystem, s2: &OneDimSystem) -> bool {
        s1.is_positive(&self.side1) && s2.is_positive(&self.side2)
    }
}

impl fmt::Display for SignedParallelogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{s}[{}] x [{}]", self.side1, self.side2)
    }
}

/// `sign · class(side1) ⊗ class(side2)` in the basis `α⊗α, α⊗β, β⊗α, β⊗β`.
pub fn parallelogram_class(
    p: &SignedParallelogram,
    s1: &OneDimSystem,
    s2: &OneDimSystem,
) -> Result<Vec<BigInt>, HyperplaneError> {
    let u = IntMatrix::column_vector(&interval_class(s1, &p.side1)?.coefficients);
    let v = IntMatrix::column_vector(&interval_class(s2, &p.side2)?.coefficients);
    Ok(u.kron(&v).scale(&p.sign.factor()).entries().to_vec())
}

/// The sum of the parallelogram classes.
pub fn boundary_class(
    ps: &[SignedParallelogram],
    s1: &OneDimSystem,
    s2: &OneDimSystem,
) -> Result<Vec<BigInt>, HyperplaneError> {
    let mut total = vec![BigInt::zero(); 4];
    for p in ps {
        for (t, c) in total.iter_mut().zip(parallelogram_class(p, s1, s2)?) {
            *t += c;
        }
    }
    Ok(total)
}

/// Tensor basis names `α⊗α, α⊗β, β⊗α, β⊗β`.
pub fn tensor_names() -> Vec<String> {
    let n = generator_names(2);
    n.iter()
        .flat_map(|a| n.iter().map(move |b| format!("{a}⊗{b}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlinalg::int_vec;

    fn q(a: i64, b: i64) -> QuadMod {
        QuadMod::new(a, b)
    }

    #[test]
    fn homology_of_examples() {
        assert_eq!(OneDimSystem::denjoy().homology(), GradedGroup::free(&[2, 1]));
        assert_eq!(OneDimSystem::octagonal_reduced().homology(), GradedGroup::free(&[3, 1]));
        assert_eq!(OneDimSystem::penrose().homology(), GradedGroup::free(&[2, 1]));
        let s = OneDimSystem::new(Theta::octagonal(), [q(1, 0), q(0, 3)], [q(1, 0), q(0, 1)]).unwrap();
        assert_eq!(one_dim_homology(&s).0, GradedGroup::free(&[4, 1]));
        assert_eq!(one_dim_homology(&s).1, ["α", "β", "γ", "δ"]);
    }

    #[test]
    fn invalid_systems() {
        let t = Theta::octagonal();
        assert_eq!(
            OneDimSystem::new(t.clone(), [q(1, 0), q(2, 0)], [q(1, 0), q(0, 1)]),
            Err(HyperplaneError::Degenerate("translation group"))
        );
        assert_eq!(
            OneDimSystem::new(t.clone(), [q(1, 0), q(0, 1)], [q(1, 0), q(0, 2)]),
            Err(HyperplaneError::TranslationsNotInCuts)
        );
        assert!(OneDimSystem::new(t, [q(1, 0), q(0, 1)], [q(1, 1), q(2, 2)]).is_err());
    }

    #[test]
    fn interval_classes_octagonal_axis() {
        let s = OneDimSystem::denjoy();
        assert_eq!(interval_class(&s, &q(1, 0)).unwrap().to_string(), "α");
        assert_eq!(interval_class(&s, &q(2, -2)).unwrap().to_string(), "2α - β");
        assert_eq!(interval_class(&s, &q(-1, 2)).unwrap().to_string(), "-α + β");
        assert_eq!(
            interval_class(&s, &q(0, 1)),
            Err(HyperplaneError::NotATranslation(q(0, 1)))
        );
        assert!(matches!(
            interval_class(&OneDimSystem::octagonal_reduced(), &q(1, 0)),
            Err(HyperplaneError::MultiOrbit(_))
        ));
    }

    #[test]
    fn parallelograms_octagonal() {
        let s = OneDimSystem::denjoy();
        let yellow = SignedParallelogram::new(q(2, -2), q(2, -2), Sign::Plus);
        let green = SignedParallelogram::new(q(-1, 2), q(-2, 4), Sign::Minus);
        assert!(yellow.is_proper(&s, &s) && green.is_proper(&s, &s));
        assert_eq!(parallelogram_class(&yellow, &s, &s).unwrap(), int_vec(&[4, -2, -2, 1]));
        assert_eq!(parallelogram_class(&green, &s, &s).unwrap(), int_vec(&[-2, 2, 2, -2]));
        assert_eq!(boundary_class(&[yellow, green], &s, &s).unwrap(), int_vec(&[2, 0, 0, -1]));
        let unit = SignedParallelogram::new(q(1, 0), q(1, 0), Sign::Plus);
        assert_eq!(parallelogram_class(&unit, &s, &s).unwrap(), int_vec(&[1, 0, 0, 0]));
    }

    #[test]
    fn parallelograms_penrose() {
        let h = OneDimSystem::penrose();
        let a = q(1, -1);
        let b = q(-1, 2);
        let first = [
            SignedParallelogram::new(a.clone(), b.clone(), Sign::Plus),
            SignedParallelogram::new(b.clone(), a.clone(), Sign::Minus),
        ];
        assert_eq!(boundary_class(&first, &h, &h).unwrap(), int_vec(&[0, 1, -1, 0]));
        let second = [
            SignedParallelogram::new(b, q(0, 1), Sign::Plus),
            SignedParallelogram::new(a.clone(), a, Sign::Minus),
        ];
        assert_eq!(boundary_class(&second, &h, &h).unwrap(), int_vec(&[-1, 0, 1, 1]));
    }

    #[test]
    fn combination_display() {
        let c = H0Class {
            coefficients: int_vec(&[0, -3, 1]),
        };
        assert_eq!(c.to_string(), "-3β + γ");
        assert_eq!(H0Class { coefficients: int_vec(&[0, 0]) }.to_string(), "0");
        assert_eq!(tensor_names(), ["α⊗α", "α⊗β", "β⊗α", "β⊗β"]);
    }
}
