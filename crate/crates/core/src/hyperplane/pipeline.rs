use std::fmt;

use num_bigint::BigInt;

use super::system::{boundary_class, tensor_names, write_combination, OneDimSystem, Sign, SignedParallelogram};
use super::quad::QuadMod;
use super::HyperplaneError;
use crate::chain::kunneth_free;
use crate::exactseq::solve_split;
use crate::fgab::{FgAbGroup, GradedGroup, GroupHom, Subquotient};
use crate::zlinalg::{self, IntMatrix};

/// One application of the long exact sequence of a factor map whose
/// quotient homology vanishes in degrees `≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesStep {
    pub previous: GradedGroup,
    pub quotient: GradedGroup,
    /// `∂ : H₁(quotient) → H₀(previous)`.
    pub boundary: GroupHom,
    pub kernel: FgAbGroup,
    pub cokernel: FgAbGroup,
    pub result: GradedGroup,
}

/// `Hₙ(new)` from `… → Hₙ(prev) → Hₙ(new) → Hₙ(quot) → Hₙ₋₁(prev) → …`.
///
/// Degree 0 is `Coker ∂ ⊕ H₀(quot)`, degree 1 is `H₁(prev) ⊕ Ker ∂`, higher
/// degrees pass through unchanged. Both extensions must split.
pub fn les_step(previous: &GradedGroup, quotient: &GradedGroup, boundary: &GroupHom) -> Result<LesStep, HyperplaneError> {
    if quotient.len() > 2 {
        return Err(HyperplaneError::QuotientTooLong(quotient.clone()));
    }
    if boundary.source() != &quotient.get(1) || boundary.target() != &previous.get(0) {
        return Err(HyperplaneError::BoundaryMismatch);
    }
    let (kernel, _, cokernel) = boundary.kernel_image_cokernel();
    let mut pieces = vec![
        solve_split(&cokernel, &quotient.get(0))?,
        solve_split(&previous.get(1), &kernel)?,
    ];
    pieces.extend(previous.pieces().iter().skip(2).cloned());
    Ok(LesStep {
        previous: previous.clone(),
        quotient: quotient.clone(),
        boundary: boundary.clone(),
        kernel,
        cokernel,
        result: GradedGroup::new(pieces),
    })
}

/// Degreewise cokernel of the duplication map `hᵇ → h^{b·c}`,
/// `(x₁, …, x_b) ↦ (x₁, …, x₁, …, x_b, …, x_b)` with each block repeated `c` times.
pub fn duplication_cokernel(h: &GradedGroup, blocks: usize, copies: usize) -> Result<GradedGroup, HyperplaneError> {
    let ones = IntMatrix::from_rows(&vec![[1i64]; copies]);
    h.pieces()
        .iter()
        .enumerate()
        .map(|(degree, g)| {
            if !g.is_free() {
                return Err(HyperplaneError::Torsion { degree, group: g.clone() });
            }
            let block = ones.kron(&IntMatrix::identity(g.free_rank()));
            let m = IntMatrix::identity(blocks).kron(&block);
            Ok(zlinalg::cokernel(&m))
        })
        .collect()
}

/// The class of a boundary element tested against the previous step's image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub parallelograms: Vec<SignedParallelogram>,
    pub class: Vec<BigInt>,
    /// Coefficients expressing `class` in the columns of the previous boundary.
    pub witness: Vec<BigInt>,
}

/// How the connecting map of a step was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundarySource {
    /// One list of parallelograms per generator of `H₁(quotient)`.
    Parallelograms(Vec<Vec<SignedParallelogram>>),
    /// The class lies in the image of the previous boundary, so it dies in `H₀`.
    Membership(Membership),
    /// Known to vanish without side data being available.
    Given(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineStep {
    pub title: &'static str,
    pub groupoid: &'static str,
    pub source: BoundarySource,
    pub les: LesStep,
}

/// A complete three-step computation for a planar tiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pipeline {
    pub name: &'static str,
    pub axis: OneDimSystem,
    /// `H(axis) ⊗ H(axis)`.
    pub step1: GradedGroup,
    pub step2: PipelineStep,
    pub step3: PipelineStep,
    pub notes: Vec<&'static str>,
}

impl Pipeline {
    pub fn homology(&self) -> &GradedGroup {
        &self.step3.les.result
    }

    /// The Step-2 boundary as a column per generator.
    pub fn step2_boundary(&self) -> &IntMatrix {
        self.step2.les.boundary.matrix()
    }

    pub fn step3_witness(&self) -> Option<&[BigInt]> {
        match &self.step3.source {
            BoundarySource::Membership(m) => Some(&m.witness),
            _ => None,
        }
    }
}

fn q(a: i64, b: i64) -> QuadMod {
    QuadMod::new(a, b)
}

fn boundary_from_parallelograms(
    columns: &[Vec<SignedParallelogram>],
    axis: &OneDimSystem,
    quotient: &GradedGroup,
    previous: &GradedGroup,
) -> Result<GroupHom, HyperplaneError> {
    let cols = columns
        .iter()
        .map(|ps| boundary_class(ps, axis, axis))
        .collect::<Result<Vec<_>, _>>()?;
    let m = IntMatrix::from_columns(4, &cols);
    Ok(GroupHom::new(quotient.get(1), previous.get(0), m)?)
}

/// The octagonal tiling: `(Z⁹, Z⁵, Z)`.
pub fn octagonal_pipeline() -> Result<Pipeline, HyperplaneError> {
    let axis = OneDimSystem::denjoy();
    let reduced = OneDimSystem::octagonal_reduced();
    let step1 = kunneth_free(&axis.homology(), &axis.homology())?;

    // The factor groupoid doubles the reduced system along the diagonal.
    let quotient = duplication_cokernel(&reduced.homology(), 1, 2)?;
    let yellow = SignedParallelogram::new(q(2, -2), q(2, -2), Sign::Plus);
    let green = SignedParallelogram::new(q(-1, 2), q(-2, 4), Sign::Minus);
    let columns = vec![vec![yellow, green]];
    let d2 = boundary_from_parallelograms(&columns, &axis, &quotient, &step1)?;
    let step2 = PipelineStep {
        title: "factor map G_1 -> G_0",
        groupoid: "G_1",
        source: BoundarySource::Parallelograms(columns),
        les: les_step(&step1, &quotient, &d2)?,
    };

    let quotient = duplication_cokernel(&reduced.homology(), 1, 2)?;
    let previous = step2.les.result.clone();
    let d3 = GroupHom::zero(&quotient.get(1), &previous.get(0));
    let step3 = PipelineStep {
        title: "factor map G -> G_1",
        groupoid: "G",
        source: BoundarySource::Given("yellow minus green rectangle is zero in H_0(G_1)"),
        les: les_step(&previous, &quotient, &d3)?,
    };
    Ok(Pipeline {
        name: "octagonal",
        axis,
        step1,
        step2,
        step3,
        notes: vec![],
    })
}

/// The Penrose tiling: `(Z⁸, Z⁵, Z)`.
pub fn penrose_pipeline() -> Result<Pipeline, HyperplaneError> {
    let axis = OneDimSystem::penrose();
    let h = axis.homology();
    let step1 = kunneth_free(&h, &h)?;

    let one_minus = q(1, -1);
    let golden_gap = q(-1, 2);
    let quotient = duplication_cokernel(&h, 2, 2)?;
    let columns = vec![
        vec![
            SignedParallelogram::new(one_minus.clone(), golden_gap.clone(), Sign::Plus),
            SignedParallelogram::new(golden_gap.clone(), one_minus.clone(), Sign::Minus),
        ],
        vec![
            SignedParallelogram::new(golden_gap.clone(), q(0, 1), Sign::Plus),
            SignedParallelogram::new(one_minus.clone(), one_minus.clone(), Sign::Minus),
        ],
    ];
    let d2 = boundary_from_parallelograms(&columns, &axis, &quotient, &step1)?;
    let step2 = PipelineStep {
        title: "factor map G_1 -> G_0",
        groupoid: "G_1",
        source: BoundarySource::Parallelograms(columns),
        les: les_step(&step1, &quotient, &d2)?,
    };

    // Step 3: compute the class in H_0(G_0) and push it into H_0(G_1).
    let parallelograms = vec![
        SignedParallelogram::new(q(0, 1), golden_gap, Sign::Plus),
        SignedParallelogram::new(one_minus.clone(), one_minus, Sign::Minus),
    ];
    let class = boundary_class(&parallelograms, &axis, &axis)?;
    let d2m = step2.les.boundary.matrix();
    let witness = zlinalg::lattice_contains(d2m, &class)?
        .ok_or_else(|| HyperplaneError::ClassNotInImage(class.clone()))?;
    let previous = step2.les.result.clone();
    let quotient = duplication_cokernel(&h, 1, 2)?;
    // H_0(G_1) = Coker ∂₂ ⊕ H_0(quotient); the class lands in the first summand.
    let coker = Subquotient::cokernel_of(&step2.les.boundary.image_lift())?;
    let mut image = coker.coordinates(&class)?;
    image.resize(previous.get(0).num_generators(), BigInt::default());
    let d3 = GroupHom::new(quotient.get(1), previous.get(0), IntMatrix::column_vector(&image))?;
    let step3 = PipelineStep {
        title: "factor map G -> G_1",
        groupoid: "G",
        source: BoundarySource::Membership(Membership {
            parallelograms,
            class,
            witness,
        }),
        les: les_step(&previous, &quotient, &d3)?,
    };
    Ok(Pipeline {
        name: "penrose",
        axis,
        step1,
        step2,
        step3,
        notes: vec!["the final groups are H_n(G) of the full system; the corresponding display is sometimes labeled H_n(G_1)"],
    })
}

fn vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

struct Combination<'a>(&'a [BigInt], &'a [String]);

impl fmt::Display for Combination<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.0, self.1)
    }
}

fn graded(f: &mut fmt::Formatter<'_>, name: &str, g: &GradedGroup) -> fmt::Result {
    for d in 0..g.len().max(3) {
        writeln!(f, "  H_{d}({name}) = {}", g.get(d))?;
    }
    Ok(())
}

fn step(f: &mut fmt::Formatter<'_>, number: usize, s: &PipelineStep, axis: &OneDimSystem) -> fmt::Result {
    let names = tensor_names();
    writeln!(f, "step {number}: {}", s.title)?;
    writeln!(f, "  quotient H_0 = {}", s.les.quotient.get(0))?;
    writeln!(f, "  quotient H_1 = {}", s.les.quotient.get(1))?;
    let generators = s.les.boundary.source().num_generators();
    match &s.source {
        BoundarySource::Parallelograms(columns) => {
            for (j, ps) in columns.iter().enumerate() {
                let label = if generators == 1 { "a".to_string() } else { format!("a_{}", j + 1) };
                for p in ps {
                    let c = boundary_class(std::slice::from_ref(p), axis, axis).map_err(|_| fmt::Error)?;
                    writeln!(f, "  ∂({label}) term {p} -> {}", vector(&c))?;
                }
                let col = s.les.boundary.matrix().column(j);
                writeln!(f, "  ∂({label}) = {} = {}", vector(&col), Combination(&col, &names))?;
            }
        }
        BoundarySource::Membership(m) => {
            for p in &m.parallelograms {
                let c = boundary_class(std::slice::from_ref(p), axis, axis).map_err(|_| fmt::Error)?;
                writeln!(f, "  class term {p} -> {}", vector(&c))?;
            }
            writeln!(f, "  class in H_0(G_0) = {} = {}", vector(&m.class), Combination(&m.class, &names))?;
            writeln!(f, "  class in Im ∂ of previous step: witness {}", vector(&m.witness))?;
            writeln!(f, "  ∂(a) = 0 in H_0(G_1)")?;
        }
        BoundarySource::Given(reason) => writeln!(f, "  ∂(a) = 0 ({reason})")?,
    }
    writeln!(f, "  Ker ∂ = {}", s.les.kernel)?;
    writeln!(f, "  Coker ∂ = {}", s.les.cokernel)?;
    graded(f, s.groupoid, &s.les.result)
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u, v] = self.axis.translations();
        writeln!(f, "tiling: {}", self.name)?;
        writeln!(
            f,
            "axis system: M = C = <{u}, {v}>, H = {}, H_0 = Zα + Zβ",
            self.axis.homology()
        )?;
        writeln!(f, "step 1: G_0 = axis x axis (Künneth)")?;
        graded(f, "G_0", &self.step1)?;
        writeln!(f, "  H_0(G_0) basis: {}", tensor_names().join(", "))?;
        step(f, 2, &self.step2, &self.axis)?;
        step(f, 3, &self.step3, &self.axis)?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        writeln!(f, "result:")?;
        graded(f, "G", self.homology())
    }
}
