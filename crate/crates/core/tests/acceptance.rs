//! Acceptance criteria. Run with `cargo test --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use gpdhom::chain::{boundaries_square_to_zero, groupoid_homology, FiniteTransformationGroupoid, SubcomplexInclusion};
use gpdhom::fgab::{FgAbGroup, GradedGroup};
use gpdhom::hyperplane::{octagonal_pipeline, one_dim_homology, penrose_pipeline, OneDimSystem};
use gpdhom::sft::{self, DirectedGraph, SixTermMode};
use gpdhom::zlinalg::{self, hermite_normal_form, smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(BigInt::from).collect()
}

fn octagonal() -> Outcome {
    let p = octagonal_pipeline().map_err(|e| e.to_string())?;
    ensure(p.step1 == GradedGroup::free(&[4, 4, 1]), || format!("step 1 gave {:?}", p.step1))?;
    let d = p.step2_boundary().column(0);
    ensure(d == ints(&[2, 0, 0, -1]), || format!("step-2 boundary {d:?}"))?;
    ensure(p.step2.les.result == GradedGroup::free(&[6, 4, 1]), || "step-2 result".into())?;
    ensure(*p.homology() == GradedGroup::free(&[9, 5, 1]), || format!("H = {:?}", p.homology()))?;
    ensure(p.homology().get(3).is_trivial(), || "H_3 nonzero".into())?;
    Ok("H = (Z^9, Z^5, Z)".into())
}

fn penrose() -> Outcome {
    let p = penrose_pipeline().map_err(|e| e.to_string())?;
    ensure(p.step2.les.cokernel == FgAbGroup::free(2), || format!("step-2 cokernel {}", p.step2.les.cokernel))?;
    let w = p.step3_witness().map(<[BigInt]>::to_vec);
    ensure(w == Some(ints(&[1, 1])), || format!("step-3 witness {w:?}"))?;
    ensure(*p.homology() == GradedGroup::free(&[8, 5, 1]), || format!("H = {:?}", p.homology()))?;
    Ok("H = (Z^8, Z^5, Z), witness (1, 1)".into())
}

fn denjoy() -> Outcome {
    let (h, _) = one_dim_homology(&OneDimSystem::denjoy());
    ensure(h == GradedGroup::free(&[2, 1]), || format!("Denjoy gave {h:?}"))?;
    let (h, _) = one_dim_homology(&OneDimSystem::octagonal_reduced());
    ensure(h == GradedGroup::free(&[3, 1]), || format!("reduced octagonal gave {h:?}"))?;
    Ok("(Z^2, Z) and (Z^3, Z)".into())
}

fn battery() -> Vec<IntMatrix> {
    common::random_sft_matrices(&mut common::rng(20240), 240, 4, 3)
}

fn sft_battery() -> Outcome {
    let mats = battery();
    ensure(mats.len() >= 200, || format!("only {} instances", mats.len()))?;
    for b in &mats {
        let h = sft::sft_homology(b).map_err(|e| e.to_string())?;
        let m = IntMatrix::identity(b.rows()).try_sub(&b.transpose()).unwrap();
        let h1 = FgAbGroup::free(b.rows() - common::determinantal_invariant_factors(&m).len());
        ensure(h.get(0) == common::oracle_cokernel(&m) && h.get(1) == h1, || format!("mismatch for {b:?}"))?;
    }
    Ok(format!("{} matrices agree with the determinantal oracle", mats.len()))
}

fn six_term() -> Outcome {
    let mats = battery();
    for b in &mats {
        let g = DirectedGraph::from_adjacency(b).map_err(|e| e.to_string())?;
        for mode in [SixTermMode::Factor, SixTermMode::Sub] {
            let s = sft::six_term(&g, mode);
            let r = &s.report;
            ensure(r.rank_sum_ok() && r.rank_split_ok() && r.determinant_ok(), || format!("{b:?} {mode:?}\n{r}"))?;
        }
    }
    let g = DirectedGraph::from_adjacency(&IntMatrix::from_rows(&[[2]])).unwrap();
    let groups = sft::factor_six_term(&g).sequence.groups().to_vec();
    let z3 = FgAbGroup::cyclic(3);
    let want = [FgAbGroup::trivial(), FgAbGroup::trivial(), FgAbGroup::trivial(), z3.clone(), z3, FgAbGroup::trivial()];
    ensure(groups == want, || format!("B = [2] gave {groups:?}"))?;
    Ok(format!("{} matrices x 2 sequences; B = [2] gives (0, 0, 0, Z/3, Z/3, 0)", mats.len()))
}

fn les() -> Outcome {
    let cases = 120;
    for seed in 0..cases {
        let mut rng = common::rng(seed);
        let c = common::random_complex(&mut rng, 4, 4);
        let bases = common::random_saturated_subcomplex(&mut rng, &c);
        let inc = SubcomplexInclusion::new(c, bases).map_err(|e| e.to_string())?;
        let seq = inc.long_exact_sequence().map_err(|e| e.to_string())?;
        let report = seq.verify_exactness().map_err(|e| e.to_string())?;
        ensure(report.is_exact(), || format!("seed {seed}: {report}"))?;
    }
    Ok(format!("{cases} random pairs exact at every node"))
}

fn moore() -> Outcome {
    let pair = FiniteTransformationGroupoid::pair_groupoid_on_two_points();
    let h = groupoid_homology(&pair, 3).map_err(|e| e.to_string())?;
    let got: Vec<FgAbGroup> = (0..3).map(|n| h.get(n)).collect();
    ensure(got == [FgAbGroup::free(1), FgAbGroup::trivial(), FgAbGroup::trivial()], || format!("pair groupoid {got:?}"))?;

    let z2 = FiniteTransformationGroupoid::cyclic(2, 1, 0).map_err(|e| e.to_string())?;
    let h = groupoid_homology(&z2, 4).map_err(|e| e.to_string())?;
    let got: Vec<FgAbGroup> = (0..4).map(|n| h.get(n)).collect();
    let oracle = common::cyclic_group_homology_oracle(2, 4);
    let z = FgAbGroup::free(1);
    let c2 = FgAbGroup::cyclic(2);
    ensure(got == oracle && got == [z, c2.clone(), FgAbGroup::trivial(), c2], || format!("Z/2 gave {got:?}"))?;

    let mut rng = common::rng(7);
    let mut checked = 0;
    for table in common::small_groups() {
        for points in 1..=3 {
            for g in common::all_actions(&table, points) {
                ensure(boundaries_square_to_zero(&g, rng.gen_range(2..=3)), || "∂∂ ≠ 0".into())?;
                checked += 1;
            }
        }
    }
    Ok(format!("pair groupoid, Z/2 and ∂∂ = 0 on {checked} actions"))
}

fn normal_forms() -> Outcome {
    let mut rng = common::rng(8);
    let count = 500;
    for _ in 0..count {
        let (r, c) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let m = common::random_matrix(&mut rng, r, c, 9);
        let s = smith_normal_form(&m);
        ensure(&(&s.u * &m) * &s.v == s.d, || format!("UMV ≠ D for {m:?}"))?;
        ensure(zlinalg::is_unimodular(&s.u) && zlinalg::is_unimodular(&s.v), || "U or V not unimodular".into())?;
        let f = s.invariant_factors();
        ensure(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])), || format!("chain broken: {f:?}"))?;
        ensure(f.iter().all(Signed::is_positive), || format!("nonpositive factor: {f:?}"))?;
        let off_diagonal_zero = (0..r).all(|i| (0..c).all(|j| i == j || s.d[(i, j)].is_zero()));
        ensure(off_diagonal_zero, || "D not diagonal".into())?;

        let h = hermite_normal_form(&m);
        ensure(&h.u * &m == h.h && zlinalg::is_unimodular(&h.u), || "bad HNF transform".into())?;
        let w = common::random_unimodular(&mut rng, r);
        ensure(hermite_normal_form(&(&w * &m)).h == h.h, || format!("HNF not canonical for {m:?}"))?;
    }
    Ok(format!("{count} random matrices"))
}

#[test]
fn acceptance_criteria() {
    let second = Duration::from_secs(1);
    let criteria: [Criterion; 8] = [
        ("octagonal tiling pipeline", octagonal, Some(second)),
        ("Penrose tiling pipeline", penrose, Some(second)),
        ("one-dimensional systems", denjoy, None),
        ("SFT homology battery", sft_battery, Some(10 * second)),
        ("six-term consistency", six_term, None),
        ("long exact sequences", les, Some(30 * second)),
        ("Moore complex", moore, None),
        ("Smith and Hermite normal forms", normal_forms, Some(10 * second)),
    ];
    let mut failed = Vec::new();
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                println!("FAIL {} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
