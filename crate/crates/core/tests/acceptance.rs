//! One line per acceptance criterion. Run with
//! `cargo test -p artin --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use artin::classify::{
    classify_all, classify_x4, enumerate_trivial, flipc, form_invariants, slide1, slide2, swap, FourManifold,
};
use artin::coset::{enumerate, FinitePresentation, Strategy};
use artin::r2::build_r2;
use artin::triangle::TriangleParams;
use artin::{EnumResult, Tuple3};

const COSET_BUDGET: usize = 100_000;
const COSET_TIME_LIMIT: Duration = Duration::from_secs(5);
const COMPLETENESS_BOUND: i64 = 8;
const COMPLETENESS_TIME_LIMIT: Duration = Duration::from_secs(120);
const CLASSIFY_BOUND: i64 = 12;
const GROUP_LAW_CASES: usize = 1000;
const GROUP_LAW_SEED: u64 = 0xa271_2024;
const MOVE_GRID: i64 = 50;
/// Eigenvalues of an integer 2x2 form are 0 or at least `1/(|a|+|b|)` in
/// absolute value on these grids, far above this.
const EIGEN_EPS: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn timed_order(p: &FinitePresentation, strategy: Strategy) -> Result<(usize, usize, Duration), String> {
    let start = Instant::now();
    let res = enumerate(p, COSET_BUDGET, strategy).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    match res {
        EnumResult::Finite { order, cosets_defined } if elapsed <= COSET_TIME_LIMIT => {
            Ok((order, cosets_defined, elapsed))
        }
        EnumResult::Finite { .. } => Err(format!("took {elapsed:?}")),
        EnumResult::Exceeded { limit } => Err(format!("exceeded {limit} cosets")),
    }
}

fn oracle_orders() -> Outcome {
    let a5 = TriangleParams::new(2, 3, 5).unwrap().presentation();
    let i120 = FinitePresentation::from(&build_r2(Tuple3::new(-1, -3, 2)));
    let mut worst = (0usize, Duration::ZERO);
    for s in [Strategy::RelatorFirst, Strategy::DefinitionFirst] {
        let mut cases = vec![(a5.clone(), 60usize, "A5".to_string()), (i120.clone(), 120, "r(-1,-3,2)".into())];
        for t in enumerate_trivial(COMPLETENESS_BOUND) {
            cases.push((FinitePresentation::from(&build_r2(t)), 1, format!("r({t})")));
        }
        for (p, want, name) in cases {
            let (order, cosets, elapsed) = timed_order(&p, s).map_err(|e| format!("{name} {s}: {e}"))?;
            if order != want {
                return Err(format!("{name} {s}: order {order}, expected {want}"));
            }
            worst = (worst.0.max(cosets), worst.1.max(elapsed));
        }
    }
    Ok(format!("max cosets {} max time {:?}", worst.0, worst.1))
}

fn completeness() -> Outcome {
    let start = Instant::now();
    let listed = enumerate_trivial(COMPLETENESS_BOUND);
    let b = COMPLETENESS_BOUND;
    let mut unimodular = 0;
    for a in -b..=b {
        for bb in -b..=b {
            for c in -b..=b {
                let t = Tuple3::new(a, bb, c);
                if (a * bb - c * c).abs() != 1 {
                    if listed.contains(&t) {
                        return Err(format!("({t}) listed but not unimodular"));
                    }
                    continue;
                }
                unimodular += 1;
                let min = (a - c).abs().min((bb - c).abs()).min(c.abs());
                if listed.contains(&t) == (min >= 2) {
                    return Err(format!("({t}) listed={} min={min}", listed.contains(&t)));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > COMPLETENESS_TIME_LIMIT {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{unimodular} unimodular tuples, {} listed, {elapsed:?}", listed.len()))
}

/// Signature and parity from floating eigenvalues, independent of the
/// library's sign rules.
fn manifold_oracle(t: Tuple3) -> Option<FourManifold> {
    let (a, b, c) = (t.a as f64, t.b as f64, t.c as f64);
    let mean = (a + b) / 2.0;
    let r = (((a - b) / 2.0).powi(2) + c * c).sqrt();
    let sign = |x: f64| if x > EIGEN_EPS { 1 } else if x < -EIGEN_EPS { -1 } else { 0 };
    let sig = sign(mean + r) + sign(mean - r);
    let even = t.a % 2 == 0 && t.b % 2 == 0;
    match (sig, even) {
        (2, _) => Some(FourManifold::TwoCp2),
        (-2, _) => Some(FourManifold::TwoMinusCp2),
        (0, true) => Some(FourManifold::S2xS2),
        (0, false) => Some(FourManifold::Cp2MinusCp2),
        _ => None,
    }
}

fn classification_table() -> Outcome {
    let mut table: Vec<(Tuple3, FourManifold)> = vec![
        (Tuple3::new(1, 1, 0), FourManifold::TwoCp2),
        (Tuple3::new(1, -1, 0), FourManifold::Cp2MinusCp2),
        (Tuple3::new(2, 1, 1), FourManifold::TwoCp2),
        (Tuple3::new(5, 1, 2), FourManifold::TwoCp2),
        (Tuple3::new(5, 2, 3), FourManifold::TwoCp2),
    ];
    for a in -CLASSIFY_BOUND..=CLASSIFY_BOUND {
        let m = if a % 2 == 0 { FourManifold::S2xS2 } else { FourManifold::Cp2MinusCp2 };
        table.push((Tuple3::new(a, 0, 1), m));
    }
    for c in -(CLASSIFY_BOUND - 1)..=(CLASSIFY_BOUND - 1) {
        let m = if c % 2 != 0 { FourManifold::S2xS2 } else { FourManifold::Cp2MinusCp2 };
        table.push((Tuple3::new(c + 1, c - 1, c), m));
    }
    for (t, want) in &table {
        let got = classify_x4(*t).map_err(|e| format!("({t}): {e}"))?.manifold;
        if got != *want {
            return Err(format!("({t}) gives {got}, expected {want}"));
        }
    }
    let all = classify_all(CLASSIFY_BOUND).map_err(|e| e.to_string())?;
    for (t, c) in &all {
        if !c.path.verify() {
            return Err(format!("({t}) path does not replay"));
        }
        if manifold_oracle(*t) != Some(c.manifold) {
            return Err(format!("({t}) move path gives {}, eigenvalues disagree", c.manifold));
        }
    }
    Ok(format!("{} table rows, {} listed tuples agree", table.len(), all.len()))
}

fn group_laws() -> Outcome {
    let mut rng = common::rng(GROUP_LAW_SEED);
    for case in 0..GROUP_LAW_CASES {
        common::check_group_laws(&mut rng).map_err(|e| format!("case {case}: {e}"))?;
    }
    Ok(format!("{GROUP_LAW_CASES} random triples"))
}

fn move_invariance() -> Outcome {
    let g = MOVE_GRID;
    let mut checked = 0u64;
    for a in -g..=g {
        for b in -g..=g {
            for c in -g..=g {
                let t = Tuple3::new(a, b, c);
                let inv = form_invariants(t);
                let moved = [Some(slide1(t)), Some(slide2(t)), Some(swap(t)), flipc(t).ok()];
                for s in moved.into_iter().flatten() {
                    let other = form_invariants(s);
                    if (other.det, other.signature) != (inv.det, inv.signature) {
                        return Err(format!("({t}) -> ({s})"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} moves"))
}

fn fixture_fidelity() -> Outcome {
    let cases =
        ["sigma1_sq_pos", "sigma1_sq_neg", "sigma1_sq_pos_negframe", "sigma1_sq_neg_posframe", "identity_braid"];
    for case in cases {
        common::golden::check(case)?;
    }
    Ok(format!("{} golden fixtures", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("oracle orders", oracle_orders),
        ("listed tuples complete", completeness),
        ("classification table", classification_table),
        ("group laws", group_laws),
        ("move invariance", move_invariance),
        ("fixture fidelity", fixture_fidelity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
