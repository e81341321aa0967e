//! Trivial-group presentations on two generators and their closed
//! 4-manifolds.
//!
//! A tuple in the list of trivial-group presentations is reduced by Kirby
//! moves (two handle slides, swapping the components, flipping the single
//! twist when `|c| = 1`, and mirroring) to one of the base diagrams
//! `(1,1,0)`, `(1,-1,0)` or `(a,0,1)`, whose closed manifolds are known. The
//! move path is checked against the classification of indefinite and
//! definite rank-2 unimodular forms by signature and parity.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::r2::Tuple3;

/// `(a+b-2c, b, b-c)`: slide the first handle over the second.
pub fn slide1(t: Tuple3) -> Tuple3 {
    Tuple3::new(t.a + t.b - 2 * t.c, t.b, t.b - t.c)
}

/// `(a, a+b-2c, a-c)`: slide the second handle over the first.
pub fn slide2(t: Tuple3) -> Tuple3 {
    Tuple3::new(t.a, t.a + t.b - 2 * t.c, t.a - t.c)
}

pub fn swap(t: Tuple3) -> Tuple3 {
    Tuple3::new(t.b, t.a, t.c)
}

/// `(a, b, -c)`; only valid for a single twist.
pub fn flipc(t: Tuple3) -> Result<Tuple3> {
    if t.c.abs() != 1 {
        return Err(Error::FlipPrecondition(t.c));
    }
    Ok(Tuple3::new(t.a, t.b, -t.c))
}

/// `(-a, -b, -c)`; reverses orientation.
pub fn mirror(t: Tuple3) -> Tuple3 {
    -t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    T1,
    T2,
    T3,
    T4,
    T5,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

const T2_BASE: [Tuple3; 4] = [Tuple3::new(2, 1, 1), Tuple3::new(2, 1, -1), Tuple3::new(1, 2, 1), Tuple3::new(1, 2, -1)];
const T3_BASE: [Tuple3; 4] = [Tuple3::new(1, 5, 2), Tuple3::new(5, 1, 2), Tuple3::new(2, 5, 3), Tuple3::new(5, 2, 3)];

fn in_family(t: Tuple3, family: Family) -> bool {
    let Tuple3 { a, b, c } = t;
    match family {
        Family::T1 => a.abs() == 1 && b.abs() == 1 && c == 0,
        Family::T2 => T2_BASE.iter().any(|&s| s == t || -s == t),
        Family::T3 => T3_BASE.iter().any(|&s| s == t || -s == t),
        Family::T4 => c.abs() == 1 && (a == 0 || b == 0),
        Family::T5 => (a == c + 1 && b == c - 1) || (a == c - 1 && b == c + 1),
    }
}

/// First family of the list containing `t`.
pub fn theorem_family(t: Tuple3) -> Option<Family> {
    [Family::T1, Family::T2, Family::T3, Family::T4, Family::T5]
        .into_iter()
        .find(|&f| in_family(t, f))
}

/// Members of one family with `max(|a|,|b|,|c|) <= bound`.
fn family_members(family: Family, bound: i64) -> Vec<Tuple3> {
    let mut out = Vec::new();
    match family {
        Family::T1 => {
            for a in [-1, 1] {
                for b in [-1, 1] {
                    out.push(Tuple3::new(a, b, 0));
                }
            }
        }
        Family::T2 => out.extend(T2_BASE.iter().flat_map(|&s| [s, -s])),
        Family::T3 => out.extend(T3_BASE.iter().flat_map(|&s| [s, -s])),
        Family::T4 => {
            for v in -bound..=bound {
                for c in [-1, 1] {
                    out.push(Tuple3::new(v, 0, c));
                    out.push(Tuple3::new(0, v, c));
                }
            }
        }
        Family::T5 => {
            for c in -bound..=bound {
                out.push(Tuple3::new(c + 1, c - 1, c));
                out.push(Tuple3::new(c - 1, c + 1, c));
            }
        }
    }
    out.retain(|t| t.max_abs() <= bound);
    out
}

/// Every listed tuple with `max(|a|,|b|,|c|) <= bound`, deduplicated.
pub fn enumerate_trivial(bound: i64) -> BTreeSet<Tuple3> {
    [Family::T1, Family::T2, Family::T3, Family::T4, Family::T5]
        .into_iter()
        .flat_map(|f| family_members(f, bound))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Invariants of the intersection form `[[a, c], [c, b]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormInvariants {
    pub det: i64,
    /// Positive minus negative eigenvalues. Lies in `{-2, 0, 2}` for
    /// nondegenerate forms and in `{-1, 0, 1}` when `det = 0`.
    pub signature: i64,
    pub parity: Parity,
}

/// Signs only: `det < 0` means one eigenvalue of each sign; `det > 0` means
/// both share the sign of `a`; `det = 0` leaves one eigenvalue equal to the
/// trace.
pub fn form_invariants(t: Tuple3) -> FormInvariants {
    let det = t.det();
    let signature = match det.signum() {
        -1 => 0,
        1 => 2 * t.a.signum(),
        _ => (t.a + t.b).signum(),
    };
    let parity = if t.a % 2 == 0 && t.b % 2 == 0 { Parity::Even } else { Parity::Odd };
    FormInvariants { det, signature, parity }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FourManifold {
    /// `CP² # CP²`
    TwoCp2,
    /// `CP² # -CP²`
    Cp2MinusCp2,
    /// `-CP² # -CP²`
    TwoMinusCp2,
    /// `S² × S²`
    S2xS2,
}

impl FourManifold {
    /// The same manifold with the opposite orientation.
    pub fn reversed(self) -> Self {
        match self {
            FourManifold::TwoCp2 => FourManifold::TwoMinusCp2,
            FourManifold::TwoMinusCp2 => FourManifold::TwoCp2,
            other => other,
        }
    }

    /// Classification of a unimodular rank-2 form by signature and parity.
    pub fn from_form(inv: FormInvariants) -> Option<Self> {
        if inv.det.abs() != 1 {
            return None;
        }
        match (inv.signature, inv.parity) {
            (2, _) => Some(FourManifold::TwoCp2),
            (-2, _) => Some(FourManifold::TwoMinusCp2),
            (0, Parity::Odd) => Some(FourManifold::Cp2MinusCp2),
            (0, Parity::Even) => Some(FourManifold::S2xS2),
            _ => None,
        }
    }
}

impl fmt::Display for FourManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FourManifold::TwoCp2 => "CP2#CP2",
            FourManifold::Cp2MinusCp2 => "CP2#mCP2",
            FourManifold::TwoMinusCp2 => "mCP2#mCP2",
            FourManifold::S2xS2 => "S2xS2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Slide1,
    Slide2,
    Swap,
    FlipC,
    Mirror,
}

impl Move {
    pub fn apply(self, t: Tuple3) -> Result<Tuple3> {
        Ok(match self {
            Move::Slide1 => slide1(t),
            Move::Slide2 => slide2(t),
            Move::Swap => swap(t),
            Move::FlipC => flipc(t)?,
            Move::Mirror => mirror(t),
        })
    }

    /// Whether the move reverses orientation.
    pub fn reverses(self) -> bool {
        self == Move::Mirror
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::Slide1 => "slide1",
            Move::Slide2 => "slide2",
            Move::Swap => "swap",
            Move::FlipC => "flipc",
            Move::Mirror => "mirror",
        })
    }
}

/// A start tuple and the moves applied to it, with every intermediate tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovePath {
    pub start: Tuple3,
    pub steps: Vec<(Move, Tuple3)>,
}

impl MovePath {
    pub fn end(&self) -> Tuple3 {
        self.steps.last().map_or(self.start, |&(_, t)| t)
    }

    /// True when an odd number of mirrors was applied.
    pub fn reversed(&self) -> bool {
        self.steps.iter().filter(|(m, _)| m.reverses()).count() % 2 == 1
    }

    /// Replays the moves from `start` and checks every intermediate tuple.
    pub fn verify(&self) -> bool {
        let mut t = self.start;
        for &(m, next) in &self.steps {
            match m.apply(t) {
                Ok(v) if v == next => t = v,
                _ => return false,
            }
        }
        true
    }
}

impl fmt::Display for MovePath {
    /// `(5,2,3)-slide1->(1,2,-1)-flipc->(1,2,1)-slide2->(1,1,0)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.start)?;
        for (m, t) in &self.steps {
            write!(f, "-{m}->({t})")?;
        }
        Ok(())
    }
}

/// Closed manifold of a base diagram: unlinks `(1,±1,0)` and the Hopf link
/// `(a,0,1)`.
fn base_manifold(t: Tuple3) -> Option<FourManifold> {
    match (t.a, t.b, t.c) {
        (1, 1, 0) => Some(FourManifold::TwoCp2),
        (1, -1, 0) => Some(FourManifold::Cp2MinusCp2),
        (a, 0, 1) if a % 2 == 0 => Some(FourManifold::S2xS2),
        (_, 0, 1) => Some(FourManifold::Cp2MinusCp2),
        _ => None,
    }
}

const MAX_STEPS: usize = 64;

/// Greedy normalization to a base diagram: mirror when `a + b < 0`, finish
/// with a swap and/or flip if that reaches a base case, otherwise take the
/// slide that most decreases `|a|+|b|+|c|`, flipping the twist first if only
/// the flipped tuple admits a decreasing slide.
pub fn normalize(t: Tuple3) -> Result<MovePath> {
    let mut path = MovePath { start: t, steps: Vec::new() };
    let mut cur = t;
    let step = |path: &mut MovePath, cur: &mut Tuple3, m: Move| -> Result<()> {
        *cur = m.apply(*cur)?;
        path.steps.push((m, *cur));
        Ok(())
    };
    while path.steps.len() < MAX_STEPS {
        if base_manifold(cur).is_some() {
            return Ok(path);
        }
        if cur.a + cur.b < 0 {
            step(&mut path, &mut cur, Move::Mirror)?;
            continue;
        }
        let finishers: [&[Move]; 3] = [&[Move::Swap], &[Move::FlipC], &[Move::Swap, Move::FlipC]];
        if let Some(moves) = finishers.iter().find(|ms| {
            ms.iter()
                .try_fold(cur, |t, m| m.apply(t))
                .is_ok_and(|t| base_manifold(t).is_some())
        }) {
            for &m in moves.iter() {
                step(&mut path, &mut cur, m)?;
            }
            continue;
        }
        if let Some(m) = best_slide(cur) {
            step(&mut path, &mut cur, m)?;
            continue;
        }
        if let Ok(flipped) = flipc(cur) {
            if best_slide(flipped).is_some() {
                step(&mut path, &mut cur, Move::FlipC)?;
                continue;
            }
        }
        break;
    }
    Err(Error::NoMovePath(t.to_string()))
}

fn best_slide(t: Tuple3) -> Option<Move> {
    [Move::Slide1, Move::Slide2]
        .into_iter()
        .map(|m| (m, m.apply(t).expect("slides always apply").norm()))
        .filter(|&(_, n)| n < t.norm())
        .min_by_key(|&(_, n)| n)
        .map(|(m, _)| m)
}

/// Closed manifold of a listed tuple, with the move path that proves it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub family: Family,
    pub invariants: FormInvariants,
    pub manifold: FourManifold,
    pub path: MovePath,
}

pub fn classify_x4(t: Tuple3) -> Result<Classification> {
    let family = theorem_family(t).ok_or_else(|| Error::NotInList(t.to_string()))?;
    let path = normalize(t)?;
    let base = base_manifold(path.end()).ok_or_else(|| Error::Internal(format!("path for ({t}) ends off the base cases")))?;
    let by_moves = if path.reversed() { base.reversed() } else { base };
    let invariants = form_invariants(t);
    let by_form = FourManifold::from_form(invariants)
        .ok_or_else(|| Error::Internal(format!("listed tuple ({t}) has a non-unimodular form")))?;
    if by_moves != by_form {
        return Err(Error::Internal(format!(
            "move path gives {by_moves} but the intersection form gives {by_form} for ({t})"
        )));
    }
    Ok(Classification { family, invariants, manifold: by_moves, path })
}

/// Classifies every tuple of `enumerate_trivial(bound)` in parallel, in
/// sorted order.
pub fn classify_all(bound: i64) -> Result<Vec<(Tuple3, Classification)>> {
    let tuples: Vec<Tuple3> = enumerate_trivial(bound).into_iter().collect();
    tuples.into_par_iter().map(|t| classify_x4(t).map(|c| (t, c))).collect()
}

/// Kirby diagram of `W⁴(r(a,b,c))`: the closure of `σ_1^{2c}` with framings
/// `a` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KirbyDescriptor {
    pub twists: i64,
    pub framings: (i64, i64),
}

pub fn export_kirby(t: Tuple3) -> KirbyDescriptor {
    KirbyDescriptor { twists: 2 * t.c, framings: (t.a, t.b) }
}

impl fmt::Display for KirbyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strands=2; braid=s1^{}; framings={},{}", self.twists, self.framings.0, self.framings.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> Tuple3 {
        Tuple3::new(a, b, c)
    }

    #[test]
    fn slide_examples() {
        assert_eq!(slide1(t(2, 1, 1)), t(1, 1, 0));
        assert_eq!(slide1(t(2, 1, -1)), t(5, 1, 2));
        assert_eq!(slide2(t(5, 1, 2)), t(5, 2, 3));
        for c in -10..=10 {
            assert_eq!(slide2(t(c + 1, c - 1, c)), t(c + 1, 0, 1));
        }
    }

    #[test]
    fn slides_are_involutions() {
        for v in [t(3, -7, 2), t(0, 0, 0), t(5, 2, 3), t(-4, 9, -11)] {
            assert_eq!(slide1(slide1(v)), v);
            assert_eq!(slide2(slide2(v)), v);
        }
    }

    #[test]
    fn basic_moves() {
        assert_eq!(swap(t(5, 1, 2)), t(1, 5, 2));
        assert_eq!(flipc(t(2, 1, 1)).unwrap(), t(2, 1, -1));
        assert_eq!(flipc(t(2, 1, 2)), Err(Error::FlipPrecondition(2)));
        assert_eq!(mirror(t(1, 1, 0)), t(-1, -1, 0));
        assert!(Move::Mirror.reverses() && !Move::Swap.reverses());
    }

    #[test]
    fn family_examples() {
        assert_eq!(theorem_family(t(1, 5, 2)), Some(Family::T3));
        assert_eq!(theorem_family(t(7, 0, 1)), Some(Family::T4));
        assert_eq!(theorem_family(t(4, 2, 3)), Some(Family::T5));
        assert_eq!(theorem_family(t(2, 3, 5)), None);
        assert_eq!(theorem_family(t(1, -1, 0)), Some(Family::T1));
        assert_eq!(theorem_family(t(-2, -1, 1)), Some(Family::T2));
    }

    #[test]
    fn enumerate_bound_one() {
        let set = enumerate_trivial(1);
        assert_eq!(set.len(), 14);
        assert!(set.contains(&t(1, 1, 0)));
        assert!(!set.contains(&t(1, 1, 1)));
        assert!(set.iter().all(|v| v.det().abs() == 1));
    }

    // Filter over the full box, independent of the family generators.
    fn brute_force(bound: i64) -> BTreeSet<Tuple3> {
        let mut out = BTreeSet::new();
        for a in -bound..=bound {
            for b in -bound..=bound {
                for c in -bound..=bound {
                    if theorem_family(t(a, b, c)).is_some() {
                        out.insert(t(a, b, c));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn generators_match_filter() {
        for bound in 1..=12 {
            assert_eq!(enumerate_trivial(bound), brute_force(bound), "bound {bound}");
        }
    }

    #[test]
    fn negation_closure() {
        let set = enumerate_trivial(12);
        for v in &set {
            assert!(set.contains(&-*v));
        }
    }

    // Eigenvalue signs from the quadratic formula in floating point; the
    // entries are small enough that no sign is ambiguous.
    fn signature_oracle(v: Tuple3) -> i64 {
        let (a, b, c) = (v.a as f64, v.b as f64, v.c as f64);
        let tr = a + b;
        let disc = ((a - b) * (a - b) + 4.0 * c * c).sqrt();
        let sign = |x: f64| if x > 1e-9 { 1 } else if x < -1e-9 { -1 } else { 0 };
        sign((tr + disc) / 2.0) + sign((tr - disc) / 2.0)
    }

    #[test]
    fn form_invariant_examples() {
        let f = form_invariants(t(1, 1, 0));
        assert_eq!((f.det, f.signature, f.parity), (1, 2, Parity::Odd));
        let f = form_invariants(t(0, 0, 1));
        assert_eq!((f.det, f.signature, f.parity), (-1, 0, Parity::Even));
        let f = form_invariants(t(-1, -3, 2));
        assert_eq!((f.det, f.signature, f.parity), (-1, 0, Parity::Odd));
        assert_eq!(form_invariants(t(-2, -3, 1)).signature, -2);
    }

    #[test]
    fn signature_matches_eigenvalue_oracle() {
        for a in -15..=15 {
            for b in -15..=15 {
                for c in -15..=15 {
                    let v = t(a, b, c);
                    assert_eq!(form_invariants(v).signature, signature_oracle(v), "{v}");
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_x4(t(1, 1, 0)).unwrap().manifold, FourManifold::TwoCp2);
        assert_eq!(classify_x4(t(5, 2, 3)).unwrap().manifold, FourManifold::TwoCp2);
        assert_eq!(classify_x4(t(4, 0, 1)).unwrap().manifold, FourManifold::S2xS2);
        assert_eq!(classify_x4(t(3, 1, 2)).unwrap().manifold, FourManifold::Cp2MinusCp2);
        assert_eq!(classify_x4(t(-1, -1, 0)).unwrap().manifold, FourManifold::TwoMinusCp2);
        assert!(matches!(classify_x4(t(2, 3, 5)), Err(Error::NotInList(_))));
    }

    #[test]
    fn move_path_for_5_1_2() {
        let c = classify_x4(t(5, 1, 2)).unwrap();
        assert_eq!(c.path.to_string(), "(5,1,2)-slide1->(2,1,-1)-flipc->(2,1,1)-slide1->(1,1,0)");
        assert!(c.path.verify());
    }

    #[test]
    fn move_paths_agree_with_forms() {
        for (v, c) in classify_all(12).unwrap() {
            assert!(c.path.verify(), "{v}");
            assert_eq!(c.path.start, v);
        }
    }

    #[test]
    fn kirby_descriptors() {
        assert_eq!(export_kirby(t(7, 0, 1)).to_string(), "strands=2; braid=s1^2; framings=7,0");
        assert_eq!(export_kirby(t(1, 1, 0)).to_string(), "strands=2; braid=s1^0; framings=1,1");
        assert_eq!(export_kirby(t(-1, -3, 2)).to_string(), "strands=2; braid=s1^4; framings=-1,-3");
    }
}
