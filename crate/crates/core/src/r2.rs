//! Two-generator Artin presentations `r(a,b,c)`.
//!
//! Every element of `R_2` is `r_1 = x_1^{a-c}(x_1x_2)^c`,
//! `r_2 = x_2^{b-c}(x_1x_2)^c`, and composition adds tuples.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use crate::artin::ArtinPresentation;
use crate::error::{Error, Result};
use crate::freegroup::Word;
use crate::ExponentMatrix;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple3 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Tuple3 {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Tuple3 { a, b, c }
    }

    /// `[[a, c], [c, b]]`.
    pub fn matrix(&self) -> ExponentMatrix {
        ExponentMatrix::from_rows(vec![vec![self.a, self.c], vec![self.c, self.b]])
    }

    /// `ab - c²`.
    pub fn det(&self) -> i64 {
        self.a * self.b - self.c * self.c
    }

    /// `|a|+|b|+|c|`.
    pub fn norm(&self) -> i64 {
        self.a.abs() + self.b.abs() + self.c.abs()
    }

    pub fn max_abs(&self) -> i64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs())
    }
}

impl Add for Tuple3 {
    type Output = Tuple3;

    fn add(self, o: Tuple3) -> Tuple3 {
        Tuple3::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Neg for Tuple3 {
    type Output = Tuple3;

    fn neg(self) -> Tuple3 {
        Tuple3::new(-self.a, -self.b, -self.c)
    }
}

impl fmt::Display for Tuple3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

impl FromStr for Tuple3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::syntax("tuple", format!("expected `a,b,c`, found `{s}`"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let v: Vec<i64> = parts.iter().map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?;
        Ok(Tuple3::new(v[0], v[1], v[2]))
    }
}

fn relators(t: Tuple3) -> Vec<Word> {
    let twist = Word::product_of_generators(2).pow(t.c);
    vec![
        Word::generator_power(1, t.a - t.c).concat(&twist),
        Word::generator_power(2, t.b - t.c).concat(&twist),
    ]
}

pub fn build_r2(t: Tuple3) -> ArtinPresentation {
    ArtinPresentation::from_trusted(2, relators(t))
}

/// Reads `(A_11, A_22, A_12)` off the exponent matrix and checks that
/// `build_r2` reproduces `p` word for word.
pub fn recognize_r2(p: &ArtinPresentation) -> Result<Tuple3> {
    if p.n() != 2 {
        return Err(Error::SizeMismatch { left: p.n(), right: 2 });
    }
    let m = p.exponent_matrix();
    let t = Tuple3::new(*m.get(0, 0), *m.get(1, 1), *m.get(0, 1));
    let expected = relators(t);
    if expected != p.relators() {
        return Err(Error::NotCanonical { expected: format!("r({t})") });
    }
    Ok(t)
}
