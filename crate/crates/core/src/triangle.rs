//! Triangle groups `T(l,m,n) = ⟨x,y | x^l, y^m, (xy)^n⟩` and the quotient
//! certificate for `π(r(a,b,c))`.
//!
//! Adding `(x_1x_2)^c` to `r(a,b,c)` leaves `⟨x_1,x_2 | x_1^{a-c},
//! x_2^{b-c}, (x_1x_2)^c⟩`, the triangle group `T(|a-c|,|b-c|,|c|)`. When all
//! three parameters are at least 2 the quotient is nontrivial, and infinite
//! unless it is spherical.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};

use crate::coset::FinitePresentation;
use crate::error::{Error, Result};
use crate::freegroup::Word;
use crate::r2::{build_r2, Tuple3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangleParams {
    l: u64,
    m: u64,
    n: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeometryClass {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl fmt::Display for GeometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeometryClass::Spherical => "spherical",
            GeometryClass::Euclidean => "euclidean",
            GeometryClass::Hyperbolic => "hyperbolic",
        })
    }
}

impl TriangleParams {
    pub fn new(l: u64, m: u64, n: u64) -> Result<Self> {
        if l < 2 || m < 2 || n < 2 {
            return Err(Error::TriangleParams(l, m, n));
        }
        Ok(TriangleParams { l, m, n })
    }

    pub fn values(&self) -> (u64, u64, u64) {
        (self.l, self.m, self.n)
    }

    /// `1/l + 1/m + 1/n` in any integer type wide enough for `lmn`.
    pub fn delta_in<T>(&self) -> Ratio<T>
    where
        T: Integer + Clone + From<u32> + TryFrom<u64>,
    {
        let lift = |v: u64| T::try_from(v).ok().expect("triangle parameter does not fit the integer type");
        [self.l, self.m, self.n]
            .into_iter()
            .map(|v| Ratio::new(T::one(), lift(v)))
            .fold(Ratio::from_integer(T::from(0u32)), |acc, r| acc + r)
    }

    pub fn delta(&self) -> crate::Rational {
        self.delta_in::<i128>()
    }

    pub fn classify(&self) -> GeometryClass {
        match self.delta().cmp(&crate::Rational::one()) {
            Ordering::Greater => GeometryClass::Spherical,
            Ordering::Equal => GeometryClass::Euclidean,
            Ordering::Less => GeometryClass::Hyperbolic,
        }
    }

    /// `2 / (δ - 1)` for spherical parameters.
    pub fn spherical_order(&self) -> Result<u64> {
        if self.classify() != GeometryClass::Spherical {
            return Err(Error::NotSpherical(self.l, self.m, self.n));
        }
        let order = crate::Rational::from_integer(2) / (self.delta() - crate::Rational::one());
        if !order.is_integer() {
            return Err(Error::Internal(format!("non-integral spherical order {order}")));
        }
        order.to_integer().to_u64().ok_or_else(|| Error::Internal("spherical order overflow".into()))
    }

    /// `⟨x_1,x_2 | x_1^l, x_2^m, (x_1x_2)^n⟩`.
    pub fn presentation(&self) -> FinitePresentation {
        let xy = Word::product_of_generators(2);
        FinitePresentation::new(
            2,
            vec![
                Word::generator_power(1, self.l as i64),
                Word::generator_power(2, self.m as i64),
                xy.pow(self.n as i64),
            ],
        )
        .expect("two-generator relators")
    }
}

impl fmt::Display for TriangleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.l, self.m, self.n)
    }
}

/// What the triangle quotient says about `π(r(a,b,c))`. There is no
/// trivial arm: the quotient only ever certifies nontriviality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaVerdict {
    Nontrivial,
    Infinite,
    Inconclusive,
}

impl fmt::Display for LemmaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaVerdict::Nontrivial => "nontrivial",
            LemmaVerdict::Infinite => "infinite",
            LemmaVerdict::Inconclusive => "inconclusive",
        })
    }
}

/// `(|a-c|, |b-c|, |c|)` when all three are at least 2.
pub fn quotient_params(t: Tuple3) -> Option<TriangleParams> {
    let (l, m, n) = ((t.a - t.c).unsigned_abs(), (t.b - t.c).unsigned_abs(), t.c.unsigned_abs());
    TriangleParams::new(l, m, n).ok()
}

pub fn lemma_verdict(t: Tuple3) -> LemmaVerdict {
    match quotient_params(t) {
        None => LemmaVerdict::Inconclusive,
        Some(p) if p.classify() == GeometryClass::Spherical => LemmaVerdict::Nontrivial,
        Some(_) => LemmaVerdict::Infinite,
    }
}

/// `r(a,b,c)` with `(x_1x_2)^c` added; presents `T(|a-c|,|b-c|,|c|)`.
pub fn lemma_quotient(t: Tuple3) -> FinitePresentation {
    FinitePresentation::from(&build_r2(t))
        .with_relator(Word::product_of_generators(2).pow(t.c))
        .expect("two-generator relator")
}
