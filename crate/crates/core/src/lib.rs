//! Computational toolkit for Artin presentations.
//!
//! - [`freegroup`]: reduced words in free groups.
//! - [`artin`]: Artin presentations, composition, exponent-sum matrices.
//! - [`braid`]: framed pure braids and the Artin action.
//! - [`r2`]: the two-generator family `r(a,b,c)`.
//! - [`triangle`]: triangle groups and the quotient certificate.
//! - [`coset`]: Todd–Coxeter enumeration.
//! - [`classify`]: trivial-group tuples, Kirby moves, closed 4-manifolds.
//! - [`cli`]: the command-line front end.
//!
//! Integer linear algebra ([`linalg`]) and the triangle-group rationals are
//! generic over the integer type; the aliases below fix the concrete types
//! used by the rest of the crate.

pub mod artin;
pub mod braid;
pub mod classify;
pub mod cli;
pub mod coset;
pub mod error;
pub mod freegroup;
pub mod linalg;
pub mod r2;
pub mod triangle;

pub use artin::{ArtinPresentation, Candidate};
pub use braid::{BraidWord, FramedPureBraid};
pub use coset::{EnumResult, FinitePresentation, Strategy};
pub use error::{Error, Result};
pub use freegroup::{Letter, Word};
pub use r2::Tuple3;

/// Exponent sums fit machine integers.
pub type ExponentMatrix = linalg::Matrix<i64>;

/// Arbitrary precision for determinants and Smith normal forms.
pub type BigMatrix = linalg::Matrix<num_bigint::BigInt>;

/// Exact rationals for triangle-group angle sums.
pub type Rational = num_rational::Ratio<i128>;
