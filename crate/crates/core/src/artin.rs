//! Artin presentations: verification, composition, and the exponent-sum
//! matrix.
//!
//! A presentation `⟨x_1..x_n | r_1..r_n⟩` is Artin when
//! `x_1⋯x_n = (r_1⁻¹x_1r_1)⋯(r_n⁻¹x_nr_n)` holds in `F_n`. Relators are kept
//! freely reduced but not cyclically reduced: the literal reduced words
//! identify the element of `R_n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::freegroup::{parse_word_at, Word};
use crate::{BigMatrix, ExponentMatrix};

/// `n` generators and `n` relators with no Artin condition assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Candidate {
    n: usize,
    relators: Vec<Word>,
}

impl Candidate {
    pub fn new(n: usize, relators: Vec<Word>) -> Result<Self> {
        if relators.len() != n {
            return Err(Error::RelatorCount { expected: n, found: relators.len() });
        }
        for r in &relators {
            r.check_rank(n)?;
        }
        Ok(Candidate { n, relators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// `(Π r_i⁻¹x_ir_i)⁻¹ · x_1⋯x_n`, which is empty iff the candidate is Artin.
    pub fn artin_defect(&self) -> Word {
        let mut conj = Word::identity();
        for (i, r) in self.relators.iter().enumerate() {
            conj = conj.concat(&Word::generator(i as u32 + 1).conjugate_by(r));
        }
        conj.inverse().concat(&Word::product_of_generators(self.n))
    }

    pub fn is_artin(&self) -> bool {
        self.artin_defect().is_empty()
    }

    /// `[A]_{ij}` = exponent sum of `x_i` in `r_j`.
    pub fn exponent_matrix(&self) -> ExponentMatrix {
        let mut m = ExponentMatrix::zeros(self.n, self.n);
        for (j, r) in self.relators.iter().enumerate() {
            for i in 0..self.n {
                m.set(i, j, r.exponent_sum(i as u32 + 1));
            }
        }
        m
    }
}

/// `⟨x_1..x_n | r_1..r_n⟩` satisfying the Artin identity. Construction
/// validates, so every value in circulation is a genuine Artin presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArtinPresentation {
    inner: Candidate,
}

impl ArtinPresentation {
    pub fn new(n: usize, relators: Vec<Word>) -> Result<Self> {
        Self::try_from(Candidate::new(n, relators)?)
    }

    /// `⟨x_1..x_n | 1..1⟩`, the identity of `R_n`.
    pub fn identity(n: usize) -> Self {
        ArtinPresentation { inner: Candidate { n, relators: vec![Word::identity(); n] } }
    }

    /// `⟨x_1..x_n | x_1^{a_1}..x_n^{a_n}⟩`.
    pub fn powers(exponents: &[i64]) -> Self {
        let relators = exponents
            .iter()
            .enumerate()
            .map(|(i, &a)| Word::generator_power(i as u32 + 1, a))
            .collect();
        ArtinPresentation { inner: Candidate { n: exponents.len(), relators } }
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn relators(&self) -> &[Word] {
        &self.inner.relators
    }

    pub fn as_candidate(&self) -> &Candidate {
        &self.inner
    }

    pub fn exponent_matrix(&self) -> ExponentMatrix {
        self.inner.exponent_matrix()
    }

    /// The automorphism `x_j ↦ r_j⁻¹x_jr_j` of `F_n`, as an image list.
    pub fn conjugation_images(&self) -> Vec<Word> {
        self.relators()
            .iter()
            .enumerate()
            .map(|(j, r)| Word::generator(j as u32 + 1).conjugate_by(r))
            .collect()
    }

    /// `u ∘ r` with `self = u`: `t_i = u_i · R_i`, where `R_i` is `r_i` with
    /// `u_j⁻¹x_ju_j` substituted for `x_j`.
    pub fn compose(&self, r: &ArtinPresentation) -> Result<ArtinPresentation> {
        if self.n() != r.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: r.n() });
        }
        let images = self.conjugation_images();
        let relators = self
            .relators()
            .iter()
            .zip(r.relators())
            .map(|(u_i, r_i)| Ok(u_i.concat(&r_i.substitute(&images)?)))
            .collect::<Result<Vec<_>>>()?;
        let t = Candidate { n: self.n(), relators };
        debug_assert!(t.is_artin(), "composition left R_n");
        Ok(ArtinPresentation { inner: t })
    }

    /// Builds a presentation the caller has already shown to be Artin.
    pub(crate) fn from_trusted(n: usize, relators: Vec<Word>) -> Self {
        let inner = Candidate { n, relators };
        debug_assert!(inner.is_artin());
        ArtinPresentation { inner }
    }
}

impl TryFrom<Candidate> for ArtinPresentation {
    type Error = Error;

    fn try_from(c: Candidate) -> Result<Self> {
        let defect = c.artin_defect();
        if defect.is_empty() {
            Ok(ArtinPresentation { inner: c })
        } else {
            Err(Error::NotArtin(defect))
        }
    }
}

impl From<ArtinPresentation> for Candidate {
    fn from(p: ArtinPresentation) -> Self {
        p.inner
    }
}

/// `det A = ±1`, computed over arbitrary-precision integers.
pub fn is_unimodular(m: &ExponentMatrix) -> bool {
    determinant(m).abs().is_one()
}

pub fn determinant(m: &ExponentMatrix) -> BigInt {
    m.convert::<BigInt>().determinant()
}

/// Cyclic factors of `Z^n / Im A`; `0` stands for a free `Z` factor.
pub fn abelianization_invariants(m: &ExponentMatrix) -> Vec<BigInt> {
    let big: BigMatrix = m.convert();
    big.smith_invariants()
}

impl fmt::Display for Candidate {
    /// `artin <n>` followed by one `r<i> = <word>` line per relator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "artin {}", self.n)?;
        for (i, r) in self.relators.iter().enumerate() {
            writeln!(f, "r{} = {}", i + 1, r)?;
        }
        Ok(())
    }
}

impl fmt::Display for ArtinPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

/// Content lines of a text block: blank lines and `#` comments dropped, with
/// 1-based line numbers kept for error messages.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

/// Parses `<keyword> <count>` headers.
pub(crate) fn parse_header(line: usize, text: &str, keyword: &str) -> Result<usize> {
    let mut parts = text.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(n), None) if k == keyword => n
            .parse()
            .map_err(|_| Error::syntax(format!("line {line}"), format!("bad generator count `{n}`"))),
        _ => Err(Error::syntax(format!("line {line}"), format!("expected `{keyword} <n>`"))),
    }
}

/// Parses `r<i> = <word>` lines, requiring labels `r1, r2, ...` in order.
pub(crate) fn parse_relator_lines<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Vec<Word>> {
    let mut relators = Vec::new();
    for (ln, text) in lines {
        let (label, rhs) = text
            .split_once('=')
            .ok_or_else(|| Error::syntax(format!("line {ln}"), "expected `r<i> = <word>`"))?;
        let want = format!("r{}", relators.len() + 1);
        if label.trim() != want {
            return Err(Error::syntax(format!("line {ln}"), format!("expected label `{want}`, found `{}`", label.trim())));
        }
        let base = label.len() + 1;
        let w = parse_word_at(rhs, base).map_err(|e| match e {
            Error::Syntax { pos, msg } => Error::syntax(format!("line {ln}, {pos}"), msg),
            other => other,
        })?;
        relators.push(w);
    }
    Ok(relators)
}

impl FromStr for Candidate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = content_lines(s);
        let (ln, header) = lines.next().ok_or_else(|| Error::syntax("line 1", "empty input"))?;
        let n = parse_header(ln, header, "artin")?;
        let relators = parse_relator_lines(lines)?;
        Candidate::new(n, relators)
    }
}

impl FromStr for ArtinPresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArtinPresentation::try_from(s.parse::<Candidate>()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn cand(n: usize, rels: &[&str]) -> Candidate {
        Candidate::new(n, rels.iter().map(|r| word(r)).collect()).unwrap()
    }

    #[test]
    fn cyclic_presentations_are_artin() {
        for a in -6..=6 {
            assert!(ArtinPresentation::powers(&[a]).as_candidate().is_artin());
        }
        assert!(cand(0, &[]).artin_defect().is_empty());
    }

    #[test]
    fn swapped_generators_are_not_artin() {
        // (x2⁻¹x1x2)(x1⁻¹x2x1) vs x1x2
        let d = cand(2, &["x2", "x1"]).artin_defect();
        assert_eq!(d.values(), vec![-1, -2, 1, -2, -1, 2, 1, 2]);
    }

    #[test]
    fn is_artin_examples() {
        assert!(cand(2, &["x1 x2", "x1 x2"]).is_artin());
        assert!(cand(2, &["x1^-3 x1 x2 x1 x2", "x2^-5 x1 x2 x1 x2"]).is_artin());
        let bad = cand(2, &["x1", "x1"]);
        assert!(!bad.is_artin());
        assert!(matches!(ArtinPresentation::try_from(bad), Err(Error::NotArtin(_))));
    }

    #[test]
    fn out_of_range_generator() {
        let err = Candidate::new(1, vec![word("x2")]).unwrap_err();
        assert_eq!(err, Error::GeneratorOutOfRange { index: 2, n: 1 });
        assert!(matches!(Candidate::new(2, vec![word("x1")]), Err(Error::RelatorCount { .. })));
    }

    #[test]
    fn identity_is_neutral() {
        let twist = ArtinPresentation::new(2, vec![word("x1 x2"), word("x1 x2")]).unwrap();
        let id = ArtinPresentation::identity(2);
        assert_eq!(id.compose(&twist).unwrap(), twist);
        assert_eq!(twist.compose(&id).unwrap(), twist);
        assert!(id.exponent_matrix().row_vecs().iter().flatten().all(|&v| v == 0));
        assert_eq!(ArtinPresentation::identity(0).n(), 0);
    }

    #[test]
    fn compose_twist_with_itself() {
        let twist = ArtinPresentation::new(2, vec![word("x1 x2"), word("x1 x2")]).unwrap();
        let sq = twist.compose(&twist).unwrap();
        assert_eq!(sq.relators(), &[word("x1 x2 x1 x2"), word("x1 x2 x1 x2")]);
    }

    #[test]
    fn compose_size_mismatch() {
        let err = ArtinPresentation::identity(2).compose(&ArtinPresentation::identity(3)).unwrap_err();
        assert_eq!(err, Error::SizeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn exponent_matrix_and_invariants() {
        let m = ArtinPresentation::powers(&[-4]).exponent_matrix();
        assert_eq!(m.row_vecs(), vec![vec![-4]]);
        assert_eq!(abelianization_invariants(&m), vec![BigInt::from(4)]);
        assert!(is_unimodular(&ExponentMatrix::zeros(0, 0)));
        let m = ExponentMatrix::from_rows(vec![vec![3, 2], vec![2, 3]]);
        assert!(!is_unimodular(&m));
        assert_eq!(determinant(&m), BigInt::from(5));
    }

    #[test]
    fn text_round_trip() {
        let text = "artin 2\nr1 = x1^-2 x2 x1 x2\nr2 = x2^-5 x1 x2 x1 x2\n";
        let p: ArtinPresentation = text.parse().unwrap();
        assert_eq!(p.to_string(), text);
        let spaced = "# comment\n\nartin 2\nr1 = x1^-3 x1 x2 x1 x2\n\nr2 = x2^-5 x1 x2 x1 x2\n";
        assert_eq!(spaced.parse::<ArtinPresentation>().unwrap(), p);
    }

    #[test]
    fn text_errors() {
        assert!(matches!("artn 1\nr1 = x1".parse::<Candidate>(), Err(Error::Syntax { .. })));
        assert!(matches!("artin 2\nr2 = x1\nr1 = x2".parse::<Candidate>(), Err(Error::Syntax { .. })));
        let err = "artin 1\nr1 = x1 z".parse::<Candidate>().unwrap_err();
        assert_eq!(err, Error::syntax("line 2, column 9", "expected `x<k>` or `x<k>^<e>`, found `z`"));
    }
}
