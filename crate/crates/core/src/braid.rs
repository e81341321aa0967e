//! Framed pure braids and their Artin presentations.
//!
//! A braid word acts on `F_n` through the Artin action; a pure braid fixes
//! every generator up to conjugation, `β(x_i) = g_i x_i g_i⁻¹`, and the
//! relator `t_i = x_i^{k_i} g_i⁻¹` is then Artin. The power `k_i` is chosen
//! so that the diagonal of the exponent-sum matrix equals the strand
//! framings.

use std::fmt;
use std::str::FromStr;

use crate::artin::ArtinPresentation;
use crate::error::{Error, Result};
use crate::freegroup::{parse_power_token, tokenize, Letter, Word};

/// Handedness of the Artin action of `σ_i` on `F_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaAction {
    /// `σ_i: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}`.
    ShiftUp,
    /// `σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i`; inverse of `ShiftUp`.
    ShiftDown,
}

/// The action used throughout. With it, `σ_1²` framed `(1,1)` gives the
/// right Dehn twist `⟨x1,x2 | x1x2, x1x2⟩`; `ShiftDown` would give
/// `⟨x1,x2 | x1² x2⁻¹ x1⁻¹, x2 x1⁻¹⟩` instead.
pub const SIGMA_ACTION: SigmaAction = SigmaAction::ShiftUp;

/// A word in `σ_1..σ_{n-1}` on `n` strands; letter `i` is `σ_i`, `-i` is
/// `σ_i⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::BraidLetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// The standard pure braid generator
    /// `A_{ij} = σ_{j-1}⋯σ_{i+1} σ_i² σ_{i+1}⁻¹⋯σ_{j-1}⁻¹` for `1 <= i < j <= n`.
    pub fn pure_generator(strands: usize, i: usize, j: usize) -> Result<Self> {
        assert!(1 <= i && i < j && j <= strands, "pure generator indices out of range");
        let mut letters: Vec<i32> = (i + 1..j).rev().map(|k| k as i32).collect();
        letters.extend([i as i32, i as i32]);
        letters.extend((i + 1..j).map(|k| -(k as i32)));
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Word of `self` followed by `other`.
    pub fn then(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::SizeMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Reversed with every letter inverted.
    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `perm[k-1]` is the position strand `k` ends at.
    pub fn permutation(&self) -> Vec<u32> {
        let mut at: Vec<u32> = (1..=self.strands as u32).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs();
            for p in at.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        at
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(k, &p)| p as usize == k + 1)
    }

    /// Images `β(x_1)..β(x_n)` under the active action.
    pub fn automorphism_images(&self) -> Vec<Word> {
        self.automorphism_images_with(SIGMA_ACTION)
    }

    /// Images under a chosen action. The letters compose left to right:
    /// `β_{uv} = β_u ∘ β_v`.
    pub fn automorphism_images_with(&self, action: SigmaAction) -> Vec<Word> {
        let mut images: Vec<Word> = (1..=self.strands as u32).map(Word::generator).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let up = match action {
                SigmaAction::ShiftUp => l > 0,
                SigmaAction::ShiftDown => l < 0,
            };
            let (lo, hi) = (images[i].clone(), images[i + 1].clone());
            if up {
                // φ∘σ: x_i ↦ φ(x_{i+1}), x_{i+1} ↦ φ(x_{i+1})⁻¹ φ(x_i) φ(x_{i+1})
                images[i + 1] = lo.conjugate_by(&hi);
                images[i] = hi;
            } else {
                // φ∘σ⁻¹: x_i ↦ φ(x_i) φ(x_{i+1}) φ(x_i)⁻¹, x_{i+1} ↦ φ(x_i)
                images[i] = hi.conjugate_by(&lo.inverse());
                images[i + 1] = lo;
            }
        }
        images
    }

    /// Each image written as `g · x_k · g⁻¹` with `g` not ending in `x_k^{±1}`.
    pub fn automorphism(&self) -> Result<Vec<Conjugate>> {
        self.automorphism_images().iter().map(Conjugate::extract).collect()
    }
}

/// `conjugator · x_target · conjugator⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugate {
    pub conjugator: Word,
    pub target: u32,
}

impl Conjugate {
    /// Strips matching outer letters of `w` down to a single-letter core.
    pub fn extract(w: &Word) -> Result<Conjugate> {
        let s = w.letters();
        if s.len().is_multiple_of(2) {
            return Err(Error::Internal(format!("image {w} is not a conjugate of a generator")));
        }
        let h = s.len() / 2;
        let core = s[h];
        if core.is_inverse() || (0..h).any(|k| s[k] != s[s.len() - 1 - k].inverse()) {
            return Err(Error::Internal(format!("image {w} is not a conjugate of a generator")));
        }
        Ok(Conjugate { conjugator: Word::from_letters(s[..h].iter().copied()), target: core.index() })
    }

    pub fn to_word(&self) -> Word {
        self.conjugator
            .concat(&Word::from_letters([Letter::generator(self.target)]))
            .concat(&self.conjugator.inverse())
    }
}

/// A pure braid with an integer framing per strand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedPureBraid {
    braid: BraidWord,
    framings: Vec<i64>,
}

impl FramedPureBraid {
    pub fn new(braid: BraidWord, framings: Vec<i64>) -> Result<Self> {
        if framings.len() != braid.strands {
            return Err(Error::FramingCount { expected: braid.strands, found: framings.len() });
        }
        if !braid.is_pure() {
            return Err(Error::NotPure(braid.permutation()));
        }
        Ok(FramedPureBraid { braid, framings })
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn strands(&self) -> usize {
        self.braid.strands
    }

    /// Braid words concatenated, framings added.
    pub fn then(&self, other: &FramedPureBraid) -> Result<FramedPureBraid> {
        let braid = self.braid.then(&other.braid)?;
        let framings = self.framings.iter().zip(&other.framings).map(|(a, b)| a + b).collect();
        Ok(FramedPureBraid { braid, framings })
    }

    pub fn inverse(&self) -> FramedPureBraid {
        FramedPureBraid { braid: self.braid.inverse(), framings: self.framings.iter().map(|a| -a).collect() }
    }

    pub fn to_artin(&self) -> Result<ArtinPresentation> {
        braid_to_artin(self)
    }
}

pub fn braid_to_artin(fp: &FramedPureBraid) -> Result<ArtinPresentation> {
    let n = fp.strands();
    let mut relators = Vec::with_capacity(n);
    for (idx, c) in fp.braid.automorphism()?.into_iter().enumerate() {
        let i = idx as u32 + 1;
        if c.target != i {
            return Err(Error::Internal(format!("pure braid moved x{i} to x{}", c.target)));
        }
        let tail = c.conjugator.inverse();
        let k = fp.framings[idx] - tail.exponent_sum(i);
        relators.push(Word::generator_power(i, k).concat(&tail));
    }
    ArtinPresentation::new(n, relators).map_err(|e| Error::Internal(format!("braid image failed verification: {e}")))
}

/// The compose-inverse of `braid_to_artin(fp)`.
pub fn artin_inverse(fp: &FramedPureBraid) -> Result<ArtinPresentation> {
    braid_to_artin(&fp.inverse())
}

impl fmt::Display for BraidWord {
    /// Runs of equal letters collapse to powers, `s1^2 s2^-1`; the empty
    /// word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 0i64;
            while i < self.letters.len() && self.letters[i] == l {
                run += 1;
                i += 1;
            }
            let e = if l > 0 { run } else { -run };
            if e == 1 {
                parts.push(format!("s{}", l.unsigned_abs()));
            } else {
                parts.push(format!("s{}^{}", l.unsigned_abs(), e));
            }
        }
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Display for FramedPureBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fr: Vec<String> = self.framings.iter().map(ToString::to_string).collect();
        write!(f, "braid {} : {} ; framings = {}", self.strands(), self.braid, fr.join(","))
    }
}

/// Parses `braid <n> : <tokens> ; framings = <f1>,...,<fn>`.
impl FromStr for FramedPureBraid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let syntax = |msg: &str| Error::syntax("braid", msg);
        let rest = s.strip_prefix("braid").ok_or_else(|| syntax("expected `braid <n> : ...`"))?;
        let (count, rest) = rest.split_once(':').ok_or_else(|| syntax("missing `:`"))?;
        let strands: usize = count.trim().parse().map_err(|_| syntax("bad strand count"))?;
        let (word, rest) = rest.split_once(';').ok_or_else(|| syntax("missing `;`"))?;
        let framings = rest
            .trim()
            .strip_prefix("framings")
            .and_then(|r| r.trim_start().strip_prefix('='))
            .ok_or_else(|| syntax("expected `framings = ...`"))?;
        let framings: Vec<i64> = if framings.trim().is_empty() {
            Vec::new()
        } else {
            framings
                .split(',')
                .map(|v| v.trim().parse::<i64>().map_err(|_| syntax(&format!("bad framing `{}`", v.trim()))))
                .collect::<Result<_>>()?
        };
        let mut letters = Vec::new();
        let tokens = tokenize(word);
        if !(tokens.len() == 1 && tokens[0].1 == "1") {
            for (_, tok) in tokens {
                let (k, e) = parse_power_token(tok, 's').map_err(|m| syntax(&m))?;
                let k = i32::try_from(k).map_err(|_| syntax("strand index too large"))?;
                let l = if e < 0 { -k } else { k };
                letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
            }
        }
        FramedPureBraid::new(BraidWord::new(strands, letters)?, framings)
    }
}
