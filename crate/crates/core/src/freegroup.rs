//! Exact word arithmetic in free groups.
//!
//! A [`Word`] is always freely reduced, so two words are equal as group
//! elements exactly when their letter sequences are equal. The type carries
//! no rank: generator indices are checked against an ambient `n` only where a
//! context supplies one.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A generator `x_k` (positive value `k`) or its inverse (value `-k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(transparent)]
pub struct Letter(i32);

impl Letter {
    pub fn new(value: i32) -> Result<Self> {
        if value == 0 {
            Err(Error::ZeroLetter)
        } else {
            Ok(Letter(value))
        }
    }

    /// The letter `x_k`. Panics if `k` is zero.
    pub fn generator(k: u32) -> Self {
        assert!(k > 0, "generator index must be positive");
        Letter(k as i32)
    }

    #[inline]
    pub fn value(self) -> i32 {
        self.0
    }

    /// Generator index `k` of `x_k^{±1}`.
    #[inline]
    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    #[inline]
    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }
}

/// A freely reduced element of a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The identity element.
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    /// Freely reduces a raw sequence of signed generator values.
    pub fn reduce<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = i32>,
    {
        let mut w = Word::identity();
        for v in raw {
            w.push(Letter::new(v)?);
        }
        Ok(w)
    }

    /// Freely reduces a sequence of letters.
    pub fn from_letters<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut w = Word::identity();
        w.extend(letters);
        w
    }

    /// The single-letter word `x_k`.
    pub fn generator(k: u32) -> Self {
        Word { letters: vec![Letter::generator(k)] }
    }

    /// `x_k^e`.
    pub fn generator_power(k: u32, e: i64) -> Self {
        let l = Letter::generator(k);
        let l = if e < 0 { l.inverse() } else { l };
        Word { letters: vec![l; e.unsigned_abs() as usize] }
    }

    /// `x_1 x_2 ⋯ x_n`.
    pub fn product_of_generators(n: usize) -> Self {
        Word { letters: (1..=n as u32).map(Letter::generator).collect() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Signed values of the letters.
    pub fn values(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index occurring in the word, 0 for the identity.
    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Appends one letter, cancelling against the last letter if possible.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend(other.letters.iter().copied());
        w
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `self^e` for any integer `e`.
    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..e.unsigned_abs() {
            w.extend(base.letters.iter().copied());
        }
        w
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.inverse().concat(self).concat(g)
    }

    /// Image under the endomorphism `x_k ↦ images[k - 1]`.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        let mut w = Word::identity();
        for &l in &self.letters {
            let image = images
                .get(l.index() as usize - 1)
                .ok_or(Error::UndefinedGenerator(l.index()))?;
            if l.is_inverse() {
                w.extend(image.letters.iter().rev().map(|x| x.inverse()));
            } else {
                w.extend(image.letters.iter().copied());
            }
        }
        Ok(w)
    }

    /// Exponent sum of `x_i`.
    pub fn exponent_sum(&self, i: u32) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.index() == i)
            .map(|l| if l.is_inverse() { -1 } else { 1 })
            .sum()
    }

    /// The cyclically reduced core; conjugate to `self`.
    pub fn cyclically_reduced(&self) -> Word {
        let s = &self.letters;
        let (mut lo, mut hi) = (0, s.len());
        while hi - lo >= 2 && s[lo] == s[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word { letters: s[lo..hi].to_vec() }
    }

    /// Errors unless every letter has index at most `n`.
    pub fn check_rank(&self, n: usize) -> Result<()> {
        match self.letters.iter().find(|l| l.index() as usize > n) {
            Some(l) => Err(Error::GeneratorOutOfRange { index: l.index(), n }),
            None => Ok(()),
        }
    }
}

impl Extend<Letter> for Word {
    fn extend<T: IntoIterator<Item = Letter>>(&mut self, iter: T) {
        for l in iter {
            self.push(l);
        }
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl fmt::Display for Word {
    /// Runs of the same letter print as powers: `x1^-2 x2 x1 x2`. The
    /// identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let e = if l.is_inverse() { -(run as i64) } else { run as i64 };
            if e == 1 {
                write!(f, "x{}", l.index())?;
            } else {
                write!(f, "x{}^{}", l.index(), e)?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word_at(s, 0)
    }
}

/// Parses the word grammar, reporting positions as 1-based columns offset by
/// `base` (the column of `s` within a larger line).
pub(crate) fn parse_word_at(s: &str, base: usize) -> Result<Word> {
    let tokens = tokenize(s);
    if tokens.is_empty() {
        return Err(Error::syntax(format!("column {}", base + 1), "empty word"));
    }
    if tokens.len() == 1 && tokens[0].1 == "1" {
        return Ok(Word::identity());
    }
    let mut w = Word::identity();
    for (off, tok) in tokens {
        let col = base + off + 1;
        let (k, e) = parse_power_token(tok, 'x').map_err(|msg| Error::syntax(format!("column {col}"), msg))?;
        let k = u32::try_from(k).map_err(|_| Error::syntax(format!("column {col}"), "generator index too large"))?;
        w.extend(Word::generator_power(k, e).letters);
    }
    Ok(w)
}

/// Whitespace-separated tokens with their byte offsets.
pub(crate) fn tokenize(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

/// Parses `<prefix><k>` or `<prefix><k>^<e>` with `k >= 1`.
pub(crate) fn parse_power_token(tok: &str, prefix: char) -> std::result::Result<(u64, i64), String> {
    let rest = tok
        .strip_prefix(prefix)
        .ok_or_else(|| format!("expected `{prefix}<k>` or `{prefix}<k>^<e>`, found `{tok}`"))?;
    let (idx, exp) = match rest.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (rest, None),
    };
    if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("bad index in `{tok}`"));
    }
    let k: u64 = idx.parse().map_err(|_| format!("bad index in `{tok}`"))?;
    if k == 0 {
        return Err(format!("index must be at least 1 in `{tok}`"));
    }
    let e = match exp {
        Some(e) => e.parse::<i64>().map_err(|_| format!("bad exponent in `{tok}`"))?,
        None => 1,
    };
    Ok((k, e))
}
