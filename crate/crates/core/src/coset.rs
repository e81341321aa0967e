//! Todd–Coxeter coset enumeration over the trivial subgroup.
//!
//! Two strategies are provided. `RelatorFirst` is the HLT scheme: every live
//! coset is scanned against every relator, defining new cosets to fill gaps.
//! `DefinitionFirst` is the Felsch scheme: cosets are defined in order and
//! each new table entry is propagated through the relator cycles that pass
//! through it before anything else is defined. Coincidences are merged
//! immediately through a union-find forest in both.
//!
//! The budget counts every coset ever defined, live or collapsed, so a run
//! is reproducible and `Exceeded` never depends on memory layout.

use std::fmt;
use std::str::FromStr;

use crate::artin::{content_lines, parse_header, parse_relator_lines, ArtinPresentation, Candidate};
use crate::error::{Error, Result};
use crate::freegroup::Word;
use crate::r2::{build_r2, Tuple3};
use crate::triangle::{lemma_verdict, LemmaVerdict};

/// `⟨x_1..x_g | relators⟩` with no further conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePresentation {
    generators: usize,
    relators: Vec<Word>,
}

impl FinitePresentation {
    pub fn new(generators: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            r.check_rank(generators)?;
        }
        Ok(FinitePresentation { generators, relators })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// The same group with one more relator.
    pub fn with_relator(&self, r: Word) -> Result<Self> {
        let mut relators = self.relators.clone();
        relators.push(r);
        FinitePresentation::new(self.generators, relators)
    }
}

impl From<&Candidate> for FinitePresentation {
    fn from(c: &Candidate) -> Self {
        FinitePresentation { generators: c.n(), relators: c.relators().to_vec() }
    }
}

impl From<&ArtinPresentation> for FinitePresentation {
    fn from(p: &ArtinPresentation) -> Self {
        FinitePresentation::from(p.as_candidate())
    }
}

impl fmt::Display for FinitePresentation {
    /// `group <g>` followed by `r<i> = <word>` lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {}", self.generators)?;
        for (i, r) in self.relators.iter().enumerate() {
            writeln!(f, "r{} = {}", i + 1, r)?;
        }
        Ok(())
    }
}

/// Accepts both the `group <g>` format (any number of relators) and the
/// `artin <n>` presentation format.
impl FromStr for FinitePresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = content_lines(s);
        let (ln, header) = lines.next().ok_or_else(|| Error::syntax("line 1", "empty input"))?;
        if header.trim_start().starts_with("artin") {
            let c: Candidate = s.parse()?;
            return Ok(FinitePresentation::from(&c));
        }
        let g = parse_header(ln, header, "group")?;
        FinitePresentation::new(g, parse_relator_lines(lines)?)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    RelatorFirst,
    DefinitionFirst,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relator-first" => Ok(Strategy::RelatorFirst),
            "definition-first" => Ok(Strategy::DefinitionFirst),
            _ => Err(Error::syntax("strategy", format!("unknown strategy `{s}`"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::RelatorFirst => "relator-first",
            Strategy::DefinitionFirst => "definition-first",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumResult {
    /// The table closed with `order` live cosets after defining
    /// `cosets_defined` in total.
    Finite { order: usize, cosets_defined: usize },
    /// The budget of defined cosets ran out.
    Exceeded { limit: usize },
}

impl EnumResult {
    pub fn order(&self) -> Option<usize> {
        match *self {
            EnumResult::Finite { order, .. } => Some(order),
            EnumResult::Exceeded { .. } => None,
        }
    }
}

impl fmt::Display for EnumResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumResult::Finite { order, cosets_defined } => write!(f, "order={order} cosets={cosets_defined}"),
            EnumResult::Exceeded { limit } => write!(f, "exceeded={limit}"),
        }
    }
}

const NONE: u32 = u32::MAX;

/// Column of a letter: `x_k` is `2(k-1)`, `x_k⁻¹` is `2(k-1)+1`.
#[inline]
fn column(l: i32) -> usize {
    let k = l.unsigned_abs() as usize - 1;
    2 * k + usize::from(l < 0)
}

#[inline]
fn inverse_column(c: usize) -> usize {
    c ^ 1
}

/// Partial coset table. Rows are cosets (row 0 is the subgroup coset), one
/// column per generator and per inverse generator.
#[derive(Clone, Debug)]
pub struct CosetTable {
    width: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    defined: usize,
    live: usize,
    limit: usize,
    queue: Vec<u32>,
    deductions: Vec<(u32, usize)>,
    track_deductions: bool,
}

struct BudgetExhausted;

impl CosetTable {
    fn new(generators: usize, limit: usize, track_deductions: bool) -> Self {
        let width = 2 * generators;
        CosetTable {
            width,
            table: vec![NONE; width],
            parent: vec![0],
            defined: 1,
            live: 1,
            limit,
            queue: Vec::new(),
            deductions: Vec::new(),
            track_deductions,
        }
    }

    pub fn live_cosets(&self) -> usize {
        self.live
    }

    pub fn cosets_defined(&self) -> usize {
        self.defined
    }

    pub fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    /// Entry for coset `c` and column `x`.
    pub fn entry(&self, c: u32, x: usize) -> Option<u32> {
        let v = self.table[c as usize * self.width + x];
        (v != NONE).then_some(v)
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.width + x]
    }

    #[inline]
    fn put(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.width + x] = v;
    }

    /// Every defined entry between live cosets has a matching inverse entry,
    /// and no live entry points at a dead coset.
    pub fn is_consistent(&self) -> bool {
        let rows = self.defined as u32;
        (0..rows).filter(|&c| self.is_live(c)).all(|c| {
            (0..self.width).all(|x| match self.entry(c, x) {
                None => true,
                Some(d) => self.is_live(d) && self.entry(d, inverse_column(x)) == Some(c),
            })
        })
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, BudgetExhausted> {
        if self.defined >= self.limit {
            return Err(BudgetExhausted);
        }
        let d = self.defined as u32;
        self.defined += 1;
        self.live += 1;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.width));
        self.put(c, x, d);
        self.put(d, inverse_column(x), c);
        if self.track_deductions {
            self.deductions.push((c, x));
        }
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut k = c;
        while self.parent[k as usize] != root {
            let next = self.parent[k as usize];
            self.parent[k as usize] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (keep, kill) = if a < b { (a, b) } else { (b, a) };
            self.parent[kill as usize] = keep;
            self.live -= 1;
            self.queue.push(kill);
        }
    }

    /// Identifies cosets `a` and `b` and everything that follows from it.
    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for x in 0..self.width {
                let d = self.get(dead, x);
                if d == NONE {
                    continue;
                }
                let xi = inverse_column(x);
                if self.get(d, xi) == dead {
                    self.put(d, xi, NONE);
                }
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                } else {
                    let nu_xi = self.get(nu, xi);
                    if nu_xi != NONE {
                        self.merge(mu, nu_xi);
                    } else {
                        self.put(mu, x, nu);
                        self.put(nu, xi, mu);
                        if self.track_deductions {
                            self.deductions.push((mu, x));
                        }
                    }
                }
            }
        }
    }

    /// Scans relator `w` (as columns) at coset `c`, filling the single gap
    /// if one remains and recording coincidences. With `fill`, undefined
    /// entries are defined until the scan closes.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> Result<(), BudgetExhausted> {
        let n = w.len();
        let mut f = c;
        let mut i = 0;
        let mut b = c;
        let mut j = n;
        loop {
            while i < j {
                let v = self.get(f, w[i]);
                if v == NONE {
                    break;
                }
                f = v;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let v = self.get(b, inverse_column(w[j - 1]));
                if v == NONE {
                    break;
                }
                b = v;
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            if j == i + 1 {
                // deduction closes the cycle
                self.put(f, w[i], b);
                self.put(b, inverse_column(w[i]), f);
                if self.track_deductions {
                    self.deductions.push((f, w[i]));
                }
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn next_live(&self, mut c: u32) -> Option<u32> {
        while (c as usize) < self.defined {
            if self.is_live(c) {
                return Some(c);
            }
            c += 1;
        }
        None
    }
}

/// Relators as column sequences, cyclically reduced and with trivial ones
/// dropped.
fn relator_columns(p: &FinitePresentation) -> Vec<Vec<usize>> {
    p.relators
        .iter()
        .map(Word::cyclically_reduced)
        .filter(|w| !w.is_empty())
        .map(|w| w.letters().iter().map(|l| column(l.value())).collect())
        .collect()
}

/// Cyclic rotations of each relator and its inverse, grouped by first column.
fn cycles_by_column(rels: &[Vec<usize>], width: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_col = vec![Vec::new(); width];
    for r in rels {
        let inv: Vec<usize> = r.iter().rev().map(|&x| inverse_column(x)).collect();
        for base in [r, &inv] {
            for s in 0..base.len() {
                let rot: Vec<usize> = base[s..].iter().chain(&base[..s]).copied().collect();
                if !by_col[rot[0]].contains(&rot) {
                    by_col[rot[0]].push(rot);
                }
            }
        }
    }
    by_col
}

/// Runs the enumeration and returns the final table alongside the result.
pub fn enumerate_table(p: &FinitePresentation, max_cosets: usize, strategy: Strategy) -> Result<(EnumResult, CosetTable)> {
    if max_cosets == 0 {
        return Err(Error::ZeroBudget);
    }
    let rels = relator_columns(p);
    let width = 2 * p.generators;
    let mut t = CosetTable::new(p.generators, max_cosets, strategy == Strategy::DefinitionFirst);
    let outcome = match strategy {
        Strategy::RelatorFirst => hlt(&mut t, &rels),
        Strategy::DefinitionFirst => felsch(&mut t, &rels, &cycles_by_column(&rels, width)),
    };
    let result = match outcome {
        Ok(()) => EnumResult::Finite { order: t.live, cosets_defined: t.defined },
        Err(BudgetExhausted) => EnumResult::Exceeded { limit: max_cosets },
    };
    debug_assert!(t.is_consistent(), "coset table lost consistency");
    Ok((result, t))
}

pub fn enumerate(p: &FinitePresentation, max_cosets: usize, strategy: Strategy) -> Result<EnumResult> {
    enumerate_table(p, max_cosets, strategy).map(|(r, _)| r)
}

fn hlt(t: &mut CosetTable, rels: &[Vec<usize>]) -> Result<(), BudgetExhausted> {
    let mut c = 0u32;
    while let Some(live) = t.next_live(c) {
        c = live;
        for r in rels {
            if !t.is_live(c) {
                break;
            }
            t.scan(c, r, true)?;
        }
        if t.is_live(c) {
            for x in 0..t.width {
                if t.get(c, x) == NONE {
                    t.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    Ok(())
}

fn felsch(t: &mut CosetTable, rels: &[Vec<usize>], cycles: &[Vec<Vec<usize>>]) -> Result<(), BudgetExhausted> {
    for r in rels {
        t.scan(0, r, false).ok();
    }
    process_deductions(t, cycles);
    let mut c = 0u32;
    while let Some(live) = t.next_live(c) {
        c = live;
        for x in 0..t.width {
            if !t.is_live(c) {
                break;
            }
            if t.get(c, x) == NONE {
                t.define(c, x)?;
                process_deductions(t, cycles);
            }
        }
        c += 1;
    }
    Ok(())
}

fn process_deductions(t: &mut CosetTable, cycles: &[Vec<Vec<usize>>]) {
    while let Some((c, x)) = t.deductions.pop() {
        if !t.is_live(c) {
            continue;
        }
        for w in &cycles[x] {
            if !t.is_live(c) {
                break;
            }
            // scans without filling never define, so they cannot exhaust the budget
            let _ = t.scan(c, w, false);
        }
        let d = t.get(c, x);
        if d == NONE || !t.is_live(d) {
            continue;
        }
        for w in &cycles[inverse_column(x)] {
            if !t.is_live(d) {
                break;
            }
            let _ = t.scan(d, w, false);
        }
    }
}

/// Why a presentation `r(a,b,c)` is known to present a nontrivial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NontrivialReason {
    /// `det A != ±1`, so the abelianization is nontrivial.
    AbelianizationNontrivial,
    /// The group surjects onto a nontrivial triangle group.
    TriangleQuotient(LemmaVerdict),
    /// Coset enumeration closed with this many cosets.
    CosetOrder(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrivialityStatus {
    Trivial,
    Nontrivial(NontrivialReason),
    Unknown,
}

impl fmt::Display for TrivialityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrivialityStatus::Trivial => f.write_str("trivial"),
            TrivialityStatus::Unknown => f.write_str("unknown"),
            TrivialityStatus::Nontrivial(NontrivialReason::AbelianizationNontrivial) => {
                f.write_str("nontrivial reason=abelianization")
            }
            TrivialityStatus::Nontrivial(NontrivialReason::TriangleQuotient(v)) => {
                write!(f, "nontrivial reason=triangle-quotient verdict={v}")
            }
            TrivialityStatus::Nontrivial(NontrivialReason::CosetOrder(n)) => {
                write!(f, "nontrivial reason=coset-order order={n}")
            }
        }
    }
}

/// Cheapest certificate first: determinant, triangle quotient, then coset
/// enumeration of `r(a,b,c)` within `budget` cosets.
pub fn triviality_status(t: Tuple3, budget: usize) -> Result<TrivialityStatus> {
    if t.det().abs() != 1 {
        return Ok(TrivialityStatus::Nontrivial(NontrivialReason::AbelianizationNontrivial));
    }
    let verdict = lemma_verdict(t);
    if verdict != LemmaVerdict::Inconclusive {
        return Ok(TrivialityStatus::Nontrivial(NontrivialReason::TriangleQuotient(verdict)));
    }
    Ok(match enumerate(&FinitePresentation::from(&build_r2(t)), budget, Strategy::RelatorFirst)? {
        EnumResult::Finite { order: 1, .. } => TrivialityStatus::Trivial,
        EnumResult::Finite { order, .. } => TrivialityStatus::Nontrivial(NontrivialReason::CosetOrder(order)),
        EnumResult::Exceeded { .. } => TrivialityStatus::Unknown,
    })
}
