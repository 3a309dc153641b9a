//! Exact word counts.
//!
//! Everything here counts words of a fixed composition subject to
//! constraints on some of their positions. The prefix, suffix and sandwich
//! counts depend on the constraining words only through their compositions;
//! [`pattern_count`] handles arbitrary fixed positions, including the
//! overlapping prefix/suffix case the composition-only counts refuse.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::code_model::{Composition, Symbol};
use crate::{BigCount, Error, Result};

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigCount {
    if k < 0 || k as u64 > n {
        return BigCount::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigCount::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of words with exactly this composition, computed as the
/// telescoping product `prod_i C(counts[i] + ... + counts[D-1], counts[i])`.
pub fn word_count(comp: &Composition) -> BigCount {
    let mut remaining = comp.total_length() as u64;
    let mut acc = BigCount::one();
    for &c in comp.counts() {
        acc *= binomial(remaining, c as i64);
        remaining -= c as u64;
    }
    acc
}

/// Words of composition `target` that begin with a fixed word of composition
/// `prefix_comp`. Also the number of words that *end* with such a word.
pub fn prefix_extension_count(prefix_comp: &Composition, target: &Composition) -> BigCount {
    assert_eq!(prefix_comp.alphabet_size(), target.alphabet_size(), "alphabet sizes differ");
    match target.checked_sub(prefix_comp) {
        Some(rest) => word_count(&rest),
        None => BigCount::zero(),
    }
}

pub fn suffix_extension_count(suffix_comp: &Composition, target: &Composition) -> BigCount {
    prefix_extension_count(suffix_comp, target)
}

/// Words of composition `target` starting with a fixed word of composition
/// `prefix_comp` and ending with a fixed word of composition `suffix_comp`.
///
/// The two fixed words must not overlap; use [`pattern_count`] otherwise.
pub fn sandwich_count(
    prefix_comp: &Composition,
    suffix_comp: &Composition,
    target: &Composition,
) -> Result<BigCount> {
    let (p, s, t) = (prefix_comp.total_length(), suffix_comp.total_length(), target.total_length());
    if p + s > t {
        return Err(Error::Overlap { prefix: p, suffix: s, target: t });
    }
    for c in [prefix_comp, suffix_comp] {
        if c.alphabet_size() != target.alphabet_size() {
            return Err(Error::DimensionMismatch {
                expected: target.alphabet_size(),
                found: c.alphabet_size(),
            });
        }
    }
    Ok(target
        .checked_sub(prefix_comp)
        .and_then(|rest| rest.checked_sub(suffix_comp))
        .map_or_else(BigCount::zero, |rest| word_count(&rest)))
}

/// A word of known length with some positions fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialWord {
    slots: Vec<Option<Symbol>>,
}

impl PartialWord {
    /// A word of length `len` with no position fixed.
    pub fn free(len: usize) -> Self {
        PartialWord { slots: alloc::vec![None; len] }
    }

    /// Length `len`, positions `0..word.len()` fixed to `word`.
    pub fn with_prefix(len: usize, word: &[Symbol]) -> Result<Self> {
        if word.len() > len {
            return Err(Error::LengthMismatch { pattern: word.len(), word: len });
        }
        let mut p = Self::free(len);
        for (slot, &s) in p.slots.iter_mut().zip(word) {
            *slot = Some(s);
        }
        Ok(p)
    }

    /// Length `len`, the last `word.len()` positions fixed to `word`.
    pub fn with_suffix(len: usize, word: &[Symbol]) -> Result<Self> {
        if word.len() > len {
            return Err(Error::LengthMismatch { pattern: word.len(), word: len });
        }
        let mut p = Self::free(len);
        for (slot, &s) in p.slots[len - word.len()..].iter_mut().zip(word) {
            *slot = Some(s);
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn get(&self, pos: usize) -> Option<Symbol> {
        self.slots.get(pos).copied().flatten()
    }

    pub fn slots(&self) -> &[Option<Symbol>] {
        &self.slots
    }

    /// Fixes one position. Returns `Conflict` if it already holds another symbol.
    pub fn fix(mut self, pos: usize, symbol: Symbol) -> Constraint {
        match self.slots[pos] {
            Some(s) if s != symbol => Constraint::Conflict,
            _ => {
                self.slots[pos] = Some(symbol);
                Constraint::Partial(self)
            }
        }
    }
}

impl fmt::Display for PartialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for slot in &self.slots {
            match slot {
                Some(s) => write!(f, "{s}")?,
                None => f.write_str("_")?,
            }
        }
        Ok(())
    }
}

/// Result of combining position constraints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    Partial(PartialWord),
    /// Some position was required to hold two different symbols.
    Conflict,
}

impl Constraint {
    /// Merges another pattern into this constraint. `Conflict` absorbs.
    pub fn and(self, other: &PartialWord) -> Result<Constraint> {
        match self {
            Constraint::Conflict => Ok(Constraint::Conflict),
            Constraint::Partial(p) => merge_patterns(&p, other),
        }
    }
}

impl From<PartialWord> for Constraint {
    fn from(p: PartialWord) -> Self {
        Constraint::Partial(p)
    }
}

pub fn merge_patterns(p: &PartialWord, q: &PartialWord) -> Result<Constraint> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch { pattern: q.len(), word: p.len() });
    }
    let mut slots = Vec::with_capacity(p.len());
    for (a, b) in p.slots.iter().zip(&q.slots) {
        slots.push(match (a, b) {
            (Some(x), Some(y)) if x != y => return Ok(Constraint::Conflict),
            (Some(x), _) | (None, Some(x)) => Some(*x),
            (None, None) => None,
        });
    }
    Ok(Constraint::Partial(PartialWord { slots }))
}

/// Words of composition `comp` agreeing with every fixed position of the pattern.
pub fn pattern_count(pattern: &Constraint, comp: &Composition) -> Result<BigCount> {
    let p = match pattern {
        Constraint::Conflict => return Ok(BigCount::zero()),
        Constraint::Partial(p) => p,
    };
    if p.len() != comp.total_length() {
        return Err(Error::LengthMismatch { pattern: p.len(), word: comp.total_length() });
    }
    let mut free = comp.counts().to_vec();
    for s in p.slots.iter().flatten() {
        match free.get_mut(*s as usize) {
            Some(c) if *c > 0 => *c -= 1,
            _ => return Ok(BigCount::zero()),
        }
    }
    Ok(word_count(&Composition::new(free)))
}
