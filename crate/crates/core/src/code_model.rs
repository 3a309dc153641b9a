//! Codewords, codes, compositions and the predicates and costs defined on them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// Index of a code character, `0..D`.
pub type Symbol = u32;

/// Per-symbol occurrence counts of one codeword.
///
/// Binary compositions are `(zeros, ones)`: entries are indexed by symbol value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    counts: Vec<usize>,
}

impl Composition {
    pub fn new(counts: Vec<usize>) -> Self {
        Composition { counts }
    }

    /// `(zeros, ones)`.
    pub fn binary(zeros: usize, ones: usize) -> Self {
        Composition { counts: alloc::vec![zeros, ones] }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn alphabet_size(&self) -> usize {
        self.counts.len()
    }

    pub fn total_length(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn count(&self, symbol: Symbol) -> usize {
        self.counts.get(symbol as usize).copied().unwrap_or(0)
    }

    /// Componentwise `self <= other`. False when dimensions differ.
    pub fn fits_within(&self, other: &Composition) -> bool {
        self.counts.len() == other.counts.len()
            && self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }

    /// Componentwise `self - other`, or `None` if any entry would go negative
    /// or the dimensions differ.
    pub fn checked_sub(&self, other: &Composition) -> Option<Composition> {
        if self.counts.len() != other.counts.len() {
            return None;
        }
        self.counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Composition::new)
    }

    /// Ordering used wherever a reproducible "smallest" composition is needed:
    /// shorter first, then lexicographic by counts.
    pub fn length_then_lex(&self, other: &Composition) -> core::cmp::Ordering {
        self.total_length()
            .cmp(&other.total_length())
            .then_with(|| self.counts.cmp(&other.counts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A multiset of compositions over a fixed alphabet, the target a code must realize.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionMultiset {
    alphabet_size: usize,
    entries: BTreeMap<Composition, usize>,
}

impl CompositionMultiset {
    /// Builds a multiset from one composition per codeword. Repeats aggregate.
    pub fn new<I>(alphabet_size: usize, compositions: I) -> Result<Self>
    where
        I: IntoIterator<Item = Composition>,
    {
        Self::with_multiplicities(alphabet_size, compositions.into_iter().map(|c| (c, 1)))
    }

    pub fn with_multiplicities<I>(alphabet_size: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, usize)>,
    {
        if alphabet_size < 2 {
            return Err(Error::AlphabetTooSmall(alphabet_size));
        }
        let mut map = BTreeMap::new();
        for (comp, mult) in entries {
            if comp.alphabet_size() != alphabet_size {
                return Err(Error::DimensionMismatch {
                    expected: alphabet_size,
                    found: comp.alphabet_size(),
                });
            }
            if comp.total_length() == 0 {
                return Err(Error::EmptyComposition);
            }
            if mult == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            *map.entry(comp).or_insert(0) += mult;
        }
        if map.is_empty() {
            return Err(Error::EmptyMultiset);
        }
        Ok(CompositionMultiset { alphabet_size, entries: map })
    }

    /// Convenience for binary multisets given as `(zeros, ones)` pairs.
    pub fn binary(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(2, pairs.iter().map(|&(z, o)| Composition::binary(z, o)))
    }

    /// The multiset of compositions of a code's words.
    pub fn of_code(code: &Code) -> Result<Self> {
        let d = code.alphabet_size();
        Self::new(d, code.words().iter().map(|w| w.composition(d)))
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// Distinct compositions with their multiplicities, in composition order.
    pub fn entries(&self) -> impl Iterator<Item = (&Composition, usize)> + '_ {
        self.entries.iter().map(|(c, &m)| (c, m))
    }

    pub fn multiplicity(&self, comp: &Composition) -> usize {
        self.entries.get(comp).copied().unwrap_or(0)
    }

    /// Number of codewords `n`.
    pub fn len(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One composition per codeword, shortest first, ties broken by ascending
    /// count of the highest symbol downwards (for binary: fewer ones first).
    pub fn build_order(&self) -> Vec<Composition> {
        let mut slots: Vec<Composition> = self
            .entries
            .iter()
            .flat_map(|(c, &m)| core::iter::repeat_n(c.clone(), m))
            .collect();
        slots.sort_by(|a, b| {
            a.total_length()
                .cmp(&b.total_length())
                .then_with(|| a.counts.iter().rev().cmp(b.counts.iter().rev()))
        });
        slots
    }

    /// Codeword lengths, ascending.
    pub fn lengths(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self
            .entries
            .iter()
            .flat_map(|(c, &m)| core::iter::repeat_n(c.total_length(), m))
            .collect();
        lengths.sort_unstable();
        lengths
    }
}

/// A nonempty sequence of symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    symbols: Vec<Symbol>,
}

impl Codeword {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyCodeword);
        }
        Ok(Codeword { symbols })
    }

    /// Parses a word written as decimal digits, e.g. `"0110"`.
    pub fn from_digits(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|ch| {
                ch.to_digit(10)
                    .ok_or_else(|| Error::InvalidParameter(format!("'{ch}' is not a decimal digit")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Codeword) -> bool {
        other.symbols.starts_with(&self.symbols)
    }

    pub fn is_suffix_of(&self, other: &Codeword) -> bool {
        other.symbols.ends_with(&self.symbols)
    }

    pub fn reversed(&self) -> Codeword {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Codeword { symbols }
    }

    /// Composition over an alphabet of size `d`. Symbols `>= d` are dropped;
    /// use [`composition_of`] for a checked version.
    pub fn composition(&self, d: usize) -> Composition {
        let mut counts = alloc::vec![0; d];
        for &s in &self.symbols {
            if let Some(c) = counts.get_mut(s as usize) {
                *c += 1;
            }
        }
        Composition { counts }
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plain = self.symbols.iter().all(|&s| s < 10);
        for (i, &s) in self.symbols.iter().enumerate() {
            if plain {
                write!(f, "{s}")?;
            } else {
                if i > 0 {
                    f.write_str(".")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// An ordered list of codewords over an alphabet of size `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    alphabet_size: usize,
    words: Vec<Codeword>,
}

impl Code {
    pub fn new(alphabet_size: usize, words: Vec<Codeword>) -> Result<Self> {
        if alphabet_size < 2 {
            return Err(Error::AlphabetTooSmall(alphabet_size));
        }
        for w in &words {
            if let Some(&symbol) = w.symbols.iter().find(|&&s| s as usize >= alphabet_size) {
                return Err(Error::SymbolOutOfRange { symbol, alphabet_size });
            }
        }
        Ok(Code { alphabet_size, words })
    }

    /// Builds a code from digit strings such as `["00", "10", "11"]`.
    pub fn from_digit_strs(alphabet_size: usize, words: &[&str]) -> Result<Self> {
        let words = words.iter().map(|w| Codeword::from_digits(w)).collect::<Result<Vec<_>>>()?;
        Self::new(alphabet_size, words)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The code obtained by reversing every word.
    pub fn reversed(&self) -> Code {
        Code {
            alphabet_size: self.alphabet_size,
            words: self.words.iter().map(Codeword::reversed).collect(),
        }
    }
}

/// Positive per-symbol letter costs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostModel {
    costs: Vec<Rational>,
}

impl CostModel {
    pub fn new(costs: Vec<Rational>) -> Result<Self> {
        if costs.len() < 2 {
            return Err(Error::AlphabetTooSmall(costs.len()));
        }
        if costs.iter().any(|c| !c.is_positive()) {
            return Err(Error::InvalidParameter("letter costs must be positive".into()));
        }
        Ok(CostModel { costs })
    }

    /// Binary costs `(1, m)` with `m >= 1`.
    pub fn binary(m: Rational) -> Result<Self> {
        if m < Rational::one() {
            return Err(Error::InvalidParameter(format!("cost of a one must be at least 1, got {m}")));
        }
        Ok(CostModel { costs: alloc::vec![Rational::one(), m] })
    }

    pub fn costs(&self) -> &[Rational] {
        &self.costs
    }

    pub fn alphabet_size(&self) -> usize {
        self.costs.len()
    }
}

/// Probabilities of the codewords; nonnegative and summing to exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    probs: Vec<Rational>,
}

impl Distribution {
    pub fn new(probs: Vec<Rational>) -> Result<Self> {
        if probs.iter().any(|p| p.is_negative()) {
            return Err(Error::InvalidParameter("probabilities must be nonnegative".into()));
        }
        let total: Rational = probs.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidParameter(format!("probabilities sum to {total}, not 1")));
        }
        Ok(Distribution { probs })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("uniform distribution over zero words".into()));
        }
        let p = Rational::new(1.into(), n.into());
        Ok(Distribution { probs: alloc::vec![p; n] })
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }
}

pub fn composition_of(word: &Codeword, d: usize) -> Result<Composition> {
    if let Some(&symbol) = word.symbols.iter().find(|&&s| s as usize >= d) {
        return Err(Error::SymbolOutOfRange { symbol, alphabet_size: d });
    }
    Ok(word.composition(d))
}

/// Lexicographic sort puts any word directly before the words it prefixes,
/// so adjacent pairs are enough. Duplicates count as prefixes of each other.
fn no_word_prefixes_another<'a, I>(words: I) -> bool
where
    I: IntoIterator<Item = &'a [Symbol]>,
{
    let mut sorted: Vec<&[Symbol]> = words.into_iter().collect();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| !w[1].starts_with(w[0]))
}

pub fn is_prefix_free(code: &Code) -> bool {
    no_word_prefixes_another(code.words.iter().map(|w| w.symbols.as_slice()))
}

pub fn is_suffix_free(code: &Code) -> bool {
    let reversed = code.reversed();
    no_word_prefixes_another(reversed.words.iter().map(|w| w.symbols.as_slice()))
}

pub fn is_fix_free(code: &Code) -> bool {
    is_prefix_free(code) && is_suffix_free(code)
}

/// Sardinas–Patterson test.
///
/// Dangling suffixes are generated from a worklist until either one of them
/// is itself a codeword (ambiguous parse) or no new suffix appears. Every
/// dangling suffix is a suffix of some codeword, so the loop terminates.
pub fn is_uniquely_decodable(code: &Code) -> bool {
    let words: BTreeSet<&[Symbol]> = code.words.iter().map(|w| w.symbols.as_slice()).collect();
    if words.len() != code.words.len() {
        return false;
    }

    let mut seen: BTreeSet<Vec<Symbol>> = BTreeSet::new();
    let mut pending: Vec<Vec<Symbol>> = Vec::new();
    for &u in &words {
        for &v in &words {
            if v.len() > u.len() && v.starts_with(u) {
                let tail = v[u.len()..].to_vec();
                if seen.insert(tail.clone()) {
                    pending.push(tail);
                }
            }
        }
    }

    while let Some(dangling) = pending.pop() {
        if words.contains(dangling.as_slice()) {
            return false;
        }
        for &w in &words {
            let tail = if w.len() > dangling.len() && w.starts_with(&dangling) {
                &w[dangling.len()..]
            } else if dangling.len() > w.len() && dangling.starts_with(w) {
                &dangling[w.len()..]
            } else {
                continue;
            };
            if !seen.contains(tail) {
                seen.insert(tail.to_vec());
                pending.push(tail.to_vec());
            }
        }
    }
    true
}

pub fn codeword_cost(comp: &Composition, cm: &CostModel) -> Result<Rational> {
    if comp.alphabet_size() != cm.alphabet_size() {
        return Err(Error::DimensionMismatch {
            expected: cm.alphabet_size(),
            found: comp.alphabet_size(),
        });
    }
    Ok(comp
        .counts
        .iter()
        .zip(&cm.costs)
        .filter(|(&n, _)| n > 0)
        .map(|(&n, c)| c * Rational::from_integer(n.into()))
        .fold(Rational::zero(), |acc, x| acc + x))
}

/// Expected codeword cost `sum_k p_k * cost(s_k)`.
pub fn average_cost(code: &Code, dist: &Distribution, cm: &CostModel) -> Result<Rational> {
    if dist.probs.len() != code.words.len() {
        return Err(Error::DimensionMismatch {
            expected: code.words.len(),
            found: dist.probs.len(),
        });
    }
    if code.alphabet_size != cm.alphabet_size() {
        return Err(Error::DimensionMismatch {
            expected: code.alphabet_size,
            found: cm.alphabet_size(),
        });
    }
    let mut total = Rational::zero();
    for (word, p) in code.words.iter().zip(&dist.probs) {
        total += p * codeword_cost(&word.composition(code.alphabet_size), cm)?;
    }
    Ok(total)
}

/// True iff every pair of lengths is equal or differs by at least a factor two.
pub fn is_distinct_code(lengths: &[usize]) -> bool {
    let mut distinct: Vec<usize> = lengths.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    distinct.windows(2).all(|w| 2 * w[0] <= w[1])
}
