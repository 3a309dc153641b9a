//! Binary prefix-free codes with a prescribed composition multiset.
//!
//! Compositions are processed shortest first. At each step the number of
//! words of the current composition that have no earlier codeword as a prefix
//! depends only on the earlier *compositions*, because the extension sets of a
//! prefix-free family are disjoint. A zero count means no prefix-free code
//! exists; otherwise the smallest admissible word is found bit by bit.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::code_model::{Code, Codeword, Composition, CompositionMultiset, Symbol};
use crate::counting::{pattern_count, prefix_extension_count, word_count, Constraint, PartialWord};
use crate::{BigCount, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildOutcome {
    Success(Code),
    /// No admissible word at `step` (1-based, in build order).
    Infeasible { step: usize, composition: Composition },
}

impl BuildOutcome {
    pub fn code(&self) -> Option<&Code> {
        match self {
            BuildOutcome::Success(c) => Some(c),
            BuildOutcome::Infeasible { .. } => None,
        }
    }
}

/// Words of composition `target` that extend none of the chosen codewords.
///
/// Chosen compositions that could not come from a prefix-free code may
/// over-subtract; the count is then clamped at zero.
pub fn available_count(target: &Composition, chosen: &[Composition]) -> BigCount {
    let total = word_count(target);
    let blocked: BigCount = chosen.iter().map(|c| prefix_extension_count(c, target)).sum();
    if blocked >= total {
        BigCount::zero()
    } else {
        total - blocked
    }
}

/// Words of composition `comp` matching `pattern` that have none of `chosen`
/// as a prefix.
pub fn constrained_count_prefix(
    pattern: &PartialWord,
    comp: &Composition,
    chosen: &[Codeword],
) -> Result<BigCount> {
    let len = pattern.len();
    let base = Constraint::Partial(pattern.clone());
    let total = pattern_count(&base, comp)?;
    let mut blocked = BigCount::zero();
    for w in chosen.iter().filter(|w| w.len() <= len) {
        let merged = base.clone().and(&PartialWord::with_prefix(len, w.symbols())?)?;
        blocked += pattern_count(&merged, comp)?;
    }
    Ok(if blocked >= total { BigCount::zero() } else { total - blocked })
}

/// Fixes positions left to right, keeping `0` whenever some admissible
/// completion remains. `count` must return the number of admissible words
/// matching a given pattern; it must be positive on the free pattern.
pub(crate) fn smallest_binary_word<F>(comp: &Composition, mut count: F) -> Result<Codeword>
where
    F: FnMut(&PartialWord) -> Result<BigCount>,
{
    let len = comp.total_length();
    let mut pattern = PartialWord::free(len);
    for pos in 0..len {
        let with_zero = match pattern.clone().fix(pos, 0) {
            Constraint::Partial(p) => p,
            Constraint::Conflict => unreachable!("position {pos} is still free"),
        };
        let bit: Symbol = if count(&with_zero)?.is_zero() { 1 } else { 0 };
        pattern = match pattern.fix(pos, bit) {
            Constraint::Partial(p) => p,
            Constraint::Conflict => unreachable!("position {pos} is still free"),
        };
    }
    let symbols = pattern.slots().iter().map(|s| s.expect("all positions fixed")).collect();
    Codeword::new(symbols)
}

/// One step of a construction, in build order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildStep {
    pub composition: Composition,
    /// Admissible words counted before choosing.
    pub available: BigCount,
    /// `None` on the step where construction stopped.
    pub word: Option<Codeword>,
}

pub fn build_prefix_free(ms: &CompositionMultiset) -> Result<BuildOutcome> {
    build_prefix_free_traced(ms).map(|(outcome, _)| outcome)
}

/// [`build_prefix_free`] together with the per-step counts and choices.
pub fn build_prefix_free_traced(ms: &CompositionMultiset) -> Result<(BuildOutcome, Vec<BuildStep>)> {
    if ms.alphabet_size() != 2 {
        return Err(Error::NotBinary(ms.alphabet_size()));
    }
    let order = ms.build_order();
    let mut words: Vec<Codeword> = Vec::with_capacity(order.len());
    let mut steps = Vec::with_capacity(order.len());
    for (i, comp) in order.iter().enumerate() {
        let available = available_count(comp, &order[..i]);
        if available.is_zero() {
            steps.push(BuildStep { composition: comp.clone(), available, word: None });
            return Ok((BuildOutcome::Infeasible { step: i + 1, composition: comp.clone() }, steps));
        }
        let word = smallest_binary_word(comp, |p| constrained_count_prefix(p, comp, &words))?;
        steps.push(BuildStep { composition: comp.clone(), available, word: Some(word.clone()) });
        words.push(word);
    }
    Ok((BuildOutcome::Success(Code::new(2, words)?), steps))
}
