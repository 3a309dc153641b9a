//! Binary fix-free codes with a prescribed composition multiset, for multisets
//! whose lengths pairwise are equal or differ by at least a factor of two.
//!
//! A candidate word is blocked if an earlier codeword is its prefix or its
//! suffix. Earlier codewords form a fix-free family, so no candidate has two
//! of them as prefixes or two as suffixes; inclusion-exclusion therefore stops
//! at prefix/suffix pairs:
//!
//! ```text
//! available = W - sum_j P_j - sum_j S_j + sum_{j,k} PS_{j,k}
//! ```
//!
//! The pair sum includes `j = k`. A chosen word of the target's full length
//! and composition is its own prefix and suffix, so it contributes 1 there;
//! a pair involving a full-length word with `j != k` contributes 0. When both
//! words are strictly shorter, the length condition keeps them from
//! overlapping and the count follows from compositions alone.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::code_model::{is_distinct_code, Code, Codeword, Composition, CompositionMultiset};
use crate::counting::{pattern_count, prefix_extension_count, sandwich_count, suffix_extension_count, word_count, Constraint, PartialWord};
use crate::prefix_builder::{smallest_binary_word, BuildStep};
use crate::{BigCount, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixFreeOutcome {
    Success(Code),
    /// No admissible word at `step` (1-based, in build order).
    Infeasible { step: usize, composition: Composition },
    /// The lengths are not pairwise equal-or-doubling; construction not attempted.
    NotApplicable { lengths: Vec<usize> },
}

impl FixFreeOutcome {
    pub fn code(&self) -> Option<&Code> {
        match self {
            FixFreeOutcome::Success(c) => Some(c),
            _ => None,
        }
    }
}

fn clamp(v: BigInt) -> BigCount {
    if v.is_negative() {
        BigCount::zero()
    } else {
        v.magnitude().clone()
    }
}

/// Words of composition `target` having no chosen codeword as a prefix or a
/// suffix, from compositions alone.
pub fn available_count_fixfree(target: &Composition, chosen: &[Composition]) -> Result<BigCount> {
    let len = target.total_length();
    let mut lengths: Vec<usize> = chosen.iter().map(Composition::total_length).collect();
    if let Some(&longest) = lengths.iter().max() {
        if longest > len {
            return Err(Error::InvalidParameter(format!(
                "chosen word of length {longest} is longer than the target length {len}"
            )));
        }
    }
    lengths.push(len);
    if !is_distinct_code(&lengths) {
        return Err(Error::InvalidParameter(format!(
            "lengths {lengths:?} are not pairwise equal or at least doubling"
        )));
    }

    let mut count = BigInt::from(word_count(target));
    for c in chosen {
        count -= BigInt::from(prefix_extension_count(c, target));
        count -= BigInt::from(suffix_extension_count(c, target));
    }
    for (j, cj) in chosen.iter().enumerate() {
        for (k, ck) in chosen.iter().enumerate() {
            let full_j = cj.total_length() == len;
            let full_k = ck.total_length() == len;
            if full_j || full_k {
                if j == k && cj == target {
                    count += 1;
                }
            } else {
                count += BigInt::from(sandwich_count(cj, ck, target)?);
            }
        }
    }
    Ok(clamp(count))
}

/// Words of composition `comp` matching `pattern` that have none of `chosen`
/// as a prefix or a suffix. Exact for any fix-free `chosen`; the positions are
/// tracked explicitly so overlapping prefix/suffix pairs are handled.
pub fn constrained_count_fixfree(
    pattern: &PartialWord,
    comp: &Composition,
    chosen: &[Codeword],
) -> Result<BigCount> {
    let len = pattern.len();
    let base = Constraint::Partial(pattern.clone());
    let fitting: Vec<&Codeword> = chosen.iter().filter(|w| w.len() <= len).collect();
    let as_prefix = fitting
        .iter()
        .map(|w| PartialWord::with_prefix(len, w.symbols()))
        .collect::<Result<Vec<_>>>()?;
    let as_suffix = fitting
        .iter()
        .map(|w| PartialWord::with_suffix(len, w.symbols()))
        .collect::<Result<Vec<_>>>()?;

    let mut count = BigInt::from(pattern_count(&base, comp)?);
    let mut with_prefix = Vec::with_capacity(as_prefix.len());
    for p in &as_prefix {
        let merged = base.clone().and(p)?;
        count -= BigInt::from(pattern_count(&merged, comp)?);
        with_prefix.push(merged);
    }
    for s in &as_suffix {
        count -= BigInt::from(pattern_count(&base.clone().and(s)?, comp)?);
    }
    for p in &with_prefix {
        if *p == Constraint::Conflict {
            continue;
        }
        for s in &as_suffix {
            count += BigInt::from(pattern_count(&p.clone().and(s)?, comp)?);
        }
    }
    Ok(clamp(count))
}

pub fn build_fix_free(ms: &CompositionMultiset) -> Result<FixFreeOutcome> {
    build_fix_free_traced(ms).map(|(outcome, _)| outcome)
}

/// [`build_fix_free`] together with the per-step counts and choices.
/// The trace is empty for `NotApplicable`.
pub fn build_fix_free_traced(ms: &CompositionMultiset) -> Result<(FixFreeOutcome, Vec<BuildStep>)> {
    if ms.alphabet_size() != 2 {
        return Err(Error::NotBinary(ms.alphabet_size()));
    }
    let lengths = ms.lengths();
    if !is_distinct_code(&lengths) {
        return Ok((FixFreeOutcome::NotApplicable { lengths }, Vec::new()));
    }
    let order = ms.build_order();
    let mut words: Vec<Codeword> = Vec::with_capacity(order.len());
    let mut steps = Vec::with_capacity(order.len());
    for (i, comp) in order.iter().enumerate() {
        let available = available_count_fixfree(comp, &order[..i])?;
        if available.is_zero() {
            steps.push(BuildStep { composition: comp.clone(), available, word: None });
            return Ok((FixFreeOutcome::Infeasible { step: i + 1, composition: comp.clone() }, steps));
        }
        let word = smallest_binary_word(comp, |p| constrained_count_fixfree(p, comp, &words))?;
        steps.push(BuildStep { composition: comp.clone(), available, word: Some(word.clone()) });
        words.push(word);
    }
    Ok((FixFreeOutcome::Success(Code::new(2, words)?), steps))
}
