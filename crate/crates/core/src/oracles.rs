//! Brute-force reference implementations.
//!
//! These enumerate words directly and test affixes naively. They never call
//! into [`crate::counting`] or the builders, so they can arbitrate the exact
//! counting formulas at small scale. Every entry point checks an
//! [`OracleBudget`] before starting.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::code_model::{Codeword, Composition, CompositionMultiset, Symbol};
use crate::{BigCount, Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    PrefixFree,
    FixFree,
}

/// Hard caps on the inputs an oracle will accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_word_len: usize,
    pub max_alphabet: usize,
    pub max_words: usize,
    /// Upper bound on `D^L` for the longest word enumerated.
    pub max_space: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_word_len: 16, max_alphabet: 10, max_words: 8, max_space: 1 << 20 }
    }
}

impl OracleBudget {
    fn admit_word(&self, d: usize, len: usize) -> Result<()> {
        if d > self.max_alphabet {
            return Err(Error::BudgetExceeded(format!("alphabet {d} > {}", self.max_alphabet)));
        }
        if len > self.max_word_len {
            return Err(Error::BudgetExceeded(format!("word length {len} > {}", self.max_word_len)));
        }
        let space = (d as u64).checked_pow(len as u32);
        if space.is_none_or(|s| s > self.max_space) {
            return Err(Error::BudgetExceeded(format!("{d}^{len} words exceeds {}", self.max_space)));
        }
        Ok(())
    }

    fn admit_count(&self, n: usize) -> Result<()> {
        if n > self.max_words {
            return Err(Error::BudgetExceeded(format!("{n} codewords > {}", self.max_words)));
        }
        Ok(())
    }
}

fn is_affix(short: &[Symbol], long: &[Symbol], mode: Mode) -> bool {
    let n = short.len();
    if n > long.len() {
        return false;
    }
    let prefix = long[..n] == *short;
    match mode {
        Mode::PrefixFree => prefix,
        Mode::FixFree => prefix || long[long.len() - n..] == *short,
    }
}

/// True iff `a` and `b` may both belong to a code of the given class.
fn compatible(a: &[Symbol], b: &[Symbol], mode: Mode) -> bool {
    !is_affix(a, b, mode) && !is_affix(b, a, mode)
}

/// All words with exactly this composition, in lexicographic order.
pub fn enumerate_words(comp: &Composition, budget: &OracleBudget) -> Result<Vec<Codeword>> {
    let len = comp.total_length();
    if len == 0 {
        return Err(Error::EmptyComposition);
    }
    budget.admit_word(comp.alphabet_size(), len)?;

    fn extend(left: &mut [usize], word: &mut Vec<Symbol>, len: usize, out: &mut Vec<Codeword>) {
        if word.len() == len {
            out.push(Codeword::new(word.clone()).expect("nonempty"));
            return;
        }
        for s in 0..left.len() {
            if left[s] > 0 {
                left[s] -= 1;
                word.push(s as Symbol);
                extend(left, word, len, out);
                word.pop();
                left[s] += 1;
            }
        }
    }

    let mut left = comp.counts().to_vec();
    let mut out = Vec::new();
    extend(&mut left, &mut Vec::with_capacity(len), len, &mut out);
    Ok(out)
}

/// Whether some code of the given class realizes the multiset, by
/// backtracking over one word per codeword slot.
pub fn exists_code(ms: &CompositionMultiset, mode: Mode, budget: &OracleBudget) -> Result<bool> {
    budget.admit_count(ms.len())?;
    // slots grouped by composition; within a group, word indices increase
    let mut slots: Vec<(usize, Vec<Codeword>)> = Vec::new();
    for (group, (comp, mult)) in ms.entries().enumerate() {
        let words = enumerate_words(comp, budget)?;
        for _ in 0..mult {
            slots.push((group, words.clone()));
        }
    }

    // picked[i] is the word index chosen for slot i
    fn search(slots: &[(usize, Vec<Codeword>)], picked: &mut Vec<usize>, mode: Mode) -> bool {
        let i = picked.len();
        let Some((group, words)) = slots.get(i) else {
            return true;
        };
        let start = match i.checked_sub(1) {
            Some(prev) if slots[prev].0 == *group => picked[prev] + 1,
            _ => 0,
        };
        for (idx, word) in words.iter().enumerate().skip(start) {
            let w = word.symbols();
            let ok = picked
                .iter()
                .enumerate()
                .all(|(slot, &j)| compatible(slots[slot].1[j].symbols(), w, mode));
            if ok {
                picked.push(idx);
                if search(slots, picked, mode) {
                    return true;
                }
                picked.pop();
            }
        }
        false
    }

    Ok(search(&slots, &mut Vec::new(), mode))
}

/// Words of composition `target` having no chosen word as a prefix
/// (prefix mode) or as a prefix or suffix (fix-free mode).
pub fn count_candidates(
    target: &Composition,
    chosen: &[Codeword],
    mode: Mode,
    budget: &OracleBudget,
) -> Result<BigCount> {
    let n = enumerate_words(target, budget)?
        .iter()
        .filter(|w| chosen.iter().all(|c| !is_affix(c.symbols(), w.symbols(), mode)))
        .count();
    Ok(BigCount::from(n))
}

/// Minimum total cost of a binary fix-free code with `n` distinct words of
/// length at most `max_len`, where a zero costs 1 and a one costs `m`.
/// `None` when no such code exists.
pub fn min_cost_fix_free(
    n: usize,
    m: &Rational,
    max_len: usize,
    budget: &OracleBudget,
) -> Result<Option<Rational>> {
    budget.admit_count(n)?;
    budget.admit_word(2, max_len)?;

    let mut pool: Vec<(Rational, Vec<Symbol>)> = Vec::new();
    for len in 1..=max_len {
        for bits in 0u64..(1 << len) {
            let word: Vec<Symbol> = (0..len).rev().map(|i| ((bits >> i) & 1) as Symbol).collect();
            let ones = word.iter().filter(|&&s| s == 1).count();
            let cost = Rational::from_integer(BigInt::from(len - ones))
                + m * Rational::from_integer(BigInt::from(ones));
            pool.push((cost, word));
        }
    }
    pool.sort();

    struct Search<'a> {
        pool: &'a [(Rational, Vec<Symbol>)],
        n: usize,
        best: Option<Rational>,
    }

    impl Search<'_> {
        fn run(&mut self, start: usize, picked: &mut Vec<usize>, cost: &Rational) {
            if picked.len() == self.n {
                if self.best.as_ref().is_none_or(|b| cost < b) {
                    self.best = Some(cost.clone());
                }
                return;
            }
            let missing = Rational::from_integer(BigInt::from(self.n - picked.len()));
            for idx in start..self.pool.len() {
                let (c, w) = &self.pool[idx];
                // pool is cost-sorted: every later pick costs at least c
                if let Some(best) = &self.best {
                    if &(cost + c * &missing) >= best {
                        return;
                    }
                }
                if picked.iter().all(|&p| compatible(&self.pool[p].1, w, Mode::FixFree)) {
                    picked.push(idx);
                    self.run(idx + 1, picked, &(cost + c));
                    picked.pop();
                }
            }
        }
    }

    let mut search = Search { pool: &pool, n, best: None };
    search.run(0, &mut Vec::new(), &Rational::default());
    Ok(search.best)
}
