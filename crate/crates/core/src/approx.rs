//! Near-optimal fix-free codes under binary letter costs `(1, m)`.
//!
//! For a total-cost budget `x` over `n` words, every word of length
//! `floor(2x/n) + 1` with at most `floor(2x/(n m)) + 1` ones is a candidate.
//! Equal-length distinct words are automatically fix-free, so any `n` of them
//! form a code. If a fix-free code of total cost at most `x` exists, at least
//! `n` candidates exist and the picked code costs at most `(5 + 1/(n-1)) x`.
//! Success is monotone in `x`, which [`approx_optimal`] exploits with a
//! bisection on the budget.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::code_model::{Code, Codeword};
use crate::counting::binomial;
use crate::{BigCount, Error, Rational, Result};

fn rational(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn floor_to_usize(q: &Rational, what: &str) -> Result<usize> {
    q.floor()
        .to_integer()
        .to_usize()
        .ok_or_else(|| Error::InvalidParameter(format!("{what} = {q} does not fit a word length")))
}

/// `(n, m, x)`: codeword count, cost of a one, total-cost budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BudgetParams {
    n: usize,
    m: Rational,
    x: Rational,
    word_len: usize,
    ones_cap: usize,
}

impl BudgetParams {
    pub fn new(n: usize, m: Rational, x: Rational) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("need at least 2 codewords, got {n}")));
        }
        if m < Rational::one() {
            return Err(Error::InvalidParameter(format!("cost of a one must be at least 1, got {m}")));
        }
        if x < Rational::zero() {
            return Err(Error::InvalidParameter(format!("budget must be nonnegative, got {x}")));
        }
        let two_y = &x * Rational::from_integer(2.into()) / rational(n);
        let l = floor_to_usize(&two_y, "floor(2x/n)")?;
        let k = floor_to_usize(&(&two_y / &m), "floor(2x/(nm))")?;
        let word_len = l + 1;
        let ones_cap = (k + 1).min(word_len);
        Ok(BudgetParams { n, m, x, word_len, ones_cap })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> &Rational {
        &self.m
    }

    pub fn budget(&self) -> &Rational {
        &self.x
    }

    /// Mean cost per codeword, `x / n`.
    pub fn mean_cost(&self) -> Rational {
        &self.x / rational(self.n)
    }

    /// `floor(2x/n)`.
    pub fn length_bound(&self) -> usize {
        self.word_len - 1
    }

    /// `floor(2x/(n m))`.
    pub fn ones_bound(&self) -> usize {
        let two_y = &self.x * Rational::from_integer(2.into()) / rational(self.n);
        (two_y / &self.m).floor().to_integer().to_usize().expect("checked in new")
    }

    /// Common length of the emitted words.
    pub fn word_len(&self) -> usize {
        self.word_len
    }

    /// Maximum number of ones in an emitted word, clamped to the word length.
    pub fn ones_cap(&self) -> usize {
        self.ones_cap
    }

    /// Number of words of length [`word_len`](Self::word_len) with at most
    /// [`ones_cap`](Self::ones_cap) ones.
    pub fn pool_size(&self) -> BigCount {
        (0..=self.ones_cap)
            .map(|t| binomial(self.word_len as u64, t as i64))
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("only {pool} candidate words of length {word_len}, need {needed}")]
pub struct BudgetFail {
    pub pool: BigCount,
    pub word_len: usize,
    pub needed: usize,
}

/// Sum over words of `zeros + m * ones`.
pub fn total_cost(code: &Code, m: &Rational) -> Result<Rational> {
    if code.alphabet_size() != 2 {
        return Err(Error::NotBinary(code.alphabet_size()));
    }
    let (mut zeros, mut ones) = (0usize, 0usize);
    for w in code.words() {
        let c = w.composition(2);
        zeros += c.counts()[0];
        ones += c.counts()[1];
    }
    Ok(rational(zeros) + m * rational(ones))
}

/// Rearranges `bits` into the next larger arrangement in lexicographic order.
/// Returns false once the last arrangement has been reached.
fn next_arrangement(bits: &mut [u32]) -> bool {
    let Some(i) = bits.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = bits.iter().rposition(|&b| b > bits[i]).expect("bits[i + 1] > bits[i]");
    bits.swap(i, j);
    bits[i + 1..].reverse();
    true
}

/// `n` words of the common length, fewest ones first and lexicographic within
/// each ones-count, or [`BudgetFail`] when the candidate pool is too small.
pub fn build_code_for_budget(p: &BudgetParams) -> core::result::Result<Code, BudgetFail> {
    let pool = p.pool_size();
    if pool < BigCount::from(p.n) {
        return Err(BudgetFail { pool, word_len: p.word_len, needed: p.n });
    }
    let len = p.word_len;
    let mut words = Vec::with_capacity(p.n);
    'outer: for ones in 0..=p.ones_cap {
        let mut bits = alloc::vec![0u32; len];
        bits[len - ones..].fill(1);
        loop {
            words.push(Codeword::new(bits.clone()).expect("length is at least 1"));
            if words.len() == p.n {
                break 'outer;
            }
            if !next_arrangement(&mut bits) {
                break;
            }
        }
    }
    Ok(Code::new(2, words).expect("binary symbols"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxResult {
    pub code: Code,
    pub achieved_cost: Rational,
    /// Budget the returned code was built for.
    pub budget_used: Rational,
    /// `5 + 1/(n-1) + ε`.
    pub ratio_bound: Rational,
    /// Number of budget builds performed, the initial one included.
    pub probes: usize,
}

/// Bisection on the budget over `[0, n(n-1+m)]` down to width `epsilon`,
/// returning the code built at the smallest budget known to succeed.
pub fn approx_optimal(n: usize, m: &Rational, epsilon: &Rational) -> Result<ApproxResult> {
    if *epsilon <= Rational::zero() {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {epsilon}")));
    }
    // one-hot code: n words with a single one each
    let mut hi = rational(n) * (rational(n) - Rational::one() + m);
    let mut lo = Rational::zero();
    let params = BudgetParams::new(n, m.clone(), hi.clone())?;
    let mut code = build_code_for_budget(&params)
        .map_err(|e| Error::InvalidParameter(format!("upper budget failed: {e}")))?;
    let mut probes = 1;
    let half = Rational::new(1.into(), 2.into());

    while &hi - &lo > *epsilon {
        let mid = (&lo + &hi) * &half;
        probes += 1;
        match build_code_for_budget(&BudgetParams::new(n, m.clone(), mid.clone())?) {
            Ok(c) => {
                code = c;
                hi = mid;
            }
            Err(_) => lo = mid,
        }
    }

    let achieved_cost = total_cost(&code, m)?;
    let ratio_bound = Rational::from_integer(5.into())
        + Rational::new(1.into(), BigInt::from(n - 1))
        + epsilon;
    Ok(ApproxResult { code, achieved_cost, budget_used: hi, ratio_bound, probes })
}
