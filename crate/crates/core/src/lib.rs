//! Exact construction and verification of prefix-free and fix-free codes.
//!
//! Codes here are described by their *compositions*: the vector counting how
//! often each alphabet symbol occurs in a codeword. Two codewords with the same
//! composition cost the same under any letter-cost model, so a multiset of
//! compositions fixes the cost profile of a code without fixing the code.
//!
//! The crate answers three kinds of questions about such multisets:
//!
//! - [`feasibility`]: does a D-ary prefix-free code with these compositions exist?
//! - [`prefix_builder`] and [`fixfree_builder`]: construct one (binary), choosing
//!   the lexicographically smallest admissible word at every step.
//! - [`approx`]: under binary letter costs `(1, m)`, find a fix-free code of `n`
//!   words whose total cost is within `5 + 1/(n-1) + ε` of optimal.
//!
//! All counts are arbitrary-precision integers and all costs are exact
//! rationals. The crate is `no_std` and only needs `alloc`.
//!
//! [`oracles`] holds brute-force reference implementations. They share no code
//! with the counting paths and exist to cross-check them at small scale.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod approx;
pub mod code_model;
pub mod counting;
mod error;
pub mod feasibility;
pub mod fixfree_builder;
pub mod oracles;
pub mod prefix_builder;

pub use approx::{approx_optimal, build_code_for_budget, total_cost, ApproxResult, BudgetFail, BudgetParams};
pub use code_model::{
    average_cost, codeword_cost, composition_of, is_distinct_code, is_fix_free, is_prefix_free,
    is_suffix_free, is_uniquely_decodable, Code, Codeword, Composition, CompositionMultiset,
    CostModel, Distribution, Symbol,
};
pub use counting::{
    binomial, merge_patterns, pattern_count, prefix_extension_count, sandwich_count,
    suffix_extension_count, word_count, Constraint, PartialWord,
};
pub use error::Error;
pub use feasibility::{check_prefix_feasibility, FeasibilityVerdict, Inequality};
pub use fixfree_builder::{available_count_fixfree, build_fix_free, build_fix_free_traced, FixFreeOutcome};
pub use prefix_builder::{available_count, build_prefix_free, build_prefix_free_traced, BuildOutcome, BuildStep};

/// Arbitrary-precision nonnegative integer used for every combinatorial count.
pub type BigCount = num_bigint::BigUint;

/// Exact rational used for letter costs, probabilities and budgets.
pub type Rational = num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;
