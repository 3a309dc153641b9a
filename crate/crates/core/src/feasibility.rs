//! Existence of a D-ary prefix-free code with a prescribed composition multiset.
//!
//! For every composition `δ` in the multiset, the words of composition `δ` must
//! be able to host every codeword of composition `δ` plus every extension of
//! shorter codewords into composition `δ`:
//!
//! ```text
//! word_count(δ) >= sum over ξ <= δ of Λ_ξ · word_count(δ - ξ)
//! ```
//!
//! where `Λ_ξ` is the multiplicity of `ξ` and the sum includes `ξ = δ`.
//! A prefix-free code exists iff this holds for every `δ`.

use alloc::vec::Vec;

use crate::code_model::{Composition, CompositionMultiset};
use crate::counting::word_count;
use crate::BigCount;

/// One side-by-side evaluation of the inequality for a single composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub composition: Composition,
    /// Words available with this composition.
    pub lhs: BigCount,
    /// Words of this composition claimed by codewords and their extensions.
    pub rhs: BigCount,
}

impl Inequality {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    /// One row per distinct composition, shortest first, ties lexicographic.
    pub rows: Vec<Inequality>,
}

impl FeasibilityVerdict {
    pub fn is_feasible(&self) -> bool {
        self.rows.iter().all(Inequality::holds)
    }

    /// The first violated row in row order, if any.
    pub fn witness(&self) -> Option<&Inequality> {
        self.rows.iter().find(|r| !r.holds())
    }
}

pub fn check_prefix_feasibility(ms: &CompositionMultiset) -> FeasibilityVerdict {
    let mut distinct: Vec<(&Composition, usize)> = ms.entries().collect();
    distinct.sort_by(|a, b| a.0.length_then_lex(b.0));

    let rows = distinct
        .iter()
        .map(|&(delta, _)| {
            let mut rhs = BigCount::default();
            for &(xi, mult) in &distinct {
                if let Some(rest) = delta.checked_sub(xi) {
                    rhs += word_count(&rest) * mult;
                }
            }
            Inequality { composition: delta.clone(), lhs: word_count(delta), rhs }
        })
        .collect();
    FeasibilityVerdict { rows }
}
