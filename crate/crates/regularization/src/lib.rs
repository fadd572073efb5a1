//! Regularized values of divergent symbols as polynomials in `L = log ε`.
//!
//! Conventions: `L̂i_1(1) = -L` on the stuffle side, the one-letter word `[1]`
//! maps to `L` on the shuffle side, and the comparison map sends
//! `Σ L^n u^n/n!` to `exp(L u - Σ_{n≥2} ζ(n) u^n / n)`.

mod compare;
mod regpoly;
mod regularizer;
mod words;

use thiserror::Error;

pub use compare::{compare, Comparison};
pub use regpoly::RegPoly;
pub use regularizer::{comparison_map, comparison_map_inverse, shuffle_regularize, stuffle_regularize, trailing_ones_reduce, Regularizer};
pub use words::{regularize_word, regularize_word_both_ends, regularize_word_lower};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegError {
    #[error("weight {0} exceeds the configured maximum {1}")]
    WeightLimit(usize, usize),
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
}
