//! Numerical evaluation of `Li_{n}(x)` at roots of unity.
//!
//! Values are computed in fixed-point complex arithmetic on `BigInt`s. A
//! convergent word `I(0; w; 1)` is split at an interior point `s` of the path,
//! `I(0; w; 1) = Σ_j I(0; w_1..w_j; s) I(s; w_{j+1}..; 1)`, and each piece is a
//! nested sum whose terms decay at least like `r^k` with `r < 1`.

mod cube;
mod fixed;
mod forms;
mod series;
mod verify;

use thiserror::Error;

pub use cube::{cube_integrand, eval_cube_integral, CubeValue};
pub use fixed::{BigComplex, Constants};
pub use forms::{form_sides, verify_form_identity, FormCheck, OneForm};
pub use series::{eval_li, eval_word, Evaluator};
pub use verify::{certify_comparison, eval_lincomb, verify_identity, Certified, Verdict};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumError {
    #[error("symbol {0} is not admissible (divergent at the upper end)")]
    NotAdmissible(String),
    #[error("word {0} diverges at an endpoint")]
    DivergentWord(String),
    #[error("cube quadrature supports weight at most 3, got {0}")]
    CubeWeight(usize),
    #[error("series needs more than {0} terms")]
    Budget(usize),
    #[error("error radius {0:e} exceeds the requested tolerance")]
    Tolerance(f64),
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
}
