mod cobracket;
mod coproduct;
mod inversion;
mod normal;
mod series;
mod tensor;
mod weight1;

pub use cobracket::{dihedral_cobracket, swap_legs};
pub use coproduct::{coassociator, coproduct_i, coproduct_li, degenerate_i_rules, reduced_coproduct};
pub use inversion::inversion_expand;
pub use normal::{normalize_li, word_to_li};
pub use series::coproduct_li_series;
pub use tensor::{Monomial, TensorComb};
pub use weight1::{Weight1Element, Weight1Gen};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HopfError {
    #[error("endpoints of {0} cannot be normalized to (0, 1)")]
    Endpoints(String),
    #[error("weight {0} exceeds the cutoff {1}")]
    Cutoff(usize, usize),
    #[error("word of length {0} is too long for subset enumeration")]
    TooLong(usize),
    #[error("{0} has depth below 2, its cobracket vanishes")]
    DepthOne(String),
}
