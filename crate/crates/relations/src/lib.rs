//! Relation families among cyclotomic multiple polylogarithms, exact sparse
//! rank over `Q`, and quotient dimensions.

mod cobracket;
mod coideal;
mod dims;
mod family;
mod matrix;
mod par;
mod rank;

use thiserror::Error;

pub use cobracket::{cobracket_check, CobracketCheck, Quotient};
pub use coideal::{coideal_check, CoidealCheck};
pub use dims::{basis, build_matrix, MAX_BASIS, dimension_formulas, quotient_dim, zagier_bound, DimsReport, Formulas, Query};
pub use family::{
    all_families, bernoulli_numbers, bernoulli_poly, comparison_rows, distribution_exact, distribution_graded, double_shuffle,
    double_shuffle_graded, generate, inversion, log_of, normalization, parse_families, two_pi_i_power, Family, FamilySet, Mode,
    Relation,
};
pub use matrix::RelationMatrix;
pub use rank::{rank, Echelon, SparseRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelError {
    #[error("unknown relation family `{0}`")]
    UnknownFamily(String),
    #[error("symbol {0} from `{1}` is outside the basis")]
    OutsideBasis(String, String),
    #[error("depth-graded query needs a depth")]
    MissingDepth,
    #[error("basis of {0} symbols exceeds the limit {1}")]
    TooLarge(usize, usize),
    #[error("level must be positive")]
    ZeroLevel,
}
