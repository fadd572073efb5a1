use mpl_core::LiSymbol;

use crate::regpoly::RegPoly;
use crate::regularizer::Regularizer;
use crate::RegError;

/// Both sides of `L̂i(s) = 𝕃(Î(s))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub symbol: LiSymbol,
    pub lhs: RegPoly,
    pub rhs: RegPoly,
    /// `lhs - rhs`; every coefficient is a combination of admissible symbols.
    pub difference: RegPoly,
    /// The two sides agree as formal combinations of symbols.
    pub exact_equal: bool,
}

pub fn compare(reg: &Regularizer, s: &LiSymbol) -> Result<Comparison, RegError> {
    let lhs = reg.stuffle(s)?;
    let rhs = reg.comparison_map(&reg.shuffle(s)?);
    let difference = lhs.sub(&rhs);
    Ok(Comparison { symbol: s.clone(), exact_equal: difference.is_zero(), lhs, rhs, difference })
}
