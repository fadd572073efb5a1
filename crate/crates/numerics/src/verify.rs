use mpl_core::{LiSymbol, LinComb, Symbol};
use mpl_regularization::{Comparison, Regularizer};

use crate::fixed::BigComplex;
use crate::series::Evaluator;
use crate::NumError;

/// Outcome of a numerical identity check.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub lhs: BigComplex,
    pub rhs: BigComplex,
    pub residual: f64,
    pub err: f64,
    pub holds: bool,
}

/// Numerical status of a formal comparison `L̂i(s) - 𝕃(Î(s))`.
#[derive(Clone, Debug)]
pub struct Certified {
    pub symbol: LiSymbol,
    pub exact_equal: bool,
    /// largest residual over the `L^k` coefficients of the difference
    pub max_residual: f64,
    pub numeric_equal: bool,
}

/// Value of a combination; divergent symbols contribute the constant term of
/// their stuffle regularization.
pub fn eval_lincomb(ev: &Evaluator, lc: &LinComb<LiSymbol>) -> Result<BigComplex, NumError> {
    let bits = ev.bits();
    let max_w = lc.symbols().map(|s| s.weight()).max().unwrap_or(0);
    let mut reg: Option<Regularizer> = None;
    let mut acc = BigComplex::zero(bits);
    for (s, c) in lc {
        let terms = if s.is_admissible() || s.is_unit() {
            LinComb::from_symbol(s.clone())
        } else {
            let r = reg.get_or_insert_with(|| Regularizer::new(lc.level(), max_w.max(1)));
            r.trailing_ones_reduce(s).expect("weight within the regularizer bound")
        };
        for (t, a) in &terms {
            let v = ev.eval_li(t)?;
            let k = c * a;
            acc = acc.add(&v.scale(k.numer(), k.denom()));
        }
    }
    Ok(acc)
}

pub(crate) fn threshold(digits: usize) -> f64 {
    10f64.powi(5 - digits as i32)
}

/// `lhs = rhs` numerically; holds iff the residual is below `10^{5 - digits}`.
pub fn verify_identity(ev: &Evaluator, lhs: &LinComb<LiSymbol>, rhs: &LinComb<LiSymbol>) -> Result<Verdict, NumError> {
    if lhs.level() != rhs.level() && !lhs.is_zero() && !rhs.is_zero() {
        return Err(NumError::LevelMismatch(lhs.level(), rhs.level()));
    }
    let a = eval_lincomb(ev, lhs)?;
    let b = eval_lincomb(ev, rhs)?;
    let d = a.sub(&b);
    let residual = d.abs_f64();
    let err = d.err;
    if err > threshold(ev.digits()) {
        return Err(NumError::Tolerance(err));
    }
    Ok(Verdict { holds: residual < threshold(ev.digits()), lhs: a, rhs: b, residual, err })
}

/// Evaluates every coefficient of the comparison difference.
pub fn certify_comparison(ev: &Evaluator, cmp: &Comparison) -> Result<Certified, NumError> {
    let mut max_residual: f64 = 0.0;
    for c in cmp.difference.coeffs() {
        let v = eval_lincomb(ev, c)?;
        max_residual = max_residual.max(v.abs_f64());
    }
    Ok(Certified {
        symbol: cmp.symbol.clone(),
        exact_equal: cmp.exact_equal,
        numeric_equal: max_residual < threshold(ev.digits()),
        max_residual,
    })
}
