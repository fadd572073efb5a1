use std::collections::BTreeMap;

use mpl_core::{iword_to_li_signed, li_to_iword_signed, qi, Arg, IWord, LiSymbol, LinComb, Rational, Symbol};
use mpl_regularization::regularize_word_both_ends;
use num_traits::{One, Zero};

use crate::tensor::Monomial;

pub(crate) type Poly = BTreeMap<Monomial, Rational>;

/// A word `I(0; w; 1)` as a combination of admissible symbols, regularized at
/// both ends with `I(0; 0; 1) = I(0; 1; 1) = 0`.
pub fn word_to_li(w: &IWord) -> LinComb<LiSymbol> {
    let n = w.level();
    let mut out = LinComb::new(n);
    for (v, c) in regularize_word_both_ends(w).iter() {
        let (sign, s) = iword_to_li_signed(v).expect("convergent words start with a root");
        out.add_term(s, c * qi(sign));
    }
    out
}

/// Admissible form of a symbol: divergent ones go through their word.
pub fn normalize_li(s: &LiSymbol) -> LinComb<LiSymbol> {
    if s.is_admissible() || s.is_unit() {
        return LinComb::from_symbol(s.clone());
    }
    let (sign, w) = li_to_iword_signed(s);
    word_to_li(&w).scale(&qi(sign))
}

fn divide(level: u32, letters: &[Arg], c: u32) -> IWord {
    IWord::new(level, letters.iter().map(|a| a.scale(level, -(c as i64))).collect())
}

fn single(lc: &LinComb<LiSymbol>) -> Poly {
    lc.iter().map(|(s, c)| (if s.is_unit() { vec![] } else { vec![s.clone()] }, c.clone())).collect()
}

pub(crate) fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (x, c) in a {
        for (y, d) in b {
            let mut m: Monomial = x.iter().chain(y).cloned().collect();
            m.sort();
            let e = out.entry(m).or_insert_with(Rational::zero);
            *e += c * d;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

pub(crate) fn poly_one() -> Poly {
    Poly::from([(vec![], Rational::one())])
}

/// `I(a; v; c)` modulo torsion, as a polynomial in admissible symbols: equal
/// endpoints give 0, rescaling moves a root endpoint to 1, reversal moves a
/// zero to the lower end, and two root endpoints are split at 0.
pub(crate) fn gap(level: u32, a: Arg, v: &[Arg], c: Arg) -> Poly {
    if v.is_empty() {
        return poly_one();
    }
    if a == c {
        return Poly::new();
    }
    let sign = |j: usize| if j % 2 == 0 { Rational::one() } else { -Rational::one() };
    let rev = |s: &[Arg]| s.iter().rev().copied().collect::<Vec<_>>();
    match (a, c) {
        (Arg::Zero, Arg::Root(c)) => single(&word_to_li(&divide(level, v, c))),
        (Arg::Root(a), Arg::Zero) => single(&word_to_li(&divide(level, &rev(v), a)).scale(&sign(v.len()))),
        (Arg::Root(a), Arg::Root(c)) => {
            let mut out = Poly::new();
            for j in 0..=v.len() {
                let lower = single(&word_to_li(&divide(level, &rev(&v[..j]), a)).scale(&sign(j)));
                let upper = single(&word_to_li(&divide(level, &v[j..], c)));
                for (m, x) in poly_mul(&lower, &upper) {
                    let e = out.entry(m).or_insert_with(Rational::zero);
                    *e += x;
                }
            }
            out.retain(|_, x| !x.is_zero());
            out
        }
        (Arg::Zero, Arg::Zero) => unreachable!("equal endpoints handled above"),
    }
}
