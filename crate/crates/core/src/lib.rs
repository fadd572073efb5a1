//! Symbols for multiple polylogarithms `Li_{n1..nm}(x1..xm)` with arguments in
//! the group of `N`-th roots of unity, their iterated-integral words, and exact
//! `Q`-linear combinations of them.

mod dictionary;
mod enumerate;
mod error;
mod lincomb;
mod parse;
mod rational;
mod symbol;

pub use dictionary::{iword_to_li, li_to_iword, li_to_iword_signed, iword_to_li_signed};
pub use enumerate::{compositions, li_symbols, words};
pub use error::CoreError;
pub use lincomb::LinComb;
pub use parse::{parse_general_i, parse_li, parse_symbol, ParseError, ParsedSymbol};
pub use rational::{format_rational, parse_rational, q, qi, Rational};
pub use symbol::{grade, Arg, GeneralI, IWord, LiSymbol, Mu, Symbol};
