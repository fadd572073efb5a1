use num_traits::One;

use crate::error::CoreError;
use crate::rational::Rational;
use crate::symbol::{Arg, IWord, LiSymbol, Symbol};

/// `Li_n(x) = (-1)^m I_n(a)` with `a_i = (x_i ... x_m)^{-1}`; returns the sign and the word.
pub fn li_to_iword(s: &LiSymbol) -> Result<(Rational, IWord), CoreError> {
    let (sign, w) = li_to_iword_signed(s);
    Ok((Rational::from_integer(sign.into()), w))
}

/// Same as [`li_to_iword`] with an integer sign; arguments are residues, so never zero.
pub fn li_to_iword_signed(s: &LiSymbol) -> (i64, IWord) {
    let n = s.level() as i64;
    let m = s.depth();
    let mut letters = Vec::with_capacity(s.weight());
    let mut suffix = vec![0i64; m + 1];
    for i in (0..m).rev() {
        suffix[i] = suffix[i + 1] + s.args()[i] as i64;
    }
    for (i, &ni) in s.idx().iter().enumerate() {
        letters.push(Arg::Root((-suffix[i]).rem_euclid(n) as u32));
        letters.extend(std::iter::repeat(Arg::Zero).take(ni as usize - 1));
    }
    let sign = if m % 2 == 0 { 1 } else { -1 };
    (sign, IWord::new(s.level(), letters))
}

/// Inverse of [`li_to_iword`]; `x_m = a_m^{-1}`, `x_i = a_{i+1} / a_i`.
pub fn iword_to_li(w: &IWord) -> Result<(Rational, LiSymbol), CoreError> {
    let (sign, s) = iword_to_li_signed(w)?;
    Ok((if sign == 1 { Rational::one() } else { -Rational::one() }, s))
}

pub fn iword_to_li_signed(w: &IWord) -> Result<(i64, LiSymbol), CoreError> {
    let n = w.level() as i64;
    if w.is_empty() {
        return Ok((1, LiSymbol::unit(w.level())));
    }
    if w.letters()[0].is_zero() {
        return Err(CoreError::LeadingZero);
    }
    let mut roots = Vec::new();
    let mut idx: Vec<u32> = Vec::new();
    for a in w.letters() {
        match a {
            Arg::Root(k) => {
                roots.push(*k as i64);
                idx.push(1);
            }
            Arg::Zero => *idx.last_mut().expect("nonempty") += 1,
        }
    }
    let m = roots.len();
    let args: Vec<u32> = (0..m)
        .map(|i| {
            let e = if i + 1 < m { roots[i + 1] - roots[i] } else { -roots[i] };
            e.rem_euclid(n) as u32
        })
        .collect();
    let sign = if m % 2 == 0 { 1 } else { -1 };
    Ok((sign, LiSymbol::new(w.level(), idx, args)?))
}
