use mpl_core::{parse_rational, parse_symbol, qi, LiSymbol, LinComb, ParsedSymbol, Rational, Symbol};
use mpl_hopf::word_to_li;

use crate::CliError;

/// Splits at `+`/`-` outside parentheses, keeping the sign with the term.
fn terms(src: &str) -> Vec<(usize, String)> {
    let mut out = vec![];
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in src.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > start && !src[start..i].trim().is_empty() && !src[..i].trim_end().ends_with(['*', '/']) => {
                out.push((start, src[start..i].to_string()));
                start = i;
            }
            _ => {}
        }
    }
    out.push((start, src[start..].to_string()));
    out
}

/// A symbol as a combination of `Li` symbols; `I(0; ...; 1)` words are converted
/// by the dictionary and regularized when divergent.
pub fn symbol_lincomb(src: &str, level: Option<u32>) -> Result<LinComb<LiSymbol>, CliError> {
    match parse_symbol(src)? {
        ParsedSymbol::Li(s) => {
            check_level(s.level(), level)?;
            Ok(LinComb::from_symbol(s))
        }
        ParsedSymbol::I(g) => {
            let w = g.as_word().ok_or_else(|| CliError::Usage(format!("{g} does not run from 0 to 1")))?;
            let lc = word_to_li(&w);
            check_level(w.level(), level)?;
            Ok(lc)
        }
    }
}

fn check_level(found: u32, want: Option<u32>) -> Result<(), CliError> {
    match want {
        Some(n) if n != found => Err(CliError::Usage(format!("level {found} does not match {n}"))),
        _ => Ok(()),
    }
}

/// Parses `c_1*S_1 + c_2*S_2 - ...`; a bare rational is a multiple of the unit.
pub fn parse_lincomb(src: &str) -> Result<LinComb<LiSymbol>, CliError> {
    let mut level = None;
    let mut parts: Vec<(Rational, Option<LinComb<LiSymbol>>)> = vec![];
    for (pos, t) in terms(src) {
        let t = t.trim();
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (qi(-1), b.trim()),
            None => (qi(1), t.strip_prefix('+').unwrap_or(t).trim()),
        };
        let bad = |msg: &str| CliError::Usage(format!("term at position {pos} (`{t}`): {msg}"));
        if body.is_empty() {
            return Err(bad("empty term"));
        }
        if let Some(c) = parse_rational(body) {
            parts.push((sign * c, None));
            continue;
        }
        let (coeff, sym) = match body.split_once('*') {
            Some((c, s)) if !c.contains('(') => (parse_rational(c.trim()).ok_or_else(|| bad("bad coefficient"))?, s.trim()),
            _ => (qi(1), body),
        };
        let lc = symbol_lincomb(sym, level)?;
        if level.is_none() {
            level = Some(lc.level());
        }
        parts.push((sign * coeff, Some(lc)));
    }
    let n = level.unwrap_or(1);
    let mut out = LinComb::new(n);
    for (c, lc) in parts {
        match lc {
            Some(lc) => out.add_scaled(&lc, &c),
            None => out.add_term(LiSymbol::unit(n), c),
        }
    }
    Ok(out)
}
