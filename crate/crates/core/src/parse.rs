use thiserror::Error;

use crate::symbol::{Arg, GeneralI, LiSymbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos} near `{token}`: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub token: String,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedSymbol {
    Li(LiSymbol),
    I(GeneralI),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let token: String = self.src[self.pos..].chars().take(8).collect();
        Err(ParseError { pos: self.pos, token, msg: msg.into() })
    }

    fn err_at<T>(&self, pos: usize, token: &str, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos, token: token.to_string(), msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    /// A signed integer token or `Z`; returns the token text and its start.
    fn token(&mut self) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = if rest.starts_with('Z') {
            1
        } else {
            let sign = usize::from(rest.starts_with('-'));
            let digits = rest[sign..].chars().take_while(|c| c.is_ascii_digit()).count();
            if digits == 0 {
                return self.err("expected an integer or `Z`");
            }
            sign + digits
        };
        self.pos += len;
        Ok((start, &self.src[start..start + len]))
    }

    /// Comma-separated tokens up to (not including) `end`; may be empty.
    fn list(&mut self, end: char) -> Result<Vec<(usize, &'a str)>, ParseError> {
        let mut out = Vec::new();
        if self.peek() == Some(end) {
            return Ok(out);
        }
        loop {
            out.push(self.token()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(c) if c == end => return Ok(out),
                _ => return self.err(format!("expected `,` or `{end}`")),
            }
        }
    }

    fn level(&mut self) -> Result<u32, ParseError> {
        self.expect('@')?;
        let (p, t) = self.token()?;
        match t.parse::<u32>() {
            Ok(n) if n > 0 => Ok(n),
            _ => self.err_at(p, t, "level must be a positive integer"),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos < self.src.len() {
            return self.err("trailing input");
        }
        Ok(())
    }
}

fn residue(c: &Cursor, (p, t): (usize, &str), level: u32) -> Result<Arg, ParseError> {
    if t == "Z" {
        return Ok(Arg::Zero);
    }
    match t.parse::<i64>() {
        Ok(k) => Ok(Arg::Root(k.rem_euclid(level as i64) as u32)),
        Err(_) => c.err_at(p, t, "bad residue"),
    }
}

/// Parses `Li(n1,...,nm;k1,...,km)@N`.
pub fn parse_li(src: &str) -> Result<LiSymbol, ParseError> {
    let mut c = Cursor { src, pos: 0 };
    c.skip_ws();
    if !c.src[c.pos..].starts_with("Li") {
        return c.err("expected `Li`");
    }
    c.pos += 2;
    c.expect('(')?;
    let idx = c.list(';')?;
    c.expect(';')?;
    let args = c.list(')')?;
    c.expect(')')?;
    let level = c.level()?;
    c.finish()?;
    if idx.len() != args.len() {
        return c.err_at(0, src, format!("{} indices but {} arguments", idx.len(), args.len()));
    }
    let mut n = Vec::new();
    for &(p, t) in &idx {
        match t.parse::<u32>() {
            Ok(v) if v > 0 => n.push(v),
            _ => return c.err_at(p, t, "indices must be positive integers"),
        }
    }
    let mut a = Vec::new();
    for &tok in &args {
        match residue(&c, tok, level)? {
            Arg::Root(k) => a.push(k),
            Arg::Zero => return c.err_at(tok.0, tok.1, "zero is not allowed as a Li argument"),
        }
    }
    Ok(LiSymbol::new(level, n, a).expect("validated"))
}

/// Parses `I(k0;k1,...,km;k{m+1})@N`; `Z` denotes the point 0.
/// The upper endpoint may not be `Z`, and the two endpoints must differ.
pub fn parse_general_i(src: &str) -> Result<GeneralI, ParseError> {
    let mut c = Cursor { src, pos: 0 };
    c.skip_ws();
    if !c.src[c.pos..].starts_with('I') {
        return c.err("expected `I`");
    }
    c.pos += 1;
    c.expect('(')?;
    let lo = c.token()?;
    c.expect(';')?;
    let letters = c.list(';')?;
    c.expect(';')?;
    let hi = c.token()?;
    c.expect(')')?;
    let level = c.level()?;
    c.finish()?;
    let lower = residue(&c, lo, level)?;
    let upper = residue(&c, hi, level)?;
    if upper == Arg::Zero {
        return c.err_at(hi.0, hi.1, "upper endpoint 0 is not allowed");
    }
    if upper == lower {
        return c.err_at(hi.0, hi.1, "endpoints coincide");
    }
    let letters = letters.into_iter().map(|t| residue(&c, t, level)).collect::<Result<Vec<_>, _>>()?;
    Ok(GeneralI::new(level, lower, letters, upper))
}

pub fn parse_symbol(src: &str) -> Result<ParsedSymbol, ParseError> {
    let t = src.trim_start();
    if t.starts_with("Li") {
        parse_li(src).map(ParsedSymbol::Li)
    } else if t.starts_with('I') {
        parse_general_i(src).map(ParsedSymbol::I)
    } else {
        Err(ParseError { pos: src.len() - t.len(), token: t.chars().take(8).collect(), msg: "expected `Li` or `I`".into() })
    }
}
