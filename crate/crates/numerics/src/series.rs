use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use mpl_core::{li_to_iword_signed, Arg, IWord, LiSymbol, Symbol};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::fixed::{BigComplex, Constants, Cx};
use crate::NumError;

const MAX_TERMS: usize = 200_000;
const GUARD_BITS: u32 = 40;

/// A letter of a path piece `I(0; b_1..b_k; y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Letter {
    Zero,
    Root(u32),
    OneMinus(u32),
}

impl Letter {
    fn reflect(a: Arg) -> Letter {
        match a {
            Arg::Zero => Letter::Root(0),
            Arg::Root(0) => Letter::Zero,
            Arg::Root(k) => Letter::OneMinus(k),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum End {
    Lower,
    Upper,
}

#[derive(Clone, Debug)]
struct Piece {
    value: Cx,
    err: f64,
    abs: f64,
}

/// Series evaluator at a fixed precision, with a cache of path pieces.
pub struct Evaluator {
    digits: usize,
    bits: u32,
    consts: Constants,
    split: RwLock<HashMap<u32, (BigInt, f64)>>,
    pieces: RwLock<HashMap<(u32, End, Vec<Letter>), Arc<Piece>>>,
}

fn bits_for(digits: usize) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

/// Smallest `K` with `Σ_{k>K} C(k-1, m-1) r^k < eps`.
fn truncation(m: usize, r: f64, eps: f64) -> Option<usize> {
    let ln_r = r.ln();
    let mut ln_t = 0.0; // ln C(k-1, m-1) r^k at k = m
    ln_t += m as f64 * ln_r;
    let mut k = m.max(1);
    loop {
        if k > MAX_TERMS {
            return None;
        }
        let q = if k + 1 > m { (k as f64) / ((k + 1 - m) as f64) * r } else { r };
        let next = ln_t + q.ln();
        if q < 1.0 && next - (1.0 - q).ln() < eps.ln() {
            return Some(k);
        }
        ln_t = next;
        k += 1;
    }
}

impl Evaluator {
    pub fn new(digits: usize) -> Self {
        let bits = bits_for(digits);
        Evaluator {
            digits,
            bits,
            consts: Constants::new(bits),
            split: RwLock::new(HashMap::new()),
            pieces: RwLock::new(HashMap::new()),
        }
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn constants(&self) -> &Constants {
        &self.consts
    }

    /// Split point `s` for level `N` as a dyadic fixed-point value and as `f64`.
    fn split_point(&self, level: u32) -> (BigInt, f64) {
        if let Some(v) = self.split.read().unwrap().get(&level) {
            return v.clone();
        }
        let d = if level == 1 { 1.0 } else { (2.0 * (std::f64::consts::PI / level as f64).sin()).min(1.0) };
        let s = (1.0 / (1.0 + d)).max(0.5);
        let num = (s * 1048576.0).ceil();
        let s = num / 1048576.0;
        let fixed = BigInt::from(num as u64) << (self.bits - 20);
        self.split.write().unwrap().insert(level, (fixed.clone(), s));
        (fixed, s)
    }

    fn letter_value(&self, level: u32, l: Letter) -> Cx {
        match l {
            Letter::Zero => Cx::zero(),
            Letter::Root(k) => self.consts.root(level, k),
            Letter::OneMinus(k) => Cx::real(BigInt::one() << self.bits).sub(&self.consts.root(level, k)),
        }
    }

    /// `I(0; letters; y)` with `y = s` (lower piece) or `y = 1 - s` (upper piece).
    fn piece(&self, level: u32, end: End, letters: &[Letter]) -> Result<Arc<Piece>, NumError> {
        if letters.is_empty() {
            let one = Cx::real(BigInt::one() << self.bits);
            return Ok(Arc::new(Piece { value: one, err: 0.0, abs: 1.0 }));
        }
        let key = (level, end, letters.to_vec());
        if let Some(p) = self.pieces.read().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let p = Arc::new(self.compute_piece(level, end, letters)?);
        self.pieces.write().unwrap().insert(key, p.clone());
        Ok(p)
    }

    fn compute_piece(&self, level: u32, end: End, letters: &[Letter]) -> Result<Piece, NumError> {
        let bits = self.bits;
        let (s_fixed, s) = self.split_point(level);
        let one = BigInt::one() << bits;
        let (y, y_f) = match end {
            End::Lower => (s_fixed, s),
            End::Upper => (&one - s_fixed, 1.0 - s),
        };
        // blocks [c, 0^{n-1}]
        let mut blocks: Vec<(Letter, u32)> = Vec::new();
        for &l in letters {
            match l {
                Letter::Zero => blocks.last_mut().expect("piece starts with a nonzero letter").1 += 1,
                c => blocks.push((c, 1)),
            }
        }
        let m = blocks.len();
        let mut xs = Vec::with_capacity(m);
        let mut r: f64 = 0.0;
        for &(c, _) in &blocks {
            let b = self.letter_value(level, c);
            let x = b.inv(bits).mul(&Cx::real(y.clone()), bits);
            let bf = b.abs_f64(bits);
            r = r.max(y_f / bf);
            xs.push(x);
        }
        let ulp = 2f64.powi(-(bits as i32));
        let k_max = truncation(m, r, ulp).ok_or(NumError::Budget(MAX_TERMS))?;
        // R_i(k+1) = X_i (R_i(k) + S_{i-1}(k)),  S_i(k) = R_i(k) / k^{n_i}
        let mut rs = vec![Cx::zero(); m];
        let mut prev_s = vec![Cx::zero(); m + 1];
        prev_s[0] = Cx::real(one.clone());
        let mut total = Cx::zero();
        for k in 1..=k_max {
            let mut cur_s = vec![Cx::zero(); m + 1];
            let kb = BigInt::from(k as u64);
            for i in 0..m {
                rs[i] = xs[i].mul(&rs[i].add(&prev_s[i]), bits);
                let mut v = rs[i].clone();
                if !v.re.is_zero() || !v.im.is_zero() {
                    let d = num_traits::pow(kb.clone(), blocks[i].1 as usize);
                    v = v.div_int(&d);
                }
                cur_s[i + 1] = v;
            }
            total = total.add(&cur_s[m]);
            prev_s = cur_s;
            prev_s[0] = Cx::zero();
        }
        if m % 2 == 1 {
            total = total.neg();
        }
        let err = ulp * (1.0 + 4.0 * (k_max * (m + 1)) as f64);
        let abs = total.abs_f64(bits);
        Ok(Piece { value: total, err, abs })
    }

    /// `I(0; w; 1)` for a convergent word.
    pub fn eval_word(&self, w: &IWord) -> Result<BigComplex, NumError> {
        if !w.is_convergent() {
            return Err(NumError::DivergentWord(w.to_string()));
        }
        let bits = self.bits;
        let level = w.level();
        let l = w.letters();
        let n = l.len();
        let ulp = 2f64.powi(-(bits as i32));
        let mut acc = Cx::zero();
        let mut err = 0.0;
        for j in 0..=n {
            let lower: Vec<Letter> = l[..j]
                .iter()
                .map(|&a| match a {
                    Arg::Zero => Letter::Zero,
                    Arg::Root(k) => Letter::Root(k),
                })
                .collect();
            // I(s; w_{j+1}..w_n; 1) = (-1)^{n-j} I(0; 1-w_n, ..., 1-w_{j+1}; 1-s)
            let upper: Vec<Letter> = l[j..].iter().rev().map(|&a| Letter::reflect(a)).collect();
            if lower.first() == Some(&Letter::Zero) || upper.first() == Some(&Letter::Zero) {
                // only reachable for divergent words, excluded above
                return Err(NumError::DivergentWord(w.to_string()));
            }
            let a = self.piece(level, End::Lower, &lower)?;
            let b = self.piece(level, End::Upper, &upper)?;
            let t = a.value.mul(&b.value, bits);
            acc = if (n - j) % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            err += a.err * (b.abs + b.err) + b.err * a.abs + ulp;
        }
        Ok(BigComplex::from_cx(acc, bits, err))
    }

    pub fn eval_li(&self, s: &LiSymbol) -> Result<BigComplex, NumError> {
        if s.is_unit() {
            return Ok(BigComplex::from_cx(Cx::real(BigInt::one() << self.bits), self.bits, 0.0));
        }
        if !s.is_admissible() {
            return Err(NumError::NotAdmissible(s.to_string()));
        }
        let (sign, w) = li_to_iword_signed(s);
        let v = self.eval_word(&w)?;
        Ok(if sign == 1 { v } else { BigComplex { re: -v.re, im: -v.im, ..v } })
    }

    /// Evaluates many symbols, in parallel when the `parallel` feature is on.
    pub fn eval_many(&self, syms: &[LiSymbol]) -> Vec<Result<BigComplex, NumError>> {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            syms.par_iter().map(|s| self.eval_li(s)).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            syms.iter().map(|s| self.eval_li(s)).collect()
        }
    }

    pub fn clear_cache(&self) {
        self.pieces.write().unwrap().clear();
    }

    pub(crate) fn tolerance(&self) -> f64 {
        10f64.powi(1 - self.digits as i32)
    }

    pub(crate) fn check(&self, v: BigComplex) -> Result<BigComplex, NumError> {
        if v.err > self.tolerance() {
            return Err(NumError::Tolerance(v.err));
        }
        Ok(v)
    }
}

/// One-shot evaluation of `Li_n(x)` to `digits` digits.
pub fn eval_li(s: &LiSymbol, digits: usize) -> Result<BigComplex, NumError> {
    let ev = Evaluator::new(digits);
    let v = ev.eval_li(s)?;
    ev.check(v)
}

/// One-shot evaluation of a convergent word `I(0; w; 1)`.
pub fn eval_word(w: &IWord, digits: usize) -> Result<BigComplex, NumError> {
    let ev = Evaluator::new(digits);
    let v = ev.eval_word(w)?;
    ev.check(v)
}
