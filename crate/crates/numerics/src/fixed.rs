use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Fixed-point complex number `(re + i im) / 2^bits`, plus an absolute error radius.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigInt,
    pub im: BigInt,
    pub bits: u32,
    pub err: f64,
}

/// Rounded `x / 2^s`.
pub(crate) fn shr_round(x: BigInt, s: u32) -> BigInt {
    if s == 0 {
        return x;
    }
    let half = BigInt::one() << (s - 1);
    (x + half) >> s
}

pub(crate) fn div_round(x: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = x.div_mod_floor(d);
    if (r << 1u32) >= *d {
        q + 1
    } else {
        q
    }
}

/// Raw fixed-point complex value without error bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Cx {
    pub re: BigInt,
    pub im: BigInt,
}

impl Cx {
    pub fn zero() -> Self {
        Cx { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn real(re: BigInt) -> Self {
        Cx { re, im: BigInt::zero() }
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn neg(&self) -> Cx {
        Cx { re: -&self.re, im: -&self.im }
    }

    pub fn mul(&self, o: &Cx, bits: u32) -> Cx {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        Cx { re: shr_round(re, bits), im: shr_round(im, bits) }
    }

    pub fn div_int(&self, d: &BigInt) -> Cx {
        Cx { re: div_round(&self.re, d), im: div_round(&self.im, d) }
    }

    /// `1 / self`.
    pub fn inv(&self, bits: u32) -> Cx {
        let norm = &self.re * &self.re + &self.im * &self.im;
        let num_re = &self.re << (2 * bits);
        let num_im = -(&self.im << (2 * bits));
        Cx { re: div_round(&num_re, &norm), im: div_round(&num_im, &norm) }
    }

    pub fn abs_f64(&self, bits: u32) -> f64 {
        let re = to_f64(&self.re, bits);
        let im = to_f64(&self.im, bits);
        re.hypot(im)
    }
}

pub(crate) fn to_f64(x: &BigInt, bits: u32) -> f64 {
    // keep 60 significant bits before converting
    let len = x.bits() as i64;
    let drop = (len - 60).max(0) as u32;
    let top = (x >> drop).to_f64().unwrap_or(0.0);
    top * 2f64.powi(drop as i32 - bits as i32)
}

/// Decimal string of `x / 2^bits` with `digits` digits after the point.
pub(crate) fn to_decimal(x: &BigInt, bits: u32, digits: usize) -> String {
    let neg = x.sign() == Sign::Minus;
    let scaled = x.abs() * BigInt::from(10u32).pow(digits as u32);
    let t = shr_round(scaled, bits);
    let p = BigInt::from(10u32).pow(digits as u32);
    let (int, frac) = t.div_rem(&p);
    let frac = frac.to_string();
    let body = if digits == 0 {
        int.to_string()
    } else {
        format!("{int}.{}{frac}", "0".repeat(digits - frac.len()))
    };
    if neg && !t.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

impl BigComplex {
    pub(crate) fn from_cx(c: Cx, bits: u32, err: f64) -> Self {
        BigComplex { re: c.re, im: c.im, bits, err }
    }

    pub fn zero(bits: u32) -> Self {
        BigComplex { re: BigInt::zero(), im: BigInt::zero(), bits, err: 0.0 }
    }

    pub fn re_f64(&self) -> f64 {
        to_f64(&self.re, self.bits)
    }

    pub fn im_f64(&self) -> f64 {
        to_f64(&self.im, self.bits)
    }

    pub fn abs_f64(&self) -> f64 {
        self.re_f64().hypot(self.im_f64())
    }

    pub fn add(&self, o: &BigComplex) -> BigComplex {
        assert_eq!(self.bits, o.bits);
        BigComplex { re: &self.re + &o.re, im: &self.im + &o.im, bits: self.bits, err: self.err + o.err }
    }

    pub fn sub(&self, o: &BigComplex) -> BigComplex {
        assert_eq!(self.bits, o.bits);
        BigComplex { re: &self.re - &o.re, im: &self.im - &o.im, bits: self.bits, err: self.err + o.err }
    }

    pub fn mul(&self, o: &BigComplex) -> BigComplex {
        assert_eq!(self.bits, o.bits);
        let a = Cx { re: self.re.clone(), im: self.im.clone() };
        let b = Cx { re: o.re.clone(), im: o.im.clone() };
        let c = a.mul(&b, self.bits);
        let ulp = 2f64.powi(-(self.bits as i32));
        let err = self.err * (o.abs_f64() + o.err) + o.err * self.abs_f64() + ulp;
        BigComplex { re: c.re, im: c.im, bits: self.bits, err }
    }

    /// Multiplies by the rational `n / d`.
    pub fn scale(&self, n: &BigInt, d: &BigInt) -> BigComplex {
        let ulp = 2f64.powi(-(self.bits as i32));
        let f = (n.to_f64().unwrap_or(f64::INFINITY) / d.to_f64().unwrap_or(1.0)).abs();
        BigComplex {
            re: div_round(&(&self.re * n), d),
            im: div_round(&(&self.im * n), d),
            bits: self.bits,
            err: self.err * f + ulp,
        }
    }

    pub fn re_string(&self, digits: usize) -> String {
        to_decimal(&self.re, self.bits, digits)
    }

    pub fn im_string(&self, digits: usize) -> String {
        to_decimal(&self.im, self.bits, digits)
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.bits as f64) * std::f64::consts::LOG10_2) as usize;
        let digits = digits.saturating_sub(12).max(1);
        write!(f, "{} + {}i (err {:.1e})", self.re_string(digits), self.im_string(digits), self.err)
    }
}

/// `pi` and roots of unity at a fixed precision.
pub struct Constants {
    pub bits: u32,
    pi: BigInt,
    roots: RwLock<HashMap<(u32, u32), Cx>>,
}

fn atan_inv(x: u64, bits: u32) -> BigInt {
    // atan(1/x) = Σ (-1)^k / ((2k+1) x^{2k+1})
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut term = (BigInt::one() << bits) / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !term.is_zero() {
        let t = &term / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &x2;
        k += 1;
    }
    sum
}

impl Constants {
    pub fn new(bits: u32) -> Self {
        let g = bits + 16;
        let pi = (BigInt::from(16) * atan_inv(5, g) - BigInt::from(4) * atan_inv(239, g)) >> 16u32;
        Constants { bits, pi, roots: RwLock::new(HashMap::new()) }
    }

    pub fn pi(&self) -> BigComplex {
        BigComplex { re: self.pi.clone(), im: BigInt::zero(), bits: self.bits, err: 2f64.powi(4 - self.bits as i32) }
    }

    /// `zeta_N^k` as a raw value.
    pub(crate) fn root(&self, level: u32, k: u32) -> Cx {
        let k = k % level;
        if let Some(c) = self.roots.read().unwrap().get(&(level, k)) {
            return c.clone();
        }
        let one = BigInt::one() << self.bits;
        let c = if k == 0 {
            Cx::real(one)
        } else if 2 * k == level {
            Cx::real(-one)
        } else if 4 * k == level {
            Cx { re: BigInt::zero(), im: one }
        } else if 4 * k == 3 * level {
            Cx { re: BigInt::zero(), im: -one }
        } else {
            // theta = 2 pi k / N reduced to (-pi, pi]
            let kk = if 2 * k > level { k as i64 - level as i64 } else { k as i64 };
            let g = self.bits + 32;
            let pi_g = (BigInt::from(16) * atan_inv(5, g + 16) - BigInt::from(4) * atan_inv(239, g + 16)) >> 16u32;
            let theta = div_round(&(pi_g * BigInt::from(2 * kk)), &BigInt::from(level));
            let (cos, sin) = cos_sin(&theta, g);
            Cx { re: shr_round(cos, 32), im: shr_round(sin, 32) }
        };
        self.roots.write().unwrap().insert((level, k), c.clone());
        c
    }
}

fn cos_sin(theta: &BigInt, bits: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << bits;
    let mut cos = one.clone();
    let mut sin = BigInt::zero();
    let mut term = one;
    let mut k = 1u64;
    loop {
        term = shr_round(&term * theta, bits) / BigInt::from(k);
        if term.is_zero() {
            break;
        }
        match k % 4 {
            1 => sin += &term,
            2 => cos -= &term,
            3 => sin -= &term,
            _ => cos += &term,
        }
        k += 1;
    }
    (cos, sin)
}
