use std::fmt;

use mpl_core::{format_rational, LiSymbol, LinComb, Rational};
use mpl_products::stuffle_lincomb;
use num_traits::{One, Zero};

/// `Σ_k c_k L^k` with coefficients in admissible symbols; products of
/// coefficients are expanded with the stuffle product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RegPoly {
    level: u32,
    coeffs: Vec<LinComb<LiSymbol>>,
}

impl RegPoly {
    pub fn zero(level: u32) -> Self {
        RegPoly { level, coeffs: vec![] }
    }

    pub fn constant(c: LinComb<LiSymbol>) -> Self {
        Self::from_coeffs(c.level(), vec![c])
    }

    pub fn one(level: u32) -> Self {
        Self::constant(LinComb::from_symbol(LiSymbol::unit(level)))
    }

    /// `c L^k`.
    pub fn monomial(level: u32, k: usize, c: Rational) -> Self {
        let mut coeffs = vec![LinComb::new(level); k + 1];
        coeffs[k] = LinComb::from_term(LiSymbol::unit(level), c);
        Self::from_coeffs(level, coeffs)
    }

    pub fn from_coeffs(level: u32, mut coeffs: Vec<LinComb<LiSymbol>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RegPoly { level, coeffs }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[LinComb<LiSymbol>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> LinComb<LiSymbol> {
        self.coeffs.get(k).cloned().unwrap_or_else(|| LinComb::new(self.level))
    }

    pub fn constant_term(&self) -> LinComb<LiSymbol> {
        self.coeff(0)
    }

    /// Degree in `L`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &RegPoly) -> RegPoly {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &RegPoly) -> RegPoly {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn add_scaled(&self, other: &RegPoly, c: &Rational) -> RegPoly {
        assert_eq!(self.level, other.level, "level mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let mut x = self.coeff(k);
                x.add_scaled(&other.coeff(k), c);
                x
            })
            .collect();
        RegPoly::from_coeffs(self.level, coeffs)
    }

    pub fn scale(&self, c: &Rational) -> RegPoly {
        RegPoly::from_coeffs(self.level, self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    /// Multiplies by `L^k`.
    pub fn shift(&self, k: usize) -> RegPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![LinComb::new(self.level); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RegPoly::from_coeffs(self.level, coeffs)
    }

    pub fn mul(&self, other: &RegPoly) -> RegPoly {
        assert_eq!(self.level, other.level, "level mismatch");
        if self.is_zero() || other.is_zero() {
            return RegPoly::zero(self.level);
        }
        let mut coeffs = vec![LinComb::new(self.level); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j].add_assign(&stuffle_lincomb(a, b).expect("same level"));
            }
        }
        RegPoly::from_coeffs(self.level, coeffs)
    }

    /// Multiplies every coefficient by a combination (stuffle).
    pub fn mul_lincomb(&self, c: &LinComb<LiSymbol>) -> RegPoly {
        self.mul(&RegPoly::constant(c.clone()))
    }

    /// Substitutes `L -> L + x` with `x` a combination, expanding powers of `x` by stuffle.
    pub fn translate(&self, x: &LinComb<LiSymbol>) -> RegPoly {
        let lin = RegPoly::from_coeffs(self.level, vec![x.clone(), LinComb::from_symbol(LiSymbol::unit(self.level))]);
        let mut out = RegPoly::zero(self.level);
        let mut power = RegPoly::one(self.level);
        for c in &self.coeffs {
            out = out.add(&power.mul_lincomb(c));
            power = power.mul(&lin);
        }
        out
    }

    /// Every `L^k` coefficient is homogeneous of weight `w - k`.
    pub fn is_homogeneous(&self, w: usize) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| k <= w && c.is_homogeneous(w - k))
    }

    pub fn all_admissible(&self) -> bool {
        self.coeffs.iter().all(|c| c.symbols().all(|s| s.is_admissible()))
    }
}

impl fmt::Display for RegPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let unit = LiSymbol::unit(self.level);
            let body = if c.len() == 1 && c.coeff(&unit) != Rational::zero() {
                format_rational(&c.coeff(&unit))
            } else {
                format!("({c})")
            };
            parts.push(match k {
                0 => body,
                1 => format!("{body}*L"),
                _ => format!("{body}*L^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for RegPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
