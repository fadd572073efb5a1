use std::collections::HashMap;
use std::sync::RwLock;

use mpl_core::{iword_to_li_signed, li_to_iword_signed, q, qi, LiSymbol, LinComb, Rational, Symbol};
use mpl_products::{stuffle_lincomb, stuffle_product};
use num_traits::One;

use crate::regpoly::RegPoly;
use crate::words::regularize_word;
use crate::RegError;

/// Regularization tables for one level. The caches only ever store values of
/// pure functions, so sharing a `Regularizer` across threads is safe.
pub struct Regularizer {
    level: u32,
    max_weight: usize,
    stuffle: RwLock<HashMap<LiSymbol, RegPoly>>,
    /// `𝕃(L^n)` and `𝕃^{-1}(L^n)`, filled on demand.
    forward: RwLock<Vec<RegPoly>>,
    backward: RwLock<Vec<RegPoly>>,
}

impl Regularizer {
    pub fn new(level: u32, max_weight: usize) -> Self {
        Regularizer {
            level,
            max_weight,
            stuffle: RwLock::new(HashMap::new()),
            forward: RwLock::new(Vec::new()),
            backward: RwLock::new(Vec::new()),
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    fn check(&self, s: &LiSymbol) -> Result<(), RegError> {
        if s.level() != self.level {
            return Err(RegError::LevelMismatch(s.level(), self.level));
        }
        if s.weight() > self.max_weight {
            return Err(RegError::WeightLimit(s.weight(), self.max_weight));
        }
        Ok(())
    }

    fn zeta(&self, n: u32) -> LinComb<LiSymbol> {
        LinComb::from_symbol(LiSymbol::new(self.level, vec![n], vec![0]).expect("valid"))
    }

    /// The stuffle-regularized value `L̂i(s)`.
    pub fn stuffle(&self, s: &LiSymbol) -> Result<RegPoly, RegError> {
        self.check(s)?;
        Ok(self.stuffle_unchecked(s))
    }

    fn stuffle_unchecked(&self, s: &LiSymbol) -> RegPoly {
        let k = s.trailing_ones();
        if k == 0 {
            return RegPoly::constant(LinComb::from_symbol(s.clone()));
        }
        if let Some(p) = self.stuffle.read().unwrap().get(s) {
            return p.clone();
        }
        // Li_t * Li_1(1) = k s + (terms with fewer trailing ones), and L̂i_1(1) = -L.
        let slots: Vec<(u32, u32)> = s.slots().collect();
        let t = LiSymbol::from_slots(self.level, &slots[..slots.len() - 1]);
        let one = LiSymbol::new(self.level, vec![1], vec![0]).expect("valid");
        let mut acc = self.stuffle_unchecked(&t).shift(1).scale(&qi(-1));
        for (u, c) in &stuffle_product(&t, &one).expect("same level") {
            if u != s {
                acc = acc.add_scaled(&self.stuffle_unchecked(u), &-c);
            }
        }
        let p = acc.scale(&q(1, k as i64));
        self.stuffle.write().unwrap().insert(s.clone(), p.clone());
        p
    }

    /// The shuffle-regularized value `Î(s)` in Li-normalization: the word of `s`
    /// is regularized with `[1] -> L` and every word is converted back with its sign.
    pub fn shuffle(&self, s: &LiSymbol) -> Result<RegPoly, RegError> {
        self.check(s)?;
        let (sign, w) = li_to_iword_signed(s);
        let coeffs = regularize_word(&w)
            .into_iter()
            .map(|c| {
                c.substitute(self.level, |x| {
                    let (sx, t) = iword_to_li_signed(x).expect("regularized words start with a nonzero letter");
                    LinComb::from_term(t, qi(sign * sx))
                })
            })
            .collect();
        Ok(RegPoly::from_coeffs(self.level, coeffs))
    }

    fn table(&self, n: usize, inverse: bool) -> RegPoly {
        let cache = if inverse { &self.backward } else { &self.forward };
        if let Some(p) = cache.read().unwrap().get(n) {
            return p.clone();
        }
        // a_j: coefficients of exp(∓ Σ_{i≥2} ζ(i) u^i / i), via j a_j = Σ_i (∓ζ(i)) a_{j-i}.
        let mut a: Vec<LinComb<LiSymbol>> = vec![LinComb::from_symbol(LiSymbol::unit(self.level))];
        for j in 1..=n {
            let mut aj = LinComb::new(self.level);
            for i in 2..=j {
                let prod = stuffle_lincomb(&self.zeta(i as u32), &a[j - i]).expect("same level");
                aj.add_scaled(&prod, &q(if inverse { 1 } else { -1 }, j as i64));
            }
            a.push(aj);
        }
        let mut out = cache.write().unwrap();
        while out.len() <= n {
            let m = out.len();
            // 𝕃(L^m) = Σ_j C(m, j) j! a_j L^{m-j}
            let mut coeffs = vec![LinComb::new(self.level); m + 1];
            let mut c = Rational::one();
            for j in 0..=m {
                coeffs[m - j] = a[j].scale(&c);
                c = c * qi((m - j) as i64);
            }
            out.push(RegPoly::from_coeffs(self.level, coeffs));
        }
        out[n].clone()
    }

    /// The image of `L^n` under the comparison map.
    pub fn comparison_power(&self, n: usize) -> RegPoly {
        self.table(n, false)
    }

    pub fn comparison_map(&self, p: &RegPoly) -> RegPoly {
        self.apply(p, false)
    }

    pub fn comparison_map_inverse(&self, p: &RegPoly) -> RegPoly {
        self.apply(p, true)
    }

    fn apply(&self, p: &RegPoly, inverse: bool) -> RegPoly {
        let mut out = RegPoly::zero(self.level);
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.table(k, inverse).mul_lincomb(c));
            }
        }
        out
    }

    /// Constant term of `L̂i(s)`, written in admissible symbols.
    pub fn trailing_ones_reduce(&self, s: &LiSymbol) -> Result<LinComb<LiSymbol>, RegError> {
        Ok(self.stuffle(s)?.constant_term())
    }
}

fn fresh(s: &LiSymbol) -> Regularizer {
    Regularizer::new(s.level(), s.weight().max(10))
}

pub fn stuffle_regularize(s: &LiSymbol) -> Result<RegPoly, RegError> {
    fresh(s).stuffle(s)
}

pub fn shuffle_regularize(s: &LiSymbol) -> Result<RegPoly, RegError> {
    fresh(s).shuffle(s)
}

pub fn trailing_ones_reduce(s: &LiSymbol) -> Result<LinComb<LiSymbol>, RegError> {
    fresh(s).trailing_ones_reduce(s)
}

pub fn comparison_map(p: &RegPoly) -> RegPoly {
    Regularizer::new(p.level(), usize::MAX).comparison_map(p)
}

pub fn comparison_map_inverse(p: &RegPoly) -> RegPoly {
    Regularizer::new(p.level(), usize::MAX).comparison_map_inverse(p)
}
