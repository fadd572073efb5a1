use std::collections::BTreeMap;
use std::fmt;

use mpl_core::{format_rational, LiSymbol, LinComb, Rational, Symbol};
use mpl_products::shuffle_product_li_lincomb;
use num_traits::{One, Zero};

use crate::normal::normalize_li;

/// A product of symbols; sorted, never containing the unit.
pub type Monomial = Vec<LiSymbol>;

/// `Σ c · left ⊗ (r_1 ⋯ r_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorComb {
    level: u32,
    terms: BTreeMap<(LiSymbol, Monomial), Rational>,
}

impl TensorComb {
    pub fn new(level: u32) -> Self {
        TensorComb { level, terms: BTreeMap::new() }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn add_term(&mut self, left: LiSymbol, mut right: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        right.retain(|s| !s.is_unit());
        right.sort();
        let e = self.terms.entry((left, right)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LiSymbol, &Monomial, &Rational)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &LiSymbol, right: &[LiSymbol]) -> Rational {
        let mut r = right.to_vec();
        r.sort();
        self.terms.get(&(left.clone(), r)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_scaled(&mut self, other: &TensorComb, c: &Rational) {
        for ((l, r), v) in &other.terms {
            self.add_term(l.clone(), r.clone(), v * c);
        }
    }

    pub fn sub(&self, other: &TensorComb) -> TensorComb {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> TensorComb {
        let mut out = TensorComb::new(self.level);
        out.add_scaled(self, c);
        out
    }

    /// `Σ a ⊗ b` for combinations `a`, `b`.
    pub fn from_product(a: &LinComb<LiSymbol>, b: &LinComb<LiSymbol>) -> TensorComb {
        let mut out = TensorComb::new(a.level());
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_term(x.clone(), vec![y.clone()], c * d);
            }
        }
        out
    }

    /// Drops the terms `x ⊗ 1` and `1 ⊗ x`.
    pub fn reduced(&self) -> TensorComb {
        let mut out = self.clone();
        out.terms.retain(|(l, r), _| !l.is_unit() && !r.is_empty());
        out
    }

    /// Total weight of every term equals `w`.
    pub fn is_weight_balanced(&self, w: usize) -> bool {
        self.terms.keys().all(|(l, r)| l.weight() + r.iter().map(Symbol::weight).sum::<usize>() == w)
    }

    /// Regularizes divergent symbols and multiplies out right legs by the shuffle
    /// product, so every right leg is a single admissible symbol (or empty).
    pub fn canonical(&self) -> TensorComb {
        let n = self.level;
        let mut out = TensorComb::new(n);
        for ((l, r), c) in &self.terms {
            let left = normalize_li(l);
            let mut right = LinComb::from_symbol(LiSymbol::unit(n));
            for s in r {
                right = shuffle_product_li_lincomb(&right, &normalize_li(s)).expect("same level");
            }
            for (x, a) in left.iter() {
                for (y, b) in right.iter() {
                    out.add_term(x.clone(), vec![y.clone()], c * a * b);
                }
            }
        }
        out
    }
}

impl fmt::Display for TensorComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((l, r), c)| {
                let right = if r.is_empty() { "1".to_string() } else { r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("·") };
                let left = if l.is_unit() { "1".to_string() } else { l.to_string() };
                format!("{} {} ⊗ {}", format_rational(c), left, right)
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
