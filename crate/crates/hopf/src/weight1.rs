use std::collections::BTreeMap;

use mpl_core::{LiSymbol, LinComb, Rational};
use num_traits::{One, Zero};

use crate::tensor::TensorComb;

/// `Log(g)` or `Log(1 − g)` for `g = ζ_N^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight1Gen {
    Log(u32),
    LogOneMinus(u32),
}

/// A product of powers of `g` and `1 − g`, written additively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight1Element {
    level: u32,
    exps: BTreeMap<Weight1Gen, Rational>,
}

impl Weight1Element {
    pub fn one(level: u32) -> Self {
        Weight1Element { level, exps: BTreeMap::new() }
    }

    pub fn root(level: u32, k: i64) -> Self {
        Self::one(level).times(Weight1Gen::Log(k.rem_euclid(level as i64) as u32), Rational::one())
    }

    /// `1 − ζ^k`, `k ≢ 0`.
    pub fn one_minus(level: u32, k: i64) -> Self {
        let k = k.rem_euclid(level as i64) as u32;
        assert!(k != 0, "1 − 1 is not a unit");
        Self::one(level).times(Weight1Gen::LogOneMinus(k), Rational::one())
    }

    pub fn times(mut self, g: Weight1Gen, e: Rational) -> Self {
        let v = self.exps.entry(g).or_insert_with(Rational::zero);
        *v += e;
        self.exps.retain(|_, v| !v.is_zero());
        self
    }

    pub fn mul(&self, other: &Weight1Element) -> Self {
        other.exps.iter().fold(self.clone(), |acc, (g, e)| acc.times(*g, e.clone()))
    }

    pub fn div(&self, other: &Weight1Element) -> Self {
        other.exps.iter().fold(self.clone(), |acc, (g, e)| acc.times(*g, -e.clone()))
    }

    /// Modulo torsion: `Log(g) ↦ 0`, `Log(1 − g) ↦ −Li_1(g)`.
    pub fn to_li(&self) -> LinComb<LiSymbol> {
        let mut out = LinComb::new(self.level);
        for (g, e) in &self.exps {
            if let Weight1Gen::LogOneMinus(k) = g {
                out.add_term(LiSymbol::from_exps(self.level, &[1], &[*k as i64]), -e.clone());
            }
        }
        out
    }

    pub fn tensor(&self, other: &Weight1Element) -> TensorComb {
        TensorComb::from_product(&self.to_li(), &other.to_li())
    }
}
