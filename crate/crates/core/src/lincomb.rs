use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::CoreError;
use crate::rational::{format_rational, Rational};
use crate::symbol::Symbol;

/// A finite `Q`-linear combination of symbols of one kind and one level.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<S: Symbol> {
    level: u32,
    terms: BTreeMap<S, Rational>,
}

impl<S: Symbol> LinComb<S> {
    pub fn new(level: u32) -> Self {
        LinComb { level, terms: BTreeMap::new() }
    }

    pub fn from_symbol(s: S) -> Self {
        Self::from_term(s, Rational::one())
    }

    pub fn from_term(s: S, c: Rational) -> Self {
        let mut out = LinComb::new(s.level());
        out.add_term(s, c);
        out
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, S, Rational> {
        self.terms.iter()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &S> {
        self.terms.keys()
    }

    pub fn coeff(&self, s: &S) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    /// Panics if `s` lives at another level; use [`LinComb::try_add`] for checked mixing.
    pub fn add_term(&mut self, s: S, c: Rational) {
        assert_eq!(s.level(), self.level, "level mismatch in linear combination");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<S>, c: &Rational) {
        assert_eq!(self.level, other.level, "level mismatch in linear combination");
        if c.is_zero() {
            return;
        }
        for (s, a) in &other.terms {
            self.add_term(s.clone(), a * c);
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<S>) {
        self.add_scaled(other, &Rational::one());
    }

    pub fn sub_assign(&mut self, other: &LinComb<S>) {
        self.add_scaled(other, &-Rational::one());
    }

    pub fn try_add(&self, other: &LinComb<S>) -> Result<LinComb<S>, CoreError> {
        if self.level != other.level {
            return Err(CoreError::LevelMismatch(self.level, other.level));
        }
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn add(&self, other: &LinComb<S>) -> LinComb<S> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &LinComb<S>) -> LinComb<S> {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn neg(&self) -> LinComb<S> {
        LinComb { level: self.level, terms: self.terms.iter().map(|(s, c)| (s.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> LinComb<S> {
        if c.is_zero() {
            return LinComb::new(self.level);
        }
        LinComb { level: self.level, terms: self.terms.iter().map(|(s, a)| (s.clone(), a * c)).collect() }
    }

    /// Replaces every symbol by a linear combination and collects.
    pub fn substitute<T: Symbol>(&self, level: u32, mut f: impl FnMut(&S) -> LinComb<T>) -> LinComb<T> {
        let mut out = LinComb::new(level);
        for (s, c) in &self.terms {
            out.add_scaled(&f(s), c);
        }
        out
    }

    pub fn is_homogeneous(&self, w: usize) -> bool {
        self.terms.keys().all(|s| s.weight() == w)
    }

    pub fn max_depth(&self) -> usize {
        self.terms.keys().map(|s| s.depth()).max().unwrap_or(0)
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&S) -> bool) -> LinComb<S> {
        LinComb {
            level: self.level,
            terms: self.terms.iter().filter(|(s, _)| keep(s)).map(|(s, c)| (s.clone(), c.clone())).collect(),
        }
    }
}

impl<S: Symbol> FromIterator<(S, Rational)> for LinComb<S> {
    /// Panics on an empty iterator with no way to infer the level; prefer `LinComb::new` + `add_term`.
    fn from_iter<I: IntoIterator<Item = (S, Rational)>>(iter: I) -> Self {
        let mut it = iter.into_iter().peekable();
        let level = it.peek().map(|(s, _)| s.level()).expect("cannot infer level of an empty combination");
        let mut out = LinComb::new(level);
        for (s, c) in it {
            out.add_term(s, c);
        }
        out
    }
}

impl<'a, S: Symbol> IntoIterator for &'a LinComb<S> {
    type Item = (&'a S, &'a Rational);
    type IntoIter = btree_map::Iter<'a, S, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<S: Symbol> fmt::Display for LinComb<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let a = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !a.is_one() {
                write!(f, "{}*", format_rational(&a))?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl<S: Symbol> fmt::Debug for LinComb<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
