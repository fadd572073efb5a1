use std::collections::BTreeMap;

use mpl_core::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse row with integer entries, sorted by column, primitive (content 1)
/// and with a positive leading entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseRow(Vec<(usize, BigInt)>);

impl SparseRow {
    /// Clears denominators of a rational row and normalizes it.
    pub fn from_rational(mut entries: Vec<(usize, Rational)>) -> SparseRow {
        entries.retain(|(_, c)| !c.is_zero());
        entries.sort_by_key(|e| e.0);
        let lcm = entries.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let ints = entries.into_iter().map(|(j, c)| (j, c.numer() * (&lcm / c.denom()))).collect();
        SparseRow::normalized(ints)
    }

    fn normalized(mut v: Vec<(usize, BigInt)>) -> SparseRow {
        v.retain(|(_, c)| !c.is_zero());
        let g = v.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for (_, c) in v.iter_mut() {
                *c /= &g;
            }
        }
        if v.first().is_some_and(|(_, c)| c.is_negative()) {
            for (_, c) in v.iter_mut() {
                *c = -&*c;
            }
        }
        SparseRow(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lead(&self) -> Option<usize> {
        self.0.first().map(|e| e.0)
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a * self - b * other`, normalized.
    fn combine(&self, a: &BigInt, other: &SparseRow, b: &BigInt) -> SparseRow {
        let (x, y) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            let ci = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
            let cj = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
            if ci < cj {
                out.push((ci, a * &x[i].1));
                i += 1;
            } else if cj < ci {
                out.push((cj, -(b * &y[j].1)));
                j += 1;
            } else {
                out.push((ci, a * &x[i].1 - b * &y[j].1));
                i += 1;
                j += 1;
            }
        }
        SparseRow::normalized(out)
    }
}

/// Row echelon form built incrementally; rows are eliminated fraction-free
/// against the pivot with the same leading column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Eliminates leading entries until the lead is not a pivot column.
    pub fn reduce(&self, mut r: SparseRow) -> SparseRow {
        while let Some(c) = r.lead() {
            let Some(p) = self.pivots.get(&c) else { break };
            let a = &p.0[0].1;
            let b = &r.0[0].1;
            let g = a.gcd(b);
            r = r.combine(&(a / &g), p, &(b / &g));
        }
        r
    }

    pub fn contains(&self, r: &SparseRow) -> bool {
        self.reduce(r.clone()).is_zero()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, r: SparseRow) -> bool {
        let r = self.reduce(r);
        match r.lead() {
            Some(c) => {
                self.pivots.insert(c, r);
                true
            }
            None => false,
        }
    }

    /// Inserts many rows. Batches are reduced against the current pivots in
    /// parallel and then merged in input order, so the result does not depend
    /// on scheduling.
    pub fn extend(&mut self, mut rows: Vec<SparseRow>) {
        rows.sort_by_key(|r| (r.len(), r.lead()));
        for batch in rows.chunks(512) {
            let reduced = self.reduce_batch(batch);
            for r in reduced {
                if !r.is_zero() {
                    self.insert(r);
                }
            }
        }
    }

    #[cfg(feature = "parallel")]
    fn reduce_batch(&self, batch: &[SparseRow]) -> Vec<SparseRow> {
        use rayon::prelude::*;
        batch.par_iter().map(|r| self.reduce(r.clone())).collect()
    }

    #[cfg(not(feature = "parallel"))]
    fn reduce_batch(&self, batch: &[SparseRow]) -> Vec<SparseRow> {
        batch.iter().map(|r| self.reduce(r.clone())).collect()
    }
}

/// Exact rank over `Q`.
pub fn rank(rows: Vec<SparseRow>) -> usize {
    let mut e = Echelon::new();
    e.extend(rows);
    e.rank()
}
