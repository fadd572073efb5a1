use std::collections::HashMap;

use mpl_core::{LiSymbol, Rational};

use crate::family::{Family, Relation};
use crate::rank::{Echelon, SparseRow};
use crate::RelError;

/// Relations as sparse rows over a fixed ordered basis.
#[derive(Clone, Debug)]
pub struct RelationMatrix {
    basis: Vec<LiSymbol>,
    index: HashMap<LiSymbol, usize>,
    rows: Vec<Vec<(usize, Rational)>>,
    provenance: Vec<(Family, String)>,
}

impl RelationMatrix {
    pub fn new(basis: Vec<LiSymbol>) -> Self {
        let index = basis.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        RelationMatrix { basis, index, rows: vec![], provenance: vec![] }
    }

    /// Adds a relation; fails if it mentions a symbol outside the basis.
    pub fn push(&mut self, r: &Relation) -> Result<(), RelError> {
        let mut row = Vec::with_capacity(r.row.len());
        for (s, c) in r.row.iter() {
            let j = *self.index.get(s).ok_or_else(|| RelError::OutsideBasis(s.to_string(), r.source.clone()))?;
            row.push((j, c.clone()));
        }
        row.sort_by_key(|e| e.0);
        self.rows.push(row);
        self.provenance.push((r.family, r.source.clone()));
        Ok(())
    }

    pub fn basis(&self) -> &[LiSymbol] {
        &self.basis
    }

    pub fn rows(&self) -> &[Vec<(usize, Rational)>] {
        &self.rows
    }

    pub fn provenance(&self) -> &[(Family, String)] {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        e.extend(self.rows.iter().map(|r| SparseRow::from_rational(r.clone())).collect());
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }
}
