use std::collections::BTreeMap;

use mpl_core::{li_symbols, LiSymbol, Symbol};
use mpl_regularization::Regularizer;

use crate::family::{generate, Family, FamilySet, Mode};
use crate::matrix::RelationMatrix;
use crate::RelError;

/// Largest basis accepted by `quotient_dim`.
pub const MAX_BASIS: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Query {
    pub level: u32,
    pub weight: usize,
    pub depth: Option<usize>,
    pub mode: Mode,
    pub families: FamilySet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimsReport {
    pub level: u32,
    pub weight: usize,
    pub depth: Option<usize>,
    pub mode: Mode,
    pub families: FamilySet,
    pub basis: usize,
    pub relations: usize,
    pub rank: usize,
    pub dim: usize,
    /// rows contributed by each family
    pub per_family: BTreeMap<Family, usize>,
    pub notes: Vec<String>,
}

/// Admissible symbols of weight `w` (depth at most `m`), or all symbols of
/// weight `w` and depth exactly `m` in the depth-graded setting.
pub fn basis(q: &Query) -> Result<Vec<LiSymbol>, RelError> {
    if q.level == 0 {
        return Err(RelError::ZeroLevel);
    }
    let w = q.weight as u32;
    Ok(match q.mode {
        Mode::DepthGraded => li_symbols(q.level, w, Some(q.depth.ok_or(RelError::MissingDepth)?)),
        Mode::Exact | Mode::ModTorsion => li_symbols(q.level, w, None)
            .into_iter()
            .filter(|s| s.is_admissible() && q.depth.is_none_or(|m| s.depth() <= m))
            .collect(),
    })
}

pub fn build_matrix(q: &Query, notes: &mut Vec<String>) -> Result<RelationMatrix, RelError> {
    let b = basis(q)?;
    if b.len() > MAX_BASIS {
        return Err(RelError::TooLarge(b.len(), MAX_BASIS));
    }
    let reg = Regularizer::new(q.level, q.weight.max(1));
    let rels = generate(&reg, q.weight, q.depth, q.mode, &q.families, notes);
    let mut m = RelationMatrix::new(b);
    let (mut lower, mut deeper) = (0, 0);
    for r in &rels {
        if !r.row.is_homogeneous(q.weight) {
            // coefficients of positive powers of L live in lower weight
            lower += 1;
            continue;
        }
        if q.mode != Mode::DepthGraded && q.depth.is_some_and(|d| r.row.max_depth() > d) {
            deeper += 1;
            continue;
        }
        m.push(r)?;
    }
    if lower > 0 {
        notes.push(format!("{lower} lower-weight rows (positive powers of L) set aside"));
    }
    if deeper > 0 {
        notes.push(format!("{deeper} rows leaving the depth filter dropped"));
    }
    Ok(m)
}

/// Dimension of the span of the basis modulo the enabled relation families.
pub fn quotient_dim(q: &Query) -> Result<DimsReport, RelError> {
    let mut notes = Vec::new();
    let m = build_matrix(q, &mut notes)?;
    let mut per_family = BTreeMap::new();
    for (f, _) in m.provenance() {
        *per_family.entry(*f).or_insert(0) += 1;
    }
    notes.dedup();
    let rank = m.rank();
    Ok(DimsReport {
        level: q.level,
        weight: q.weight,
        depth: q.depth,
        mode: q.mode,
        families: q.families.clone(),
        basis: m.basis().len(),
        relations: m.len(),
        rank,
        dim: m.basis().len() - rank,
        per_family,
        notes,
    })
}

/// Closed-form dimensions at a prime `p ≥ 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Formulas {
    /// weight 1: `(p - 1)/2`
    pub d11: u64,
    pub d22: u64,
    pub d33: u64,
}

pub fn dimension_formulas(p: u64) -> Formulas {
    Formulas { d11: (p - 1) / 2, d22: (p - 1) * (p - 5) / 12, d33: (p - 5) * (p * p - 2 * p - 11) / 48 }
}

/// Coefficients `d_0..=d_w` of `1/(1 - t^2 - t^3)`.
pub fn zagier_bound(w: usize) -> Vec<u64> {
    let mut d = vec![0u64; w + 1];
    d[0] = 1;
    for k in 1..=w {
        d[k] = if k >= 2 { d[k - 2] } else { 0 } + if k >= 3 { d[k - 3] } else { 0 };
    }
    d
}
