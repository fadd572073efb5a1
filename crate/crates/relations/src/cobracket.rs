use std::collections::{BTreeMap, HashMap};

use mpl_core::{LiSymbol, Rational, Symbol};
use mpl_hopf::dihedral_cobracket;
use num_traits::{One, Zero};

use crate::dims::{build_matrix, Query};
use crate::family::{all_families, Mode};
use crate::rank::{rank, SparseRow};
use crate::RelError;

type Row = BTreeMap<usize, Rational>;

/// A quotient of the span of a basis by relation rows, with fully reduced
/// normal forms.
pub struct Quotient {
    index: HashMap<LiSymbol, usize>,
    pivots: BTreeMap<usize, Row>,
    free: HashMap<usize, usize>,
}

fn eliminate(pivots: &BTreeMap<usize, Row>, mut r: Row) -> Row {
    while let Some((c, v)) = r.iter().find(|(c, _)| pivots.contains_key(c)).map(|(c, v)| (*c, v.clone())) {
        for (k, p) in &pivots[&c] {
            let e = r.entry(*k).or_insert_with(Rational::zero);
            *e -= &v * p;
            if e.is_zero() {
                r.remove(k);
            }
        }
    }
    r
}

impl Quotient {
    pub fn new(q: &Query) -> Result<Self, RelError> {
        let matrix = build_matrix(q, &mut vec![])?;
        let basis = matrix.basis().to_vec();
        let index: HashMap<LiSymbol, usize> = basis.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut pivots: BTreeMap<usize, Row> = BTreeMap::new();
        for row in matrix.rows() {
            let r = eliminate(&pivots, row.iter().cloned().collect());
            let Some((&c, v)) = r.iter().next() else { continue };
            let v = v.clone();
            let r: Row = r.into_iter().map(|(k, x)| (k, x / &v)).collect();
            for p in pivots.values_mut() {
                if let Some(f) = p.get(&c).cloned() {
                    for (k, x) in &r {
                        let e = p.entry(*k).or_insert_with(Rational::zero);
                        *e -= &f * x;
                        if e.is_zero() {
                            p.remove(k);
                        }
                    }
                }
            }
            pivots.insert(c, r);
        }
        let free = (0..basis.len()).filter(|c| !pivots.contains_key(c)).enumerate().map(|(i, c)| (c, i)).collect();
        Ok(Quotient { index, pivots, free })
    }

    /// The depth-graded quotient at `(w, m)` under all families.
    pub fn graded(level: u32, w: usize, m: usize) -> Result<Self, RelError> {
        Quotient::new(&Query { level, weight: w, depth: Some(m), mode: Mode::DepthGraded, families: all_families() })
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Coordinates of a basis symbol in the quotient; symbols outside the basis map to zero.
    pub fn normal_form(&self, s: &LiSymbol) -> Vec<(usize, Rational)> {
        let Some(&i) = self.index.get(s) else { return vec![] };
        let r = eliminate(&self.pivots, Row::from([(i, Rational::one())]));
        r.into_iter().map(|(c, v)| (self.free[&c], v)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobracketCheck {
    pub quotient_dim: usize,
    /// rank of the cobracket on the quotient
    pub image_rank: usize,
    /// every relation row maps to zero in the quotient's wedge square
    pub relations_killed: bool,
}

type Key = ((usize, usize), usize, (usize, usize), usize);

/// Pushes the depth-graded cobracket through the quotients of all lower grades.
pub fn cobracket_check(level: u32, w: usize, m: usize) -> Result<CobracketCheck, RelError> {
    let top = Quotient::graded(level, w, m)?;
    let mut lower: HashMap<(usize, usize), Quotient> = HashMap::new();
    for m1 in 1..m {
        for w1 in m1..=w - (m - m1) {
            lower.insert((w1, m1), Quotient::graded(level, w1, m1)?);
        }
    }
    let image = |s: &LiSymbol| -> BTreeMap<Key, Rational> {
        let mut acc = BTreeMap::new();
        let Ok(d) = dihedral_cobracket(s) else { return acc };
        for (a, r, c) in d.iter() {
            let b = &r[0];
            let (ga, gb) = ((a.weight(), a.depth()), (b.weight(), b.depth()));
            for (i, x) in lower[&ga].normal_form(a) {
                for (j, y) in lower[&gb].normal_form(b) {
                    *acc.entry((ga, i, gb, j)).or_insert_with(Rational::zero) += c * &x * &y;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    };
    let q = Query { level, weight: w, depth: Some(m), mode: Mode::DepthGraded, families: all_families() };
    let matrix = build_matrix(&q, &mut vec![])?;
    let basis = matrix.basis();
    let images: Vec<BTreeMap<Key, Rational>> = basis.iter().map(|s| image(s)).collect();
    let mut relations_killed = true;
    for row in matrix.rows() {
        let mut acc: BTreeMap<Key, Rational> = BTreeMap::new();
        for (i, c) in row {
            for (k, x) in &images[*i] {
                *acc.entry(*k).or_insert_with(Rational::zero) += c * x;
            }
        }
        if acc.values().any(|v| !v.is_zero()) {
            relations_killed = false;
            break;
        }
    }
    let mut columns: HashMap<Key, usize> = HashMap::new();
    let rows = images
        .into_iter()
        .map(|img| {
            let entries = img
                .into_iter()
                .map(|(k, x)| {
                    let n = columns.len();
                    (*columns.entry(k).or_insert(n), x)
                })
                .collect();
            SparseRow::from_rational(entries)
        })
        .collect();
    Ok(CobracketCheck { quotient_dim: top.dim(), image_rank: rank(rows), relations_killed })
}
