use std::collections::BTreeMap;

use mpl_core::{LiSymbol, LinComb, Rational, Symbol};
use mpl_hopf::{coproduct_li, reduced_coproduct, TensorComb};
use mpl_regularization::Regularizer;
use num_traits::Zero;

use crate::cobracket::Quotient;
use crate::dims::Query;
use crate::family::{all_families, generate, Mode};
use crate::RelError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealCheck {
    pub level: u32,
    pub weight: usize,
    pub rows: usize,
    /// sources of rows whose reduced coproduct survives in the quotient
    pub failures: Vec<String>,
}

fn delta(row: &LinComb<LiSymbol>) -> TensorComb {
    let mut t = TensorComb::new(row.level());
    for (s, c) in row.iter() {
        t.add_scaled(&coproduct_li(s), c);
    }
    reduced_coproduct(&t.canonical())
}

/// Checks that `Δ'` maps every mod-torsion relation of weight `w` into
/// `R ⊗ H + H ⊗ R`, by projecting both legs to the lower-weight quotients.
pub fn coideal_check(level: u32, w: usize) -> Result<CoidealCheck, RelError> {
    let quotient = |k: usize| Quotient::new(&Query { level, weight: k, depth: None, mode: Mode::ModTorsion, families: all_families() });
    let lower: Vec<Quotient> = (1..w).map(quotient).collect::<Result<_, _>>()?;
    let reg = Regularizer::new(level, w);
    let rels = generate(&reg, w, None, Mode::ModTorsion, &all_families(), &mut vec![]);
    let rels: Vec<_> = rels.into_iter().filter(|r| r.row.is_homogeneous(w)).collect();
    let mut failures = vec![];
    for r in &rels {
        let mut acc: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        for (a, right, c) in delta(&r.row).iter() {
            let b = &right[0];
            let (qa, qb) = (&lower[a.weight() - 1], &lower[b.weight() - 1]);
            for (i, x) in qa.normal_form(a) {
                for (j, y) in qb.normal_form(b) {
                    *acc.entry((a.weight(), i, j)).or_insert_with(Rational::zero) += c * &x * &y;
                }
            }
        }
        if acc.values().any(|v| !v.is_zero()) {
            failures.push(r.source.clone());
        }
    }
    Ok(CoidealCheck { level, weight: w, rows: rels.len(), failures })
}
