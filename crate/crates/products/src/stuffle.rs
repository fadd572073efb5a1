use std::collections::BTreeMap;

use mpl_core::{qi, LiSymbol, LinComb, Symbol};

use crate::{check_level, ProductError};

type Slots = Vec<(u32, u32)>;

fn quasi_shuffle(a: &[(u32, u32)], b: &[(u32, u32)], level: u32, merges: bool) -> BTreeMap<Slots, i64> {
    let (p, q) = (a.len(), b.len());
    let mut table: Vec<Vec<BTreeMap<Slots, i64>>> = vec![vec![BTreeMap::new(); q + 1]; p + 1];
    table[p][q].insert(Vec::new(), 1);
    let prepend = |cell: &mut BTreeMap<Slots, i64>, head: (u32, u32), from: &BTreeMap<Slots, i64>| {
        for (w, c) in from {
            let mut x = Vec::with_capacity(w.len() + 1);
            x.push(head);
            x.extend_from_slice(w);
            *cell.entry(x).or_insert(0) += c;
        }
    };
    for i in (0..=p).rev() {
        for j in (0..=q).rev() {
            if i == p && j == q {
                continue;
            }
            let mut cell = BTreeMap::new();
            if i < p {
                prepend(&mut cell, a[i], &table[i + 1][j]);
            }
            if j < q {
                prepend(&mut cell, b[j], &table[i][j + 1]);
            }
            if merges && i < p && j < q {
                let head = (a[i].0 + b[j].0, (a[i].1 + b[j].1) % level);
                prepend(&mut cell, head, &table[i + 1][j + 1]);
            }
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
}

fn collect(level: u32, m: BTreeMap<Slots, i64>) -> LinComb<LiSymbol> {
    let mut out = LinComb::new(level);
    for (slots, c) in m {
        out.add_term(LiSymbol::from_slots(level, &slots), qi(c));
    }
    out
}

/// Product of the power series: a sum over generalized shuffles, where a merged
/// slot adds the indices and multiplies the arguments.
pub fn stuffle_product(a: &LiSymbol, b: &LiSymbol) -> Result<LinComb<LiSymbol>, ProductError> {
    check_level(a.level(), b.level())?;
    let sa: Slots = a.slots().collect();
    let sb: Slots = b.slots().collect();
    Ok(collect(a.level(), quasi_shuffle(&sa, &sb, a.level(), true)))
}

/// Only the merge-free shuffles, i.e. the top-depth part of [`stuffle_product`].
pub fn stuffle_merge_free(a: &LiSymbol, b: &LiSymbol) -> Result<LinComb<LiSymbol>, ProductError> {
    check_level(a.level(), b.level())?;
    let sa: Slots = a.slots().collect();
    let sb: Slots = b.slots().collect();
    Ok(collect(a.level(), quasi_shuffle(&sa, &sb, a.level(), false)))
}

pub fn stuffle_lincomb(a: &LinComb<LiSymbol>, b: &LinComb<LiSymbol>) -> Result<LinComb<LiSymbol>, ProductError> {
    check_level(a.level(), b.level())?;
    let mut out = LinComb::new(a.level());
    for (u, x) in a {
        for (v, y) in b {
            out.add_scaled(&stuffle_product(u, v)?, &(x * y));
        }
    }
    Ok(out)
}

/// `a^k` under the stuffle product; `a^0` is the unit.
pub fn stuffle_power(a: &LinComb<LiSymbol>, k: usize) -> LinComb<LiSymbol> {
    let mut out = LinComb::from_symbol(LiSymbol::unit(a.level()));
    for _ in 0..k {
        out = stuffle_lincomb(&out, a).expect("same level");
    }
    out
}
