use std::collections::BTreeMap;

use mpl_core::{iword_to_li_signed, li_to_iword_signed, qi, Arg, IWord, LiSymbol, LinComb, Symbol};

use crate::{check_level, ProductError};

/// Every interleaving of `u` and `v`, one entry per interleaving (not collected).
pub fn shuffle_words_raw(u: &[Arg], v: &[Arg]) -> Vec<Vec<Arg>> {
    let n = u.len() + v.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(u: &[Arg], v: &[Arg], cur: &mut Vec<Arg>, out: &mut Vec<Vec<Arg>>) {
        if u.is_empty() && v.is_empty() {
            out.push(cur.clone());
            return;
        }
        if let Some((&a, rest)) = u.split_first() {
            cur.push(a);
            rec(rest, v, cur, out);
            cur.pop();
        }
        if let Some((&b, rest)) = v.split_first() {
            cur.push(b);
            rec(u, rest, cur, out);
            cur.pop();
        }
    }
    rec(u, v, &mut cur, &mut out);
    out
}

/// Collected shuffle `u ш v` as word -> multiplicity.
pub(crate) fn shuffle_counts(u: &[Arg], v: &[Arg]) -> BTreeMap<Vec<Arg>, i64> {
    let (p, q) = (u.len(), v.len());
    // table[i][j]: words built from u[i..] and v[j..]
    let mut table: Vec<Vec<BTreeMap<Vec<Arg>, i64>>> = vec![vec![BTreeMap::new(); q + 1]; p + 1];
    table[p][q].insert(Vec::new(), 1);
    for i in (0..=p).rev() {
        for j in (0..=q).rev() {
            if i == p && j == q {
                continue;
            }
            let mut cell = BTreeMap::new();
            if i < p {
                for (w, c) in &table[i + 1][j] {
                    let mut x = Vec::with_capacity(w.len() + 1);
                    x.push(u[i]);
                    x.extend_from_slice(w);
                    *cell.entry(x).or_insert(0) += c;
                }
            }
            if j < q {
                for (w, c) in &table[i][j + 1] {
                    let mut x = Vec::with_capacity(w.len() + 1);
                    x.push(v[j]);
                    x.extend_from_slice(w);
                    *cell.entry(x).or_insert(0) += c;
                }
            }
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
}

pub fn shuffle_words(u: &IWord, v: &IWord) -> Result<LinComb<IWord>, ProductError> {
    check_level(u.level(), v.level())?;
    let mut out = LinComb::new(u.level());
    for (w, c) in shuffle_counts(u.letters(), v.letters()) {
        out.add_term(IWord::new(u.level(), w), qi(c));
    }
    Ok(out)
}

pub fn shuffle_lincomb_words(a: &LinComb<IWord>, b: &LinComb<IWord>) -> Result<LinComb<IWord>, ProductError> {
    check_level(a.level(), b.level())?;
    let mut out = LinComb::new(a.level());
    for (u, x) in a {
        for (v, y) in b {
            out.add_scaled(&shuffle_words(u, v)?, &(x * y));
        }
    }
    Ok(out)
}

/// The product of two symbols computed through their integral words:
/// `Li_a Li_b = (-1)^{m_a+m_b} Σ_{w ∈ a ш b} (-1)^{m_w} Li_w`.
pub fn shuffle_product_li(a: &LiSymbol, b: &LiSymbol) -> Result<LinComb<LiSymbol>, ProductError> {
    check_level(a.level(), b.level())?;
    let (sa, wa) = li_to_iword_signed(a);
    let (sb, wb) = li_to_iword_signed(b);
    let mut out = LinComb::new(a.level());
    for (w, c) in shuffle_counts(wa.letters(), wb.letters()) {
        let (sw, s) = iword_to_li_signed(&IWord::new(a.level(), w)).expect("shuffle keeps a nonzero first letter");
        out.add_term(s, qi(c * sa * sb * sw));
    }
    Ok(out)
}

pub fn shuffle_product_li_lincomb(a: &LinComb<LiSymbol>, b: &LinComb<LiSymbol>) -> Result<LinComb<LiSymbol>, ProductError> {
    check_level(a.level(), b.level())?;
    let mut out = LinComb::new(a.level());
    for (u, x) in a {
        for (v, y) in b {
            out.add_scaled(&shuffle_product_li(u, v)?, &(x * y));
        }
    }
    Ok(out)
}
