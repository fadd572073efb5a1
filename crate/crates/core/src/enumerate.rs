use crate::symbol::{Arg, IWord, LiSymbol};

/// Compositions of `w` into exactly `m` positive parts, or any number of parts when `m` is `None`.
pub fn compositions(w: u32, m: Option<usize>) -> Vec<Vec<u32>> {
    fn rec(rest: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for first in 1..=rest.saturating_sub(parts as u32 - 1) {
            cur.push(first);
            rec(rest - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let depths: Vec<usize> = match m {
        Some(m) => vec![m],
        None => (if w == 0 { 0 } else { 1 }..=w as usize).collect(),
    };
    for d in depths {
        rec(w, d, &mut Vec::new(), &mut out);
    }
    out
}

fn tuples(level: u32, m: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..level).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

/// All symbols of weight `w` (and depth `m`, if given) at level `N`, sorted.
pub fn li_symbols(level: u32, w: u32, m: Option<usize>) -> Vec<LiSymbol> {
    let mut out = Vec::new();
    for comp in compositions(w, m) {
        for args in tuples(level, comp.len()) {
            out.push(LiSymbol::new(level, comp.clone(), args).expect("valid symbol"));
        }
    }
    out.sort();
    out
}

/// All words of length `w` over `{0} ∪ mu_N`.
pub fn words(level: u32, w: usize) -> Vec<IWord> {
    let alphabet: Vec<Arg> = std::iter::once(Arg::Zero).chain((0..level).map(Arg::Root)).collect();
    let mut out: Vec<Vec<Arg>> = vec![vec![]];
    for _ in 0..w {
        out = out
            .into_iter()
            .flat_map(|t| {
                alphabet.iter().map(move |&a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out.into_iter().map(|l| IWord::new(level, l)).collect()
}
