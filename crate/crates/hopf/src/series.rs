use mpl_core::{LiSymbol, Rational, Symbol};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coproduct::unit_coproduct;
use crate::tensor::TensorComb;
use crate::HopfError;

fn binom(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// All ways to write `d_s ≥ 0` over `len` slots with sum at most `cap`.
fn excess(len: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = vec![];
        for v in out {
            let used: u32 = v.iter().sum();
            for d in 0..=cap - used {
                let mut w = v.clone();
                w.push(d);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Chains `0 < i_1 ≤ j_1 < i_2 ≤ ... ≤ j_k ≤ m` (1-based slots).
fn chains(m: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(start: usize, m: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(cur.clone());
        for i in start..=m {
            for j in i..=m {
                cur.push((i, j));
                go(j + 1, m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = vec![];
    go(1, m, &mut vec![], &mut out);
    out
}

/// One right-leg block: slots `s` with argument exponents and `(c_s, sign_flip)`;
/// `sign_flip` marks factors `(t_j − t_s)^e`, whose extraction carries `(−1)^c`.
struct Block {
    args: Vec<i64>,
    c: Vec<u32>,
    flip: Vec<bool>,
}

/// `Δ Li_n(x)` from the coproduct of the generating series, with torsion
/// logarithms set to zero. Merged slots become divided differences, which here
/// reduce to binomial coefficients of the shifted variables.
pub fn coproduct_li_series(s: &LiSymbol, max_weight: usize) -> Result<TensorComb, HopfError> {
    let n = s.level();
    if s.weight() > max_weight {
        return Err(HopfError::Cutoff(s.weight(), max_weight));
    }
    if s.is_unit() {
        return Ok(unit_coproduct(n));
    }
    let m = s.depth();
    let idx = s.idx();
    let x: Vec<i64> = s.args().iter().map(|&a| a as i64).collect();
    let mut out = TensorComb::new(n);
    for chain in chains(m) {
        // gap 0: slots 1..i_1, exact indices
        let i1 = chain.first().map_or(m + 1, |p| p.0);
        let mut right0 = vec![];
        if i1 > 1 {
            right0.push(LiSymbol::from_exps(n, &idx[..i1 - 1], &x[..i1 - 1]));
        }
        let mut left_args = vec![];
        let mut blocks = vec![];
        let mut sign = 1i64;
        for (p, &(i, j)) in chain.iter().enumerate() {
            let next = chain.get(p + 1).map_or(m + 1, |q| q.0);
            left_args.push((i..next).map(|t| x[t - 1]).sum::<i64>());
            if (j - i) % 2 == 1 {
                sign = -sign;
            }
            let below = Block {
                args: (i..j).rev().map(|t| -x[t - 1]).collect(),
                c: (i..j).rev().map(|t| idx[t - 1] - 1).collect(),
                flip: vec![true; j - i],
            };
            let above = Block {
                args: (j + 1..next).map(|t| x[t - 1]).collect(),
                c: (j + 1..next).map(|t| idx[t - 1] - 1).collect(),
                flip: vec![false; next - j - 1],
            };
            blocks.push((idx[j - 1], below, above));
        }
        // choose the excess d_s of each gap independently
        let mut partial: Vec<(Vec<u32>, Vec<LiSymbol>, BigInt)> = vec![(vec![], right0, BigInt::one())];
        for (nj, below, above) in &blocks {
            let len = below.c.len() + above.c.len();
            let mut next = vec![];
            for d in excess(len, nj - 1) {
                let (db, da) = d.split_at(below.c.len());
                let mut coef = BigInt::one();
                let mut legs = vec![];
                for (blk, ds) in [(below, db), (above, da)] {
                    if blk.c.is_empty() {
                        continue;
                    }
                    let mut e_idx = vec![];
                    for k in 0..blk.c.len() {
                        let (c, e) = (blk.c[k], blk.c[k] + ds[k]);
                        coef *= binom(e, c);
                        let odd = if blk.flip[k] { c % 2 == 1 } else { (e - c) % 2 == 1 };
                        if odd {
                            coef = -coef;
                        }
                        e_idx.push(e + 1);
                    }
                    legs.push(LiSymbol::from_exps(n, &e_idx, &blk.args));
                }
                let nu = nj - d.iter().sum::<u32>();
                for (nus, r, c) in &partial {
                    let mut nus = nus.clone();
                    nus.push(nu);
                    let mut r = r.clone();
                    r.extend(legs.iter().cloned());
                    next.push((nus, r, c * &coef));
                }
            }
            partial = next;
        }
        for (nus, right, c) in partial {
            if c.is_zero() {
                continue;
            }
            let left = if nus.is_empty() { LiSymbol::unit(n) } else { LiSymbol::from_exps(n, &nus, &left_args) };
            out.add_term(left, right, Rational::from_integer(c * sign));
        }
    }
    Ok(out)
}
