use mpl_core::{li_to_iword_signed, Arg, LiSymbol, Rational, Symbol};
use num_bigint::BigInt;
use num_traits::One;

use crate::coproduct::li_of_points;
use crate::tensor::TensorComb;
use crate::HopfError;

fn binom(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn compositions_bounded(len: usize, total: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = vec![];
    for d in 0..=total {
        for mut rest in compositions_bounded(len - 1, total - d) {
            rest.insert(0, d);
            out.push(rest);
        }
    }
    out
}

/// The depth-graded cobracket of `Li_n(x)`, read as the circle
/// `{a_1 : ... : a_m : 1 | t_1 : ... : t_m : 0}` of its iterated integral.
/// Each cyclic rotation and cut `k` contributes `−A ∧ B`; the cut pieces are
/// expanded in `u_i = t_i − t_{m+1}` and the coefficient of `Π u_i^{n_i − 1}`
/// is read off.
pub fn dihedral_cobracket(s: &LiSymbol) -> Result<TensorComb, HopfError> {
    let level = s.level();
    let m = s.depth();
    if m < 2 {
        return Err(HopfError::DepthOne(s.to_string()));
    }
    let (sign, w) = li_to_iword_signed(s);
    let mut pts: Vec<Arg> = w.letters().iter().copied().filter(|a| !a.is_zero()).collect();
    pts.push(Arg::Root(0));
    // c_j: required power of u_j; the last slot carries no variable
    let mut c: Vec<u32> = s.idx().iter().map(|n| n - 1).collect();
    c.push(0);
    let len = m + 1;
    let mut out = TensorComb::new(level);
    for r in 0..len {
        let reference = (r + m) % len;
        let others: Vec<usize> = (0..len).filter(|&j| j != reference).collect();
        // exponent vectors e_j over j != reference, with coefficients
        let choices: Vec<(Vec<u32>, BigInt)> = if reference == m {
            vec![(c[..m].to_vec(), BigInt::one())]
        } else {
            compositions_bounded(m, c[reference])
                .into_iter()
                .map(|d| {
                    let mut coef = BigInt::one();
                    let e: Vec<u32> = others
                        .iter()
                        .zip(&d)
                        .map(|(&j, &dj)| {
                            coef *= binom(c[j] + dj, c[j]);
                            if dj % 2 == 1 {
                                coef = -&coef;
                            }
                            c[j] + dj
                        })
                        .collect();
                    (e, coef)
                })
                .collect()
        };
        let h: Vec<usize> = (0..len).map(|l| (l + r) % len).collect();
        let hp: Vec<Arg> = h.iter().map(|&j| pts[j]).collect();
        for (e, coef) in choices {
            let exp_of = |j: usize| e[others.iter().position(|&o| o == j).expect("not the reference")] + 1;
            let nu: Vec<u32> = h[..m].iter().map(|&j| exp_of(j)).collect();
            for k in 2..=m {
                let (sa, a) = li_of_points(level, &hp[..k], &nu[..k - 1]);
                let (sb, b) = li_of_points(level, &hp[k - 1..], &nu[k - 1..]);
                let v = Rational::from_integer(&coef * BigInt::from(sign * sa * sb));
                out.add_term(a.clone(), vec![b.clone()], -v.clone());
                out.add_term(b, vec![a], v);
            }
        }
    }
    Ok(out)
}

/// Swaps the legs of a tensor whose right legs are single symbols.
pub fn swap_legs(t: &TensorComb) -> TensorComb {
    let mut out = TensorComb::new(t.level());
    for (l, r, c) in t.iter() {
        assert!(r.len() == 1, "single right legs only");
        out.add_term(r[0].clone(), vec![l.clone()], c.clone());
    }
    out
}
