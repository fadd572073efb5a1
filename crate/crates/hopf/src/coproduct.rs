use std::collections::BTreeMap;

use mpl_core::{iword_to_li_signed, li_to_iword_signed, qi, Arg, GeneralI, IWord, LiSymbol, LinComb, Rational, Symbol};
use num_traits::{One, Zero};

use crate::normal::{gap, poly_mul, poly_one, word_to_li};
use crate::tensor::TensorComb;
use crate::HopfError;

/// The degenerate identities for short integrals: `I(a; ...; a) = 0`,
/// `I(0; 0, 1; 1) = I(0; 0, 0; 1) = I(0; 1, 1; 1) = 0`,
/// `I(0; 0, a; 1) = −I(0; a, 0; 1)`, and for root endpoints
/// `I(0; v; c) = I(0; v/c; 1)`, `I(a; v; 0) = (−1)^{|v|} I(0; rev v; a)`.
pub fn degenerate_i_rules(s: &GeneralI) -> LinComb<GeneralI> {
    let n = s.level();
    let (a, v, c) = (s.lower(), s.letters(), s.upper());
    if v.is_empty() {
        return LinComb::from_symbol(s.clone());
    }
    if a == c {
        return LinComb::new(n);
    }
    if let (Arg::Root(_), Arg::Zero) = (a, c) {
        let rev: Vec<Arg> = v.iter().rev().copied().collect();
        let sign = if v.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
        return degenerate_i_rules(&GeneralI::new(n, Arg::Zero, rev, a)).scale(&sign);
    }
    let one = Arg::Root(0);
    match (a, v, c) {
        (Arg::Zero, [Arg::Zero, x], c) if c == one && (x.is_zero() || *x == one) => LinComb::new(n),
        (Arg::Zero, [x, y], c) if c == one && *x == one && *y == one => LinComb::new(n),
        (Arg::Zero, [Arg::Zero, x], c) if c == one => {
            LinComb::from_term(GeneralI::new(n, Arg::Zero, vec![*x, Arg::Zero], c), -Rational::one())
        }
        _ => LinComb::from_symbol(s.clone()),
    }
}

fn endpoints_ok(s: &GeneralI) -> Result<IWord, HopfError> {
    s.as_word().ok_or_else(|| HopfError::Endpoints(s.to_string()))
}

/// Terms of `Δ` for one choice of kept positions (a bitmask over the letters).
fn subset_terms(level: u32, letters: &[Arg], mask: u64) -> TensorComb {
    let mut kept = vec![];
    let mut bounds = vec![(Arg::Zero, 0usize)];
    for (i, &a) in letters.iter().enumerate() {
        if mask >> i & 1 == 1 {
            kept.push(a);
            bounds.push((a, i + 1));
        }
    }
    bounds.push((Arg::Root(0), letters.len() + 1));
    let mut right = poly_one();
    for w in bounds.windows(2) {
        let ((a, i), (c, j)) = (w[0], w[1]);
        right = poly_mul(&right, &gap(level, a, &letters[i..j - 1], c));
        if right.is_empty() {
            return TensorComb::new(level);
        }
    }
    let left = word_to_li(&IWord::new(level, kept));
    let mut out = TensorComb::new(level);
    for (l, c) in left.iter() {
        for (m, d) in &right {
            out.add_term(l.clone(), m.clone(), c * d);
        }
    }
    out
}

#[cfg(feature = "parallel")]
fn collect_subsets(level: u32, letters: &[Arg]) -> Vec<TensorComb> {
    use rayon::prelude::*;
    (0..1u64 << letters.len()).into_par_iter().map(|m| subset_terms(level, letters, m)).collect()
}

#[cfg(not(feature = "parallel"))]
fn collect_subsets(level: u32, letters: &[Arg]) -> Vec<TensorComb> {
    (0..1u64 << letters.len()).map(|m| subset_terms(level, letters, m)).collect()
}

/// `Δ I(0; a_1..a_n; 1)`, summed over subsequences. Both legs are written in
/// admissible `Li` symbols modulo torsion, right legs as products.
pub fn coproduct_i(s: &GeneralI) -> Result<TensorComb, HopfError> {
    let w = endpoints_ok(s)?;
    if w.len() > 24 {
        return Err(HopfError::TooLong(w.len()));
    }
    let mut out = TensorComb::new(s.level());
    for t in collect_subsets(s.level(), w.letters()) {
        out.add_scaled(&t, &Rational::one());
    }
    Ok(out)
}

/// `Δ Li_n(x)` through the iterated integral form.
pub fn coproduct_li(s: &LiSymbol) -> TensorComb {
    let (sign, w) = li_to_iword_signed(s);
    coproduct_i(&GeneralI::from_word(&w)).expect("words run from 0 to 1").scale(&qi(sign))
}

/// `Δ' = Δ − (x ⊗ 1 + 1 ⊗ x)`.
pub fn reduced_coproduct(t: &TensorComb) -> TensorComb {
    t.reduced()
}

pub(crate) fn unit_coproduct(level: u32) -> TensorComb {
    let mut t = TensorComb::new(level);
    t.add_term(LiSymbol::unit(level), vec![], Rational::one());
    t
}

pub(crate) fn li_of_points(level: u32, pts: &[Arg], idx: &[u32]) -> (i64, LiSymbol) {
    let last = pts.last().and_then(Arg::root).expect("last point is a root");
    let mut letters = vec![];
    for (p, &n) in pts[..pts.len() - 1].iter().zip(idx) {
        letters.push(p.scale(level, -(last as i64)));
        letters.extend(std::iter::repeat(Arg::Zero).take(n as usize - 1));
    }
    iword_to_li_signed(&IWord::new(level, letters)).expect("points are roots")
}

fn delta_canonical(s: &LiSymbol) -> TensorComb {
    if s.is_unit() {
        unit_coproduct(s.level())
    } else {
        coproduct_li(s).canonical()
    }
}

/// `(Δ ⊗ id)Δ(s) − (id ⊗ Δ)Δ(s)` with every leg in canonical form; empty when
/// the coproduct is coassociative on `s`.
pub fn coassociator(s: &LiSymbol) -> BTreeMap<(LiSymbol, LiSymbol, LiSymbol), Rational> {
    let n = s.level();
    let leg = |r: &[LiSymbol]| r.first().cloned().unwrap_or_else(|| LiSymbol::unit(n));
    let mut out: BTreeMap<(LiSymbol, LiSymbol, LiSymbol), Rational> = BTreeMap::new();
    for (a, r, c) in delta_canonical(s).iter() {
        let b = leg(r);
        for (a2, r2, c2) in delta_canonical(a).iter() {
            *out.entry((a2.clone(), leg(r2), b.clone())).or_insert_with(Rational::zero) += c * c2;
        }
        for (b2, r2, c2) in delta_canonical(&b).iter() {
            *out.entry((a.clone(), b2.clone(), leg(r2))).or_insert_with(Rational::zero) -= c * c2;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}
