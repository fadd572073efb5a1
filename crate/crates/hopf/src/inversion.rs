use mpl_core::{qi, LiSymbol, LinComb, Symbol};

/// The inversion identity modulo torsion, projected to top depth.
///
/// In depth 1 this is the full identity `Li_n(x) + (-1)^n Li_n(x^{-1}) ≡ 0`.
/// In depth `m ≥ 2` products and lower depth terms are dropped, leaving
/// `Li_{n_1..n_m}(x_1..x_m) + (-1)^w Li_{n_m..n_1}(x_m^{-1}..x_1^{-1})`.
pub fn inversion_expand(s: &LiSymbol) -> LinComb<LiSymbol> {
    let n = s.level();
    let mut out = LinComb::new(n);
    if s.is_unit() {
        return out;
    }
    let idx: Vec<u32> = s.idx().iter().rev().copied().collect();
    let args: Vec<u32> = s.args().iter().rev().map(|a| (n - a) % n).collect();
    let inv = LiSymbol::new(n, idx, args).expect("valid symbol");
    out.add_term(s.clone(), qi(1));
    out.add_term(inv, qi(if s.weight() % 2 == 0 { 1 } else { -1 }));
    out
}
