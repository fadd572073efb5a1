use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use mpl_core::{compositions, li_symbols, q, qi, LiSymbol, LinComb, Rational};
use mpl_hopf::inversion_expand;
use mpl_products::{shuffle_product_li, stuffle_lincomb, stuffle_merge_free, stuffle_product};
use mpl_regularization::{compare, RegPoly, Regularizer};
use num_traits::{One, Zero};

use crate::par::par_flat_map;
use crate::RelError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Stuffle,
    Shuffle,
    Comparison,
    Distribution,
    Inversion,
    Normalization,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Stuffle, Family::Shuffle, Family::Comparison, Family::Distribution, Family::Inversion, Family::Normalization];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Stuffle => "stuffle",
            Family::Shuffle => "shuffle",
            Family::Comparison => "comparison",
            Family::Distribution => "distribution",
            Family::Inversion => "inversion",
            Family::Normalization => "normalization",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = RelError;
    fn from_str(s: &str) -> Result<Self, RelError> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| RelError::UnknownFamily(s.to_string()))
    }
}

pub type FamilySet = BTreeSet<Family>;

pub fn all_families() -> FamilySet {
    Family::ALL.into_iter().collect()
}

/// Parses a comma-separated family list.
pub fn parse_families(s: &str) -> Result<FamilySet, RelError> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::parse).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Identities between actual (regularized) values.
    Exact,
    /// Exact identities with logarithms of roots of unity set to zero.
    ModTorsion,
    /// Top-depth part modulo products and lower depth.
    DepthGraded,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::ModTorsion => "mod-torsion",
            Mode::DepthGraded => "depth-graded",
        })
    }
}

/// A relation `row = 0` with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub row: LinComb<LiSymbol>,
    pub family: Family,
    pub source: String,
}

fn rows_of(p: &RegPoly, family: Family, source: &str) -> Vec<Relation> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| Relation { row: c.clone(), family, source: format!("{source} [L^{k}]") })
        .collect()
}

fn sum_regularized(lc: &LinComb<LiSymbol>, level: u32, f: impl Fn(&LiSymbol) -> RegPoly) -> RegPoly {
    let mut out = RegPoly::zero(level);
    for (t, c) in lc {
        out = out.add_scaled(&f(t), c);
    }
    out
}

/// Unordered pairs `(a, b)` with `w(a) + w(b) = w` from the given weight lists.
fn pairs(level: u32, w: usize, keep: impl Fn(&LiSymbol, &LiSymbol) -> bool) -> Vec<(LiSymbol, LiSymbol)> {
    let mut out = Vec::new();
    for w1 in 1..=w / 2 {
        let left = li_symbols(level, w1 as u32, None);
        let right = li_symbols(level, (w - w1) as u32, None);
        for a in &left {
            for b in &right {
                if (w1 * 2 < w || a <= b) && keep(a, b) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

/// Double shuffle relations of weight `w`. Regularized: every pair with at
/// least one admissible factor, `Σ_{a*b} L̂i - 𝕃(Σ_{aшb} Î)`, one row per power
/// of `L`. Plain: pairs of admissible symbols, `a*b - aшb`.
pub fn double_shuffle(reg: &Regularizer, w: usize, regularized: bool) -> Vec<Relation> {
    let level = reg.level();
    let ps = pairs(level, w, |a, b| if regularized { a.is_admissible() || b.is_admissible() } else { a.is_admissible() && b.is_admissible() });
    par_flat_map(&ps, |(a, b)| {
        let st = stuffle_product(a, b).expect("same level");
        let sh = shuffle_product_li(a, b).expect("same level");
        let source = format!("{a} * {b}");
        if regularized {
            let lhs = sum_regularized(&st, level, |t| reg.stuffle(t).expect("weight bound"));
            let rhs = reg.comparison_map(&sum_regularized(&sh, level, |t| reg.shuffle(t).expect("weight bound")));
            rows_of(&lhs.sub(&rhs), Family::Stuffle, &source)
        } else {
            let row = st.sub(&sh);
            if row.is_zero() {
                vec![]
            } else {
                vec![Relation { row, family: Family::Stuffle, source }]
            }
        }
    })
}

/// `L̂i(s) - 𝕃(Î(s))` for every divergent symbol of weight `w`.
pub fn comparison_rows(reg: &Regularizer, w: usize) -> Vec<Relation> {
    let syms: Vec<LiSymbol> = li_symbols(reg.level(), w as u32, None).into_iter().filter(|s| !s.is_admissible()).collect();
    par_flat_map(&syms, |s| {
        let c = compare(reg, s).expect("weight bound");
        rows_of(&c.difference, Family::Comparison, &format!("compare {s}"))
    })
}

fn divisors(n: u32) -> Vec<u32> {
    (2..=n).filter(|l| n % l == 0).collect()
}

/// All tuples in `0..base` of length `m`.
fn tuples(base: u32, m: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..base).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

/// `log l = -Σ_{ζ^l = 1, ζ ≠ 1} Li_1(ζ)` at level `N`.
pub fn log_of(level: u32, l: u32) -> LinComb<LiSymbol> {
    let mut out = LinComb::new(level);
    for j in 1..l {
        out.add_term(LiSymbol::new(level, vec![1], vec![j * (level / l)]).expect("valid"), -Rational::one());
    }
    out
}

/// The `l`-th roots `y` (componentwise) of `x = ζ_N^{l e}` and the symbol at `x`.
fn distribution_instance(level: u32, idx: &[u32], e: &[u32], l: u32) -> (LiSymbol, Vec<LiSymbol>) {
    let step = level / l;
    let x = LiSymbol::new(level, idx.to_vec(), e.iter().map(|k| (k * l) % level).collect()).expect("valid");
    let ys = tuples(l, e.len())
        .into_iter()
        .map(|js| {
            let args = e.iter().zip(&js).map(|(k, j)| (k + j * step) % level).collect();
            LiSymbol::new(level, idx.to_vec(), args).expect("valid")
        })
        .collect();
    (x, ys)
}

fn pow_q(base: u32, e: i64) -> Rational {
    let b = qi(base as i64);
    if e >= 0 {
        (0..e).fold(Rational::one(), |acc, _| acc * &b)
    } else {
        (0..-e).fold(Rational::one(), |acc, _| acc / &b)
    }
}

/// Exact distribution relations `Σ_{y^l = x} L̂i(y)(L) = l^{m-w} L̂i(x)(L + log l)`
/// for every divisor `l > 1` of `N`, all depths. Weight-1 instances at `x = 1`
/// are tautological and skipped; the skip is reported in `notes`.
pub fn distribution_exact(reg: &Regularizer, w: usize, notes: &mut Vec<String>) -> Vec<Relation> {
    let level = reg.level();
    let mut jobs = Vec::new();
    for l in divisors(level) {
        for idx in compositions(w as u32, None) {
            for e in tuples(level / l, idx.len()) {
                if w == 1 && e[0] == 0 {
                    notes.push(format!("distribution: skipped tautological weight-1 instance x = 1, l = {l}"));
                    continue;
                }
                jobs.push((l, idx.clone(), e));
            }
        }
    }
    par_flat_map(&jobs, |(l, idx, e)| {
        let (x, ys) = distribution_instance(level, idx, e, *l);
        let mut lhs = RegPoly::zero(level);
        for y in &ys {
            lhs = lhs.add(&reg.stuffle(y).expect("weight bound"));
        }
        let factor = pow_q(*l, idx.len() as i64 - w as i64);
        let rhs = reg.stuffle(&x).expect("weight bound").translate(&log_of(level, *l)).scale(&factor);
        rows_of(&lhs.sub(&rhs), Family::Distribution, &format!("distribution {x}, l = {l}"))
    })
}

/// Depth-graded distribution rows `Li(x) - l^{w-m} Σ_{y^l = x} Li(y)`.
pub fn distribution_graded(level: u32, w: usize, m: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for l in divisors(level) {
        let factor = pow_q(l, w as i64 - m as i64);
        for idx in compositions(w as u32, Some(m)) {
            for e in tuples(level / l, m) {
                let (x, ys) = distribution_instance(level, &idx, &e, l);
                // Σ_{y^l = 1} Li_1(y) is −log l, not a depth-one symbol
                if w == 1 && x.args()[0] == 0 {
                    continue;
                }
                let mut row = LinComb::from_symbol(x.clone());
                for y in ys {
                    row.add_term(y, -factor.clone());
                }
                if !row.is_zero() {
                    out.push(Relation { row, family: Family::Distribution, source: format!("distribution {x}, l = {l}") });
                }
            }
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r = r * qi((n - i) as i64) / qi((i + 1) as i64);
    }
    r
}

/// Bernoulli numbers `B_0..B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=n {
        let mut s = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += binomial(m + 1, k) * bk;
        }
        b.push(-s / qi(m as i64 + 1));
    }
    b
}

/// `B_n(x)`.
pub fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    let b = bernoulli_numbers(n);
    let mut out = Rational::zero();
    let mut xp = Rational::one();
    for k in (0..=n).rev() {
        out += binomial(n, k) * &b[k] * &xp;
        xp *= x;
    }
    out
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * qi(k as i64))
}

/// `(2πi)^n` as a combination of weight-`n` symbols at level `N`, when expressible:
/// even `n` through `ζ(n)`, odd `n` through `2πi = 2N/(N-2) (Li_1(ζ_N) - Li_1(ζ_N^{-1}))`.
pub fn two_pi_i_power(level: u32, n: usize) -> Option<LinComb<LiSymbol>> {
    let zeta = |k: usize| LinComb::from_symbol(LiSymbol::new(level, vec![k as u32], vec![0]).expect("valid"));
    if n % 2 == 0 {
        let b = bernoulli_numbers(n);
        // ζ(n) = -B_n (2πi)^n / (2 n!)
        return Some(zeta(n).scale(&(qi(-2) * factorial(n) / &b[n])));
    }
    if level < 3 {
        return None;
    }
    let mut t = LinComb::from_symbol(LiSymbol::new(level, vec![1], vec![1]).expect("valid"));
    t.add_term(LiSymbol::new(level, vec![1], vec![level - 1]).expect("valid"), -Rational::one());
    let t = t.scale(&q(2 * level as i64, level as i64 - 2));
    if n == 1 {
        return Some(t);
    }
    let even = two_pi_i_power(level, n - 1)?;
    Some(mpl_products::stuffle_lincomb(&t, &even).expect("same level"))
}

/// Depth-1 inversion. Exact mode: `Li_n(x) + (-1)^n Li_n(x^{-1}) + B_n(θ)/n! (2πi)^n`
/// with `x = e^{2πiθ}`; modulo torsion the Bernoulli term is dropped. Depth-graded:
/// the top-depth projection for every symbol of depth `m`.
pub fn inversion(level: u32, w: usize, m: Option<usize>, mode: Mode) -> Vec<Relation> {
    let mut out = Vec::new();
    match mode {
        Mode::DepthGraded => {
            let m = m.expect("depth-graded inversion needs a depth");
            for s in li_symbols(level, w as u32, Some(m)) {
                let row = inversion_expand(&s);
                if !row.is_zero() {
                    out.push(Relation { row, family: Family::Inversion, source: format!("inversion {s}") });
                }
            }
        }
        Mode::Exact | Mode::ModTorsion => {
            for k in 0..level {
                let s = LiSymbol::new(level, vec![w as u32], vec![k]).expect("valid");
                if !s.is_admissible() {
                    continue;
                }
                let inv = LiSymbol::new(level, vec![w as u32], vec![(level - k) % level]).expect("valid");
                let mut row = LinComb::from_symbol(s.clone());
                row.add_term(inv, qi(if w % 2 == 0 { 1 } else { -1 }));
                if mode == Mode::Exact {
                    let b = bernoulli_poly(w, &q(k as i64, level as i64));
                    if !b.is_zero() {
                        let p = two_pi_i_power(level, w).expect("odd Bernoulli terms vanish for N <= 2");
                        row.add_scaled(&p, &(b / factorial(w)));
                    }
                }
                if !row.is_zero() {
                    out.push(Relation { row, family: Family::Inversion, source: format!("inversion {s}") });
                }
            }
        }
    }
    out
}

/// Products of the torsion generators with admissible symbols: the weight-one
/// inversion rows (logarithms of roots of unity) and `ζ(2)`.
fn torsion_ideal(level: u32, w: usize) -> Vec<Relation> {
    let admissible = |k: usize| -> Vec<LiSymbol> {
        li_symbols(level, k as u32, None).into_iter().filter(|s| s.is_admissible()).collect()
    };
    let mut gens: Vec<(usize, LinComb<LiSymbol>, String)> = Vec::new();
    if w >= 2 {
        for r in inversion(level, 1, None, Mode::ModTorsion) {
            gens.push((1, r.row, r.source));
        }
    }
    if w >= 3 {
        let z = LiSymbol::new(level, vec![2], vec![0]).expect("valid");
        gens.push((2, LinComb::from_symbol(z), "(2πi)^2".into()));
    }
    let mut out = Vec::new();
    for (k, g, src) in gens {
        for x in admissible(w - k) {
            let row = stuffle_lincomb(&g, &LinComb::from_symbol(x.clone())).expect("same level");
            if !row.is_zero() {
                out.push(Relation { row, family: Family::Inversion, source: format!("torsion ideal: ({src}) * {x}") });
            }
        }
    }
    out
}

/// Depth-graded double shuffle rows at `(w, m)`: merge-free stuffles and word shuffles of
/// pairs whose depths and weights add up.
pub fn double_shuffle_graded(level: u32, w: usize, m: usize, stuffle: bool, shuffle: bool) -> Vec<Relation> {
    let mut ps = Vec::new();
    for w1 in 1..w {
        for m1 in 1..m {
            let (w2, m2) = (w - w1, m - m1);
            if (w1, m1) > (w2, m2) || w1 < m1 || w2 < m2 {
                continue;
            }
            let left = li_symbols(level, w1 as u32, Some(m1));
            let right = li_symbols(level, w2 as u32, Some(m2));
            for a in &left {
                for b in &right {
                    if (w1, m1) < (w2, m2) || a <= b {
                        ps.push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    par_flat_map(&ps, |(a, b)| {
        let mut rows = Vec::new();
        if stuffle {
            let row = stuffle_merge_free(a, b).expect("same level");
            if !row.is_zero() {
                rows.push(Relation { row, family: Family::Stuffle, source: format!("{a} * {b}") });
            }
        }
        if shuffle {
            let row = shuffle_product_li(a, b).expect("same level");
            if !row.is_zero() {
                rows.push(Relation { row, family: Family::Shuffle, source: format!("{a} ш {b}") });
            }
        }
        rows
    })
}

/// `Li_1(1) ≡ 0`.
pub fn normalization(level: u32, w: usize, m: usize) -> Vec<Relation> {
    if (w, m) != (1, 1) {
        return vec![];
    }
    let s = LiSymbol::new(level, vec![1], vec![0]).expect("valid");
    vec![Relation { row: LinComb::from_symbol(s), family: Family::Normalization, source: "Li_1(1)".into() }]
}

/// Every relation of the enabled families at weight `w` (and depth `m` when graded).
pub fn generate(
    reg: &Regularizer,
    w: usize,
    m: Option<usize>,
    mode: Mode,
    families: &FamilySet,
    notes: &mut Vec<String>,
) -> Vec<Relation> {
    let level = reg.level();
    let on = |f: Family| families.contains(&f);
    let mut out = Vec::new();
    match mode {
        Mode::DepthGraded => {
            let m = m.expect("depth-graded relations need a depth");
            out.extend(double_shuffle_graded(level, w, m, on(Family::Stuffle), on(Family::Shuffle)));
            if on(Family::Distribution) {
                out.extend(distribution_graded(level, w, m));
            }
            if on(Family::Inversion) {
                out.extend(inversion(level, w, Some(m), mode));
            }
            if on(Family::Normalization) {
                out.extend(normalization(level, w, m));
            }
        }
        Mode::Exact | Mode::ModTorsion => {
            if on(Family::Stuffle) && on(Family::Shuffle) {
                out.extend(double_shuffle(reg, w, true));
            } else if on(Family::Stuffle) || on(Family::Shuffle) {
                notes.push("double shuffle needs both stuffle and shuffle; skipped".into());
            }
            if on(Family::Comparison) {
                out.extend(comparison_rows(reg, w));
            }
            if on(Family::Distribution) {
                out.extend(distribution_exact(reg, w, notes));
            }
            if on(Family::Inversion) {
                out.extend(inversion(level, w, None, mode));
            }
            if mode == Mode::ModTorsion {
                if w % 2 == 0 {
                    // ζ(w) is a rational multiple of (2πi)^w
                    let z = LiSymbol::new(level, vec![w as u32], vec![0]).expect("valid");
                    out.push(Relation { row: LinComb::from_symbol(z), family: Family::Inversion, source: format!("(2πi)^{w} ≡ 0") });
                }
                if on(Family::Inversion) {
                    out.extend(torsion_ideal(level, w));
                }
            }
        }
    }
    out
}
