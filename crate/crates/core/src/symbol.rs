use std::fmt;
use std::hash::Hash;

use crate::error::CoreError;

/// The root of unity `zeta_N^k`, `zeta_N = exp(2 pi i / N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mu {
    pub level: u32,
    pub exp: u32,
}

impl Mu {
    pub fn new(level: u32, exp: i64) -> Self {
        assert!(level > 0, "level must be positive");
        Mu { level, exp: exp.rem_euclid(level as i64) as u32 }
    }

    pub fn one(level: u32) -> Self {
        Mu { level, exp: 0 }
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0
    }

    pub fn mul(self, other: Mu) -> Mu {
        assert_eq!(self.level, other.level, "level mismatch");
        Mu::new(self.level, self.exp as i64 + other.exp as i64)
    }

    pub fn inv(self) -> Mu {
        Mu::new(self.level, -(self.exp as i64))
    }

    pub fn pow(self, e: i64) -> Mu {
        Mu::new(self.level, self.exp as i64 * e)
    }
}

/// A point of `{0} ∪ mu_N`, stored as a residue when nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arg {
    Zero,
    Root(u32),
}

impl Arg {
    pub fn is_zero(&self) -> bool {
        matches!(self, Arg::Zero)
    }

    pub fn root(&self) -> Option<u32> {
        match self {
            Arg::Zero => None,
            Arg::Root(k) => Some(*k),
        }
    }

    /// Multiplies by `zeta_N^k`; zero stays zero.
    pub fn scale(self, level: u32, k: i64) -> Arg {
        match self {
            Arg::Zero => Arg::Zero,
            Arg::Root(e) => Arg::Root((e as i64 + k).rem_euclid(level as i64) as u32),
        }
    }

    pub fn inv(self, level: u32) -> Arg {
        match self {
            Arg::Zero => Arg::Zero,
            Arg::Root(e) => Arg::Root((-(e as i64)).rem_euclid(level as i64) as u32),
        }
    }
}

fn fmt_arg(a: &Arg) -> String {
    match a {
        Arg::Zero => "Z".to_string(),
        Arg::Root(k) => k.to_string(),
    }
}

pub trait Symbol: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {
    fn level(&self) -> u32;
    fn weight(&self) -> usize;
    fn depth(&self) -> usize;
}

/// `Li_{n_1..n_m}(x_1..x_m)` with `x_i = zeta_N^{args[i]}`. The empty symbol is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiSymbol {
    level: u32,
    idx: Vec<u32>,
    args: Vec<u32>,
}

impl LiSymbol {
    pub fn new(level: u32, idx: Vec<u32>, args: Vec<u32>) -> Result<Self, CoreError> {
        if level == 0 {
            return Err(CoreError::ZeroLevel);
        }
        if idx.len() != args.len() {
            return Err(CoreError::LengthMismatch(idx.len(), args.len()));
        }
        if idx.iter().any(|&n| n == 0) {
            return Err(CoreError::ZeroIndex);
        }
        if let Some(&k) = args.iter().find(|&&k| k >= level) {
            return Err(CoreError::Residue(k, level));
        }
        Ok(LiSymbol { level, idx, args })
    }

    /// Builds from signed exponents, reducing them mod `level`.
    pub fn from_exps(level: u32, idx: &[u32], exps: &[i64]) -> Self {
        let args = exps.iter().map(|&e| e.rem_euclid(level as i64) as u32).collect();
        LiSymbol::new(level, idx.to_vec(), args).expect("valid symbol")
    }

    pub fn unit(level: u32) -> Self {
        LiSymbol { level, idx: vec![], args: vec![] }
    }

    pub fn idx(&self) -> &[u32] {
        &self.idx
    }

    pub fn args(&self) -> &[u32] {
        &self.args
    }

    pub fn mu_args(&self) -> impl Iterator<Item = Mu> + '_ {
        self.args.iter().map(move |&k| Mu { level: self.level, exp: k })
    }

    pub fn is_unit(&self) -> bool {
        self.idx.is_empty()
    }

    /// Convergent at the upper end: `x_m != 1` or `n_m > 1`.
    pub fn is_admissible(&self) -> bool {
        match (self.idx.last(), self.args.last()) {
            (Some(&n), Some(&x)) => n > 1 || x != 0,
            _ => true,
        }
    }

    /// Length of the maximal trailing run of slots `(n, x) = (1, 1)`.
    pub fn trailing_ones(&self) -> usize {
        self.idx
            .iter()
            .zip(&self.args)
            .rev()
            .take_while(|(&n, &x)| n == 1 && x == 0)
            .count()
    }

    pub fn slots(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.idx.iter().copied().zip(self.args.iter().copied())
    }

    pub fn from_slots(level: u32, slots: &[(u32, u32)]) -> Self {
        LiSymbol {
            level,
            idx: slots.iter().map(|s| s.0).collect(),
            args: slots.iter().map(|s| s.1 % level).collect(),
        }
    }

    /// Image under `mu_N -> mu_{N'}`, `zeta_N -> zeta_{N'}^{N'/N}`.
    pub fn embed(&self, new_level: u32) -> Result<Self, CoreError> {
        if new_level == 0 || new_level % self.level != 0 {
            return Err(CoreError::BadEmbedding { from: self.level, to: new_level });
        }
        let f = new_level / self.level;
        Ok(LiSymbol { level: new_level, idx: self.idx.clone(), args: self.args.iter().map(|k| k * f).collect() })
    }
}

impl Symbol for LiSymbol {
    fn level(&self) -> u32 {
        self.level
    }
    fn weight(&self) -> usize {
        self.idx.iter().map(|&n| n as usize).sum()
    }
    fn depth(&self) -> usize {
        self.idx.len()
    }
}

impl fmt::Display for LiSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n: Vec<String> = self.idx.iter().map(|n| n.to_string()).collect();
        let a: Vec<String> = self.args.iter().map(|k| k.to_string()).collect();
        write!(f, "Li({};{})@{}", n.join(","), a.join(","), self.level)
    }
}

/// A word `[a_1, 0^{n_1-1}, ..., a_m, 0^{n_m-1}]` standing for `I(0; a_1, ..., a_w; 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IWord {
    level: u32,
    letters: Vec<Arg>,
}

impl IWord {
    /// Any letter sequence is accepted; words with a leading zero only occur as
    /// intermediate objects and are rejected by [`crate::iword_to_li`].
    pub fn new(level: u32, letters: Vec<Arg>) -> Self {
        assert!(level > 0, "level must be positive");
        debug_assert!(letters.iter().all(|a| a.root().map_or(true, |k| k < level)));
        IWord { level, letters }
    }

    pub fn empty(level: u32) -> Self {
        IWord { level, letters: vec![] }
    }

    pub fn letters(&self) -> &[Arg] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Arg> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// First letter nonzero and last letter different from 1.
    pub fn is_convergent(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(f), Some(l)) => !f.is_zero() && *l != Arg::Root(0),
            _ => true,
        }
    }
}

impl Symbol for IWord {
    fn level(&self) -> u32 {
        self.level
    }
    fn weight(&self) -> usize {
        self.letters.len()
    }
    fn depth(&self) -> usize {
        self.letters.iter().filter(|a| !a.is_zero()).count()
    }
}

impl fmt::Display for IWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.letters.iter().map(fmt_arg).collect();
        write!(f, "I(Z;{};0)@{}", l.join(","), self.level)
    }
}

/// `I(a_0; a_1, ..., a_m; a_{m+1})` with points in `{0} ∪ mu_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralI {
    level: u32,
    lower: Arg,
    letters: Vec<Arg>,
    upper: Arg,
}

impl GeneralI {
    /// Normalizes `I(0; a; c)` with `c` a root of unity to `I(0; a/c; 1)`.
    pub fn new(level: u32, lower: Arg, letters: Vec<Arg>, upper: Arg) -> Self {
        assert!(level > 0, "level must be positive");
        if let (Arg::Zero, Arg::Root(c)) = (lower, upper) {
            if c != 0 {
                let letters = letters.into_iter().map(|a| a.scale(level, -(c as i64))).collect();
                return GeneralI { level, lower, letters, upper: Arg::Root(0) };
            }
        }
        GeneralI { level, lower, letters, upper }
    }

    pub fn from_word(w: &IWord) -> Self {
        GeneralI { level: w.level, lower: Arg::Zero, letters: w.letters.clone(), upper: Arg::Root(0) }
    }

    pub fn lower(&self) -> Arg {
        self.lower
    }

    pub fn upper(&self) -> Arg {
        self.upper
    }

    pub fn letters(&self) -> &[Arg] {
        &self.letters
    }

    /// The word of an `I(0; ...; 1)` symbol.
    pub fn as_word(&self) -> Option<IWord> {
        (self.lower == Arg::Zero && self.upper == Arg::Root(0)).then(|| IWord::new(self.level, self.letters.clone()))
    }
}

impl Symbol for GeneralI {
    fn level(&self) -> u32 {
        self.level
    }
    fn weight(&self) -> usize {
        self.letters.len()
    }
    fn depth(&self) -> usize {
        self.letters.iter().filter(|a| !a.is_zero()).count()
    }
}

impl fmt::Display for GeneralI {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.letters.iter().map(fmt_arg).collect();
        write!(f, "I({};{};{})@{}", fmt_arg(&self.lower), l.join(","), fmt_arg(&self.upper), self.level)
    }
}

/// `(weight, depth)`.
pub fn grade<S: Symbol>(s: &S) -> (usize, usize) {
    (s.weight(), s.depth())
}
