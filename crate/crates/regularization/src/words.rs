use mpl_core::{q, Arg, IWord, LinComb, Rational, Symbol};
use mpl_products::shuffle_words;
use num_traits::{One, Zero};

const ONE: Arg = Arg::Root(0);

fn sign(j: usize) -> Rational {
    if j % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * q(k, 1))
}

/// `(v ш x^j) a` as a combination of words.
fn shuffle_then_append(level: u32, v: &[Arg], x: Arg, j: usize, a: Arg) -> LinComb<IWord> {
    let sh = shuffle_words(&IWord::new(level, v.to_vec()), &IWord::new(level, vec![x; j])).expect("same level");
    sh.substitute(level, |w| {
        let mut l = w.letters().to_vec();
        l.push(a);
        LinComb::from_symbol(IWord::new(level, l))
    })
}

/// `0^k b v -> (-1)^k b (0^k ш v)`.
fn prepend_after_shuffle(level: u32, k: usize, b: Arg, v: &[Arg]) -> LinComb<IWord> {
    let sh = shuffle_words(&IWord::new(level, v.to_vec()), &IWord::new(level, vec![Arg::Zero; k])).expect("same level");
    sh.substitute(level, |w| {
        let mut l = Vec::with_capacity(w.len() + 1);
        l.push(b);
        l.extend_from_slice(w.letters());
        LinComb::from_symbol(IWord::new(level, l))
    })
    .scale(&sign(k))
}

/// Shuffle regularization at the upper end with `[1] -> L`: the `L^j` coefficients.
/// Words with a leading zero are outside the domain and are returned unchanged.
pub fn regularize_word(w: &IWord) -> Vec<LinComb<IWord>> {
    let level = w.level();
    let l = w.letters();
    let k = l.iter().rev().take_while(|&&a| a == ONE).count();
    if k == 0 {
        return vec![LinComb::from_symbol(w.clone())];
    }
    let mut out = vec![LinComb::new(level); k + 1];
    if k == l.len() {
        out[k] = LinComb::from_term(IWord::empty(level), Rational::one() / factorial(k));
        return out;
    }
    let (v, a) = (&l[..l.len() - k - 1], l[l.len() - k - 1]);
    for j in 0..=k {
        let c = sign(j) / factorial(k - j);
        out[k - j].add_scaled(&shuffle_then_append(level, v, ONE, j, a), &c);
    }
    out
}

/// Regularization at the lower end with `[0] -> 0`.
pub fn regularize_word_lower(w: &IWord) -> LinComb<IWord> {
    let level = w.level();
    let l = w.letters();
    let k = l.iter().take_while(|a| a.is_zero()).count();
    if k == 0 {
        return LinComb::from_symbol(w.clone());
    }
    if k == l.len() {
        return LinComb::new(level);
    }
    prepend_after_shuffle(level, k, l[k], &l[k + 1..])
}

/// Regularization at both ends with `[0] -> 0` and `[1] -> 0`; the result only
/// contains convergent words (first letter nonzero, last letter not 1).
pub fn regularize_word_both_ends(w: &IWord) -> LinComb<IWord> {
    let level = w.level();
    let mut out = LinComb::new(level);
    let mut todo = vec![(w.clone(), Rational::one())];
    while let Some((w, c)) = todo.pop() {
        if c.is_zero() {
            continue;
        }
        let l = w.letters();
        if l.last() == Some(&ONE) {
            let k = l.iter().rev().take_while(|&&a| a == ONE).count();
            if k == l.len() {
                continue;
            }
            let (v, a) = (&l[..l.len() - k - 1], l[l.len() - k - 1]);
            for (x, d) in &shuffle_then_append(level, v, ONE, k, a) {
                todo.push((x.clone(), &c * d * sign(k)));
            }
        } else if l.first().is_some_and(|a| a.is_zero()) {
            for (x, d) in &regularize_word_lower(&w) {
                todo.push((x.clone(), &c * d));
            }
        } else {
            out.add_term(w, c);
        }
    }
    out
}
