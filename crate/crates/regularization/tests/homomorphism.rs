use mpl_core::*;
use mpl_products::{shuffle_lincomb_words, shuffle_words, stuffle_product};
use mpl_regularization::*;
use proptest::prelude::*;

fn symbols_up_to(level: u32, w: u32) -> Vec<LiSymbol> {
    (1..=w).flat_map(|k| li_symbols(level, k, None)).collect()
}

#[test]
fn stuffle_regularization_is_multiplicative() {
    for level in [1u32, 2, 3] {
        let reg = Regularizer::new(level, 10);
        let syms = symbols_up_to(level, 3);
        for a in &syms {
            for b in &syms {
                if a.weight() + b.weight() > 4 || a > b {
                    continue;
                }
                let lhs = reg.stuffle(a).unwrap().mul(&reg.stuffle(b).unwrap());
                let mut rhs = RegPoly::zero(level);
                for (t, c) in &stuffle_product(a, b).unwrap() {
                    rhs = rhs.add_scaled(&reg.stuffle(t).unwrap(), c);
                }
                assert_eq!(lhs, rhs, "{a} * {b}");
            }
        }
    }
}

/// `Σ_k c_k L^k` over words, multiplied with the shuffle on coefficients.
fn word_poly_mul(a: &[LinComb<IWord>], b: &[LinComb<IWord>], level: u32) -> Vec<LinComb<IWord>> {
    let mut out = vec![LinComb::new(level); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_assign(&shuffle_lincomb_words(x, y).unwrap());
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn check_shuffle_hom(u: &IWord, v: &IWord) {
    let level = u.level();
    let lhs = word_poly_mul(&regularize_word(u), &regularize_word(v), level);
    let mut rhs: Vec<LinComb<IWord>> = vec![];
    for (w, c) in &shuffle_words(u, v).unwrap() {
        for (k, x) in regularize_word(w).iter().enumerate() {
            while rhs.len() <= k {
                rhs.push(LinComb::new(level));
            }
            rhs[k].add_scaled(x, c);
        }
    }
    while rhs.last().is_some_and(|c| c.is_zero()) {
        rhs.pop();
    }
    assert_eq!(lhs, rhs, "{u} ш {v}");
}

#[test]
fn shuffle_regularization_is_multiplicative() {
    for level in [1u32, 2, 3] {
        let syms = symbols_up_to(level, 3);
        for a in &syms {
            for b in &syms {
                if a.weight() + b.weight() > 4 || a > b {
                    continue;
                }
                let (_, u) = li_to_iword(a).unwrap();
                let (_, v) = li_to_iword(b).unwrap();
                check_shuffle_hom(&u, &v);
            }
        }
    }
}

#[test]
fn both_ends_regularization_kills_zero_and_one() {
    let l = 3;
    let w = |x: &[Arg]| IWord::new(l, x.to_vec());
    let (z, o, a) = (Arg::Zero, Arg::Root(0), Arg::Root(1));
    assert!(regularize_word_both_ends(&w(&[z])).is_zero());
    assert!(regularize_word_both_ends(&w(&[o, o])).is_zero());
    // [0, a] = -[a, 0] and [a, 1] = -[1, a]
    assert_eq!(regularize_word_both_ends(&w(&[z, a])), LinComb::from_term(w(&[a, z]), qi(-1)));
    assert_eq!(regularize_word_both_ends(&w(&[a, o])), LinComb::from_term(w(&[o, a]), qi(-1)));
    for word in words(l, 4) {
        let r = regularize_word_both_ends(&word);
        assert!(r.symbols().all(|x| x.is_convergent()), "{word}");
        if word.is_convergent() {
            assert_eq!(r, LinComb::from_symbol(word));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn random_stuffle_hom(level in 1u32..4, a in prop::collection::vec((1u32..3, 0u32..3), 1..4), b in prop::collection::vec((1u32..3, 0u32..3), 1..3)) {
        let a = LiSymbol::from_slots(level, &a);
        let b = LiSymbol::from_slots(level, &b);
        prop_assume!(a.weight() + b.weight() <= 6);
        let reg = Regularizer::new(level, 10);
        let lhs = reg.stuffle(&a).unwrap().mul(&reg.stuffle(&b).unwrap());
        let mut rhs = RegPoly::zero(level);
        for (t, c) in &stuffle_product(&a, &b).unwrap() {
            rhs = rhs.add_scaled(&reg.stuffle(t).unwrap(), c);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn random_shuffle_hom(level in 1u32..4, a in prop::collection::vec((1u32..3, 0u32..3), 1..4), b in prop::collection::vec((1u32..3, 0u32..3), 1..3)) {
        let a = LiSymbol::from_slots(level, &a);
        let b = LiSymbol::from_slots(level, &b);
        prop_assume!(a.weight() + b.weight() <= 6);
        let (_, u) = li_to_iword(&a).unwrap();
        let (_, v) = li_to_iword(&b).unwrap();
        check_shuffle_hom(&u, &v);
    }
}
