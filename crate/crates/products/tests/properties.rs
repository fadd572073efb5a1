use mpl_core::*;
use mpl_products::*;
use proptest::prelude::*;

fn symbols_up_to(level: u32, w: u32) -> Vec<LiSymbol> {
    (0..=w).flat_map(|k| li_symbols(level, k, None)).collect()
}

#[test]
fn commutative_and_associative_exhaustive() {
    for level in 1..=2u32 {
        let syms = symbols_up_to(level, 2);
        for a in &syms {
            for b in &syms {
                assert_eq!(stuffle_product(a, b).unwrap(), stuffle_product(b, a).unwrap());
                assert_eq!(shuffle_product_li(a, b).unwrap(), shuffle_product_li(b, a).unwrap());
                for c in &syms {
                    if a.weight() + b.weight() + c.weight() > 4 {
                        continue;
                    }
                    let ab = stuffle_product(a, b).unwrap();
                    let bc = stuffle_product(b, c).unwrap();
                    assert_eq!(
                        stuffle_lincomb(&ab, &LinComb::from_symbol(c.clone())).unwrap(),
                        stuffle_lincomb(&LinComb::from_symbol(a.clone()), &bc).unwrap()
                    );
                    let ab = shuffle_product_li(a, b).unwrap();
                    let bc = shuffle_product_li(b, c).unwrap();
                    assert_eq!(
                        shuffle_product_li_lincomb(&ab, &LinComb::from_symbol(c.clone())).unwrap(),
                        shuffle_product_li_lincomb(&LinComb::from_symbol(a.clone()), &bc).unwrap()
                    );
                }
            }
        }
    }
}

fn sym(level: u32) -> impl Strategy<Value = LiSymbol> {
    prop::collection::vec((1u32..3, 0u32..64), 0..4).prop_map(move |s| LiSymbol::from_slots(level, &s))
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn random_products(level in 1u32..7, a in sym(6), b in sym(6), c in sym(6)) {
        let (a, b, c) = (LiSymbol::from_slots(level, &a.slots().collect::<Vec<_>>()),
                         LiSymbol::from_slots(level, &b.slots().collect::<Vec<_>>()),
                         LiSymbol::from_slots(level, &c.slots().collect::<Vec<_>>()));
        let ab = stuffle_product(&a, &b).unwrap();
        prop_assert_eq!(&ab, &stuffle_product(&b, &a).unwrap());
        prop_assert!(ab.is_homogeneous(a.weight() + b.weight()));
        prop_assert!(ab.symbols().all(|t| t.depth() <= a.depth() + b.depth()));
        let lhs = stuffle_lincomb(&ab, &LinComb::from_symbol(c.clone())).unwrap();
        let rhs = stuffle_lincomb(&LinComb::from_symbol(a.clone()), &stuffle_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);

        let sh = shuffle_product_li(&a, &b).unwrap();
        prop_assert_eq!(&sh, &shuffle_product_li(&b, &a).unwrap());
        prop_assert!(sh.is_homogeneous(a.weight() + b.weight()));

        // top-depth part of the stuffle is the plain shuffle of slot sequences
        let top = ab.filter(|t| t.depth() == a.depth() + b.depth());
        prop_assert_eq!(top, stuffle_merge_free(&a, &b).unwrap());
        let total: i64 = stuffle_merge_free(&a, &b).unwrap().iter().map(|(_, c)| i64::try_from(c.to_integer()).unwrap()).sum();
        prop_assert_eq!(total, binom(a.depth() + b.depth(), a.depth()));
    }

    #[test]
    fn word_shuffle_counts(u in prop::collection::vec(0u32..4, 0..5), v in prop::collection::vec(0u32..4, 0..5)) {
        let to = |x: &Vec<u32>| IWord::new(3, x.iter().map(|&k| if k == 3 { Arg::Zero } else { Arg::Root(k) }).collect());
        let (u, v) = (to(&u), to(&v));
        let raw = shuffle_words_raw(u.letters(), v.letters());
        prop_assert_eq!(raw.len() as i64, binom(u.len() + v.len(), u.len()));
        let sh = shuffle_words(&u, &v).unwrap();
        let total: i64 = sh.iter().map(|(_, c)| i64::try_from(c.to_integer()).unwrap()).sum();
        prop_assert_eq!(total, raw.len() as i64);
        prop_assert_eq!(sh, shuffle_words(&v, &u).unwrap());
    }
}
