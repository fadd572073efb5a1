use mpl_core::{LiSymbol, Rational, Symbol};
use mpl_hopf::{coproduct_li, coproduct_li_series, dihedral_cobracket, inversion_expand, swap_legs};
use proptest::prelude::*;

fn symbol() -> impl Strategy<Value = LiSymbol> {
    (1u32..=6, prop::collection::vec((1u32..=2, 0u32..6), 1..=3))
        .prop_map(|(n, slots)| {
            let idx = slots.iter().map(|s| s.0).collect();
            let args = slots.iter().map(|s| s.1 % n).collect();
            LiSymbol::new(n, idx, args).unwrap()
        })
        .prop_filter("weight at most 4", |s| s.weight() <= 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_agrees_with_words(s in symbol()) {
        prop_assume!(s.is_admissible());
        let a = coproduct_li_series(&s, 4).unwrap().canonical();
        let b = coproduct_li(&s).canonical();
        prop_assert!(a.sub(&b).is_empty());
    }

    #[test]
    fn coproduct_is_weight_balanced(s in symbol()) {
        prop_assume!(s.is_admissible());
        prop_assert!(coproduct_li(&s).is_weight_balanced(s.weight()));
        prop_assert!(coproduct_li_series(&s, 4).unwrap().is_weight_balanced(s.weight()));
    }

    #[test]
    fn cobracket_is_antisymmetric(s in symbol()) {
        prop_assume!(s.depth() >= 2);
        let d = dihedral_cobracket(&s).unwrap();
        prop_assert_eq!(swap_legs(&d), d.scale(&Rational::from_integer((-1).into())));
    }

    #[test]
    fn inversion_is_homogeneous(s in symbol()) {
        let r = inversion_expand(&s);
        prop_assert!(r.is_homogeneous(s.weight()));
    }
}
