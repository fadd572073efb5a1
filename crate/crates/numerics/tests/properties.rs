use mpl_core::{LiSymbol, Symbol};
use mpl_numerics::{eval_cube_integral, Evaluator};
use proptest::prelude::*;

fn symbol(max_w: u32) -> impl Strategy<Value = LiSymbol> {
    (1u32..=6, prop::collection::vec((1u32..=2, 0u32..6), 1..=2))
        .prop_map(|(n, slots)| {
            let idx: Vec<u32> = slots.iter().map(|s| s.0).collect();
            let args: Vec<u32> = slots.iter().map(|s| s.1 % n).collect();
            LiSymbol::new(n, idx, args).unwrap()
        })
        .prop_filter("admissible, small weight", move |s| s.is_admissible() && s.idx().iter().sum::<u32>() <= max_w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Conjugating every argument conjugates the value.
    #[test]
    fn conjugate_arguments(s in symbol(4)) {
        let ev = Evaluator::new(25);
        let n = s.level();
        let conj = LiSymbol::new(n, s.idx().to_vec(), s.args().iter().map(|a| (n - a) % n).collect()).unwrap();
        let a = ev.eval_li(&s).unwrap();
        let b = ev.eval_li(&conj).unwrap();
        // compare before rounding to f64, whose spacing near these values is ~1e-17
        prop_assert!(a.sub(&b).re_f64().abs() < 1e-20);
        prop_assert!(a.add(&b).im_f64().abs() < 1e-20);
    }

    /// Series and cube quadrature agree on weight at most 2.
    #[test]
    fn cube_matches_series(s in symbol(2)) {
        let c = eval_cube_integral(&s, 10).unwrap();
        let v = Evaluator::new(20).eval_li(&s).unwrap();
        prop_assert!((c.re - v.re_f64()).hypot(c.im - v.im_f64()) < 1e-10, "{}", s);
    }
}
