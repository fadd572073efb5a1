use mpl_numerics::{eval_lincomb, Evaluator};
use mpl_regularization::Regularizer;
use mpl_relations::{all_families, generate, Mode};

/// Every exact relation row, including the coefficients of positive powers of
/// `L`, vanishes numerically.
#[test]
fn exact_rows_vanish() {
    let ev = Evaluator::new(30);
    for n in 1..=6u32 {
        for w in 1..=4 {
            let reg = Regularizer::new(n, w);
            for r in generate(&reg, w, None, Mode::Exact, &all_families(), &mut vec![]) {
                let v = eval_lincomb(&ev, &r.row).unwrap();
                assert!(v.abs_f64() < 1e-25, "N = {n}: {} = {:e}", r.source, v.abs_f64());
            }
        }
    }
}
