use mpl_core::{parse_li, q, LiSymbol};
use mpl_numerics::{eval_cube_integral, form_sides, verify_form_identity, Evaluator, NumError, OneForm};

fn li(s: &str) -> LiSymbol {
    parse_li(s).unwrap()
}

fn agree(s: &str) {
    let sym = li(s);
    let c = eval_cube_integral(&sym, 10).unwrap_or_else(|e| panic!("{s}: {e}"));
    let v = Evaluator::new(20).eval_li(&sym).unwrap();
    let d = (c.re - v.re_f64()).hypot(c.im - v.im_f64());
    assert!(d < 1e-10, "{s}: cube {} {} series {v} diff {d:e}", c.re, c.im);
}

#[test]
fn li3_minus_one_closed_form() {
    let c = eval_cube_integral(&li("Li(3;1)@2"), 10).unwrap();
    let zeta3 = 1.2020569031595942854;
    assert!((c.re + 0.75 * zeta3).abs() < 1e-10 && c.im.abs() < 1e-12, "{c:?}");
}

#[test]
fn double_log_at_sixth_roots() {
    agree("Li(1,1;1,4)@6");
}

#[test]
fn assorted_low_weight_symbols() {
    for s in ["Li(2;0)@1", "Li(1;1)@2", "Li(2;1)@3", "Li(1,2;0,0)@1", "Li(1,1;2,1)@5", "Li(2,1;1,2)@4", "Li(1,1,1;1,2,3)@6"] {
        agree(s);
    }
}

#[test]
fn cube_rejects_out_of_range() {
    assert!(matches!(eval_cube_integral(&li("Li(1;0)@2"), 10), Err(NumError::NotAdmissible(_))));
    assert!(matches!(eval_cube_integral(&li("Li(4;1)@2"), 10), Err(NumError::CubeWeight(4))));
}

#[test]
fn form_identity_at_a_fixed_point() {
    let (l, r) = form_sides(&q(1, 2), &q(1, 3)).unwrap();
    assert_eq!(l, r);
    assert_eq!(l, q(3, 1));
    assert!(form_sides(&q(1, 1), &q(1, 3)).is_none());
    assert!(form_sides(&q(2, 1), &q(1, 2)).is_none());
}

#[test]
fn wedge_is_alternating() {
    let a = OneForm::d_product(&q(2, 3), &q(-5, 7));
    assert_eq!(a.wedge(&a), q(0, 1));
    let b = OneForm::dv1();
    assert_eq!(a.wedge(&b), -b.wedge(&a));
}

#[test]
fn form_identity_at_random_points() {
    let r = verify_form_identity(7, 20);
    assert_eq!(r.points.len(), 20);
    assert!(r.holds);
    assert_eq!(r.lhs, r.rhs);
}
