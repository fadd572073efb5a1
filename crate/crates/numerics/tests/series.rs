use mpl_core::{parse_li, LinComb, LiSymbol};
use mpl_numerics::{eval_li, eval_lincomb, verify_identity, BigComplex, Constants, Evaluator, NumError};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

const ZETA3: &str = "1.2020569031595942853997381615114499907649862923405";
const LOG2: &str = "0.69314718055994530941723212145817656807550013436026";
const PI: &str = "3.1415926535897932384626433832795028841971693993751";
const CATALAN: &str = "0.91596559417721901505460351493238411077414937428167";

/// `s * 2^bits`, rounded toward zero.
fn dec(s: &str, bits: u32) -> BigInt {
    let neg = s.starts_with('-');
    let s = s.trim_start_matches('-');
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().unwrap();
    let v = (digits << bits) / BigInt::from(10u32).pow(frac.len() as u32);
    if neg {
        -v
    } else {
        v
    }
}

fn diff(x: &BigInt, r: &BigInt, bits: u32) -> f64 {
    let d = x - r;
    d.to_f64().unwrap() / 2f64.powi(bits as i32)
}

/// Largest of the real and imaginary deviations from a reference given as a scaled value.
fn dev(v: &BigComplex, re: &BigInt, im: &BigInt) -> f64 {
    diff(&v.re, re, v.bits).abs().max(diff(&v.im, im, v.bits).abs())
}

fn li(s: &str) -> LiSymbol {
    parse_li(s).unwrap()
}

#[test]
fn pi_matches_reference() {
    let c = Constants::new(200);
    let p = c.pi();
    assert!(diff(&p.re, &dec(PI, 200), 200).abs() < 1e-49);
}

#[test]
fn zeta_two_is_pi_squared_over_six() {
    let v = eval_li(&li("Li(2;0)@1"), 30).unwrap();
    let pi = dec(PI, v.bits);
    let pi2_6 = (&pi * &pi >> v.bits) / BigInt::from(6);
    assert!(dev(&v, &pi2_6, &BigInt::from(0)) < 1e-29, "{v}");
    assert!(v.re_string(15).starts_with("1.644934066848226"));
}

#[test]
fn li1_minus_one_is_minus_log_two() {
    let v = eval_li(&li("Li(1;1)@2"), 30).unwrap();
    let r = -dec(LOG2, v.bits);
    assert!(dev(&v, &r, &BigInt::from(0)) < 1e-29, "{v}");
}

#[test]
fn li3_minus_one() {
    let v = eval_li(&li("Li(3;1)@2"), 30).unwrap();
    let r: BigInt = -(dec(ZETA3, v.bits) * 3u32) / 4u32;
    assert!(dev(&v, &r, &BigInt::from(0)) < 1e-29, "{v}");
}

#[test]
fn depth_two_zeta_value() {
    // Σ_{k1<k2} 1/(k1 k2^2) = ζ(3)
    let v = eval_li(&li("Li(1,2;0,0)@1"), 30).unwrap();
    assert!(dev(&v, &dec(ZETA3, v.bits), &BigInt::from(0)) < 1e-29, "{v}");
}

#[test]
fn values_at_i() {
    let ev = Evaluator::new(30);
    let bits = ev.bits();
    let pi = dec(PI, bits);
    // Li_1(i) = -log(1 - i) = -log(2)/2 + i pi/4
    let v = ev.eval_li(&li("Li(1;1)@4")).unwrap();
    assert!(dev(&v, &(-dec(LOG2, bits) / 2), &(&pi / 4)) < 1e-29, "{v}");
    // Li_2(i) = -pi^2/48 + i G
    let v = ev.eval_li(&li("Li(2;1)@4")).unwrap();
    let re = -((&pi * &pi) >> bits) / 48;
    assert!(dev(&v, &re, &dec(CATALAN, bits)) < 1e-29, "{v}");
}

#[test]
fn stuffle_identity_at_cube_roots() {
    let ev = Evaluator::new(30);
    let x = li("Li(1;1)@3");
    let y = li("Li(1;2)@3");
    let prod = ev.eval_li(&x).unwrap().mul(&ev.eval_li(&y).unwrap());
    let rhs = mpl_products::stuffle_product(&x, &y).unwrap();
    assert_eq!(rhs.len(), 3);
    let v = eval_lincomb(&ev, &rhs).unwrap();
    assert!(prod.sub(&v).abs_f64() < 1e-29);
}

#[test]
fn verify_zero_is_exact() {
    let ev = Evaluator::new(30);
    let z = LinComb::<LiSymbol>::new(3);
    let v = verify_identity(&ev, &z, &z).unwrap();
    assert!(v.holds);
    assert_eq!(v.residual, 0.0);
}

#[test]
fn distribution_identity_and_precision_scaling() {
    // Li_2(1) + Li_2(-1) = Li_2(1) / 2
    let lhs = LinComb::from_symbol(li("Li(2;0)@2")).add(&LinComb::from_symbol(li("Li(2;1)@2")));
    let rhs = LinComb::from_symbol(li("Li(2;0)@2")).scale(&mpl_core::q(1, 2));
    let a = verify_identity(&Evaluator::new(20), &lhs, &rhs).unwrap();
    let b = verify_identity(&Evaluator::new(40), &lhs, &rhs).unwrap();
    assert!(a.holds && b.holds);
    assert!(b.residual <= a.residual * 1e-10 || b.residual == 0.0, "{} {}", a.residual, b.residual);
    // a false identity is rejected
    let wrong = LinComb::from_symbol(li("Li(2;0)@2")).scale(&mpl_core::q(1, 3));
    assert!(!verify_identity(&Evaluator::new(30), &lhs, &wrong).unwrap().holds);
}

#[test]
fn trailing_one_reduction_at_sixth_root() {
    // constant term of Li_{1,1}(x,1) is -Li_{1,1}(1,x) - Li_2(x)
    let ev = Evaluator::new(30);
    let lhs = LinComb::from_symbol(li("Li(1,1;1,0)@6"));
    let rhs = LinComb::from_symbol(li("Li(1,1;0,1)@6")).add(&LinComb::from_symbol(li("Li(2;1)@6"))).neg();
    let v = verify_identity(&ev, &lhs, &rhs).unwrap();
    assert!(v.holds && v.residual < 1e-25);

    // independent check: Σ_{k1<k2≤K} x^k1/(k1 k2) - Li_1(x) H_K tends to the constant term
    let th = std::f64::consts::PI / 3.0;
    let (c, s) = (th.cos(), th.sin());
    let k_max = 2_000_000usize;
    let (mut inner_re, mut inner_im, mut sum_re, mut sum_im, mut h) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let (mut pr, mut pi) = (1.0f64, 0.0f64);
    for k in 1..=k_max {
        let kf = k as f64;
        sum_re += inner_re / kf;
        sum_im += inner_im / kf;
        let (nr, ni) = (pr * c - pi * s, pr * s + pi * c);
        pr = nr;
        pi = ni;
        inner_re += pr / kf;
        inner_im += pi / kf;
        h += 1.0 / kf;
    }
    // Li_1(x) = -log(1 - x) = -log|1-x| - i arg(1-x); here 1 - x = e^{-i pi/3}
    let (l1_re, l1_im) = (0.0, th);
    let est_re = sum_re - l1_re * h;
    let est_im = sum_im - l1_im * h;
    let r = v.rhs;
    assert!((est_re - r.re_f64()).abs() < 1e-5 && (est_im - r.im_f64()).abs() < 1e-5, "{est_re} {est_im} {r}");
}

#[test]
fn divergent_symbol_is_rejected() {
    assert!(matches!(eval_li(&li("Li(1;0)@3"), 20), Err(NumError::NotAdmissible(_))));
    let ev = Evaluator::new(20);
    let w = mpl_core::IWord::new(1, vec![mpl_core::Arg::Root(0)]);
    assert!(matches!(ev.eval_word(&w), Err(NumError::DivergentWord(_))));
}

#[test]
fn unit_evaluates_to_one() {
    let v = eval_li(&LiSymbol::unit(5), 20).unwrap();
    assert_eq!(v.re, BigInt::one() << v.bits);
}

#[test]
fn parallel_and_serial_agree() {
    let ev = Evaluator::new(25);
    let syms = mpl_core::li_symbols(3, 3, None).into_iter().filter(|s| s.is_admissible()).collect::<Vec<_>>();
    let many = ev.eval_many(&syms);
    let fresh = Evaluator::new(25);
    for (s, v) in syms.iter().zip(many) {
        assert_eq!(v.unwrap(), fresh.eval_li(s).unwrap(), "{s}");
    }
}
