use mpl_core::*;
use proptest::prelude::*;

fn s(k: u32) -> LiSymbol {
    LiSymbol::new(5, vec![2], vec![k]).unwrap()
}

#[test]
fn collects_and_prunes() {
    let mut a = LinComb::from_term(s(1), q(2, 3));
    a.add_term(s(1), q(1, 3));
    assert_eq!(a, LinComb::from_symbol(s(1)));
    let z = a.sub(&a);
    assert!(z.is_zero());
    let b = LinComb::from_symbol(s(2));
    let u = a.add(&b);
    assert_eq!(u.len(), 2);
    assert!(u.is_homogeneous(2));
    assert!(!u.is_homogeneous(3));
}

#[test]
fn level_mixing_is_an_error() {
    let a = LinComb::from_symbol(s(1));
    let b = LinComb::from_symbol(LiSymbol::new(3, vec![2], vec![1]).unwrap());
    assert_eq!(a.try_add(&b), Err(CoreError::LevelMismatch(5, 3)));
}

#[test]
fn display() {
    let mut a = LinComb::from_term(s(1), q(-1, 2));
    a.add_term(s(3), qi(1));
    assert_eq!(a.to_string(), "-1/2*Li(2;1)@5 + Li(2;3)@5");
    assert_eq!(LinComb::<LiSymbol>::new(5).to_string(), "0");
}

#[test]
fn substitution() {
    let a = LinComb::from_term(s(1), qi(3));
    let b = a.substitute(5, |x| {
        let mut out = LinComb::from_symbol(x.clone());
        out.add_term(s(4), qi(-1));
        out
    });
    assert_eq!(b.coeff(&s(1)), qi(3));
    assert_eq!(b.coeff(&s(4)), qi(-3));
}

fn comb() -> impl Strategy<Value = LinComb<LiSymbol>> {
    prop::collection::vec((0u32..5, -5i64..6, 1i64..4), 0..6).prop_map(|v| {
        let mut out = LinComb::new(5);
        for (k, n, d) in v {
            out.add_term(s(k), q(n, d));
        }
        out
    })
}

proptest! {
    #[test]
    fn module_axioms(a in comb(), b in comb(), c in comb(), n in -4i64..5, d in 1i64..4) {
        let r = q(n, d);
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&b).scale(&r), a.scale(&r).add(&b.scale(&r)));
        prop_assert!(a.add(&a.neg()).is_zero());
        prop_assert!(a.iter().all(|(_, c)| *c != qi(0)));
    }
}
