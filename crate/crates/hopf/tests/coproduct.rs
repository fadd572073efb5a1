use mpl_core::{li_symbols, Arg, GeneralI, LiSymbol, LinComb, Rational};
use mpl_hopf::{
    coassociator, coproduct_i, coproduct_li, coproduct_li_series, degenerate_i_rules, reduced_coproduct, HopfError, TensorComb,
    Weight1Element,
};
use num_traits::One;

fn admissible(n: u32, w: u32) -> Vec<LiSymbol> {
    li_symbols(n, w, None).into_iter().filter(|s| s.is_admissible()).collect()
}

#[test]
fn unit_coproduct() {
    let d = coproduct_i(&GeneralI::new(3, Arg::Zero, vec![], Arg::Root(0))).unwrap();
    assert_eq!(d.len(), 1);
    let (l, r, c) = d.iter().next().unwrap();
    assert!(l.is_unit() && r.is_empty() && c.is_one());
    assert!(reduced_coproduct(&d).is_empty());
}

#[test]
fn rejects_general_endpoints() {
    let s = GeneralI::new(3, Arg::Root(1), vec![Arg::Zero], Arg::Root(0));
    assert!(matches!(coproduct_i(&s), Err(HopfError::Endpoints(_))));
}

#[test]
fn counit_terms_present() {
    for s in admissible(5, 3) {
        let d = coproduct_li(&s).canonical();
        assert!(d.coeff(&s, &[]).is_one(), "{s}");
        assert!(d.coeff(&LiSymbol::unit(5), &[s.clone()]).is_one(), "{s}");
        assert!(d.is_weight_balanced(3));
    }
}

#[test]
fn degenerate_rules() {
    let n = 4;
    let z = Arg::Zero;
    let one = Arg::Root(0);
    let i = |v: Vec<Arg>| GeneralI::new(n, z, v, one);
    assert!(degenerate_i_rules(&i(vec![z, one])).is_empty());
    assert!(degenerate_i_rules(&i(vec![z, z])).is_empty());
    assert!(degenerate_i_rules(&i(vec![one, one])).is_empty());
    let a = Arg::Root(3);
    let r = degenerate_i_rules(&i(vec![z, a]));
    assert_eq!(r, LinComb::from_term(i(vec![a, z]), -Rational::one()));
    assert_eq!(degenerate_i_rules(&i(vec![a])), LinComb::from_symbol(i(vec![a])));
    assert!(degenerate_i_rules(&GeneralI::new(n, a, vec![one, z], a)).is_empty());
}

#[test]
fn classical_polylogs_are_primitive() {
    for p in [5u32, 7] {
        for w in 1..=5u32 {
            for k in 1..p {
                let s = LiSymbol::new(p, vec![w], vec![k]).unwrap();
                let d = reduced_coproduct(&coproduct_li(&s).canonical());
                assert!(d.is_empty(), "{s}: {d}");
                let d = reduced_coproduct(&coproduct_li_series(&s, 5).unwrap().canonical());
                assert!(d.is_empty(), "series {s}: {d}");
            }
        }
    }
}

/// Identifies `Li_1(g)` with `Li_1(g^{-1})`; they differ by `log(−g)`, a torsion element.
fn fold_inverse(t: &TensorComb) -> TensorComb {
    let n = t.level();
    let fold = |s: &LiSymbol| {
        let k = s.args()[0];
        LiSymbol::new(n, vec![1], vec![k.min((n - k) % n)]).unwrap()
    };
    let mut out = TensorComb::new(n);
    for (l, r, c) in t.iter() {
        out.add_term(fold(l), vec![fold(&r[0])], c.clone());
    }
    out
}

#[test]
fn double_logarithm() {
    let n = 7;
    for x in 1..n as i64 {
        for y in 1..n as i64 {
            if (x + y) % n as i64 == 0 {
                continue;
            }
            let s = LiSymbol::from_exps(n, &[1, 1], &[x, y]);
            let got = reduced_coproduct(&coproduct_li(&s).canonical());
            let one_minus = |k| Weight1Element::one_minus(n, k);
            let mut want = one_minus(x + y).tensor(&Weight1Element::root(n, x).mul(&one_minus(y)).div(&one_minus(x)));
            want.add_scaled(&one_minus(y).tensor(&one_minus(x)), &Rational::one());
            assert!(fold_inverse(&got).sub(&fold_inverse(&want)).is_empty(), "{s}: {got} vs {want}");
        }
    }
}

#[test]
fn coassociative_level_one() {
    for w in 2..=4 {
        for s in admissible(1, w) {
            assert!(coassociator(&s).is_empty(), "{s}");
        }
    }
}

#[test]
fn coassociative_level_five() {
    for w in 1..=4 {
        for s in admissible(5, w) {
            assert!(coassociator(&s).is_empty(), "{s}");
        }
    }
}

#[test]
fn series_matches_words() {
    for n in [1u32, 2, 3, 5] {
        for w in 1..=4 {
            for s in admissible(n, w) {
                let a = coproduct_li_series(&s, 4).unwrap().canonical();
                let b = coproduct_li(&s).canonical();
                assert!(a.sub(&b).is_empty(), "{s}:\n series {a}\n words {b}");
            }
        }
    }
}

#[test]
fn series_cutoff() {
    let s = LiSymbol::new(2, vec![2, 1], vec![1, 1]).unwrap();
    assert_eq!(coproduct_li_series(&s, 2), Err(HopfError::Cutoff(3, 2)));
    let x = LiSymbol::new(3, vec![1], vec![1]).unwrap();
    assert!(reduced_coproduct(&coproduct_li_series(&x, 1).unwrap()).is_empty());
}
