use mpl_core::{li_symbols, LiSymbol, Rational, Symbol};
use mpl_hopf::{dihedral_cobracket, swap_legs, HopfError, TensorComb};
use num_traits::One;

fn li1(n: u32, k: i64) -> LiSymbol {
    LiSymbol::from_exps(n, &[1], &[k])
}

fn wedge(t: &mut TensorComb, a: LiSymbol, b: LiSymbol, c: Rational) {
    t.add_term(a.clone(), vec![b.clone()], c.clone());
    t.add_term(b, vec![a], -c);
}

#[test]
fn depth_one_vanishes() {
    let s = LiSymbol::new(5, vec![3], vec![2]).unwrap();
    assert!(matches!(dihedral_cobracket(&s), Err(HopfError::DepthOne(_))));
}

#[test]
fn double_logarithm_by_hand() {
    // points (1/xy : 1/y : 1); the three rotations give
    // −(Li_1(x) ∧ Li_1(y) + Li_1(y) ∧ Li_1(1/xy) + Li_1(1/xy) ∧ Li_1(x))
    let n = 5;
    let (x, y) = (1i64, 2i64);
    let s = LiSymbol::from_exps(n, &[1, 1], &[x, y]);
    let mut want = TensorComb::new(n);
    let m1 = -Rational::one();
    wedge(&mut want, li1(n, x), li1(n, y), m1.clone());
    wedge(&mut want, li1(n, y), li1(n, -x - y), m1.clone());
    wedge(&mut want, li1(n, -x - y), li1(n, x), m1);
    assert_eq!(dihedral_cobracket(&s).unwrap(), want);
}

#[test]
fn level_one_double_logarithm() {
    let s = LiSymbol::new(1, vec![1, 1], vec![0, 0]).unwrap();
    assert!(dihedral_cobracket(&s).unwrap().is_empty());
}

#[test]
fn antisymmetric_and_graded() {
    for n in [1u32, 4, 5] {
        for w in 2..=5u32 {
            for m in 2..=w.min(3) as usize {
                for s in li_symbols(n, w, Some(m)) {
                    let d = dihedral_cobracket(&s).unwrap();
                    assert_eq!(swap_legs(&d), d.scale(&-Rational::one()), "{s}");
                    assert!(d.is_weight_balanced(w as usize));
                    assert!(d.iter().all(|(a, r, _)| a.depth() + r[0].depth() == m && a.depth() >= 1 && r[0].depth() >= 1));
                }
            }
        }
    }
}
