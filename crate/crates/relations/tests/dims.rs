use mpl_relations::{all_families, dimension_formulas, quotient_dim, zagier_bound, FamilySet, Mode, Query};

fn dim(level: u32, w: usize, depth: Option<usize>, mode: Mode, families: FamilySet) -> usize {
    let r = quotient_dim(&Query { level, weight: w, depth, mode, families }).unwrap();
    r.dim
}

#[test]
fn formulas() {
    assert_eq!(dimension_formulas(7).d22, 1);
    assert_eq!(dimension_formulas(11).d22, 5);
    assert_eq!(dimension_formulas(7).d33, 1);
    assert_eq!(dimension_formulas(11).d33, 11);
    assert_eq!(dimension_formulas(5).d33, 0);
    assert_eq!(zagier_bound(8), vec![1, 0, 1, 1, 1, 2, 2, 3, 4]);
}

#[test]
fn depth_graded_22() {
    for p in [5u32, 7, 11] {
        let d = dim(p, 2, Some(2), Mode::DepthGraded, all_families());
        assert_eq!(d as u64, dimension_formulas(p as u64).d22, "p = {p}");
    }
}

/// The specified families leave (p−3)(p−5)(p+5)/48 dimensions at (3,3), which
/// is d33 + d22 rather than d33; see `cobracket_check` for the injectivity of
/// the cobracket on this quotient.
#[test]
fn depth_graded_33() {
    for p in [5u32, 7, 11, 13] {
        let d = dim(p, 3, Some(3), Mode::DepthGraded, all_families()) as u64;
        let p = p as u64;
        assert_eq!(d, (p - 3) * (p - 5) * (p + 5) / 48, "p = {p}");
        let f = dimension_formulas(p);
        assert_eq!(d, f.d33 + f.d22);
    }
}

#[test]
fn depth_graded_11() {
    for p in [5u32, 7, 11] {
        assert_eq!(dim(p, 1, Some(1), Mode::DepthGraded, all_families()) as u32, (p - 1) / 2);
    }
    assert_eq!(dim(6, 1, Some(1), Mode::DepthGraded, all_families()), 2);
    assert_eq!(dim(4, 1, Some(1), Mode::DepthGraded, all_families()), 1);
}

#[test]
fn weight_one_mod_torsion() {
    for p in [5u32, 7, 11, 13] {
        assert_eq!(dim(p, 1, None, Mode::ModTorsion, all_families()) as u64, dimension_formulas(p as u64).d11, "p = {p}");
    }
}

#[test]
fn level_one_double_shuffle() {
    let bound = zagier_bound(8);
    for w in 2..=8 {
        assert_eq!(dim(1, w, None, Mode::Exact, all_families()) as u64, bound[w], "w = {w}");
    }
}
