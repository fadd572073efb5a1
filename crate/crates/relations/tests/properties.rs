use mpl_relations::{quotient_dim, Family, FamilySet, Mode, Query};
use proptest::prelude::*;

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Exact), Just(Mode::ModTorsion), Just(Mode::DepthGraded)]
}

fn dim(level: u32, weight: usize, mode: Mode, families: FamilySet) -> usize {
    let depth = (mode == Mode::DepthGraded).then_some(2);
    quotient_dim(&Query { level, weight, depth, mode, families }).unwrap().dim
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// More relation families never enlarge the quotient.
    #[test]
    fn families_are_monotone(level in 1u32..=4, weight in 2usize..=3, mode in mode(), mask in 0u8..64, extra in 0usize..6) {
        let small: FamilySet = Family::ALL.into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|p| p.1).collect();
        let mut big = small.clone();
        big.insert(Family::ALL[extra]);
        prop_assert!(dim(level, weight, mode, big) <= dim(level, weight, mode, small));
    }
}
