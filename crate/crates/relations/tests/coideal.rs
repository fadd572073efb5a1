use mpl_relations::coideal_check;

#[test]
fn relations_form_a_coideal() {
    for (n, max_w) in [(1u32, 5usize), (2, 4), (3, 4), (4, 3), (5, 3)] {
        for w in 2..=max_w {
            let c = coideal_check(n, w).unwrap();
            assert!(c.failures.is_empty(), "N = {n}, w = {w}: {} of {} rows fail, e.g. {:?}", c.failures.len(), c.rows, &c.failures[..c.failures.len().min(5)]);
        }
    }
}
