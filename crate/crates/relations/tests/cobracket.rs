use mpl_relations::cobracket_check;

#[test]
fn relations_lie_in_the_kernel() {
    for n in [3u32, 5, 7] {
        for (w, m) in [(2, 2), (3, 2), (4, 2), (3, 3), (4, 3)] {
            let c = cobracket_check(n, w, m).unwrap();
            assert!(c.relations_killed, "N = {n}, ({w},{m})");
            assert!(c.image_rank <= c.quotient_dim);
        }
    }
}

#[test]
fn injective_at_prime_levels() {
    for p in [5u32, 7, 11] {
        for (w, m) in [(2, 2), (3, 3)] {
            let c = cobracket_check(p, w, m).unwrap();
            assert_eq!(c.image_rank, c.quotient_dim, "p = {p}, ({w},{m})");
        }
    }
}

#[test]
fn kernel_at_level_eight() {
    let c = cobracket_check(8, 2, 2).unwrap();
    assert_eq!((c.quotient_dim, c.image_rank), (2, 1));
    let c = cobracket_check(8, 3, 3).unwrap();
    assert_eq!((c.quotient_dim, c.image_rank), (5, 4));
}
