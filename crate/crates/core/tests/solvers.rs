mod common;

use permcut::graph::named::{complete, complete_bipartite, cycle, k33, petersen, prism};
use permcut::solvers::{
    max_cut_exact, max_cut_local, max_cut_local_sequential, verify_cut, verify_parts, DEFAULT_EXACT_LIMIT,
};
use permcut::{Cut, Error, Graph};
use proptest::prelude::*;

/// Optimum and its lexicographically least membership vector with
/// vertex 0 in `A`, by plain enumeration.
fn naive_lex_optimum(g: &Graph) -> (u64, Vec<bool>) {
    let n = g.vertex_count();
    let mut best: Option<(u64, Vec<bool>)> = None;
    for mask in 0..1u64 << n {
        let membership: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if n > 0 && membership[0] {
            continue;
        }
        let size = g.edges().filter(|&(u, v)| membership[u] != membership[v]).count() as u64;
        let better = match &best {
            None => true,
            Some((s, m)) => size > *s || (size == *s && membership < *m),
        };
        if better {
            best = Some((size, membership));
        }
    }
    best.unwrap()
}

#[test]
fn named_graph_optima() {
    let cases: [(Graph, u64); 6] = [
        (complete(4), 4),
        (complete(5), 6),
        (cycle(5), 4),
        (petersen(), 12),
        (prism(), 7),
        (k33(), 9),
    ];
    for (g, expected) in cases {
        let r = max_cut_exact(&g, DEFAULT_EXACT_LIMIT).unwrap();
        assert_eq!(r.size, expected);
        assert!(r.exact);
        assert!(verify_cut(&g, &r.cut, r.size).unwrap());
    }
    assert_eq!(max_cut_exact(&complete_bipartite(4, 5), 30).unwrap().size, 20);
}

#[test]
fn exact_matches_enumeration_exhaustively_on_five_vertices() {
    for code in 0..1u64 << 10 {
        let g = common::graph_from_code(5, code);
        let r = max_cut_exact(&g, 30).unwrap();
        let (size, membership) = naive_lex_optimum(&g);
        assert_eq!(r.size, size, "code={code}");
        assert_eq!(r.cut.membership(), &membership[..], "code={code}");
    }
}

#[test]
fn exact_matches_enumeration_on_random_graphs() {
    let mut rng = common::rng(11);
    for n in 1..=12 {
        for density in [0.2, 0.5, 0.9] {
            for _ in 0..6 {
                let g = common::random_graph(&mut rng, n, density);
                let r = max_cut_exact(&g, 30).unwrap();
                assert_eq!(r.size, common::naive_max_cut(&g));
                let (_, membership) = naive_lex_optimum(&g);
                assert_eq!(r.cut.membership(), &membership[..]);
            }
        }
    }
}

#[test]
fn exact_respects_its_limit() {
    let g = Graph::empty(20);
    assert!(matches!(max_cut_exact(&g, 19), Err(Error::SizeLimit { .. })));
    assert!(max_cut_exact(&g, 20).is_ok());
    assert!(max_cut_exact(&Graph::empty(65), 100).is_err());
}

#[test]
fn local_search_on_named_graphs() {
    assert_eq!(max_cut_local(&complete(4), 0, 4).size, 4);
    assert_eq!(max_cut_local(&k33(), 1, 8).size, 9);
    let r = max_cut_local(&petersen(), 7, 16);
    assert!(!r.exact);
    assert_eq!(r.seed, Some(7));
    assert_eq!(r.restarts, 16);
    assert!(verify_cut(&petersen(), &r.cut, r.size).unwrap());
}

#[test]
fn verifiers_reject_wrong_claims() {
    let g = complete(4);
    let cut = Cut::from_mask(4, 0b0011);
    assert!(verify_cut(&g, &cut, 4).unwrap());
    assert!(!verify_cut(&g, &cut, 3).unwrap());
    assert!(verify_cut(&g, &Cut::all_a(3), 0).is_err());
    assert!(verify_parts(&g, &[2, 3], &[0, 1], 4));
    assert!(!verify_parts(&g, &[2, 3], &[0], 4));
    assert!(!verify_parts(&g, &[2, 3], &[0, 1, 3], 4));
    assert!(!verify_parts(&g, &[2, 3], &[0, 1], 5));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_search_bounds(seed in any::<u64>(), n in 2usize..13, density in 0.1f64..0.9, restarts in 1u64..6) {
        let g = common::random_graph(&mut common::rng(seed), n, density);
        let local = max_cut_local(&g, seed, restarts);
        let exact = max_cut_exact(&g, 30).unwrap();
        prop_assert!(local.size >= (g.edge_count() as u64).div_ceil(2));
        prop_assert!(local.size <= exact.size);
        prop_assert!(verify_cut(&g, &local.cut, local.size).unwrap());
        prop_assert!(local.cut.in_a(0));
    }

    #[test]
    fn parallel_local_search_is_deterministic(seed in any::<u64>(), n in 2usize..40, restarts in 1u64..10) {
        let g = common::random_graph(&mut common::rng(seed ^ 5), n, 0.3);
        let par = max_cut_local(&g, seed, restarts);
        let seq = max_cut_local_sequential(&g, seed, restarts);
        prop_assert_eq!(par.size, seq.size);
        prop_assert_eq!(par.cut.membership(), seq.cut.membership());
        let again = max_cut_local(&g, seed, restarts);
        prop_assert_eq!(again.cut.membership(), par.cut.membership());
    }

    #[test]
    fn cut_size_and_uncut_size_partition_edges(seed in any::<u64>(), n in 1usize..20, mask in any::<u64>()) {
        let g = common::random_graph(&mut common::rng(seed), n, 0.5);
        let cut = common::cut_from_x(n, mask & ((1u64 << n) - 1));
        prop_assert_eq!(g.cut_size(&cut).unwrap() + g.uncut_size(&cut).unwrap(), g.edge_count());
        prop_assert_eq!(g.cut_size(&cut).unwrap(), g.cut_size(&cut.swapped()).unwrap());
    }
}
