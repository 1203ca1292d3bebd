mod common;

use common::*;
use hgo_core::{
    automorphisms, canonical_graph, canonical_orbit, count_orbits, refine_partition, CanonicalKey,
    ColoredGraph, Generator, OrderedPartition, Permutation,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_n, any::<bool>(), 1u8..=3, 1u8..=2).prop_flat_map(|(n, directed, vc, ec)| {
        let slots = n * n;
        (
            proptest::collection::vec(0..vc as i64, n),
            proptest::collection::vec(0..=ec as i64, slots),
        )
            .prop_map(move |(colors, cells)| {
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (0..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| u != v && (directed || u < v))
                    .map(|(u, v)| (u, v, cells[u * n + v]))
                    .filter(|e| e.2 != 0)
                    .collect();
                ColoredGraph::build(n, directed, &colors, &edges).unwrap()
            })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (ColoredGraph, Permutation)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(g, m)| (g, Permutation::new(m).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_key_matches_permutation_scan(g in graph_strategy(6)) {
        prop_assert_eq!(canonical_graph(&g).unwrap(), brute_canonical(&g, None));
    }

    #[test]
    fn canonical_graph_is_idempotent(g in graph_strategy(7)) {
        let key = canonical_graph(&g).unwrap();
        let h = ColoredGraph::deserialize(&key, g.is_directed()).unwrap();
        prop_assert_eq!(canonical_graph(&h).unwrap(), key);
    }

    #[test]
    fn orbit_keys_agree_exactly_on_orbits((g, p) in with_permutation(5)) {
        let orbits = brute_orbits(&g);
        let h = g.permute(&p).unwrap();
        for u in 0..g.order() {
            for v in 0..g.order() {
                let same_orbit = orbits.iter().any(|o| o.contains(&u) && o.contains(&v));
                let ku = canonical_orbit(&g, u).unwrap();
                prop_assert_eq!(ku == canonical_orbit(&h, p.apply(v)).unwrap(), same_orbit);
            }
        }
    }

    #[test]
    fn orbit_key_keeps_anchor_first(g in graph_strategy(6), pick in any::<prop::sample::Index>()) {
        let v = pick.index(g.order());
        let key = canonical_orbit(&g, v).unwrap();
        prop_assert_eq!(key.values()[0], g.vertex_color(v));
    }

    #[test]
    fn automorphism_group_matches_scan(g in graph_strategy(5)) {
        let mut got: Vec<Vec<usize>> =
            automorphisms(&g).unwrap().iter().map(|p| p.mapping().to_vec()).collect();
        got.sort();
        prop_assert_eq!(got, brute_automorphisms(&g));
    }

    #[test]
    fn refinement_is_equitable_and_finer(g in graph_strategy(7)) {
        let unit = OrderedPartition::unit(g.order());
        let r = refine_partition(&g, &unit);
        prop_assert!(r.is_equitable(&g));
        let mut all: Vec<usize> = r.cells().concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.order()).collect::<Vec<_>>());
    }

    #[test]
    fn counts_are_relabeling_invariant((g, p) in with_permutation(6), k in 1usize..=3) {
        prop_assume!(k <= g.order());
        let gen = Generator::new();
        let h = g.permute(&p).unwrap();
        for conn in [false, true] {
            let a = count_orbits(&gen, &g, 0, k, 3, 2, conn).unwrap();
            let b = count_orbits(&gen, &h, p.apply(0), k, 3, 2, conn).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn connected_totals_match_subset_scan(g in graph_strategy(6), k in 1usize..=3) {
        prop_assume!(k <= g.order());
        let c = count_orbits(&Generator::new(), &g, 0, k, 3, 2, true).unwrap();
        let want = itertools::Itertools::combinations(1..g.order(), k - 1)
            .filter(|s| connected_on(&g, &[&[0], &s[..]].concat()))
            .count() as u64;
        prop_assert_eq!(c.total(), want);
    }

    #[test]
    fn key_display_round_trips(g in graph_strategy(5)) {
        let key = canonical_graph(&g).unwrap();
        let parsed: Vec<u8> = key.to_string().split(',').map(|t| t.parse().unwrap()).collect();
        prop_assert_eq!(CanonicalKey::new(parsed), key);
    }
}
