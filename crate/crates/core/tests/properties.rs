use std::collections::HashSet;

use gsatlas::bounds::orbit_measure_bounds;
use gsatlas::invariants::{
    is_two_colorable, min_vertex_cover, orbit_two_colorable, pauli_persistency, rank_indexes,
    schmidt_rank, shared_solver, sr_max, Bipartition,
};
use gsatlas::{
    canonical_form, from_graph6, lc_orbit, local_complement, to_graph6, Atlas, ClassifyOptions,
    Graph,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_map(|mut g| {
        // Chain the components through their lowest vertices.
        let comps = g.components();
        for w in comps.windows(2) {
            g.add_edge(
                w[0].trailing_zeros() as usize,
                w[1].trailing_zeros() as usize,
            );
        }
        g
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| (Just(g), permutation(g.n())))
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Random labeled tree from a Prüfer sequence.
fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n.saturating_sub(2)).prop_map(move |seq| {
            let mut degree = vec![1usize; n];
            for &x in &seq {
                degree[x] += 1;
            }
            let mut g = Graph::empty(n).unwrap();
            for &x in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                g.add_edge(leaf, x);
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            g.add_edge(rest[0], rest[1]);
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in with_permutation(8)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_form(&g).to_graph().edge_count(), g.edge_count());
        prop_assert_eq!(canonical_form(&canonical_form(&g).to_graph()), canonical_form(&g));
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn local_complement_is_an_involution(g in graph(8), v in 0usize..8) {
        let v = v % g.n();
        let h = local_complement(&g, v).unwrap();
        prop_assert_eq!(local_complement(&h, v).unwrap(), g);
        prop_assert_eq!(h.is_connected(), g.is_connected());
        prop_assert_eq!(h.neighbors(v), g.neighbors(v));
    }

    #[test]
    fn schmidt_ranks_survive_local_complementation(g in graph(8), v in 0usize..8) {
        let v = v % g.n();
        let h = local_complement(&g, v).unwrap();
        for bp in Bipartition::all(g.n()) {
            prop_assert_eq!(schmidt_rank(&g, bp), schmidt_rank(&h, bp));
        }
        prop_assert_eq!(rank_indexes(&g), rank_indexes(&h));
    }

    #[test]
    fn bound_sandwich(g in graph(8)) {
        let (lo, pp, vc) = (sr_max(&g), pauli_persistency(&g), min_vertex_cover(&g));
        prop_assert!(lo <= pp && pp <= vc, "{} {} {}", lo, pp, vc);
    }

    #[test]
    fn trees_have_persistency_equal_to_cover(t in tree(8)) {
        prop_assert!(t.is_connected());
        prop_assert_eq!(t.edge_count(), t.n() - 1);
        prop_assert_eq!(pauli_persistency(&t), min_vertex_cover(&t));
    }

    #[test]
    fn relabeling_commutes_with_persistency((g, perm) in with_permutation(7)) {
        prop_assert_eq!(pauli_persistency(&g), pauli_persistency(&g.permuted(&perm)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn orbit_is_the_same_from_any_member(g in connected(6), pick in any::<prop::sample::Index>()) {
        let o = lc_orbit(&g).unwrap();
        let member = o.members[pick.index(o.members.len())].to_graph();
        let o2 = lc_orbit(&member).unwrap();
        prop_assert_eq!(&o, &o2);
        for m in o.member_graphs() {
            for v in 0..m.n() {
                prop_assert!(o.contains(&canonical_form(&local_complement(&m, v).unwrap())));
            }
        }
    }

    #[test]
    fn orbit_invariants_agree_across_members(g in connected(6)) {
        let o = lc_orbit(&g).unwrap();
        let ri = rank_indexes(&o.representative);
        for m in o.member_graphs() {
            prop_assert_eq!(&rank_indexes(&m), &ri);
        }
        let any_bipartite = o.member_graphs().any(|m| is_two_colorable(&m));
        prop_assert_eq!(orbit_two_colorable(&o), any_bipartite);
        let b = orbit_measure_bounds(&o, shared_solver()).unwrap();
        prop_assert!(b.lower <= b.upper);
        prop_assert!(b.lower >= sr_max(&g));
    }

    #[test]
    fn subsets_of_vertices_give_valid_bipartitions(n in 2usize..10, keep in subsequence((0..10).collect::<Vec<usize>>(), 1..9)) {
        let mask: u32 = keep.iter().filter(|&&v| v < n).fold(0, |m, &v| m | 1 << v);
        let full = (1u32 << n) - 1;
        match Bipartition::new(n, mask) {
            Ok(bp) => {
                prop_assert!(bp.size() <= n / 2);
                prop_assert_eq!(bp.a_mask() | bp.b_mask(), full);
                prop_assert_eq!(bp.a_mask() & bp.b_mask(), 0);
            }
            Err(_) => prop_assert!(mask == 0 || mask == full),
        }
    }
}

#[test]
fn even_rings_have_exact_half_measure() {
    let atlas = Atlas::build(8, ClassifyOptions::default()).unwrap();
    for n in [4, 6, 8] {
        let r = atlas.lookup(&Graph::cycle(n).unwrap()).unwrap();
        assert_eq!(
            (r.bounds.lower, r.bounds.upper),
            (n as u32 / 2, n as u32 / 2),
            "C{n}"
        );
    }
}

#[test]
fn propagation_only_tightens() {
    let plain = Atlas::build(7, ClassifyOptions { propagate: false }).unwrap();
    let tight = Atlas::build(7, ClassifyOptions::default()).unwrap();
    for n in 2..=7 {
        let mut seen = HashSet::new();
        for r in tight.classes(n).unwrap() {
            let loose = plain.lookup(&r.representative).unwrap();
            assert!(
                loose.bounds.contains(&r.bounds),
                "{} vs {}",
                loose.bounds,
                r.bounds
            );
            seen.insert(r.number);
        }
        assert_eq!(seen.len(), tight.classes(n).unwrap().len());
    }
}
