use std::collections::BTreeMap;

use proptest::prelude::*;

use antimagic_core::graph::{
    check_local_antimagic, chi_la_bounds, chromatic_number, construct_labeling, make_graph,
    vertex_weights, EdgeLabeling, GraphFamily, Part, PartiteGraph, Source,
};
use antimagic_core::oracle::{exact_chi_la, exists_k_class_labeling};

fn weights_by_name(l: &EdgeLabeling) -> BTreeMap<String, u64> {
    vertex_weights(l).by_name(&l.graph)
}

/// Families with at most 9 edges, in both orientations where it matters.
fn small_families() -> Vec<GraphFamily> {
    let mut out = Vec::new();
    for m in 1..=9 {
        for n in 1..=9 {
            for r in 1..=4 {
                if r * m * n <= 9 {
                    out.push(GraphFamily::Rkmn { m, n, r });
                }
            }
            if m + n + m * n <= 9 {
                out.push(GraphFamily::K1mn { m, n });
            }
        }
    }
    out
}

#[test]
fn oracle_agrees_with_the_bound_table() {
    for f in small_families() {
        let g = make_graph(f).unwrap();
        let b = chi_la_bounds(f);
        let r = exact_chi_la(&g, 9).unwrap();
        let Some(k) = r.chi_la else {
            // only copies of K_2 lack a labeling
            assert!(matches!(f, GraphFamily::Rkmn { m: 1, n: 1, .. }), "{f}");
            continue;
        };
        assert!(b.contains(k), "{f}: oracle {k} outside {b:?}");
        if b.upper == Some(b.lower) {
            assert_eq!(Some(k), b.upper, "{f}");
        }
        assert!(k >= chromatic_number(&g));
        let w = vertex_weights(r.witness.as_ref().unwrap());
        assert!(w.proper);
        assert_eq!(w.color_count(), k);
        if let Ok(c) = construct_labeling(f, None) {
            assert!(vertex_weights(&c.labeling).color_count() >= k, "{f}");
        }
    }
}

#[test]
fn decision_form_matches() {
    let k24 = make_graph(GraphFamily::Rkmn { m: 2, n: 4, r: 1 }).unwrap();
    let k23 = make_graph(GraphFamily::Rkmn { m: 2, n: 3, r: 1 }).unwrap();
    assert!(exists_k_class_labeling(&k24, 2, 9).unwrap().is_some());
    assert!(exists_k_class_labeling(&k23, 2, 9).unwrap().is_none());
    assert!(
        exists_k_class_labeling(&PartiteGraph::path(2).unwrap(), 9, 9)
            .unwrap()
            .is_none()
    );
}

#[test]
fn oracle_is_thread_count_independent() {
    let g = make_graph(GraphFamily::K1mn { m: 2, n: 2 }).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| exact_chi_la(&g, 9).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, exact_chi_la(&g, 9).unwrap());
}

#[test]
fn sides_take_their_claimed_sums() {
    for f in [
        GraphFamily::Rkmn { m: 7, n: 11, r: 4 },
        GraphFamily::Rkmn { m: 3, n: 5, r: 3 },
        GraphFamily::Rkmn { m: 6, n: 6, r: 2 },
        GraphFamily::Rkmn { m: 5, n: 5, r: 4 },
        GraphFamily::Rkmn { m: 5, n: 4, r: 1 },
    ] {
        let c = construct_labeling(f, None).unwrap();
        let Source::Family(fam) = &c.source else {
            panic!("{f} should come from a matrix family");
        };
        let w = vertex_weights(&c.labeling);
        for (v, &x) in c.labeling.graph.vertices.iter().zip(&w.weights) {
            let claimed = if v.part == Part::V {
                &fam.claimed_row_sums
            } else {
                &fam.claimed_col_sums
            };
            assert!(claimed.contains(&x), "{f}: {} weighs {x}", v.name);
        }
    }
}

#[test]
fn tripartite_hub_takes_the_claimed_weight() {
    for (m, n) in [(2, 4), (3, 3), (4, 4), (3, 4), (4, 3), (5, 2)] {
        let f = GraphFamily::K1mn { m, n };
        let c = construct_labeling(f, None).unwrap();
        let Source::Blanked(b) = &c.source else {
            panic!("{f} should come from a B matrix");
        };
        assert_eq!(weights_by_name(&c.labeling)["x"], b.claimed_hub, "{f}");
        assert!(check_local_antimagic(&c.labeling).is_empty());
    }
}

/// A random simple graph: a spanning path plus extra edges, so no vertex
/// is isolated.
fn random_graph() -> impl Strategy<Value = PartiteGraph> {
    (3usize..=8)
        .prop_flat_map(|k| (Just(k), proptest::collection::vec((0..k, 0..k), 0..12)))
        .prop_map(|(k, extra)| {
            let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
            for (a, b) in extra {
                let e = (a.min(b), a.max(b));
                if a != b && !edges.contains(&e) {
                    edges.push(e);
                }
            }
            PartiteGraph::custom(k, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn weights_ignore_edge_order(
        (g, labels, order) in random_graph().prop_flat_map(|g| {
            let e = g.edge_count();
            let labels = Just((1..=e as u32).collect::<Vec<_>>()).prop_shuffle();
            let order = Just((0..e).collect::<Vec<_>>()).prop_shuffle();
            (Just(g), labels, order)
        })
    ) {
        let l = EdgeLabeling::new(g.clone(), labels.clone()).unwrap();
        let permuted = PartiteGraph::custom(g.vertex_count(), order.iter().map(|&k| g.edges[k]).collect()).unwrap();
        let relabelled = EdgeLabeling::new(permuted, order.iter().map(|&k| labels[k]).collect()).unwrap();
        prop_assert_eq!(vertex_weights(&l), vertex_weights(&relabelled));
    }

    #[test]
    fn weight_total_counts_each_label_twice(
        (g, labels) in random_graph().prop_flat_map(|g| {
            let e = g.edge_count();
            (Just(g), Just((1..=e as u32).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let e = g.edge_count() as u64;
        let l = EdgeLabeling::new(g, labels).unwrap();
        prop_assert_eq!(vertex_weights(&l).weights.iter().sum::<u64>(), e * (e + 1));
    }

    #[test]
    fn constructions_stay_in_bounds(m in 1usize..=9, n in 1usize..=9, r in 1usize..=4, tri in any::<bool>()) {
        let f = if tri { GraphFamily::K1mn { m, n } } else { GraphFamily::Rkmn { m, n, r } };
        prop_assume!(chi_la_bounds(f).recipe().is_some());
        let c = construct_labeling(f, None).unwrap();
        prop_assert!(check_local_antimagic(&c.labeling).is_empty());
        let k = vertex_weights(&c.labeling).color_count();
        prop_assert!(chi_la_bounds(f).contains(k));
        prop_assert_eq!(&c, &construct_labeling(f, None).unwrap());
    }
}
