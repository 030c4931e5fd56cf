use proptest::prelude::*;

use quasistable::balance::{degree_bounds, enumerate_balanced, is_balanced, twist_by_omega};
use quasistable::cli::GraphDocument;
use quasistable::cohomology::{base_point_free_criterion, h0_if_criterion, h1_vanishing};
use quasistable::oracle::{random_quasistable, CorpusParams};
use quasistable::{classify, stability_status, MarkedDualGraph, Multidegree};

fn params(seed: u64) -> CorpusParams {
    CorpusParams {
        seed,
        max_vertices: 5,
        max_edges: 7,
        ..CorpusParams::default()
    }
}

fn graph() -> impl Strategy<Value = MarkedDualGraph> {
    any::<u64>().prop_map(|seed| random_quasistable(&params(seed)).unwrap())
}

/// Graphs whose components all have positive genus and carry no markings.
fn unpointed_stable() -> impl Strategy<Value = MarkedDualGraph> {
    any::<u64>().prop_map(|seed| {
        let p = CorpusParams {
            min_genus_per_vertex: 1,
            max_legs: 0,
            ..params(seed)
        };
        random_quasistable(&p).unwrap()
    })
}

fn graph_and_degrees() -> impl Strategy<Value = (MarkedDualGraph, Multidegree)> {
    graph().prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), prop::collection::vec(-4i64..10, n).prop_map(Multidegree::new))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn stability_is_nested(g in graph()) {
        let s = stability_status(&g).unwrap();
        prop_assert!(s.quasistable);
        prop_assert!(!s.stable || s.quasistable);
        prop_assert!(!s.quasistable || s.semistable);
    }

    #[test]
    fn enumerated_degrees_are_balanced(g in graph(), d in -4i64..6) {
        let c = classify(&g).unwrap();
        for m in enumerate_balanced(&g, d).unwrap() {
            prop_assert_eq!(m.total(), d);
            prop_assert!(is_balanced(&g, &m).unwrap().verdict());
            for t in c.all_tails() {
                prop_assert_eq!(m.on(t.vertices), -1);
            }
        }
    }

    #[test]
    fn h1_vanishing_survives_adding_degree((g, m) in graph_and_degrees(), v in any::<prop::sample::Index>()) {
        if h1_vanishing(&g, &m).unwrap().holds() {
            let mut more = m.clone();
            more[v.index(g.vertex_count())] += 1;
            prop_assert!(h1_vanishing(&g, &more).unwrap().holds());
        }
    }

    #[test]
    fn base_point_freeness_implies_vanishing((g, m) in graph_and_degrees()) {
        if base_point_free_criterion(&g, &m).unwrap().holds() {
            prop_assert!(h1_vanishing(&g, &m).unwrap().holds());
        }
    }

    #[test]
    fn h0_is_riemann_roch((g, m) in graph_and_degrees()) {
        if let Some(h0) = h0_if_criterion(&g, &m).unwrap() {
            prop_assert_eq!(h0, m.total() - g.total_genus() + 1);
        }
    }

    #[test]
    fn twist_moves_total_and_keeps_balance(g in graph(), d in -3i64..4, k in -2i64..3) {
        let c = classify(&g).unwrap();
        let shift = k * (2 * g.total_genus() - 2);
        for m in enumerate_balanced(&g, d).unwrap() {
            let twisted = twist_by_omega(&g, &c, &m, k).unwrap();
            prop_assert_eq!(twisted.total(), d + shift);
            prop_assert!(is_balanced(&g, &twisted).unwrap().verdict());
        }
    }

    #[test]
    fn complement_bounds_mirror(g in unpointed_stable(), d in -6i64..12) {
        let c = classify(&g).unwrap();
        let all = g.all_vertices();
        for z in g.connected_proper_subsets(all) {
            let rest = all.difference(z);
            if !g.is_connected_set(rest) {
                continue;
            }
            let a = degree_bounds(&g, &c, z, d, 0, 0).unwrap();
            let b = degree_bounds(&g, &c, rest, d, 0, 0).unwrap();
            let d = num_rational::Ratio::from_integer(d);
            prop_assert_eq!(b.lower, d - a.upper);
            prop_assert_eq!(b.upper, d - a.lower);
        }
    }

    #[test]
    fn document_round_trip(g in graph(), d in -2i64..4) {
        let mut doc = GraphDocument::from_graph(&g);
        let list = enumerate_balanced(&g, d).unwrap();
        for (i, m) in list.iter().enumerate() {
            doc = doc.with_multidegree(&g, format!("m{i}"), m);
        }
        let back = GraphDocument::parse(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        let h = back.graph().unwrap();
        prop_assert_eq!(&h, &g);
        for (i, m) in list.iter().enumerate() {
            prop_assert_eq!(&back.multidegree(&h, &format!("m{i}")).unwrap(), m);
        }
    }
}
