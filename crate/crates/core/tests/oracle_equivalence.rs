use quasistable::balance::{enumerate_balanced, BalanceContext, Multidegree};
use quasistable::oracle::{
    brute_enumerate, corpus, for_each_in_box, CorpusParams, NaiveGraph, Reading,
};

fn small_corpus() -> Vec<quasistable::MarkedDualGraph> {
    corpus(&CorpusParams { seed: 9000, ..CorpusParams::default() }, 40).unwrap()
}

#[test]
fn fast_check_matches_naive_scan() {
    for graph in small_corpus() {
        let naive = NaiveGraph::new(&graph);
        let ctx = BalanceContext::new(&graph).unwrap();
        for d in [-3, 0, 4] {
            let r = naive.default_radius(d).min(4);
            for_each_in_box(graph.vertex_count(), d, r, |m| {
                let fast = ctx.is_balanced(&Multidegree::new(m.to_vec())).unwrap();
                let slow = naive.is_balanced(m, Reading::CoreOnly).unwrap();
                assert_eq!(fast, slow, "{graph:?} {m:?}");
            });
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for graph in small_corpus().into_iter().take(20) {
        let naive = NaiveGraph::new(&graph);
        for d in [-2, 1, 5] {
            let fast: Vec<Vec<i64>> = enumerate_balanced(&graph, d)
                .unwrap()
                .into_iter()
                .map(Multidegree::into_inner)
                .collect();
            let slow = brute_enumerate(&graph, d, naive.default_radius(d)).unwrap();
            assert_eq!(fast, slow, "{graph:?} d={d}");
        }
    }
}
