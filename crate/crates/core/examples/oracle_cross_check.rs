//! Generates random quasistable graphs and compares the fast enumeration
//! against a brute force walk over a box of multidegrees.

use quasistable::balance::enumerate_balanced;
use quasistable::oracle::{brute_enumerate, corpus, CorpusParams, NaiveGraph};

fn main() -> quasistable::Result<()> {
    let params = CorpusParams { seed: 7, max_vertices: 5, ..CorpusParams::default() };
    let graphs = corpus(&params, 25)?;
    let mut mismatches = 0;
    for g in &graphs {
        let naive = NaiveGraph::new(g);
        for d in [-1, 0, 2] {
            let fast: Vec<Vec<i64>> =
                enumerate_balanced(g, d)?.iter().map(|m| m.id_ordered(g)).collect();
            let slow = brute_enumerate(g, d, naive.default_radius(d))?;
            if fast != slow {
                mismatches += 1;
                println!("mismatch on {g:?} at d = {d}");
            }
        }
    }
    println!("{} graphs, {mismatches} mismatches", graphs.len());
    Ok(())
}
