//! Builds a few graphs and prints their stability and tail/bridge structure.

use quasistable::{classify, fixtures, stability_status, MarkedDualGraph};

fn report(name: &str, g: &MarkedDualGraph) -> quasistable::Result<()> {
    let s = stability_status(g)?;
    println!(
        "{name}: genus {}, semistable {}, quasistable {}, stable {}",
        g.total_genus(),
        s.semistable,
        s.quasistable,
        s.stable
    );
    let c = classify(g)?;
    let ids = |set: quasistable::VertexSet| set.iter().map(|v| g.id(v)).collect::<Vec<_>>().join(",");
    println!("  core {{{}}}", ids(c.core));
    for t in &c.tails {
        println!("  tail {{{}}} anchored at {}", ids(t.vertices), g.id(t.anchor));
    }
    for b in &c.bridges {
        let chain: Vec<_> = b.chain.iter().map(|&v| g.id(v)).collect();
        println!("  bridge {} between {} and {}", chain.join("-"), g.id(b.endpoints[0]), g.id(b.endpoints[1]));
    }
    Ok(())
}

fn main() -> quasistable::Result<()> {
    report("two genus 1 components", &fixtures::g2())?;
    report("one node blown up", &fixtures::g3())?;
    report("rational tail with two points", &fixtures::g4())?;

    let chain = MarkedDualGraph::builder()
        .vertex("X", 2, [])
        .vertex("P", 0, [])
        .vertex("Q", 0, [1])
        .vertex("Y", 1, [])
        .edge("X", "P")
        .edge("P", "Q")
        .edge("Q", "Y")
        .edge("X", "Y")
        .build()?;
    report("bridge of length two", &chain)
}
