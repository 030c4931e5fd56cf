//! Adds a marking at each possible place and forgets it again.

use quasistable::balance::enumerate_balanced;
use quasistable::fixtures;
use quasistable::morphisms::{contract_last_marking, stabilize, PointLocation};

fn main() -> quasistable::Result<()> {
    let g = fixtures::g3_marked();
    let m = enumerate_balanced(&g, 1)?.remove(0);
    println!("start: {}", m.render(&g));

    let mut places: Vec<PointLocation> =
        g.vertices().iter().map(|v| PointLocation::OnVertex(v.id.clone())).collect();
    places.extend(g.edge_ids().map(PointLocation::AtNode));
    places.push(PointLocation::AtMarking(1));

    for delta in places {
        let up = stabilize(&g, &m, &delta)?;
        let down = contract_last_marking(&up.graph, &up.mdeg)?;
        println!(
            "{delta}: {} vertices, {}; back to {} at {}",
            up.graph.vertex_count(),
            up.mdeg.render(&up.graph),
            down.mdeg.render(&down.graph),
            down.delta
        );
    }
    Ok(())
}
