//! Walks the fiber of the forgetful map over a stable graph: every set of
//! nodes to blow up, with the balanced multidegrees on the result.

use quasistable::fixtures;
use quasistable::morphisms::{forgetful_fiber, stable_model};

fn main() -> quasistable::Result<()> {
    let g = fixtures::g2();
    for d in [0, 1] {
        println!("d = {d}");
        for entry in forgetful_fiber(&g, d)? {
            let blown: Vec<_> = entry.edges.iter().map(|e| e.to_string()).collect();
            let model = stable_model(&entry.graph)?;
            println!(
                "  blow up {{{}}}: {} balanced, stable model has {} vertices",
                blown.join(","),
                entry.multidegrees.len(),
                model.graph.vertex_count()
            );
        }
    }
    Ok(())
}
