//! Lists balanced multidegrees of a pointed graph in a few total degrees,
//! with the forced tail and bridge degrees.

use quasistable::balance::{is_balanced, BalanceContext};
use quasistable::{fixtures, Multidegree};

fn main() -> quasistable::Result<()> {
    let g = fixtures::g4();
    let ctx = BalanceContext::new(&g)?;
    for (v, deg) in &ctx.forced().tail_vertices {
        println!("tail component {} has degree {deg}", g.id(*v));
    }
    for d in -2..=3 {
        let list = ctx.enumerate(d)?;
        let shown: Vec<_> = list.iter().map(|m| m.render(&g)).collect();
        println!("d = {d}: {}", shown.join("  "));
    }

    let m = Multidegree::new(vec![1, 0]);
    match is_balanced(&g, &m)?.first_violation {
        Some(v) => println!("{} is not balanced: {}", m.render(&g), v.describe(&g)),
        None => println!("{} is balanced", m.render(&g)),
    }
    Ok(())
}
