//! Runs the degree criteria for vanishing, base point freeness and normal
//! generation on some multidegrees.

use quasistable::cohomology::{
    base_point_free_criterion, dualizing_power_report, h0_if_criterion, h1_vanishing,
};
use quasistable::{fixtures, Multidegree};

fn main() -> quasistable::Result<()> {
    let g = fixtures::g2();
    for degrees in [[2, 2], [3, 3], [4, 4]] {
        let m = Multidegree::new(degrees.to_vec());
        println!(
            "{}: h1 vanishes {}, base point free {}, h0 {:?}",
            m.render(&g),
            h1_vanishing(&g, &m)?.holds(),
            base_point_free_criterion(&g, &m)?.holds(),
            h0_if_criterion(&g, &m)?
        );
    }
    for (name, g) in [("g3", fixtures::g3()), ("g4", fixtures::g4())] {
        for m in 2..=3 {
            println!("{name}: omega power {m} passes {}", dualizing_power_report(&g, m, false)?.holds());
        }
    }
    Ok(())
}
