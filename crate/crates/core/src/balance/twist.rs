use num_integer::Integer;

use crate::balance::multidegree::Multidegree;
use crate::dualgraph::{Classification, MarkedDualGraph, VertexSet};
use crate::error::{Error, Result};

/// Adds `m·(w_v − t_v)` on each core component, `t_v` counting the maximal
/// tails hanging off `v`; tails and bridges keep their degrees. The total
/// moves by `m(2g − 2)`.
pub fn twist_by_omega(
    graph: &MarkedDualGraph,
    classification: &Classification,
    mdeg: &Multidegree,
    m: i64,
) -> Result<Multidegree> {
    mdeg.ensure_fits(graph)?;
    let g = graph.total_genus();
    if g < 3 {
        return Err(Error::GenusTooSmall { genus: g, required: 3 });
    }
    let mut out = mdeg.clone();
    for v in classification.core {
        let z = VertexSet::singleton(v);
        out[v] += m * (graph.omega_degree_of(z) - classification.tails_meeting(z));
    }
    Ok(out)
}

/// `gcd(d − g + 1, 2g − 2)`.
pub fn dm_gcd(d: i64, g: i64) -> i64 {
    (d - g + 1).gcd(&(2 * g - 2))
}

/// Whether the rigidified stack in degree `d` and genus `g` is Deligne-Mumford.
pub fn dm_condition(d: i64, g: i64) -> bool {
    dm_gcd(d, g) == 1
}

pub fn stack_dimension(g: i64, n: i64) -> i64 {
    4 * g - 3 + n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualgraph::classify;
    use crate::fixtures;

    #[test]
    fn twist_examples() {
        let g2 = fixtures::g2();
        let c = classify(&g2).unwrap();
        let t = twist_by_omega(&g2, &c, &Multidegree::new(vec![-1, 1]), 1).unwrap();
        assert_eq!(t.degrees(), &[1, 3]);
        assert_eq!(t.total(), 4);

        let g3 = fixtures::g3();
        let c = classify(&g3).unwrap();
        let m = Multidegree::new(vec![0, 1, 0]);
        assert_eq!(twist_by_omega(&g3, &c, &m, 1).unwrap().degrees(), &[2, 1, 2]);
        assert_eq!(twist_by_omega(&g3, &c, &m, 0).unwrap(), m);
    }

    #[test]
    fn twist_skips_tails() {
        let g4 = fixtures::g4();
        let c = classify(&g4).unwrap();
        let t = twist_by_omega(&g4, &c, &Multidegree::new(vec![1, -1]), 2).unwrap();
        // w_v0 = 5, one tail: v0 gains 2·4.
        assert_eq!(t.degrees(), &[9, -1]);
    }

    #[test]
    fn gcd_examples() {
        assert!(dm_condition(1, 3));
        assert!(!dm_condition(4, 3));
        assert_eq!(dm_gcd(4, 3), 2);
        assert!(!dm_condition(2, 3));
        assert_eq!(dm_gcd(2, 3), 4);
    }

    #[test]
    fn dimensions() {
        assert_eq!(stack_dimension(3, 0), 9);
        assert_eq!(stack_dimension(3, 1), 10);
        assert_eq!(stack_dimension(5, 2), 19);
    }
}
