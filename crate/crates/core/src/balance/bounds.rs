use std::fmt;

use num_rational::Ratio;

use crate::dualgraph::{Classification, MarkedDualGraph, Subcurve};
use crate::error::{Error, Result};

/// `m_Z ≤ deg_Z ≤ M_Z` as exact fractions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    pub lower: Ratio<i64>,
    pub upper: Ratio<i64>,
}

impl DegreeBounds {
    pub fn exact(value: i64) -> Self {
        DegreeBounds {
            lower: Ratio::from_integer(value),
            upper: Ratio::from_integer(value),
        }
    }

    pub fn integers(lower: i64, upper: i64) -> Self {
        DegreeBounds {
            lower: Ratio::from_integer(lower),
            upper: Ratio::from_integer(upper),
        }
    }

    pub fn contains(&self, degree: i64) -> bool {
        let d = Ratio::from_integer(degree);
        self.lower <= d && d <= self.upper
    }
}

impl fmt::Display for DegreeBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

/// Bounds multiplied through by a common positive `scale`, so that
/// `deg` is admissible iff `lower ≤ scale·deg ≤ upper`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct ScaledBounds {
    pub lower: i128,
    pub upper: i128,
    pub scale: i128,
}

impl ScaledBounds {
    /// `m_Z` and `M_Z` scaled by `2(2g−2)`:
    /// `2dw + 2(3g−3−d)t + (2b−k)(2g−2)` and `2dw + 2(g−1−d)t + (k−2b)(2g−2)`.
    pub fn inequality(g: i64, d: i64, w: i64, k: i64, t: i64, b: i64) -> Self {
        let (g, d, w, k, t, b) = (g as i128, d as i128, w as i128, k as i128, t as i128, b as i128);
        let h = 2 * g - 2;
        ScaledBounds {
            lower: 2 * d * w + 2 * (3 * g - 3 - d) * t + (2 * b - k) * h,
            upper: 2 * d * w + 2 * (g - 1 - d) * t + (k - 2 * b) * h,
            scale: 2 * h,
        }
    }

    /// `d·w/(2g−2) ∓ k/2`, scaled by `2(2g−2)`.
    pub fn basic(g: i64, d: i64, w: i64, k: i64) -> Self {
        ScaledBounds::inequality(g, d, w, k, 0, 0)
    }

    pub fn admits(&self, degree: i64) -> bool {
        let s = self.scale * degree as i128;
        self.lower <= s && s <= self.upper
    }

    pub fn ceil_lower(&self) -> i64 {
        (-(-self.lower).div_euclid(self.scale)) as i64
    }

    pub fn floor_upper(&self) -> i64 {
        self.upper.div_euclid(self.scale) as i64
    }

    pub fn to_bounds(self) -> DegreeBounds {
        let r = |x: i128| Ratio::new(x as i64, self.scale as i64);
        DegreeBounds {
            lower: r(self.lower),
            upper: r(self.upper),
        }
    }
}

/// The two bounds of the balancing inequality on a connected core subcurve
/// `z`, given how many zero-degree bridges meet `z` twice and how many
/// maximal tails hang off `z`.
pub fn degree_bounds(
    graph: &MarkedDualGraph,
    classification: &Classification,
    z: Subcurve,
    d: i64,
    zero_bridges_on_z: i64,
    tails_on_z: i64,
) -> Result<DegreeBounds> {
    let g = graph.total_genus();
    if g < 3 {
        return Err(Error::GenusTooSmall { genus: g, required: 3 });
    }
    if !graph.is_proper(z) || !z.is_subset(graph.all_vertices()) {
        return Err(Error::Domain("subcurve must be proper and non-empty".into()));
    }
    if !z.is_subset(classification.core) || !graph.is_connected_set(z) {
        return Err(Error::Domain(
            "subcurve must be connected and made of core components".into(),
        ));
    }
    let w = graph.omega_degree_of(z);
    let k = graph.boundary_size(z);
    Ok(ScaledBounds::inequality(g, d, w, k, tails_on_z, zero_bridges_on_z).to_bounds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualgraph::{classify, VertexSet};
    use crate::fixtures;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn bounds_on_fixtures() {
        let g2 = fixtures::g2();
        let c = classify(&g2).unwrap();
        let b = degree_bounds(&g2, &c, VertexSet::singleton(0), 0, 0, 0).unwrap();
        assert_eq!((b.lower, b.upper), (r(-1, 1), r(1, 1)));

        let g3 = fixtures::g3();
        let c = classify(&g3).unwrap();
        let b = degree_bounds(&g3, &c, VertexSet::singleton(0), 1, 0, 0).unwrap();
        assert_eq!((b.lower, b.upper), (r(-1, 2), r(3, 2)));
        let ab = VertexSet::singleton(0).with(2);
        let b = degree_bounds(&g3, &c, ab, 1, 0, 0).unwrap();
        assert_eq!((b.lower, b.upper), (r(0, 1), r(2, 1)));
        assert_eq!(b.to_string(), "[0, 2]");
    }

    #[test]
    fn tails_shift_both_bounds() {
        // Core v0 of G4 carries one tail: w = 2·3 − 2 + 1 = 5, k = 1.
        let g4 = fixtures::g4();
        let c = classify(&g4).unwrap();
        let b = degree_bounds(&g4, &c, VertexSet::singleton(0), 0, 0, 1).unwrap();
        // m = (0 + 6·1)/4 − 1/2 = 1, M = (0 + 2·1)/4 + 1/2 = 1.
        assert_eq!((b.lower, b.upper), (r(1, 1), r(1, 1)));
    }

    #[test]
    fn scaled_rounding() {
        let s = ScaledBounds { lower: -4, upper: 12, scale: 8 };
        assert_eq!((s.ceil_lower(), s.floor_upper()), (0, 1));
        let s = ScaledBounds { lower: -12, upper: -4, scale: 8 };
        assert_eq!((s.ceil_lower(), s.floor_upper()), (-1, -1));
        assert!(s.admits(-1) && !s.admits(0));
    }

    #[test]
    fn rejects_low_genus_and_non_core() {
        let g = fixtures::g3();
        let c = classify(&g).unwrap();
        assert!(degree_bounds(&g, &c, VertexSet::singleton(1), 0, 0, 0).is_err());
        assert!(degree_bounds(&g, &c, g.all_vertices(), 0, 0, 0).is_err());
        let small = MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("B", 1, [])
            .edge("A", "B")
            .build()
            .unwrap();
        let c = classify(&small).unwrap();
        assert!(matches!(
            degree_bounds(&small, &c, VertexSet::singleton(0), 0, 0, 0),
            Err(Error::GenusTooSmall { .. })
        ));
    }
}
