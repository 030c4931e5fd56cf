//! Small named graphs used throughout the docs, examples and tests.

use crate::dualgraph::MarkedDualGraph;

fn build(b: crate::dualgraph::GraphBuilder) -> MarkedDualGraph {
    b.build().expect("fixture graphs are well formed")
}

/// A single vertex of the given genus carrying the given legs.
pub fn single(genus: i64, legs: &[u32]) -> MarkedDualGraph {
    build(MarkedDualGraph::builder().vertex("A", genus, legs.iter().copied()))
}

/// `A(g=1) = B(g=1)` joined by two parallel edges; genus 3, stable.
pub fn g2() -> MarkedDualGraph {
    build(
        MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("B", 1, [])
            .edges("A", "B", 2),
    )
}

/// [`g2`] with one edge subdivided by an exceptional vertex `E`.
/// Vertex order `A, E, B`; edges `A–E, E–B, A–B`.
pub fn g3() -> MarkedDualGraph {
    build(
        MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("E", 0, [])
            .vertex("B", 1, [])
            .edge("A", "E")
            .edge("E", "B")
            .edge("A", "B"),
    )
}

/// `v0(g=3) – E(g=0, legs 1, 2)`: a genus 3 curve with a rational tail.
pub fn g4() -> MarkedDualGraph {
    build(
        MarkedDualGraph::builder()
            .vertex("v0", 3, [])
            .vertex("E", 0, [1, 2])
            .edge("v0", "E"),
    )
}

/// [`g3`] with marking 1 placed on `E`.
pub fn g3_marked() -> MarkedDualGraph {
    build(
        MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("E", 0, [1])
            .vertex("B", 1, [])
            .edge("A", "E")
            .edge("E", "B")
            .edge("A", "B"),
    )
}

/// `A(1) – E1 – E2 – B(1)` plus `A – B`, no legs: two exceptional
/// components in one rational bridge.
pub fn double_exceptional_bridge() -> MarkedDualGraph {
    build(
        MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("E1", 0, [])
            .vertex("E2", 0, [])
            .vertex("B", 1, [])
            .edge("A", "E1")
            .edge("E1", "E2")
            .edge("E2", "B")
            .edge("A", "B"),
    )
}

/// `A(3) – E(0, leg 1)`: a destabilizing component that carries a marking.
pub fn destabilizing_tail() -> MarkedDualGraph {
    build(
        MarkedDualGraph::builder()
            .vertex("A", 3, [])
            .vertex("E", 0, [1])
            .edge("A", "E"),
    )
}

/// `A(1) – E1(0, leg 1) – E2(0, leg 2) – B(1)` plus `A – B`: a length-two
/// rational bridge whose components each carry a marking.
pub fn legged_bridge() -> MarkedDualGraph {
    build(
        MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("E1", 0, [1])
            .vertex("E2", 0, [2])
            .vertex("B", 1, [])
            .edge("A", "E1")
            .edge("E1", "E2")
            .edge("E2", "B")
            .edge("A", "B"),
    )
}

/// [`g2`]-shaped core with a rational tail `T(legs 1, 2)` hanging off `A`.
pub fn g2_with_tail() -> MarkedDualGraph {
    build(
        MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("B", 1, [])
            .vertex("T", 0, [1, 2])
            .edges("A", "B", 2)
            .edge("A", "T"),
    )
}
