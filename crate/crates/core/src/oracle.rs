//! Slow reference implementations by exhaustive search over vertex subsets.
//!
//! Nothing here calls into the other modules beyond reading a
//! [`MarkedDualGraph`]'s vertices and edges, so the results are an
//! independent check on the fast code paths.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dualgraph::{MarkedDualGraph, Vertex};
use crate::error::{Error, Result};

/// Which subcurves the balancing inequality is imposed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reading {
    /// Connected proper subcurves made of core components and whole bridges, at least
    /// one component being core; tail and bridge degrees pinned component by component.
    CoreOnly,
    /// Every connected proper subcurve not contained in a tail or a bridge;
    /// every tail has degree −1 and every bridge degree 0 or 1.
    Literal,
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |v| mask >> v & 1 == 1)
}

/// Subset data of one graph, all computed by scanning every vertex subset.
#[derive(Clone, Debug)]
pub struct NaiveGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    vertex_genus: Vec<i64>,
    legs: Vec<usize>,
    genus: i64,
    connected: Vec<u64>,
    tails: Vec<u64>,
    all_tails: Vec<u64>,
    bridges: Vec<u64>,
    all_bridges: Vec<u64>,
    exceptional: u64,
    destabilizing: u64,
    semistable: bool,
    /// Core-only and literal subcurve lists.
    scans: [Vec<Scan>; 2],
}

#[derive(Clone, Debug)]
struct Scan {
    z: u64,
    k: i64,
    w: i64,
    t: i64,
    /// Maximal bridges off `z` attached to it at both ends.
    bridges: Vec<u64>,
}

impl NaiveGraph {
    pub fn new(graph: &MarkedDualGraph) -> Self {
        let vertices = graph.vertices().len();
        let edges: Vec<(usize, usize)> = graph.edges().iter().map(|e| (e[0], e[1])).collect();
        let vertex_genus: Vec<i64> = graph.vertices().iter().map(|v| v.genus).collect();
        let legs: Vec<usize> = graph.vertices().iter().map(|v| v.legs.len()).collect();
        let genus = vertex_genus.iter().sum::<i64>() + edges.len() as i64 - vertices as i64 + 1;
        let mut me = NaiveGraph {
            vertices,
            edges,
            vertex_genus,
            legs,
            genus,
            connected: Vec::new(),
            tails: Vec::new(),
            all_tails: Vec::new(),
            bridges: Vec::new(),
            all_bridges: Vec::new(),
            exceptional: 0,
            destabilizing: 0,
            semistable: false,
            scans: [Vec::new(), Vec::new()],
        };
        let full = me.full();
        me.connected = (1..=full).filter(|&z| me.is_connected(z)).collect();
        let rational = |k: i64| {
            me.connected
                .iter()
                .copied()
                .filter(|&z| z != full && me.genus_of(z) == 0 && me.boundary(z) == k)
                .collect::<Vec<u64>>()
        };
        let all_tails = rational(1);
        let all_bridges = rational(2)
            .into_iter()
            .filter(|&b| !all_tails.iter().any(|&t| b & !t == 0))
            .collect();
        me.all_tails = all_tails;
        me.all_bridges = all_bridges;
        let maximal = |sets: &[u64]| {
            sets.iter()
                .copied()
                .filter(|&s| !sets.iter().any(|&o| o != s && s & !o == 0))
                .collect::<Vec<u64>>()
        };
        me.tails = maximal(&me.all_tails);
        me.bridges = maximal(&me.all_bridges);

        let mut min_special = i64::MAX;
        for v in 0..vertices {
            if me.vertex_genus[v] != 0 {
                continue;
            }
            let ends = me.endpoints_at(v);
            let special = ends + me.legs[v] as i64;
            min_special = min_special.min(special);
            let looped = me.edges.iter().any(|&(a, b)| a == v && b == v);
            if special == 2 && !looped {
                me.destabilizing |= bit(v);
                if me.legs[v] == 0 {
                    me.exceptional |= bit(v);
                }
            }
        }
        let n: usize = me.legs.iter().sum();
        me.semistable = 2 * genus - 2 + n as i64 > 0 && min_special >= 2;
        me.scans = [me.scan(Reading::CoreOnly), me.scan(Reading::Literal)];
        me
    }

    fn full(&self) -> u64 {
        if self.vertices == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertices) - 1
        }
    }

    fn endpoints_at(&self, v: usize) -> i64 {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as i64 + (b == v) as i64)
            .sum()
    }

    fn is_connected(&self, z: u64) -> bool {
        let start = z.trailing_zeros() as usize;
        let mut reached = bit(start);
        loop {
            let mut grown = reached;
            for &(a, b) in &self.edges {
                if z & bit(a) != 0 && z & bit(b) != 0 {
                    if reached & bit(a) != 0 {
                        grown |= bit(b);
                    }
                    if reached & bit(b) != 0 {
                        grown |= bit(a);
                    }
                }
            }
            if grown == reached {
                return reached == z;
            }
            reached = grown;
        }
    }

    fn genus_of(&self, z: u64) -> i64 {
        let inside = self
            .edges
            .iter()
            .filter(|&&(a, b)| z & bit(a) != 0 && z & bit(b) != 0)
            .count() as i64;
        members(z).map(|v| self.vertex_genus[v]).sum::<i64>() + inside - z.count_ones() as i64 + 1
    }

    fn boundary(&self, z: u64) -> i64 {
        self.edges
            .iter()
            .filter(|&&(a, b)| (z & bit(a) != 0) != (z & bit(b) != 0))
            .count() as i64
    }

    fn tail_union(&self) -> u64 {
        self.tails.iter().fold(0, |acc, t| acc | t)
    }

    fn bridge_union(&self) -> u64 {
        self.bridges.iter().fold(0, |acc, b| acc | b)
    }

    fn core(&self) -> u64 {
        self.full() & !(self.tail_union() | self.bridge_union())
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn is_quasistable(&self) -> bool {
        self.semistable
            && (self.destabilizing == 0
                || (self.genus >= 2
                    && self.destabilizing & !self.exceptional == 0
                    && self.exceptional & self.tail_union() == 0
                    && self
                        .bridges
                        .iter()
                        .all(|b| (b & !self.tail_union() & self.exceptional).count_ones() <= 1)))
    }

    /// Outside endpoints of the two edges leaving a bridge.
    fn attachments(&self, b: u64) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(x, y)| match (b & bit(x) != 0, b & bit(y) != 0) {
                (true, false) => Some(y),
                (false, true) => Some(x),
                _ => None,
            })
            .collect()
    }

    fn k_vertex(&self, v: usize) -> i64 {
        self.boundary(bit(v))
    }

    fn degree(mdeg: &[i64], z: u64) -> i64 {
        members(z).map(|v| mdeg[v]).sum()
    }

    /// The balancing condition under `reading`. Requires a quasistable graph of genus ≥ 3.
    pub fn is_balanced(&self, mdeg: &[i64], reading: Reading) -> Result<bool> {
        if self.genus < 3 {
            return Err(Error::GenusTooSmall { genus: self.genus, required: 3 });
        }
        if !self.is_quasistable() {
            return Err(Error::NotQuasistable);
        }
        if mdeg.len() != self.vertices {
            return Err(Error::Domain("multidegree length does not match the graph".into()));
        }
        if members(self.exceptional).any(|v| mdeg[v] != 1) {
            return Ok(false);
        }
        let tails_union = self.tail_union();

        let scans = match reading {
            Reading::CoreOnly => {
                if self.tails.iter().any(|&t| Self::degree(mdeg, t) != -1) {
                    return Ok(false);
                }
                if members(tails_union).any(|v| mdeg[v] != self.k_vertex(v) - 2) {
                    return Ok(false);
                }
                for &b in &self.bridges {
                    let chain = b & !tails_union;
                    let mut raised = 0;
                    for v in members(chain) {
                        let low = self.k_vertex(v) - 2;
                        if mdeg[v] == low + 1 {
                            raised += 1;
                        } else if mdeg[v] != low {
                            return Ok(false);
                        }
                    }
                    if raised > 1 {
                        return Ok(false);
                    }
                }
                &self.scans[0]
            }
            Reading::Literal => {
                if self.all_tails.iter().any(|&t| Self::degree(mdeg, t) != -1) {
                    return Ok(false);
                }
                if self
                    .all_bridges
                    .iter()
                    .any(|&b| !(0..=1).contains(&Self::degree(mdeg, b)))
                {
                    return Ok(false);
                }
                &self.scans[1]
            }
        };

        let h = 2 * self.genus - 2;
        let d: i64 = mdeg.iter().sum();
        for scan in scans {
            let Scan { z, k, w, t, .. } = *scan;
            let b = scan.bridges.iter().filter(|&&br| Self::degree(mdeg, br) == 0).count() as i64;
            // |deg − d(w − t)/(2g − 2) − t| ≤ (k − t − 2b)/2, times 2(2g − 2).
            let centred = 2 * h * Self::degree(mdeg, z) - 2 * d * (w - t) - 2 * h * t;
            if centred.abs() > (k - t - 2 * b) * h {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Subcurves tested under `reading`, with the numbers the inequality needs.
    fn scan(&self, reading: Reading) -> Vec<Scan> {
        let full = self.full();
        let core = self.core();
        let inside = |z: u64, sets: &[u64]| sets.iter().any(|&s| z & !s == 0);
        let adjacent = |x: u64, z: u64| {
            self.edges.iter().any(|&(a, b)| {
                (x & bit(a) != 0 && z & bit(b) != 0) || (x & bit(b) != 0 && z & bit(a) != 0)
            })
        };
        self.connected
            .iter()
            .copied()
            .filter(|&z| z != full)
            .filter(|&z| match reading {
                Reading::CoreOnly => {
                    z & core != 0
                        && z & self.tail_union() & !self.bridge_union() == 0
                        && self.bridges.iter().all(|&b| z & b == 0 || z & b == b)
                }
                Reading::Literal => !inside(z, &self.tails) && !inside(z, &self.bridges),
            })
            .map(|z| {
                let k = self.boundary(z);
                Scan {
                    z,
                    k,
                    w: 2 * self.genus_of(z) - 2 + k,
                    t: self
                        .tails
                        .iter()
                        .filter(|&&tail| tail & !z != 0 && (tail & z != 0 || adjacent(tail, z)))
                        .count() as i64,
                    bridges: self
                        .bridges
                        .iter()
                        .copied()
                        .filter(|&br| br & z == 0)
                        .filter(|&br| self.attachments(br).iter().all(|&x| z & bit(x) != 0))
                        .collect(),
                }
            })
            .collect()
    }

    /// `max_v ⌈max(|m_v|, |M_v|)⌉ + 1` with no zero bridges counted, using the forced
    /// value on tail and bridge components.
    pub fn default_radius(&self, d: i64) -> i64 {
        let g = self.genus;
        let h = 2 * g - 2;
        let core = self.core();
        let mut r = if self.vertices == 1 { d.abs() } else { 0 };
        for v in 0..self.vertices {
            let k = self.k_vertex(v);
            let magnitude = if core & bit(v) == 0 || self.vertices == 1 || h <= 0 {
                (k - 2).abs().max((k - 1).abs()).max(1)
            } else {
                let w = 2 * self.genus_of(bit(v)) - 2 + k;
                let t = self
                    .tails
                    .iter()
                    .filter(|&&tail| {
                        self.edges.iter().any(|&(a, b)| {
                            (a == v && tail & bit(b) != 0) || (b == v && tail & bit(a) != 0)
                        })
                    })
                    .count() as i64;
                // Scaled by 2h: lower = 2dw + 2(3g−3−d)t − kh, upper = 2dw + 2(g−1−d)t + kh.
                let lower = 2 * d * w + 2 * (3 * g - 3 - d) * t - k * h;
                let upper = 2 * d * w + 2 * (g - 1 - d) * t + k * h;
                let ceil_abs = |x: i64| (x.abs() + 2 * h - 1) / (2 * h);
                ceil_abs(lower).max(ceil_abs(upper))
            };
            r = r.max(magnitude);
        }
        r + 1
    }
}

pub fn naive_is_quasistable(graph: &MarkedDualGraph) -> bool {
    NaiveGraph::new(graph).is_quasistable()
}

pub fn naive_is_balanced(graph: &MarkedDualGraph, mdeg: &[i64], reading: Reading) -> Result<bool> {
    NaiveGraph::new(graph).is_balanced(mdeg, reading)
}

pub fn default_radius(graph: &MarkedDualGraph, d: i64) -> i64 {
    NaiveGraph::new(graph).default_radius(d)
}

/// Calls `visit` on every vector with entries in `[-r, r]` summing to `d`.
pub fn for_each_in_box(len: usize, d: i64, r: i64, mut visit: impl FnMut(&[i64])) {
    fn go(
        v: &mut Vec<i64>,
        len: usize,
        remaining: i64,
        r: i64,
        visit: &mut impl FnMut(&[i64]),
    ) {
        let left = (len - v.len()) as i64;
        if left == 0 {
            if remaining == 0 {
                visit(v);
            }
            return;
        }
        let lo = (-r).max(remaining - r * (left - 1));
        let hi = r.min(remaining + r * (left - 1));
        for x in lo..=hi {
            v.push(x);
            go(v, len, remaining - x, r, visit);
            v.pop();
        }
    }
    if len == 0 {
        return;
    }
    go(&mut Vec::with_capacity(len), len, d, r, &mut visit);
}

/// Every vector in the box `[-r, r]^V` of total `d` that passes the core-only check,
/// sorted by degrees read in vertex-id order.
pub fn brute_enumerate(graph: &MarkedDualGraph, d: i64, r: i64) -> Result<Vec<Vec<i64>>> {
    let naive = NaiveGraph::new(graph);
    let mut out = Vec::new();
    let mut failure = None;
    for_each_in_box(graph.vertices().len(), d, r, |m| {
        match naive.is_balanced(m, Reading::CoreOnly) {
            Ok(true) => out.push(m.to_vec()),
            Ok(false) => {}
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let mut order: Vec<usize> = (0..graph.vertices().len()).collect();
    order.sort_by(|&a, &b| graph.vertices()[a].id.cmp(&graph.vertices()[b].id));
    out.sort_by(|a, b| order.iter().map(|&v| a[v]).cmp(order.iter().map(|&v| b[v])));
    Ok(out)
}

/// Knobs for [`random_quasistable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusParams {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_genus_per_vertex: i64,
    pub min_genus_per_vertex: i64,
    pub max_legs: usize,
    pub max_total_genus: i64,
    /// Degrees later tested on the corpus range over `[-degree_bound, degree_bound]`.
    pub degree_bound: i64,
    pub seed: u64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            max_vertices: 7,
            max_edges: 9,
            max_genus_per_vertex: 3,
            min_genus_per_vertex: 0,
            max_legs: 4,
            max_total_genus: 6,
            degree_bound: 10,
            seed: 0,
        }
    }
}

/// Attempts made by [`random_quasistable`] before giving up.
pub const RETRY_BUDGET: usize = 20_000;

/// A connected quasistable graph of genus between 3 and `max_total_genus`,
/// determined by the parameters (seed included).
pub fn random_quasistable(params: &CorpusParams) -> Result<MarkedDualGraph> {
    if params.max_vertices == 0
        || params.max_vertices > 64
        || params.max_edges + 1 < params.max_vertices
        || params.max_total_genus < 3
        || params.min_genus_per_vertex < 0
        || params.min_genus_per_vertex > params.max_genus_per_vertex
        || params.min_genus_per_vertex > params.max_total_genus
    {
        return Err(Error::Generation(format!("unusable parameters {params:?}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for _ in 0..RETRY_BUDGET {
        let graph = sample(params, &mut rng)?;
        let naive = NaiveGraph::new(&graph);
        let g = naive.genus();
        if (3..=params.max_total_genus).contains(&g) && naive.is_quasistable() {
            return Ok(graph);
        }
    }
    Err(Error::Generation(format!(
        "no quasistable graph after {RETRY_BUDGET} attempts with {params:?}"
    )))
}

/// `count` graphs from consecutive seeds starting at `params.seed`.
pub fn corpus(params: &CorpusParams, count: usize) -> Result<Vec<MarkedDualGraph>> {
    (0..count as u64)
        .map(|i| {
            random_quasistable(&CorpusParams {
                seed: params.seed.wrapping_add(i),
                ..params.clone()
            })
        })
        .collect()
}

/// Picks the total genus first, splits it between cycles of the graph and
/// vertex genera, then places legs mostly on low-valence genus 0 vertices.
fn sample(params: &CorpusParams, rng: &mut ChaCha8Rng) -> Result<MarkedDualGraph> {
    let genus = rng.random_range(params.min_genus_per_vertex.max(3)..=params.max_total_genus);
    let most = match params.min_genus_per_vertex {
        0 => params.max_vertices,
        m => params.max_vertices.min((genus / m) as usize).max(1),
    };
    let nv = rng.random_range(1..=most);
    let floor = params.min_genus_per_vertex * nv as i64;
    let max_cycles = (params.max_edges + 1 - nv) as i64;
    let cycles = rng.random_range(0..=max_cycles.min(genus - floor));
    let mut genera = vec![params.min_genus_per_vertex; nv];
    let mut spread = genus - floor - cycles;
    while spread > 0 {
        let v = rng.random_range(0..nv);
        if genera[v] < params.max_genus_per_vertex {
            genera[v] += 1;
            spread -= 1;
        } else if genera.iter().all(|&g| g >= params.max_genus_per_vertex) {
            break;
        }
    }
    let mut edges: Vec<[usize; 2]> = (1..nv).map(|i| [rng.random_range(0..i), i]).collect();
    for _ in 0..cycles {
        let a = rng.random_range(0..nv);
        let b = if rng.random_bool(0.1) { a } else { rng.random_range(0..nv) };
        edges.push([a.min(b), a.max(b)]);
    }
    let valence = |v: usize| {
        edges
            .iter()
            .map(|&[a, b]| (a == v) as usize + (b == v) as usize)
            .sum::<usize>()
    };
    let needy: Vec<usize> = (0..nv).filter(|&v| genera[v] == 0 && valence(v) < 3).collect();
    let n = rng.random_range(0..=params.max_legs);
    let mut legs: Vec<Vec<u32>> = vec![Vec::new(); nv];
    for label in 1..=n as u32 {
        let v = if !needy.is_empty() && rng.random_bool(0.8) {
            needy[rng.random_range(0..needy.len())]
        } else {
            rng.random_range(0..nv)
        };
        legs[v].push(label);
    }
    let vertices = (0..nv)
        .map(|v| Vertex::new(format!("v{v}"), genera[v], legs[v].iter().copied()))
        .collect();
    MarkedDualGraph::from_indices(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn naive_examples() {
        for reading in [Reading::CoreOnly, Reading::Literal] {
            assert!(naive_is_balanced(&fixtures::g2(), &[0, 0], reading).unwrap());
            assert!(naive_is_balanced(&fixtures::g3(), &[0, 1, 0], reading).unwrap());
            assert!(!naive_is_balanced(&fixtures::g2(), &[2, -2], reading).unwrap());
        }
        assert!(naive_is_balanced(&fixtures::double_exceptional_bridge(), &[0, 1, 1, -2], Reading::CoreOnly).is_err());
    }

    #[test]
    fn naive_quasistability() {
        assert!(naive_is_quasistable(&fixtures::g3()));
        assert!(naive_is_quasistable(&fixtures::legged_bridge()));
        assert!(!naive_is_quasistable(&fixtures::double_exceptional_bridge()));
        assert!(!naive_is_quasistable(&fixtures::destabilizing_tail()));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_enumerate(&fixtures::g2(), 0, 3).unwrap(),
            vec![vec![-1, 1], vec![0, 0], vec![1, -1]]
        );
        assert_eq!(brute_enumerate(&fixtures::g3(), 1, 3).unwrap(), vec![vec![0, 1, 0]]);
        // The tail needs −1 and the core d + 1 = 5: radius 2 cannot hold it.
        assert!(brute_enumerate(&fixtures::g4(), 4, 2).unwrap().is_empty());
        assert_eq!(brute_enumerate(&fixtures::g4(), 4, 5).unwrap(), vec![vec![5, -1]]);
    }

    #[test]
    fn radius_covers_singleton_bounds() {
        assert_eq!(default_radius(&fixtures::g2(), 0), 2);
        assert!(default_radius(&fixtures::g4(), 4) >= 5);
        assert!(default_radius(&fixtures::single(3, &[]), -7) >= 7);
    }

    #[test]
    fn box_walk_counts() {
        let mut count = 0;
        for_each_in_box(3, 0, 1, |_| count += 1);
        assert_eq!(count, 7);
    }

    #[test]
    fn generation_is_deterministic() {
        let p = CorpusParams { seed: 1, ..CorpusParams::default() };
        let a = random_quasistable(&p).unwrap();
        assert_eq!(a, random_quasistable(&p).unwrap());
        assert!(naive_is_quasistable(&a));
        assert!((3..=6).contains(&a.total_genus()));
    }

    #[test]
    fn positive_genera_give_no_tails_or_bridges() {
        let p = CorpusParams { min_genus_per_vertex: 1, seed: 5, ..CorpusParams::default() };
        for s in 0..20 {
            let g = random_quasistable(&CorpusParams { seed: s, ..p.clone() }).unwrap();
            let naive = NaiveGraph::new(&g);
            assert!(naive.tails.is_empty() && naive.bridges.is_empty());
        }
    }

    #[test]
    fn one_vertex_corpus() {
        let p = CorpusParams { max_vertices: 1, ..CorpusParams::default() };
        for s in 0..10 {
            let g = random_quasistable(&CorpusParams { seed: s, ..p.clone() }).unwrap();
            assert_eq!(g.vertices().len(), 1);
            assert!(g.total_genus() >= 3);
        }
    }

    #[test]
    fn impossible_parameters_fail() {
        let p = CorpusParams { max_total_genus: 2, ..CorpusParams::default() };
        assert!(matches!(random_quasistable(&p), Err(Error::Generation(_))));
    }
}
