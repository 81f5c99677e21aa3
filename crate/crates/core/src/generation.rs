//! Isomorph-free generation of connected cubic graphs.
//!
//! Graphs of order `n` are grown from graphs of order `n - 2` by edge
//! insertion (subdivide two distinct edges, join the two new vertices) and
//! from graphs of order `n - 4` by diamond insertion (replace an edge
//! `x-y` by `x-p`, `s-y` where `p, q, r, s` span a K4 minus the edge
//! `p-s`). The inverse of edge insertion removes an edge and suppresses its
//! two ends; it yields a smaller simple connected cubic graph unless the
//! edge is a bridge, lies next to a triangle it does not belong to, or is
//! the middle edge of a diamond. A connected cubic graph that admits
//! neither inverse operation is K4 or a tree of diamond "leaves" (a
//! vertex adjacent to both ends of a diamond); those are seeded directly.
//!
//! A child is kept only if its inserted edge ranks highest among its
//! reducible edges under a cycle-count invariant (for diamond children:
//! only if no edge is reducible). Survivors are deduplicated by canonical
//! key, so the output holds exactly one graph per isomorphism class,
//! relabelled canonically and sorted by key. Levels of all connected
//! cubic graphs are cached between calls.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::coloring::find_three_edge_coloring;
use crate::connectivity::is_two_connected;
use crate::error::GenerationError;
use crate::format::decode_graph6;
use crate::graph::CubicGraph;
use crate::symmetry::canonical_form;

pub const DEFAULT_CEILING: usize = 22;
pub const MAX_ORDER_ENV: &str = "SNARKFORGE_MAX_ORDER";

/// What to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub order: usize,
    pub min_girth: usize,
    /// Keep only 2-connected graphs.
    pub two_connected: bool,
    /// Keep only snarks (implies `two_connected`).
    pub snarks_only: bool,
}

impl GenSpec {
    pub fn new(order: usize, min_girth: usize) -> Self {
        GenSpec {
            order,
            min_girth,
            two_connected: false,
            snarks_only: false,
        }
    }

    pub fn snarks(order: usize, min_girth: usize) -> Self {
        GenSpec {
            order,
            min_girth,
            two_connected: true,
            snarks_only: true,
        }
    }

    pub fn validate(&self, ceiling: usize) -> Result<(), GenerationError> {
        if self.order % 2 == 1 || self.order < 4 {
            return Err(GenerationError::InvalidSpec(format!(
                "order must be even and at least 4, got {}",
                self.order
            )));
        }
        if !(3..=5).contains(&self.min_girth) {
            return Err(GenerationError::InvalidSpec(format!(
                "minimum girth must be 3, 4 or 5, got {}",
                self.min_girth
            )));
        }
        if self.order > ceiling {
            return Err(GenerationError::OrderTooLarge {
                order: self.order,
                ceiling,
            });
        }
        Ok(())
    }

    fn accepts(&self, g: &CubicGraph) -> bool {
        if !g.girth_at_least(self.min_girth) {
            return false;
        }
        if (self.two_connected || self.snarks_only) && !(g.is_bridgeless() && is_two_connected(g)) {
            return false;
        }
        !(self.snarks_only && find_three_edge_coloring(g).is_some())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    /// Largest order accepted by [`Generator::generate`].
    pub ceiling: usize,
    /// Worker threads; 0 picks the number of CPUs.
    pub workers: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            ceiling: DEFAULT_CEILING,
            workers: 0,
        }
    }
}

impl GenConfig {
    /// Default config with the ceiling taken from `SNARKFORGE_MAX_ORDER`
    /// when set.
    pub fn from_env() -> Self {
        let ceiling = std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_CEILING);
        GenConfig {
            ceiling,
            ..Default::default()
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

/// One generated graph with its canonical key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: CubicGraph,
    pub key: String,
    pub automorphism_order: u64,
}

/// Generation with a cache of complete levels.
pub struct Generator {
    config: GenConfig,
    pool: rayon::ThreadPool,
    levels: HashMap<usize, Arc<Vec<CubicGraph>>>,
}

impl Generator {
    pub fn new(config: GenConfig) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("thread pool");
        Generator {
            config,
            pool,
            levels: HashMap::new(),
        }
    }

    pub fn config(&self) -> GenConfig {
        self.config
    }

    /// One canonical graph per isomorphism class matching `spec`, sorted by
    /// canonical key.
    pub fn generate(&mut self, spec: &GenSpec) -> Result<Vec<CubicGraph>, GenerationError> {
        Ok(self.generate_keyed(spec)?.into_iter().map(|g| g.graph).collect())
    }

    pub fn generate_keyed(&mut self, spec: &GenSpec) -> Result<Vec<Generated>, GenerationError> {
        spec.validate(self.config.ceiling)?;
        let found = self.build(spec)?;
        let mut out: Vec<Generated> = found
            .into_iter()
            .map(|(key, automorphism_order)| Generated {
                graph: graph_from_key(&key),
                key: String::from_utf8(key).expect("graph6 is ASCII"),
                automorphism_order,
            })
            .collect();
        out.sort_by(|a, b| a.key.cmp(&b.key));
        Ok(out)
    }

    /// All connected cubic graphs of the given order.
    fn level(&mut self, order: usize) -> Result<Arc<Vec<CubicGraph>>, GenerationError> {
        if let Some(level) = self.levels.get(&order) {
            return Ok(level.clone());
        }
        let spec = GenSpec::new(order, 3);
        let mut keys: Vec<Vec<u8>> = self.build(&spec)?.into_keys().collect();
        keys.sort();
        let level = Arc::new(keys.iter().map(|k| graph_from_key(k)).collect::<Vec<_>>());
        self.levels.insert(order, level.clone());
        Ok(level)
    }

    fn build(&mut self, spec: &GenSpec) -> Result<HashMap<Vec<u8>, u64>, GenerationError> {
        let n = spec.order;
        let mut found: HashMap<Vec<u8>, u64> = HashMap::new();
        let keep = |g: &CubicGraph, found: &mut HashMap<Vec<u8>, u64>| {
            if spec.accepts(g) {
                let cf = canonical_form(g);
                found.insert(cf.key, cf.automorphism_order);
            }
        };
        if spec.min_girth <= 3 {
            for seed in irreducible_graphs(n) {
                keep(&seed, &mut found);
            }
        }
        if n >= 6 {
            let parents = self.level(n - 2)?;
            let spec = *spec;
            let children = self.pool.install(|| {
                parents
                    .par_iter()
                    .fold(HashMap::new, |mut acc, p| {
                        edge_insertion_children(p, &spec, &mut acc);
                        acc
                    })
                    .reduce(HashMap::new, merge)
            });
            found = merge(found, children);
        }
        if n >= 8 && spec.min_girth <= 3 {
            let parents = self.level(n - 4)?;
            let spec = *spec;
            let children = self.pool.install(|| {
                parents
                    .par_iter()
                    .fold(HashMap::new, |mut acc, p| {
                        diamond_insertion_children(p, &spec, &mut acc);
                        acc
                    })
                    .reduce(HashMap::new, merge)
            });
            found = merge(found, children);
        }
        Ok(found)
    }
}

/// Convenience wrapper: a fresh [`Generator`] for one request.
pub fn generate(spec: &GenSpec, config: GenConfig) -> Result<Vec<CubicGraph>, GenerationError> {
    Generator::new(config).generate(spec)
}

fn merge(mut a: HashMap<Vec<u8>, u64>, b: HashMap<Vec<u8>, u64>) -> HashMap<Vec<u8>, u64> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    a.extend(b);
    a
}

fn graph_from_key(key: &[u8]) -> CubicGraph {
    CubicGraph::from_bitsets_unchecked(decode_graph6(key).expect("canonical keys are valid graph6"))
}

fn edge_insertion_children(parent: &CubicGraph, spec: &GenSpec, out: &mut HashMap<Vec<u8>, u64>) {
    let m = parent.size();
    let u = parent.order();
    let v = u + 1;
    for e1 in 0..m {
        for e2 in e1 + 1..m {
            let mut bits = parent.bitsets().to_vec();
            bits.push(0);
            bits.push(0);
            for (e, w) in [(e1, u), (e2, v)] {
                let (a, b) = parent.edge(e);
                bits[a] ^= 1 << b | 1 << w;
                bits[b] ^= 1 << a | 1 << w;
                bits[w] |= 1 << a | 1 << b;
            }
            bits[u] |= 1 << v;
            bits[v] |= 1 << u;
            if !bits_girth_at_least(&bits, spec.min_girth) {
                continue;
            }
            let child = CubicGraph::from_bitsets_unchecked(bits);
            if !inserted_edge_ranks_first(&child, u, v) || !spec.accepts(&child) {
                continue;
            }
            let cf = canonical_form(&child);
            out.insert(cf.key, cf.automorphism_order);
        }
    }
}

fn diamond_insertion_children(parent: &CubicGraph, spec: &GenSpec, out: &mut HashMap<Vec<u8>, u64>) {
    let base = parent.order();
    let (p, q, r, s) = (base, base + 1, base + 2, base + 3);
    for e in 0..parent.size() {
        let (x, y) = parent.edge(e);
        let mut bits = parent.bitsets().to_vec();
        bits.extend([0; 4]);
        bits[x] ^= 1 << y | 1 << p;
        bits[y] ^= 1 << x | 1 << s;
        for (a, b) in [(x, p), (p, q), (p, r), (q, r), (q, s), (r, s), (s, y)] {
            bits[a] |= 1 << b;
            bits[b] |= 1 << a;
        }
        let child = CubicGraph::from_bitsets_unchecked(bits);
        if has_reducible_edge(&child) || !spec.accepts(&child) {
            continue;
        }
        let cf = canonical_form(&child);
        out.insert(cf.key, cf.automorphism_order);
    }
}

fn bits_girth_at_least(bits: &[u64], min_girth: usize) -> bool {
    if min_girth <= 3 {
        return true;
    }
    let n = bits.len();
    for u in 0..n {
        let mut rest = bits[u] >> u >> 1 << u << 1;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if bits[u] & bits[w] != 0 {
                return false;
            }
        }
    }
    if min_girth >= 5 {
        for u in 0..n {
            for w in u + 1..n {
                if (bits[u] & bits[w]).count_ones() >= 2 {
                    return false;
                }
            }
        }
    }
    true
}

/// True if removing edge `x-y` and suppressing both ends leaves a simple
/// connected cubic graph.
pub(crate) fn edge_is_reducible(g: &CubicGraph, x: usize, y: usize, bridges: u128) -> bool {
    let e = g.edge_index(x, y).expect("edge");
    if bridges >> e & 1 == 1 {
        return false;
    }
    let pair_adjacent = |a: usize, other: usize| {
        let rest = g.neighbor_bits(a) & !(1 << other);
        let s = rest.trailing_zeros() as usize;
        let t = (rest & (rest - 1)).trailing_zeros() as usize;
        g.has_edge(s, t)
    };
    !pair_adjacent(x, y)
        && !pair_adjacent(y, x)
        && (g.neighbor_bits(x) & g.neighbor_bits(y)).count_ones() < 2
}

fn has_reducible_edge(g: &CubicGraph) -> bool {
    let bridges = g.bridge_mask();
    g.edges().any(|(x, y)| edge_is_reducible(g, x, y, bridges))
}

/// Numbers of 3-, 4- and 5-cycles through the edge `x-y`.
pub(crate) fn edge_invariant(g: &CubicGraph, x: usize, y: usize) -> (u32, u32, u32) {
    let nx = g.neighbor_bits(x) & !(1 << y);
    let ny = g.neighbor_bits(y) & !(1 << x);
    let c3 = (g.neighbor_bits(x) & g.neighbor_bits(y)).count_ones();
    let mut c4 = 0;
    let mut c5 = 0;
    let mut ra = nx;
    while ra != 0 {
        let a = ra.trailing_zeros() as usize;
        ra &= ra - 1;
        c4 += (g.neighbor_bits(a) & ny).count_ones();
        let mut rb = ny & !(1 << a);
        while rb != 0 {
            let b = rb.trailing_zeros() as usize;
            rb &= rb - 1;
            let mids = g.neighbor_bits(a) & g.neighbor_bits(b) & !(1 << x | 1 << y);
            c5 += mids.count_ones();
        }
    }
    (c3, c4, c5)
}

/// The edge `u-v` is reducible and no reducible edge has a larger
/// invariant.
fn inserted_edge_ranks_first(g: &CubicGraph, u: usize, v: usize) -> bool {
    let bridges = g.bridge_mask();
    if !edge_is_reducible(g, u, v, bridges) {
        return false;
    }
    let mine = edge_invariant(g, u, v);
    g.edges().all(|(x, y)| {
        (x, y) == (u.min(v), u.max(v))
            || edge_invariant(g, x, y) <= mine
            || !edge_is_reducible(g, x, y, bridges)
    })
}

/// Connected cubic graphs of the given order with no reducible edge and no
/// removable diamond: K4, and trees whose leaves are vertices joined to
/// both ends of a diamond.
pub fn irreducible_graphs(order: usize) -> Vec<CubicGraph> {
    if order == 4 {
        return vec![crate::graph::named::k4()];
    }
    if order < 10 || (order + 2) % 6 != 0 {
        return Vec::new();
    }
    // Two diamond leaves joined by one edge: 10 vertices.
    let mut current = vec![diamond_leaf_dumbbell()];
    while current[0].order() < order {
        let mut next: HashMap<Vec<u8>, CubicGraph> = HashMap::new();
        for g in &current {
            for (x, y) in tree_edges(g) {
                let child = graft_diamond_leaf(g, x, y);
                let cf = canonical_form(&child);
                next.entry(cf.key.clone()).or_insert_with(|| cf.canonical_graph(&child));
            }
        }
        let mut keyed: Vec<(Vec<u8>, CubicGraph)> = next.into_iter().collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        current = keyed.into_iter().map(|(_, g)| g).collect();
    }
    current
}

fn diamond_leaf_dumbbell() -> CubicGraph {
    let mut edges = Vec::new();
    for base in [0, 5] {
        let (w, p, q, r, s) = (base, base + 1, base + 2, base + 3, base + 4);
        edges.extend([(w, p), (w, s), (p, q), (p, r), (q, r), (q, s), (r, s)]);
    }
    edges.push((0, 5));
    CubicGraph::from_edges(10, edges).expect("valid")
}

/// Edges with neither end on a triangle.
fn tree_edges(g: &CubicGraph) -> Vec<(usize, usize)> {
    let on_triangle = |v: usize| {
        g.neighbors(v)
            .into_iter()
            .any(|w| g.neighbor_bits(v) & g.neighbor_bits(w) != 0)
    };
    g.edges()
        .filter(|&(x, y)| !on_triangle(x) && !on_triangle(y))
        .collect()
}

/// Subdivides `x-y` with a new vertex `w` and hangs a diamond leaf on it.
fn graft_diamond_leaf(g: &CubicGraph, x: usize, y: usize) -> CubicGraph {
    let n = g.order();
    let (w, z, p, q, r, s) = (n, n + 1, n + 2, n + 3, n + 4, n + 5);
    let mut edges: Vec<(usize, usize)> = g.edges().filter(|&e| e != (x, y)).collect();
    edges.extend([(x, w), (w, y), (w, z), (z, p), (z, s), (p, q), (p, r), (q, r), (q, s), (r, s)]);
    CubicGraph::from_edges(n + 6, edges).expect("valid")
}
