//! The cubic graph value type and its elementary structural queries.
//!
//! Vertices are `0..n` with `n <= 64`, so the neighbourhood of every vertex
//! fits in one `u64`. Edges are kept in a canonical list sorted by
//! `(min, max)` endpoint, which gives every edge a stable index in
//! `0..3n/2`. Edge subsets are handled as `u128` masks internally
//! (`3 * 64 / 2 = 96` edges at most).

use std::fmt;

use crate::error::GraphError;

/// Largest supported order; one machine word per neighbourhood.
pub const MAX_ORDER: usize = 64;

/// An immutable simple cubic graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubicGraph {
    adj: Vec<[u8; 3]>,
    bits: Vec<u64>,
    edges: Vec<(u8, u8)>,
    incidence: Vec<[u8; 3]>,
}

impl CubicGraph {
    /// Builds a graph from an edge list, validating that it is simple and
    /// 3-regular.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut bits = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::MalformedEncoding(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(GraphError::NotSimple(format!("loop at vertex {u}")));
            }
            if bits[u] >> v & 1 == 1 {
                return Err(GraphError::NotSimple(format!("parallel edge {u}-{v}")));
            }
            bits[u] |= 1 << v;
            bits[v] |= 1 << u;
        }
        Self::from_bitsets(bits)
    }

    /// Builds a graph from per-vertex neighbourhood bitsets. The bitsets must
    /// be symmetric and loop-free.
    pub fn from_bitsets(bits: Vec<u64>) -> Result<Self, GraphError> {
        let n = bits.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        for (v, &b) in bits.iter().enumerate() {
            if b >> v & 1 == 1 {
                return Err(GraphError::NotSimple(format!("loop at vertex {v}")));
            }
            if n < 64 && b >> n != 0 {
                return Err(GraphError::MalformedEncoding(format!(
                    "vertex {v} has a neighbour outside 0..{n}"
                )));
            }
            let mut rest = b;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if bits[w] >> v & 1 == 0 {
                    return Err(GraphError::MalformedEncoding(format!(
                        "adjacency not symmetric at {v}-{w}"
                    )));
                }
            }
            let degree = b.count_ones() as usize;
            if degree != 3 {
                return Err(GraphError::NotCubic { vertex: v, degree });
            }
        }
        Ok(Self::from_bitsets_unchecked(bits))
    }

    /// Construction without validation, for callers that build cubic graphs
    /// by construction (generation, relabelling).
    pub(crate) fn from_bitsets_unchecked(bits: Vec<u64>) -> Self {
        let n = bits.len();
        debug_assert!(bits.iter().all(|b| b.count_ones() == 3));
        let mut adj = Vec::with_capacity(n);
        for &b in &bits {
            let mut list = [0u8; 3];
            let mut rest = b;
            for slot in list.iter_mut() {
                *slot = rest.trailing_zeros() as u8;
                rest &= rest - 1;
            }
            adj.push(list);
        }
        let mut edges = Vec::with_capacity(3 * n / 2);
        for (u, list) in adj.iter().enumerate() {
            for &w in list {
                if (w as usize) > u {
                    edges.push((u as u8, w));
                }
            }
        }
        let mut incidence = vec![[0u8; 3]; n];
        let mut fill = vec![0usize; n];
        // Edges are sorted by (u, w) and adjacency lists ascend, so the
        // incidence slots line up with the adjacency slots.
        for (i, &(u, w)) in edges.iter().enumerate() {
            let (u, w) = (u as usize, w as usize);
            let su = adj[u].iter().position(|&x| x as usize == w).unwrap();
            let sw = adj[w].iter().position(|&x| x as usize == u).unwrap();
            incidence[u][su] = i as u8;
            incidence[w][sw] = i as u8;
            fill[u] += 1;
            fill[w] += 1;
        }
        debug_assert!(fill.iter().all(|&f| f == 3));
        CubicGraph {
            adj,
            bits,
            edges,
            incidence,
        }
    }

    /// Builds a graph from neighbour lists; each list must hold exactly three
    /// distinct vertices and the relation must be symmetric.
    pub fn from_adjacency_lists(lists: &[Vec<usize>]) -> Result<Self, GraphError> {
        let n = lists.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut bits = vec![0u64; n];
        for (v, list) in lists.iter().enumerate() {
            for &w in list {
                if w >= n {
                    return Err(GraphError::MalformedEncoding(format!(
                        "vertex {v} lists out-of-range neighbour {w}"
                    )));
                }
                if w == v {
                    return Err(GraphError::NotSimple(format!("loop at vertex {v}")));
                }
                if bits[v] >> w & 1 == 1 {
                    return Err(GraphError::NotSimple(format!("parallel edge {v}-{w}")));
                }
                bits[v] |= 1 << w;
            }
        }
        Self::from_bitsets(bits)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        let a = self.adj[v];
        [a[0] as usize, a[1] as usize, a[2] as usize]
    }

    pub fn neighbor_bits(&self, v: usize) -> u64 {
        self.bits[v]
    }

    pub fn bitsets(&self) -> &[u64] {
        &self.bits
    }

    /// Edge indices incident to `v`, aligned with [`CubicGraph::neighbors`].
    pub fn incident_edges(&self, v: usize) -> [usize; 3] {
        let a = self.incidence[v];
        [a[0] as usize, a[1] as usize, a[2] as usize]
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn edge(&self, index: usize) -> (usize, usize) {
        let (u, v) = self.edges[index];
        (u as usize, v as usize)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u] >> v & 1 == 1
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let slot = self.adj[u].iter().position(|&w| w as usize == v)?;
        Some(self.incidence[u][slot] as usize)
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    /// Mask with one bit per edge.
    pub fn edge_mask(&self) -> u128 {
        if self.size() == 128 {
            u128::MAX
        } else {
            (1u128 << self.size()) - 1
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> CubicGraph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut bits = vec![0u64; self.order()];
        for (v, &b) in self.bits.iter().enumerate() {
            let mut rest = b;
            let mut mapped = 0u64;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                mapped |= 1 << perm[w];
            }
            bits[perm[v]] = mapped;
        }
        CubicGraph::from_bitsets_unchecked(bits)
    }

    pub fn is_connected(&self) -> bool {
        reach(&self.bits, 0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> usize {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = Vec::with_capacity(n);
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push(root);
            let mut head = 0;
            'bfs: while head < queue.len() {
                let u = queue[head];
                head += 1;
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        best
    }

    /// True if the graph has no cycle shorter than `min_girth`. Cheaper than
    /// [`CubicGraph::girth`] for the small bounds used during generation.
    pub fn girth_at_least(&self, min_girth: usize) -> bool {
        match min_girth {
            0..=3 => true,
            4 => self
                .edges()
                .all(|(u, v)| self.bits[u] & self.bits[v] == 0),
            5 => {
                let n = self.order();
                for u in 0..n {
                    for v in u + 1..n {
                        let common = (self.bits[u] & self.bits[v]).count_ones();
                        if common >= 2 || (common == 1 && self.has_edge(u, v)) {
                            return false;
                        }
                    }
                }
                true
            }
            _ => self.girth() >= min_girth,
        }
    }

    /// Indices of all cut edges, ascending.
    pub fn bridges(&self) -> Vec<usize> {
        let mask = self.bridge_mask();
        (0..self.size()).filter(|&e| mask >> e & 1 == 1).collect()
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridge_mask() == 0
    }

    /// Cut edges as an edge mask (iterative low-link).
    pub(crate) fn bridge_mask(&self) -> u128 {
        let n = self.order();
        let mut disc = vec![u32::MAX; n];
        let mut low = vec![0u32; n];
        let mut out = 0u128;
        let mut clock = 0u32;
        // Stack frames: (vertex, edge used to enter, next neighbour slot).
        let mut stack: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
        for root in 0..n {
            if disc[root] != u32::MAX {
                continue;
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(top) = stack.last_mut() {
                let (v, via, slot) = *top;
                if slot < 3 {
                    top.2 += 1;
                    let w = self.adj[v][slot] as usize;
                    let e = self.incidence[v][slot] as usize;
                    if e == via {
                        continue;
                    }
                    if disc[w] == u32::MAX {
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out |= 1u128 << via;
                        }
                    }
                }
            }
        }
        out
    }

    /// Connected components of the graph with `cut` deleted.
    pub fn components_after_deletion(&self, cut: &EdgeCut) -> Vec<Component> {
        let removed = cut.mask();
        let bits = self.bits_without(removed);
        let kept = self.edge_mask() & !removed;
        let mut out = Vec::new();
        let mut left = self.vertex_mask();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = reach(&bits, start, left);
            left &= !comp;
            let edges = self.edges_within(comp, kept);
            out.push(Component {
                vertices: comp,
                edge_count: edges,
            });
        }
        out
    }

    /// Neighbourhood bitsets with the edges in `removed` deleted.
    pub(crate) fn bits_without(&self, removed: u128) -> Vec<u64> {
        let mut bits = self.bits.clone();
        let mut rest = removed;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = self.edges[e];
            bits[u as usize] &= !(1 << v);
            bits[v as usize] &= !(1 << u);
        }
        bits
    }

    /// Number of edges of `kept` with both ends in `vertices`.
    pub(crate) fn edges_within(&self, vertices: u64, kept: u128) -> usize {
        self.edges
            .iter()
            .enumerate()
            .filter(|&(i, &(u, v))| {
                kept >> i & 1 == 1 && vertices >> u & 1 == 1 && vertices >> v & 1 == 1
            })
            .count()
    }
}

impl fmt::Debug for CubicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicGraph({})", crate::format::encode_graph6(self))
    }
}

/// A set of edge indices of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeCut {
    edges: Vec<usize>,
}

impl EdgeCut {
    /// Validates the indices against `g`; duplicates are merged.
    pub fn new(g: &CubicGraph, edges: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut edges: Vec<usize> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        if edges.is_empty() {
            return Err(GraphError::EmptyCut);
        }
        if let Some(&bad) = edges.iter().find(|&&e| e >= g.size()) {
            return Err(GraphError::EdgeOutOfRange(bad));
        }
        Ok(EdgeCut { edges })
    }

    pub(crate) fn from_mask(mask: u128) -> Self {
        let edges = (0..128).filter(|&e| mask >> e & 1 == 1).collect();
        EdgeCut { edges }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub(crate) fn mask(&self) -> u128 {
        self.edges.iter().fold(0u128, |m, &e| m | 1u128 << e)
    }
}

/// One connected component left after deleting an edge cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Vertex bitset.
    pub vertices: u64,
    /// Surviving edges with both ends inside the component.
    pub edge_count: usize,
}

impl Component {
    pub fn vertex_list(&self) -> Vec<usize> {
        (0..64).filter(|&v| self.vertices >> v & 1 == 1).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    /// A connected graph contains a cycle iff it is not a tree.
    pub fn has_cycle(&self) -> bool {
        self.edge_count >= self.vertex_count()
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Vertices reachable from `start` inside `allowed`.
pub(crate) fn reach(bits: &[u64], start: usize, allowed: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut rest = frontier;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= bits[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Small named graphs used across tests, docs and the Python bindings.
pub mod named {
    use super::CubicGraph;

    pub fn k4() -> CubicGraph {
        CubicGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    pub fn k33() -> CubicGraph {
        let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b)));
        CubicGraph::from_edges(6, edges).unwrap()
    }

    /// Two triangles joined by a perfect matching.
    pub fn prism() -> CubicGraph {
        CubicGraph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    /// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
    pub fn petersen() -> CubicGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        CubicGraph::from_edges(10, edges).unwrap()
    }

    /// Two copies of K4 with one edge subdivided each, the subdivision
    /// vertices joined by a bridge.
    pub fn bridged_k4_pair() -> CubicGraph {
        // Left: 0..4 is K4 minus edge 0-1, plus vertex 4 adjacent to 0 and 1.
        let mut edges = vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)];
        edges.extend(edges.clone().into_iter().map(|(a, b)| (a + 5, b + 5)));
        edges.push((4, 9));
        CubicGraph::from_edges(10, edges).unwrap()
    }

    /// Two prisms with one edge removed each, reconnected across by two
    /// edges; the two joining edges form a 2-edge cut separating cycles.
    pub fn prism_dumbbell() -> CubicGraph {
        // Remove edge 0-3 from each prism, join 0 -- 6 and 3 -- 9.
        let base = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (1, 4), (2, 5)];
        let mut edges: Vec<(usize, usize)> = base.to_vec();
        edges.extend(base.iter().map(|&(a, b)| (a + 6, b + 6)));
        edges.push((0, 6));
        edges.push((3, 9));
        CubicGraph::from_edges(12, edges).unwrap()
    }
}
