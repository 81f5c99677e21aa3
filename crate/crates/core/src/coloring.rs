//! 3-edge-colouring by backtracking.
//!
//! For a cubic graph the chromatic index is 3 or 4, so the decision problem
//! is all there is. The search always colours the most constrained edge
//! next (fewest colours still free at both ends, lowest index on ties) and
//! tries colours in the order 0, 1, 2. The three edges at vertex 0 are
//! pre-coloured 0, 1, 2, which removes the 3! colour permutations.

use crate::graph::CubicGraph;

const UNCOLORED: u8 = 3;

/// Per-edge colour assignment in `{0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub colors: Vec<u8>,
    pub complete: bool,
}

impl EdgeColoring {
    /// Every edge coloured, and every vertex sees each colour exactly once.
    pub fn is_proper(&self, g: &CubicGraph) -> bool {
        self.colors.len() == g.size()
            && (0..g.order()).all(|v| {
                let mut seen = 0u8;
                for e in g.incident_edges(v) {
                    let c = self.colors[e];
                    if c > 2 {
                        return false;
                    }
                    seen |= 1 << c;
                }
                seen == 0b111
            })
    }

    /// The edges of colour `c`; a perfect matching when the colouring is proper.
    pub fn color_class(&self, c: u8) -> Vec<usize> {
        (0..self.colors.len()).filter(|&e| self.colors[e] == c).collect()
    }
}

pub fn find_three_edge_coloring(g: &CubicGraph) -> Option<EdgeColoring> {
    find_three_edge_coloring_with(g, true)
}

/// As [`find_three_edge_coloring`], optionally without the vertex-0
/// pre-colouring.
pub fn find_three_edge_coloring_with(g: &CubicGraph, break_symmetry: bool) -> Option<EdgeColoring> {
    let mut search = Search {
        g,
        colors: vec![UNCOLORED; g.size()],
        used: vec![0u8; g.order()],
        left: g.size(),
    };
    if break_symmetry {
        for (c, e) in g.incident_edges(0).into_iter().enumerate() {
            search.assign(e, c as u8);
        }
    }
    if search.run() {
        Some(EdgeColoring {
            colors: search.colors,
            complete: true,
        })
    } else {
        None
    }
}

/// 3 if the graph is 3-edge-colourable, 4 otherwise.
pub fn chromatic_index(g: &CubicGraph) -> usize {
    if find_three_edge_coloring(g).is_some() {
        3
    } else {
        4
    }
}

/// Bridgeless, 2-connected, not 3-edge-colourable, girth at least `min_girth`.
pub fn is_snark(g: &CubicGraph, min_girth: usize) -> bool {
    g.girth_at_least(min_girth)
        && g.is_bridgeless()
        && crate::connectivity::is_two_connected(g)
        && find_three_edge_coloring(g).is_none()
}

struct Search<'a> {
    g: &'a CubicGraph,
    colors: Vec<u8>,
    used: Vec<u8>,
    left: usize,
}

impl Search<'_> {
    fn assign(&mut self, e: usize, c: u8) {
        let (u, v) = self.g.edge(e);
        self.colors[e] = c;
        self.used[u] |= 1 << c;
        self.used[v] |= 1 << c;
        self.left -= 1;
    }

    fn unassign(&mut self, e: usize) {
        let (u, v) = self.g.edge(e);
        let c = self.colors[e];
        self.colors[e] = UNCOLORED;
        self.used[u] &= !(1 << c);
        self.used[v] &= !(1 << c);
        self.left += 1;
    }

    fn free(&self, e: usize) -> u8 {
        let (u, v) = self.g.edge(e);
        !(self.used[u] | self.used[v]) & 0b111
    }

    fn run(&mut self) -> bool {
        if self.left == 0 {
            return true;
        }
        let mut pick = usize::MAX;
        let mut pick_free = 0u8;
        let mut best = u32::MAX;
        for e in 0..self.colors.len() {
            if self.colors[e] != UNCOLORED {
                continue;
            }
            let free = self.free(e);
            let k = free.count_ones();
            if k == 0 {
                return false;
            }
            if k < best {
                best = k;
                pick = e;
                pick_free = free;
                if k == 1 {
                    break;
                }
            }
        }
        for c in 0..3u8 {
            if pick_free >> c & 1 == 0 {
                continue;
            }
            self.assign(pick, c);
            if self.run() {
                return true;
            }
            self.unassign(pick);
        }
        false
    }
}
