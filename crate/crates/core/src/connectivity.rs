//! Vertex, edge and cyclic edge connectivity of cubic graphs.
//!
//! Everything here is exhaustive enumeration: for cubic graphs the vertex and
//! edge connectivity are at most 3, and the cyclic edge connectivity is at
//! most the girth, so the subsets to try stay small at the orders we handle.

use crate::error::ConnectivityError;
use crate::graph::{reach, CubicGraph, EdgeCut};

/// Result of [`cyclic_edge_connectivity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclicEdgeConnectivity {
    /// Smallest cycle-separating cut, with one witness.
    Cut { size: usize, witness: EdgeCut },
    /// No cycle-separating cut of size at most the cap.
    NoCyclicCut,
}

impl CyclicEdgeConnectivity {
    pub fn value(&self) -> Option<usize> {
        match self {
            CyclicEdgeConnectivity::Cut { size, .. } => Some(*size),
            CyclicEdgeConnectivity::NoCyclicCut => None,
        }
    }
}

/// The table columns: cyclic connectivity 2, 3, or anything larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConnectivityClass {
    Two,
    Three,
    FourPlus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub cyclic_edge_connectivity: Option<usize>,
    pub witness_cut: Option<EdgeCut>,
}

fn connected_within(bits: &[u64], allowed: u64) -> bool {
    if allowed == 0 {
        return true;
    }
    reach(bits, allowed.trailing_zeros() as usize, allowed) == allowed
}

/// Minimum number of vertices whose removal disconnects the graph, capped
/// at 3: tries every single vertex, then every pair.
pub fn vertex_connectivity(g: &CubicGraph) -> usize {
    let full = g.vertex_mask();
    let bits = g.bitsets();
    if !connected_within(bits, full) {
        return 0;
    }
    let n = g.order();
    if (0..n).any(|v| !connected_within(bits, full & !(1 << v))) {
        return 1;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !connected_within(bits, full & !(1 << u) & !(1 << v)) {
                return 2;
            }
        }
    }
    3
}

pub fn is_two_connected(g: &CubicGraph) -> bool {
    vertex_connectivity(g) >= 2
}

/// Minimum number of edges whose removal disconnects the graph, capped at 3.
pub fn edge_connectivity(g: &CubicGraph) -> usize {
    let full = g.vertex_mask();
    if !connected_within(g.bitsets(), full) {
        return 0;
    }
    let m = g.size();
    let cuts = |mask: u128| !connected_within(&g.bits_without(mask), full);
    if (0..m).any(|e| cuts(1u128 << e)) {
        return 1;
    }
    for a in 0..m {
        for b in a + 1..m {
            if cuts(1u128 << a | 1u128 << b) {
                return 2;
            }
        }
    }
    3
}

/// True if deleting the edges in `removed` leaves at least two components
/// that each contain a cycle.
pub(crate) fn separates_cycles(g: &CubicGraph, removed: u128) -> bool {
    let bits = g.bits_without(removed);
    let mut left = g.vertex_mask();
    let mut cyclic = 0;
    while left != 0 {
        let comp = reach(&bits, left.trailing_zeros() as usize, left);
        left &= !comp;
        // Edges inside the component = half its degree sum.
        let degree_sum: u32 = (0..64)
            .filter(|&v| comp >> v & 1 == 1)
            .map(|v| (bits[v] & comp).count_ones())
            .sum();
        if degree_sum / 2 >= comp.count_ones() {
            cyclic += 1;
            if cyclic == 2 {
                return true;
            }
        }
    }
    false
}

/// Smallest edge cut of size at most `cap` (default: the girth) whose
/// deletion leaves two components that both contain a cycle.
///
/// With `n >= 2g` the edges leaving a shortest cycle form such a cut, so
/// the girth is an exact cap for cubic graphs.
pub fn cyclic_edge_connectivity(
    g: &CubicGraph,
    cap: Option<usize>,
) -> Result<CyclicEdgeConnectivity, ConnectivityError> {
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    let cap = cap.unwrap_or_else(|| g.girth()).min(g.size());
    for size in 1..=cap {
        if let Some(mask) = find_cut(g, size) {
            return Ok(CyclicEdgeConnectivity::Cut {
                size,
                witness: EdgeCut::from_mask(mask),
            });
        }
    }
    Ok(CyclicEdgeConnectivity::NoCyclicCut)
}

fn find_cut(g: &CubicGraph, size: usize) -> Option<u128> {
    fn rec(g: &CubicGraph, from: usize, left: usize, chosen: u128) -> Option<u128> {
        if left == 0 {
            return separates_cycles(g, chosen).then_some(chosen);
        }
        for e in from..=g.size() - left {
            if let Some(found) = rec(g, e + 1, left - 1, chosen | 1u128 << e) {
                return Some(found);
            }
        }
        None
    }
    rec(g, 0, size, 0)
}

/// Table column for a snark: its cyclic edge connectivity clamped to
/// {2, 3, 4+}.
pub fn connectivity_class(g: &CubicGraph) -> Result<ConnectivityClass, ConnectivityError> {
    if !is_two_connected(g) {
        return Err(ConnectivityError::NotTwoConnected);
    }
    let class = match cyclic_edge_connectivity(g, None)?.value() {
        Some(0..=2) => ConnectivityClass::Two,
        Some(3) => ConnectivityClass::Three,
        _ => ConnectivityClass::FourPlus,
    };
    Ok(class)
}

pub fn connectivity_report(g: &CubicGraph) -> ConnectivityReport {
    let vertex_connectivity = vertex_connectivity(g);
    let edge_connectivity = edge_connectivity(g);
    let (cyclic, witness) = match cyclic_edge_connectivity(g, None) {
        Ok(CyclicEdgeConnectivity::Cut { size, witness }) => (Some(size), Some(witness)),
        _ => (None, None),
    };
    ConnectivityReport {
        vertex_connectivity,
        edge_connectivity,
        cyclic_edge_connectivity: cyclic,
        witness_cut: witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn vertex_and_edge_connectivity() {
        for (g, want) in [(k4(), 3), (k33(), 3), (prism(), 3), (petersen(), 3)] {
            assert_eq!(vertex_connectivity(&g), want);
            assert_eq!(edge_connectivity(&g), want);
        }
        assert_eq!(vertex_connectivity(&bridged_k4_pair()), 1);
        assert_eq!(edge_connectivity(&bridged_k4_pair()), 1);
        assert_eq!(vertex_connectivity(&prism_dumbbell()), 2);
        assert_eq!(edge_connectivity(&prism_dumbbell()), 2);
    }

    #[test]
    fn disconnected_graph() {
        let mut edges: Vec<(usize, usize)> = k4().edges().collect();
        edges.extend(k4().edges().map(|(a, b)| (a + 4, b + 4)));
        let g = CubicGraph::from_edges(8, edges).unwrap();
        assert_eq!(vertex_connectivity(&g), 0);
        assert_eq!(edge_connectivity(&g), 0);
        assert_eq!(cyclic_edge_connectivity(&g, None), Err(ConnectivityError::Disconnected));
    }

    #[test]
    fn cyclic_connectivity_small() {
        assert_eq!(
            cyclic_edge_connectivity(&k4(), Some(3)).unwrap(),
            CyclicEdgeConnectivity::NoCyclicCut
        );
        assert_eq!(
            cyclic_edge_connectivity(&k33(), None).unwrap(),
            CyclicEdgeConnectivity::NoCyclicCut
        );
        let p = cyclic_edge_connectivity(&petersen(), Some(5)).unwrap();
        assert_eq!(p.value(), Some(5));
        let d = prism_dumbbell();
        match cyclic_edge_connectivity(&d, None).unwrap() {
            CyclicEdgeConnectivity::Cut { size, witness } => {
                assert_eq!(size, 2);
                let comps = d.components_after_deletion(&witness);
                assert!(comps.iter().filter(|c| c.has_cycle()).count() >= 2);
            }
            other => panic!("{other:?}"),
        }
        // Prism: the three rungs separate the two triangles.
        assert_eq!(cyclic_edge_connectivity(&prism(), None).unwrap().value(), Some(3));
    }

    #[test]
    fn classes() {
        assert_eq!(connectivity_class(&petersen()), Ok(ConnectivityClass::FourPlus));
        assert_eq!(connectivity_class(&prism_dumbbell()), Ok(ConnectivityClass::Two));
        assert_eq!(connectivity_class(&prism()), Ok(ConnectivityClass::Three));
        assert_eq!(
            connectivity_class(&bridged_k4_pair()),
            Err(ConnectivityError::NotTwoConnected)
        );
    }

    #[test]
    fn report() {
        let r = connectivity_report(&petersen());
        assert_eq!(r.vertex_connectivity, 3);
        assert_eq!(r.edge_connectivity, 3);
        assert_eq!(r.cyclic_edge_connectivity, Some(5));
        assert_eq!(r.witness_cut.unwrap().size(), 5);
    }
}
