//! Brute-force oracles and random graphs shared by the integration tests.
//!
//! The oracles only use the edge list of a graph; none of them calls into
//! the algorithms they check.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use snarkforge_core::CubicGraph;

pub fn edge_list(g: &CubicGraph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Shortest cycle length by extending simple paths from each start vertex
/// that only visit larger vertices.
pub fn girth(g: &CubicGraph) -> usize {
    let n = g.order();
    let adj = adjacency(n, &edge_list(g));
    let mut best = usize::MAX;
    fn extend(adj: &[Vec<usize>], start: usize, path: &mut Vec<usize>, best: &mut usize) {
        if path.len() >= *best {
            return;
        }
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w == start && path.len() >= 3 {
                *best = (*best).min(path.len());
            } else if w > start && !path.contains(&w) {
                path.push(w);
                extend(adj, start, path, best);
                path.pop();
            }
        }
    }
    for s in 0..n {
        extend(&adj, s, &mut vec![s], &mut best);
    }
    best
}

/// Calls `f` with every `k`-subset of `0..m` in lexicographic order.
pub fn for_each_subset(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Perfect matchings counted over all `n/2`-subsets of edges.
pub fn perfect_matching_count(g: &CubicGraph) -> usize {
    let edges = edge_list(g);
    let n = g.order();
    let mut count = 0;
    for_each_subset(edges.len(), n / 2, |s| {
        let mut seen = vec![false; n];
        let ok = s.iter().all(|&e| {
            let (a, b) = edges[e];
            let fresh = !seen[a] && !seen[b];
            seen[a] = true;
            seen[b] = true;
            fresh
        });
        if ok {
            count += 1;
        }
    });
    count
}

/// Chromatic index by trying all `3^m` colourings.
pub fn chromatic_index(g: &CubicGraph) -> usize {
    let edges = edge_list(g);
    let m = edges.len();
    let n = g.order();
    let mut colors = vec![0u8; m];
    loop {
        let mut used = vec![0u8; n];
        let proper = edges.iter().zip(&colors).all(|(&(a, b), &c)| {
            let bit = 1 << c;
            let ok = used[a] & bit == 0 && used[b] & bit == 0;
            used[a] |= bit;
            used[b] |= bit;
            ok
        });
        if proper {
            return 3;
        }
        let Some(i) = colors.iter().position(|&c| c < 2) else {
            return 4;
        };
        colors[i] += 1;
        colors[..i].iter_mut().for_each(|c| *c = 0);
    }
}

/// Union-find components of the graph restricted to `keep` edges, as
/// (vertex count, edge count) per component.
pub fn components(n: usize, edges: &[(usize, usize)], keep: &[bool]) -> Vec<(usize, usize)> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        if keep[i] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut tally = std::collections::BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        tally.entry(r).or_insert((0, 0)).0 += 1;
    }
    for (i, &(a, _)) in edges.iter().enumerate() {
        if keep[i] {
            let r = find(&mut parent, a);
            tally.get_mut(&r).unwrap().1 += 1;
        }
    }
    tally.into_values().collect()
}

/// Minimum odd-cycle count over all spanning 2-regular edge subsets.
pub fn oddness(g: &CubicGraph) -> Option<usize> {
    let edges = edge_list(g);
    let n = g.order();
    let mut best: Option<usize> = None;
    for_each_subset(edges.len(), n, |s| {
        let mut deg = vec![0; n];
        for &e in s {
            deg[edges[e].0] += 1;
            deg[edges[e].1] += 1;
        }
        if deg.iter().any(|&d| d != 2) {
            return;
        }
        let mut keep = vec![false; edges.len()];
        s.iter().for_each(|&e| keep[e] = true);
        let odd = components(n, &edges, &keep)
            .iter()
            .filter(|(v, _)| v % 2 == 1)
            .count();
        best = Some(best.map_or(odd, |b| b.min(odd)));
    });
    best
}

fn connected_without(n: usize, adj: &[Vec<usize>], removed: &[usize]) -> bool {
    let alive: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] && !removed.contains(&w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

/// Smallest number of vertices whose removal disconnects the graph,
/// capped at 3 (the degree).
pub fn vertex_connectivity(g: &CubicGraph) -> usize {
    let n = g.order();
    let adj = adjacency(n, &edge_list(g));
    for k in 0..3 {
        let mut cut = false;
        for_each_subset(n, k, |s| cut |= !connected_without(n, &adj, s));
        if cut {
            return k;
        }
    }
    3
}

/// Smallest edge cut leaving two components that both contain a cycle,
/// searched up to `cap` edges.
pub fn cyclic_edge_connectivity(g: &CubicGraph, cap: usize) -> Option<usize> {
    let edges = edge_list(g);
    let n = g.order();
    for k in 1..=cap {
        let mut found = false;
        for_each_subset(edges.len(), k, |s| {
            if found {
                return;
            }
            let mut keep = vec![true; edges.len()];
            s.iter().for_each(|&e| keep[e] = false);
            let cyclic = components(n, &edges, &keep)
                .iter()
                .filter(|(v, e)| e >= v)
                .count();
            found = cyclic >= 2;
        });
        if found {
            return Some(k);
        }
    }
    None
}

/// Automorphisms counted by extending partial vertex maps that preserve
/// adjacency among mapped vertices.
pub fn automorphism_count(g: &CubicGraph) -> u64 {
    isomorphism_count(g, g)
}

pub fn isomorphic(a: &CubicGraph, b: &CubicGraph) -> bool {
    a.order() == b.order() && first_isomorphism(a, b).is_some()
}

pub fn isomorphism_count(a: &CubicGraph, b: &CubicGraph) -> u64 {
    let mut count = 0;
    search_maps(a, b, &mut Vec::new(), &mut |_| {
        count += 1;
        false
    });
    count
}

fn first_isomorphism(a: &CubicGraph, b: &CubicGraph) -> Option<Vec<usize>> {
    let mut found = None;
    search_maps(a, b, &mut Vec::new(), &mut |m| {
        found = Some(m.to_vec());
        true
    });
    found
}

/// Returns true when `visit` asked to stop.
fn search_maps(
    a: &CubicGraph,
    b: &CubicGraph,
    map: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = a.order();
    let v = map.len();
    if v == n {
        return visit(map);
    }
    for w in 0..n {
        if map.contains(&w) {
            continue;
        }
        if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
            map.push(w);
            if search_maps(a, b, map, visit) {
                return true;
            }
            map.pop();
        }
    }
    false
}

/// Connected cubic graphs of order `n` up to isomorphism, by listing every
/// labelled cubic graph with `N(0) = {1, 2, 3}` and keeping one per class.
pub fn naive_connected_cubic(n: usize) -> Vec<CubicGraph> {
    let mut adj = vec![Vec::<usize>::new(); n];
    for w in 1..4 {
        adj[0].push(w);
        adj[w].push(0);
    }
    let mut reps: Vec<(Vec<usize>, CubicGraph)> = Vec::new();
    fill(n, &mut adj, &mut reps);
    reps.into_iter().map(|(_, g)| g).collect()
}

fn fill(n: usize, adj: &mut Vec<Vec<usize>>, reps: &mut Vec<(Vec<usize>, CubicGraph)>) {
    let Some(v) = (0..n).find(|&v| adj[v].len() < 3) else {
        let edges = (0..n).flat_map(|a| adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)));
        let g = CubicGraph::from_edges(n, edges).unwrap();
        if connected_without(n, &adjacency(n, &edge_list(&g)), &[]) {
            let sig = signature(&g);
            if !reps.iter().any(|(s, h)| *s == sig && isomorphic(h, &g)) {
                reps.push((sig, g));
            }
        }
        return;
    };
    let floor = adj[v].iter().copied().filter(|&w| w > v).max().unwrap_or(v);
    for w in floor + 1..n {
        if adj[w].len() < 3 && !adj[v].contains(&w) {
            adj[v].push(w);
            adj[w].push(v);
            fill(n, adj, reps);
            adj[v].pop();
            adj[w].pop();
        }
    }
}

/// Sorted per-vertex triangle and 4-cycle counts; equal for isomorphic
/// graphs.
fn signature(g: &CubicGraph) -> Vec<usize> {
    let n = g.order();
    let mut sig: Vec<usize> = (0..n)
        .map(|v| {
            let nb = g.neighbors(v);
            let tri = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| g.has_edge(nb[i], nb[j]))
                .count();
            let quad = (0..n)
                .filter(|&w| w != v)
                .map(|w| nb.iter().filter(|&&x| g.has_edge(x, w)).count())
                .map(|c| c * c.saturating_sub(1) / 2)
                .sum::<usize>();
            tri * 100 + quad
        })
        .collect();
    sig.sort_unstable();
    sig
}

/// A uniformly seeded random connected cubic graph from the pairing model,
/// retried until simple and connected, and bridgeless when asked.
pub fn random_cubic(n: usize, seed: u64, bridgeless: bool) -> CubicGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_cubic_with(n, &mut rng, bridgeless)
}

pub fn random_cubic_with(n: usize, rng: &mut impl Rng, bridgeless: bool) -> CubicGraph {
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let edges: Vec<(usize, usize)> = points
            .chunks(2)
            .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
            .collect();
        let Ok(g) = CubicGraph::from_edges(n, edges) else {
            continue;
        };
        if g.is_connected() && (!bridgeless || g.is_bridgeless()) {
            return g;
        }
    }
}

/// A random relabelling of `g`.
pub fn shuffled(g: &CubicGraph, seed: u64) -> CubicGraph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    g.relabel(&perm)
}
