//! Canonical labelling by individualisation and refinement.
//!
//! The ordered partition is refined to the coarsest equitable partition;
//! if it is not discrete, every vertex of the first smallest non-singleton
//! cell is individualised in turn. Each search node records a hash of its
//! refinement history, and a leaf is ranked by the sequence of node hashes
//! along its path followed by the graph6 string of the relabelled graph.
//! The least leaf is the canonical labelling. Node hashes are
//! labelling-invariant, so a subtree whose history already ranks above the
//! current best cannot contain the canonical leaf and is skipped.
//!
//! Leaves that reproduce the canonical graph exactly are in one-to-one
//! correspondence with automorphisms, so counting them gives the order of
//! the automorphism group.

use std::collections::VecDeque;

use crate::format::encode_triangle;
use crate::graph::CubicGraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// graph6 of the canonically relabelled graph.
    pub key: Vec<u8>,
    pub automorphism_order: u64,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn key_str(&self) -> &str {
        std::str::from_utf8(&self.key).expect("graph6 is ASCII")
    }

    /// The canonical representative of `g`'s isomorphism class.
    pub fn canonical_graph(&self, g: &CubicGraph) -> CubicGraph {
        g.relabel(&self.labeling)
    }
}

pub fn canonical_form(g: &CubicGraph) -> CanonicalForm {
    let n = g.order();
    let mut search = Search {
        g,
        path: Vec::with_capacity(n),
        best: None,
        count: 0,
    };
    let mut cells = vec![g.vertex_mask()];
    let trace = refine(g, &mut cells, g.vertex_mask());
    search.path.push(trace);
    search.visit(cells);
    let best = search.best.expect("search reaches at least one leaf");
    let mut labeling = vec![0; n];
    for (pos, &v) in best.order.iter().enumerate() {
        labeling[v] = pos;
    }
    CanonicalForm {
        key: best.code,
        automorphism_order: search.count,
        labeling,
    }
}

pub fn are_isomorphic(a: &CubicGraph, b: &CubicGraph) -> bool {
    a.order() == b.order() && canonical_form(a).key == canonical_form(b).key
}

/// Order of the automorphism group.
pub fn automorphism_order(g: &CubicGraph) -> u64 {
    canonical_form(g).automorphism_order
}

struct Leaf {
    traces: Vec<u64>,
    code: Vec<u8>,
    order: Vec<usize>,
}

struct Search<'a> {
    g: &'a CubicGraph,
    path: Vec<u64>,
    best: Option<Leaf>,
    count: u64,
}

impl Search<'_> {
    /// Compares the current path with the best leaf's path on their common
    /// prefix; a path that runs past a shorter best path ranks above it.
    fn prefix_rank(&self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let Some(best) = &self.best else {
            return Less;
        };
        for (a, b) in self.path.iter().zip(&best.traces) {
            match a.cmp(b) {
                Equal => continue,
                other => return other,
            }
        }
        if self.path.len() > best.traces.len() {
            Greater
        } else {
            Equal
        }
    }

    fn visit(&mut self, cells: Vec<u64>) {
        if self.prefix_rank() == std::cmp::Ordering::Greater {
            return;
        }
        if cells.len() == self.g.order() {
            self.leaf(&cells);
            return;
        }
        let target = (0..cells.len())
            .filter(|&i| cells[i].count_ones() > 1)
            .min_by_key(|&i| (cells[i].count_ones(), i))
            .unwrap();
        let mut rest = cells[target];
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let single = 1u64 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(single);
            child.push(cells[target] & !single);
            child.extend_from_slice(&cells[target + 1..]);
            let trace = refine(self.g, &mut child, single);
            self.path.push(trace);
            self.visit(child);
            self.path.pop();
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        use std::cmp::Ordering::*;
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let n = order.len();
        let mut code = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
        code.push(n as u8 + 63);
        let g = self.g;
        encode_triangle(n, |i, j| g.has_edge(order[i], order[j]), &mut code);
        let rank = match &self.best {
            None => Less,
            Some(best) => self.path.cmp(&best.traces).then_with(|| code.cmp(&best.code)),
        };
        match rank {
            Less => {
                self.best = Some(Leaf {
                    traces: self.path.clone(),
                    code,
                    order,
                });
                self.count = 1;
            }
            Equal => self.count += 1,
            Greater => {}
        }
    }
}

fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x0000_0100_0000_01b3).rotate_left(17)
}

/// Refines `cells` to an equitable partition, starting from the splitter
/// `first`. Returns a hash of the splits performed.
fn refine(g: &CubicGraph, cells: &mut Vec<u64>, first: u64) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    let mut queue = VecDeque::from([first]);
    while let Some(splitter) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() == 1 {
                i += 1;
                continue;
            }
            let mut parts = [0u64; 4];
            let mut rest = cell;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                parts[(g.neighbor_bits(v) & splitter).count_ones() as usize] |= 1 << v;
            }
            let pieces: Vec<(usize, u64)> = parts
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(k, &p)| (k, p))
                .collect();
            if pieces.len() == 1 {
                h = mix(h, (i as u64) << 8 | pieces[0].0 as u64);
                i += 1;
                continue;
            }
            h = mix(h, 0xff00 | i as u64);
            for &(k, p) in &pieces {
                h = mix(h, (k as u64) << 32 | p.count_ones() as u64);
                queue.push_back(p);
            }
            cells.splice(i..=i, pieces.iter().map(|&(_, p)| p));
            i += pieces.len();
        }
    }
    h
}
