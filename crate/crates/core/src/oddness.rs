//! Oddness of bridgeless cubic graphs, by two independent routes.
//!
//! The oddness is the minimum number of odd cycles over all 2-factors. In a
//! cubic graph the 2-factors are exactly the complements of the perfect
//! matchings, which gives the first route: enumerate perfect matchings and
//! decompose each complement. The second route builds 2-factors directly,
//! one vertex-disjoint cycle at a time, with branch and bound on the number
//! of odd cycles closed so far. [`oddness`] in cross-checked mode runs both
//! and refuses to answer if they disagree.

use std::ops::ControlFlow;

use crate::error::OddnessError;
use crate::graph::CubicGraph;

/// A set of `n/2` edges covering every vertex once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PerfectMatching {
    edges: Vec<usize>,
}

impl PerfectMatching {
    pub fn new(g: &CubicGraph, edges: impl IntoIterator<Item = usize>) -> Result<Self, OddnessError> {
        let mut edges: Vec<usize> = edges.into_iter().collect();
        edges.sort_unstable();
        let mut covered = 0u64;
        for &e in &edges {
            if e >= g.size() {
                return Err(OddnessError::InvalidMatching(format!("edge {e} out of range")));
            }
            let (u, v) = g.edge(e);
            if covered >> u & 1 == 1 || covered >> v & 1 == 1 {
                return Err(OddnessError::InvalidMatching(format!(
                    "edge {e} touches an already covered vertex"
                )));
            }
            covered |= 1 << u | 1 << v;
        }
        if covered != g.vertex_mask() {
            return Err(OddnessError::InvalidMatching("not every vertex is covered".into()));
        }
        Ok(PerfectMatching { edges })
    }

    fn from_mask(mask: u128) -> Self {
        PerfectMatching {
            edges: (0..128).filter(|&e| mask >> e & 1 == 1).collect(),
        }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    fn mask(&self) -> u128 {
        self.edges.iter().fold(0, |m, &e| m | 1u128 << e)
    }
}

/// A spanning union of vertex-disjoint cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoFactor {
    /// Each cycle starts at its smallest vertex and continues towards the
    /// smaller of its two neighbours; cycles are sorted by first vertex.
    pub cycles: Vec<Vec<usize>>,
    pub odd_count: usize,
}

impl TwoFactor {
    fn from_cycles(mut cycles: Vec<Vec<usize>>) -> Self {
        for c in cycles.iter_mut() {
            normalize_cycle(c);
        }
        cycles.sort();
        let odd_count = cycles.iter().filter(|c| c.len() % 2 == 1).count();
        TwoFactor { cycles, odd_count }
    }

    /// Decomposes an edge set in which every vertex has degree 2.
    pub fn from_edge_mask(g: &CubicGraph, mask: u128) -> Result<Self, OddnessError> {
        let n = g.order();
        let mut next = vec![[usize::MAX; 2]; n];
        for v in 0..n {
            let mut k = 0;
            for (w, e) in g.neighbors(v).into_iter().zip(g.incident_edges(v)) {
                if mask >> e & 1 == 1 {
                    if k == 2 {
                        return Err(OddnessError::NoTwoFactor);
                    }
                    next[v][k] = w;
                    k += 1;
                }
            }
            if k != 2 {
                return Err(OddnessError::NoTwoFactor);
            }
        }
        let mut seen = 0u64;
        let mut cycles = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut cycle = vec![s];
            seen |= 1 << s;
            let (mut prev, mut cur) = (s, next[s][0]);
            while cur != s {
                cycle.push(cur);
                seen |= 1 << cur;
                let step = if next[cur][0] == prev { next[cur][1] } else { next[cur][0] };
                prev = cur;
                cur = step;
            }
            cycles.push(cycle);
        }
        Ok(Self::from_cycles(cycles))
    }

    /// Independent check: the cycles partition the vertices, consecutive
    /// vertices are adjacent in `g`, every cycle is simple of length at least
    /// 3, and `odd_count` matches.
    pub fn verify(&self, g: &CubicGraph) -> bool {
        let mut seen = vec![false; g.order()];
        for c in &self.cycles {
            if c.len() < 3 {
                return false;
            }
            for (i, &v) in c.iter().enumerate() {
                if v >= g.order() || seen[v] {
                    return false;
                }
                seen[v] = true;
                if !g.has_edge(v, c[(i + 1) % c.len()]) {
                    return false;
                }
            }
        }
        seen.iter().all(|&s| s)
            && self.odd_count == self.cycles.iter().filter(|c| c.len() % 2 == 1).count()
    }

    /// Edge indices used by the cycles.
    pub fn edges(&self, g: &CubicGraph) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()])))
            .filter_map(|(u, v)| g.edge_index(u, v))
            .collect();
        out.sort_unstable();
        out
    }
}

fn normalize_cycle(c: &mut Vec<usize>) {
    if c.is_empty() {
        return;
    }
    let pos = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(pos);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddnessMethod {
    MatchingComplement,
    DirectTwoFactor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OddnessMode {
    /// The direct 2-factor search only.
    #[default]
    Fast,
    /// Both algorithms; a disagreement is reported as an error.
    CrossChecked,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddnessResult {
    pub value: usize,
    pub witness: TwoFactor,
    pub method: OddnessMethod,
}

/// Calls `f` on every perfect matching (as an edge mask), stopping early if
/// it breaks. Branches on the lowest uncovered vertex and its free incident
/// edges in adjacency order.
pub fn for_each_perfect_matching(g: &CubicGraph, mut f: impl FnMut(u128) -> ControlFlow<()>) {
    fn rec(
        g: &CubicGraph,
        full: u64,
        covered: u64,
        chosen: u128,
        f: &mut dyn FnMut(u128) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if covered == full {
            return f(chosen);
        }
        let v = (!covered & full).trailing_zeros() as usize;
        for (w, e) in g.neighbors(v).into_iter().zip(g.incident_edges(v)) {
            if covered >> w & 1 == 0 {
                rec(g, full, covered | 1 << v | 1 << w, chosen | 1u128 << e, f)?;
            }
        }
        ControlFlow::Continue(())
    }
    let _ = rec(g, g.vertex_mask(), 0, 0, &mut f);
}

pub fn enumerate_perfect_matchings(g: &CubicGraph) -> Result<Vec<PerfectMatching>, OddnessError> {
    let mut out = Vec::new();
    for_each_perfect_matching(g, |m| {
        out.push(PerfectMatching::from_mask(m));
        ControlFlow::Continue(())
    });
    if out.is_empty() {
        return Err(OddnessError::NoPerfectMatching);
    }
    Ok(out)
}

pub fn count_perfect_matchings(g: &CubicGraph) -> usize {
    let mut count = 0;
    for_each_perfect_matching(g, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

pub fn complement_two_factor(g: &CubicGraph, m: &PerfectMatching) -> Result<TwoFactor, OddnessError> {
    let checked = PerfectMatching::new(g, m.edges().iter().copied())?;
    TwoFactor::from_edge_mask(g, g.edge_mask() & !checked.mask())
}

/// Odd cycles in the complement of a perfect matching given as an edge mask.
fn complement_odd_cycles(g: &CubicGraph, matching: u128) -> usize {
    let n = g.order();
    let mut partner = [0u8; 64];
    let mut rest = matching;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = g.edge(e);
        partner[u] = v as u8;
        partner[v] = u as u8;
    }
    let mut seen = 0u64;
    let mut odd = 0;
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        let mut len = 0;
        let (mut prev, mut cur) = (usize::MAX, s);
        loop {
            seen |= 1 << cur;
            len += 1;
            let step = g
                .neighbors(cur)
                .into_iter()
                .find(|&w| w != partner[cur] as usize && w != prev)
                .unwrap();
            prev = cur;
            cur = step;
            if cur == s {
                break;
            }
        }
        odd += len & 1;
    }
    odd
}

fn require_bridgeless(g: &CubicGraph) -> Result<(), OddnessError> {
    if g.is_bridgeless() {
        Ok(())
    } else {
        Err(OddnessError::NotBridgeless)
    }
}

/// Minimum odd-cycle count over the complements of all perfect matchings.
pub fn oddness_by_matchings(g: &CubicGraph) -> Result<OddnessResult, OddnessError> {
    require_bridgeless(g)?;
    let mut best: Option<(usize, u128)> = None;
    for_each_perfect_matching(g, |m| {
        let odd = complement_odd_cycles(g, m);
        if best.is_none_or(|(b, _)| odd < b) {
            best = Some((odd, m));
        }
        if odd == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let (value, matching) = best.ok_or(OddnessError::NoPerfectMatching)?;
    let witness = TwoFactor::from_edge_mask(g, g.edge_mask() & !matching)?;
    debug_assert_eq!(witness.odd_count, value);
    Ok(OddnessResult {
        value,
        witness,
        method: OddnessMethod::MatchingComplement,
    })
}

/// Switches for the direct 2-factor search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Stop as soon as a 2-factor without odd cycles is found.
    pub early_exit: bool,
    /// Cut branches whose closed odd cycles already reach the best value.
    pub prune: bool,
    /// Strengthen the bound with one odd cycle per odd-order component of
    /// the uncovered vertices. Only used when `prune` is set.
    pub parity_bound: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            early_exit: true,
            prune: true,
            parity_bound: false,
        }
    }
}

pub fn oddness_by_two_factors(g: &CubicGraph) -> Result<OddnessResult, OddnessError> {
    oddness_by_two_factors_with(g, SearchOptions::default())
}

/// Branch and bound over vertex-disjoint cycles: start a cycle at the lowest
/// uncovered vertex, grow it through uncovered neighbours in adjacency
/// order, close it when the walk returns to its start.
pub fn oddness_by_two_factors_with(
    g: &CubicGraph,
    options: SearchOptions,
) -> Result<OddnessResult, OddnessError> {
    require_bridgeless(g)?;
    let mut search = CycleSearch {
        g,
        full: g.vertex_mask(),
        options,
        stack: Vec::with_capacity(g.order()),
        starts: Vec::new(),
        best: usize::MAX,
        best_cycles: Vec::new(),
        done: false,
    };
    search.next_cycle(0, 0);
    if search.best == usize::MAX {
        return Err(OddnessError::NoTwoFactor);
    }
    let witness = TwoFactor::from_cycles(search.best_cycles);
    Ok(OddnessResult {
        value: search.best,
        witness,
        method: OddnessMethod::DirectTwoFactor,
    })
}

struct CycleSearch<'a> {
    g: &'a CubicGraph,
    full: u64,
    options: SearchOptions,
    /// Vertices of closed cycles followed by the open path.
    stack: Vec<usize>,
    /// Start offsets into `stack` of every cycle, including the open one.
    starts: Vec<usize>,
    best: usize,
    best_cycles: Vec<Vec<usize>>,
    done: bool,
}

impl CycleSearch<'_> {
    fn next_cycle(&mut self, covered: u64, odd: usize) {
        if covered == self.full {
            if odd < self.best {
                self.best = odd;
                self.best_cycles = self.closed_cycles();
                self.done = self.options.early_exit && odd == 0;
            }
            return;
        }
        if self.options.prune {
            if odd >= self.best {
                return;
            }
            if self.options.parity_bound
                && odd + odd_components(self.g, self.full & !covered) >= self.best
            {
                return;
            }
        }
        let v = (!covered & self.full).trailing_zeros() as usize;
        self.starts.push(self.stack.len());
        self.stack.push(v);
        self.extend(v, covered | 1 << v, odd);
        self.stack.pop();
        self.starts.pop();
    }

    fn closed_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.starts.len());
        for (i, &s) in self.starts.iter().enumerate() {
            let end = self.starts.get(i + 1).copied().unwrap_or(self.stack.len());
            out.push(self.stack[s..end].to_vec());
        }
        out
    }

    fn extend(&mut self, start: usize, covered: u64, odd: usize) {
        if self.done || (self.options.prune && odd >= self.best) {
            return;
        }
        let open = *self.starts.last().unwrap();
        let len = self.stack.len() - open;
        let last = *self.stack.last().unwrap();
        for w in self.g.neighbors(last) {
            if self.done {
                return;
            }
            if w == start {
                // Each cycle is found in one direction only.
                if len >= 3 && self.stack[open + 1] < last {
                    let closed_odd = odd + (len & 1);
                    if self.options.prune && closed_odd >= self.best {
                        continue;
                    }
                    self.next_cycle(covered, closed_odd);
                }
            } else if covered >> w & 1 == 0 {
                let covered = covered | 1 << w;
                self.stack.push(w);
                if self.feasible(start, last, w, covered, len + 1) {
                    self.extend(start, covered, odd);
                }
                self.stack.pop();
            }
        }
    }

    /// Every uncovered vertex next to the moved path end must keep two usable
    /// neighbours, and the start must keep a way to close.
    fn feasible(&self, start: usize, old_end: usize, new_end: usize, covered: u64, len: usize) -> bool {
        let free = self.full & !covered;
        let ends = 1u64 << start | 1u64 << new_end;
        let touched = (self.g.neighbor_bits(old_end) | self.g.neighbor_bits(new_end)) & free;
        let mut rest = touched;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.g.neighbor_bits(x) & (free | ends)).count_ones() < 2 {
                return false;
            }
        }
        let closers = if len >= 3 { free | 1u64 << new_end } else { free };
        self.g.neighbor_bits(start) & closers != 0
    }
}

/// Components of odd order in the subgraph induced by `mask`.
fn odd_components(g: &CubicGraph, mask: u64) -> usize {
    let mut left = mask;
    let mut odd = 0;
    while left != 0 {
        let s = left.trailing_zeros() as usize;
        let comp = crate::graph::reach(g.bitsets(), s, mask);
        left &= !comp;
        odd += comp.count_ones() as usize & 1;
    }
    odd
}

/// Oddness of a bridgeless cubic graph. Cross-checked mode runs both
/// algorithms and returns the direct 2-factor result if they agree.
pub fn oddness(g: &CubicGraph, mode: OddnessMode) -> Result<OddnessResult, OddnessError> {
    let direct = oddness_by_two_factors(g)?;
    if mode == OddnessMode::CrossChecked {
        let by_matchings = oddness_by_matchings(g)?;
        if by_matchings.value != direct.value {
            return Err(OddnessError::AlgorithmDisagreement {
                by_matchings: by_matchings.value,
                by_two_factors: direct.value,
            });
        }
    }
    Ok(direct)
}
