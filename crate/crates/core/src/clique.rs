//! Exact maximum clique by branch and bound with greedy-coloring bounds.
//!
//! Both exhaustive searches in the crate (constant-weight codes over the
//! Johnson graph and insertion/deletion codes over `[q]^n`) reduce to a
//! maximum clique in a compatibility graph, so they share this engine.

#[derive(Debug, Clone)]
pub struct CompatibilityGraph {
    order: usize,
    blocks: usize,
    rows: Vec<u64>,
}

impl CompatibilityGraph {
    pub fn new(order: usize) -> Self {
        let blocks = order.div_ceil(64).max(1);
        CompatibilityGraph { order, blocks, rows: vec![0; order * blocks] }
    }

    /// Builds the graph with an edge `{i, j}` whenever `compatible(i, j)`.
    /// The predicate is only called with `i < j`.
    pub fn from_fn(order: usize, mut compatible: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = CompatibilityGraph::new(order);
        for i in 0..order {
            for j in i + 1..order {
                if compatible(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "self-loops are not allowed");
        self.rows[i * self.blocks + j / 64] |= 1 << (j % 64);
        self.rows[j * self.blocks + i / 64] |= 1 << (i % 64);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.blocks + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|b| b.count_ones() as usize).sum()
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.blocks..(v + 1) * self.blocks]
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(k, &i)| vertices[k + 1..].iter().all(|&j| i != j && self.has_edge(i, j)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOutcome {
    /// Best clique found, sorted ascending.
    pub clique: Vec<usize>,
    /// Whether the search finished, certifying `clique` as maximum.
    pub exact: bool,
    pub nodes: u64,
}

/// Knobs for [`max_clique_within`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Branch-node budget.
    pub budget: u64,
    /// Only cliques strictly larger than this (counting fixed vertices) are
    /// reported.
    pub floor: usize,
    /// Stop as soon as a clique of this size is found; it is then certified
    /// maximum by whatever produced the target.
    pub target: Option<usize>,
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions { budget, floor: 0, target: None }
    }
}

/// Maximum clique of `g`, stopping after `budget` branch nodes.
pub fn max_clique(g: &CompatibilityGraph, budget: u64) -> CliqueOutcome {
    let all: Vec<usize> = (0..g.order).collect();
    max_clique_within(g, &[], &all, &SearchOptions::with_budget(budget))
}

/// Maximum clique among those containing `anchor`.
///
/// For vertex-transitive graphs this equals the overall maximum and prunes
/// one level of symmetric branching.
pub fn max_clique_containing(g: &CompatibilityGraph, anchor: usize, budget: u64) -> CliqueOutcome {
    let candidates: Vec<usize> = (0..g.order).filter(|&v| v != anchor && g.has_edge(anchor, v)).collect();
    max_clique_within(g, &[anchor], &candidates, &SearchOptions::with_budget(budget))
}

/// Largest clique of the form `fixed ∪ K` with `K ⊆ candidates`.
///
/// `fixed` must already be a clique and every candidate must be adjacent to
/// all of it. When nothing beats `opts.floor` the returned clique is empty
/// (and `exact` still says whether that was proved).
pub fn max_clique_within(
    g: &CompatibilityGraph,
    fixed: &[usize],
    candidates: &[usize],
    opts: &SearchOptions,
) -> CliqueOutcome {
    debug_assert!(g.is_clique(fixed));
    // Relabel candidates by non-increasing degree within the candidate set;
    // ties keep the original order so the result is deterministic.
    let mut sub_deg: Vec<(usize, usize)> = candidates
        .iter()
        .map(|&v| (v, candidates.iter().filter(|&&u| u != v && g.has_edge(u, v)).count()))
        .collect();
    sub_deg.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let map: Vec<usize> = sub_deg.into_iter().map(|(v, _)| v).collect();
    let local = CompatibilityGraph::from_fn(map.len(), |i, j| g.has_edge(map[i], map[j]));

    let base = fixed.len();
    let mut s = Searcher {
        local,
        best: Vec::new(),
        best_len: opts.floor.saturating_sub(base),
        found: false,
        current: Vec::new(),
        nodes: 0,
        budget: opts.budget,
        target: opts.target.map(|t| t.saturating_sub(base)),
        exhausted: false,
        done: false,
    };
    let greedy = s.greedy();
    s.offer(&greedy);
    if s.local.order > 0 && !s.done {
        let mut pool = vec![0u64; s.local.blocks];
        for v in 0..s.local.order {
            pool[v / 64] |= 1 << (v % 64);
        }
        s.expand(pool);
    }

    let mut clique = Vec::new();
    if s.found || base > opts.floor {
        clique = fixed.iter().copied().chain(s.best.iter().map(|&v| map[v])).collect();
        clique.sort_unstable();
    }
    debug_assert!(g.is_clique(&clique));
    CliqueOutcome { clique, exact: !s.exhausted, nodes: s.nodes }
}

struct Searcher {
    local: CompatibilityGraph,
    best: Vec<usize>,
    best_len: usize,
    found: bool,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    target: Option<usize>,
    exhausted: bool,
    done: bool,
}

impl Searcher {
    fn offer(&mut self, clique: &[usize]) {
        if clique.len() > self.best_len {
            self.best = clique.to_vec();
            self.best_len = clique.len();
            self.found = true;
        }
        if self.found && self.target.is_some_and(|t| self.best_len >= t) {
            self.done = true;
        }
    }

    fn greedy(&self) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        for v in 0..self.local.order {
            if chosen.iter().all(|&u| self.local.has_edge(u, v)) {
                chosen.push(v);
            }
        }
        chosen
    }

    /// Greedy sequential coloring of `pool`; returns vertices in color
    /// order with the color (1-based) of each.
    fn color(&self, pool: &[u64]) -> Vec<(usize, usize)> {
        let mut uncolored = pool.to_vec();
        let mut out = Vec::new();
        let mut color = 0;
        while uncolored.iter().any(|&b| b != 0) {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = first_bit(&avail) {
                avail[v / 64] &= !(1 << (v % 64));
                uncolored[v / 64] &= !(1 << (v % 64));
                for (a, r) in avail.iter_mut().zip(self.local.row(v)) {
                    *a &= !r;
                }
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, mut pool: Vec<u64>) {
        if self.exhausted || self.done {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let colored = self.color(&pool);
        for &(v, color) in colored.iter().rev() {
            if self.current.len() + color <= self.best_len {
                return;
            }
            self.current.push(v);
            let next: Vec<u64> = pool.iter().zip(self.local.row(v)).map(|(p, r)| p & r).collect();
            if next.iter().all(|&b| b == 0) {
                let current = std::mem::take(&mut self.current);
                self.offer(&current);
                self.current = current;
            } else {
                self.expand(next);
            }
            self.current.pop();
            if self.exhausted || self.done {
                return;
            }
            pool[v / 64] &= !(1 << (v % 64));
        }
    }
}

fn first_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &b)| b != 0)
        .map(|(i, b)| i * 64 + b.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Largest clique by trying every vertex subset.
    fn brute_force(g: &CompatibilityGraph) -> usize {
        let n = g.order();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if vs.len() > best && g.is_clique(&vs) {
                best = vs.len();
            }
        }
        best
    }

    #[test]
    fn empty_and_trivial_graphs() {
        let g = CompatibilityGraph::new(0);
        assert_eq!(max_clique(&g, 100).clique.len(), 0);
        let g = CompatibilityGraph::new(3);
        let out = max_clique(&g, 100);
        assert_eq!(out.clique, vec![0]);
        assert!(out.exact);
    }

    #[test]
    fn complete_graph() {
        let g = CompatibilityGraph::from_fn(70, |_, _| true);
        let out = max_clique(&g, 1000);
        assert_eq!(out.clique.len(), 70);
        assert!(out.exact);
    }

    #[test]
    fn anchored_search_includes_anchor() {
        // path 0-1-2 plus triangle 3-4-5
        let mut g = CompatibilityGraph::new(6);
        for (a, b) in [(0, 1), (1, 2), (3, 4), (4, 5), (3, 5)] {
            g.add_edge(a, b);
        }
        assert_eq!(max_clique(&g, 100).clique, vec![3, 4, 5]);
        assert_eq!(max_clique_containing(&g, 0, 100).clique, vec![0, 1]);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = CompatibilityGraph::from_fn(40, |i, j| (i * 7 + j * 3) % 5 != 0);
        let out = max_clique(&g, 0);
        assert!(!out.exact);
        assert!(g.is_clique(&out.clique));
    }

    #[test]
    fn matches_brute_force_on_pseudo_random_graphs() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for trial in 0..60 {
            let n = 4 + trial % 13;
            let density = [30u64, 50, 70, 90][trial % 4];
            let g = CompatibilityGraph::from_fn(n, |_, _| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state % 100 < density
            });
            let out = max_clique(&g, u64::MAX);
            assert!(out.exact);
            assert!(g.is_clique(&out.clique));
            assert_eq!(out.clique.len(), brute_force(&g), "trial {trial}");
        }
    }
}
