//! Graph-class recognition and minor analysis at desk scale.
//!
//! Minor containment is decided exactly by a contract-and-test recursion: a
//! minor model either contracts no edge (then the target is a subgraph, found
//! by backtracking embedding) or contracts at least one (then recurse on each
//! single-edge contraction). Planarity reuses the minor engine through the
//! excluded-minor characterisation (`K_5`, `K_{3,3}`) behind an edge-count
//! pre-filter; this tool only ever needs planarity on small graphs, so no
//! linear-time embedding algorithm is attempted.
//!
//! The search is budgeted. Exhausting the budget is an error distinct from a
//! negative answer.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph with {n} vertices exceeds the search budget of {max} vertices")]
    TooManyVertices { n: usize, max: usize },
    #[error("minor search exhausted its budget of {0} branch nodes")]
    BudgetExhausted(u64),
    #[error("colour class {index} is empty")]
    EmptyPart { index: usize },
    #[error("matching oracle budget is n <= {limit}, got n = {n}")]
    MatchingBudget { n: usize, limit: usize },
}

/// Caps for the exponential minor search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorSearchBudget {
    /// Largest host graph the search accepts.
    pub max_vertices: usize,
    /// Recursion nodes allowed before the search gives up.
    pub max_branch_nodes: u64,
}

impl Default for MinorSearchBudget {
    fn default() -> Self {
        MinorSearchBudget {
            max_vertices: 12,
            max_branch_nodes: 5_000_000,
        }
    }
}

/// Smallest `d` such that repeatedly removing a minimum-degree vertex never
/// removes one of degree above `d`.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut worst = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degs[v], v))
            .expect("a live vertex remains");
        worst = worst.max(degs[v]);
        removed[v] = true;
        for w in g.neighbours(v).iter() {
            if !removed[w] {
                degs[w] -= 1;
            }
        }
    }
    worst
}

/// Maximum degree; errors on the vertex-free graph.
pub fn max_degree(g: &Graph) -> Result<usize, AnalysisError> {
    g.max_degree().ok_or(AnalysisError::EmptyGraph)
}

// ---------------------------------------------------------------------------
// Minor containment
// ---------------------------------------------------------------------------

/// Word-bitset graph used inside the minor search; capped at 64 vertices.
#[derive(Clone)]
struct WordGraph {
    n: usize,
    rows: Vec<u64>,
}

impl WordGraph {
    fn from_graph(g: &Graph) -> Self {
        debug_assert!(g.n() <= 64);
        WordGraph {
            n: g.n(),
            rows: g.vertices().map(|v| g.row_word(v)).collect(),
        }
    }

    fn complete(n: usize) -> Self {
        let mask = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        WordGraph {
            n,
            rows: (0..n).map(|v| mask & !(1u64 << v)).collect(),
        }
    }

    fn degree(&self, v: usize) -> u32 {
        self.rows[v].count_ones()
    }

    fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = self.rows[u].checked_shr(u as u32 + 1).unwrap_or(0);
            let mut rest = above.checked_shl(u as u32 + 1).unwrap_or(0);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Contracts the edge `(u, v)` into `u`, deleting `v` and shifting the
    /// labels above it down by one.
    fn contract_edge(&self, u: usize, v: usize) -> WordGraph {
        debug_assert!(self.rows[u] >> v & 1 == 1);
        let merged = (self.rows[u] | self.rows[v]) & !(1 << u) & !(1 << v);
        let mut rows = Vec::with_capacity(self.n - 1);
        for w in 0..self.n {
            if w == v {
                continue;
            }
            let mut r = if w == u { merged } else { self.rows[w] };
            if w != u && r >> v & 1 == 1 {
                r = (r | 1 << u) & !(1 << v);
            }
            let low = r & ((1u64 << v) - 1);
            let high = r.checked_shr(v as u32 + 1).unwrap_or(0);
            rows.push(low | high << v);
        }
        WordGraph {
            n: self.n - 1,
            rows,
        }
    }

    /// Drops the listed vertices (must be isolated), compacting labels.
    fn drop_isolated(&self, count: usize) -> WordGraph {
        let mut keep: Vec<usize> = Vec::with_capacity(self.n);
        let mut dropped = 0;
        for v in 0..self.n {
            if dropped < count && self.rows[v] == 0 {
                dropped += 1;
            } else {
                keep.push(v);
            }
        }
        debug_assert_eq!(dropped, count);
        let mut rows = Vec::with_capacity(keep.len());
        for &v in &keep {
            let mut r = 0u64;
            for (new, &old) in keep.iter().enumerate() {
                if self.rows[v] >> old & 1 == 1 {
                    r |= 1 << new;
                }
            }
            rows.push(r);
        }
        WordGraph {
            n: keep.len(),
            rows,
        }
    }

    fn isolated_count(&self) -> usize {
        self.rows.iter().filter(|&&r| r == 0).count()
    }
}

/// Backtracking subgraph embedding of `h` into `g`.
///
/// Degree-sequence dominance is a sound prune here (unlike for minors): every
/// embedded vertex keeps at least its `h`-degree.
fn contains_subgraph(g: &WordGraph, h: &WordGraph) -> bool {
    if h.n > g.n || h.edge_count() > g.edge_count() {
        return false;
    }
    let mut hdegs: Vec<u32> = (0..h.n).map(|v| h.degree(v)).collect();
    let mut gdegs: Vec<u32> = (0..g.n).map(|v| g.degree(v)).collect();
    hdegs.sort_unstable_by(|a, b| b.cmp(a));
    gdegs.sort_unstable_by(|a, b| b.cmp(a));
    if hdegs.iter().zip(&gdegs).any(|(hd, gd)| hd > gd) {
        return false;
    }

    // Assign h-vertices in descending-degree order.
    let mut order: Vec<usize> = (0..h.n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));

    fn assign(
        g: &WordGraph,
        h: &WordGraph,
        order: &[usize],
        idx: usize,
        used: u64,
        image: &mut [usize],
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let hv = order[idx];
        let needed = h.degree(hv);
        for gv in 0..g.n {
            if used >> gv & 1 == 1 || g.degree(gv) < needed {
                continue;
            }
            let ok = order[..idx]
                .iter()
                .all(|&prev| h.rows[hv] >> prev & 1 == 0 || g.rows[gv] >> image[prev] & 1 == 1);
            if ok {
                image[hv] = gv;
                if assign(g, h, order, idx + 1, used | 1 << gv, image) {
                    return true;
                }
            }
        }
        false
    }

    let mut image = vec![usize::MAX; h.n];
    assign(g, h, &order, 0, 0, &mut image)
}

struct SearchState {
    used: u64,
    cap: u64,
    /// Contracted states already expanded. Performing the same multiset of
    /// contractions in any order yields the same labeled graph, so exact
    /// row equality dedups permutations without touching determinism. A
    /// state that led to success never recurs: the search stops there.
    /// Only worth the bookkeeping when several contractions can stack, so
    /// shallow searches leave it off.
    visited: Option<std::collections::HashSet<(Vec<u64>, Vec<u64>)>>,
}

const DEDUP_DEPTH: usize = 3;

impl SearchState {
    fn new(cap: u64) -> Self {
        SearchState {
            used: 0,
            cap,
            visited: None,
        }
    }

    fn for_query(cap: u64, host: &WordGraph, target: &WordGraph) -> Self {
        let mut state = SearchState::new(cap);
        if host.n >= target.n + DEDUP_DEPTH {
            state.visited = Some(std::collections::HashSet::new());
        }
        state
    }

    fn tick(&mut self) -> Result<(), AnalysisError> {
        self.used += 1;
        if self.used > self.cap {
            Err(AnalysisError::BudgetExhausted(self.cap))
        } else {
            Ok(())
        }
    }
}

fn minor_rec(
    g: &WordGraph,
    h: &WordGraph,
    counter: &mut SearchState,
) -> Result<bool, AnalysisError> {
    counter.tick()?;

    // Isolated-vertex reductions. With no isolated h-vertex, isolated
    // g-vertices can never host a branch set; with isolated vertices on both
    // sides, one of each cancels.
    let iso_g = g.isolated_count();
    if iso_g > 0 {
        let iso_h = h.isolated_count();
        return if iso_h == 0 {
            minor_rec(&g.drop_isolated(iso_g), h, counter)
        } else {
            let k = iso_g.min(iso_h);
            minor_rec(&g.drop_isolated(k), &h.drop_isolated(k), counter)
        };
    }

    if h.n > g.n || h.edge_count() > g.edge_count() {
        return Ok(false);
    }
    if h.n == 0 {
        return Ok(true);
    }
    if let Some(visited) = counter.visited.as_mut() {
        if !visited.insert((g.rows.clone(), h.rows.clone())) {
            // A previous visit explored this exact state and found nothing.
            return Ok(false);
        }
    }
    if contains_subgraph(g, h) {
        return Ok(true);
    }
    if g.n == h.n {
        // No room left to contract, and the spanning case was just refuted.
        return Ok(false);
    }

    // Contract-first branching: lowest-index edge of a minimum-degree vertex
    // leads, the rest follow deterministically.
    let mut edges = g.edges();
    edges.sort_by_key(|&(u, v)| (g.degree(u).min(g.degree(v)), u, v));
    for (u, v) in edges {
        if minor_rec(&g.contract_edge(u, v), h, counter)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_budget(g: &Graph, budget: &MinorSearchBudget) -> Result<(), AnalysisError> {
    let max = budget.max_vertices.min(64);
    if g.n() > max {
        return Err(AnalysisError::TooManyVertices { n: g.n(), max });
    }
    Ok(())
}

/// Exact test for `h` being a minor of `g`.
pub fn has_minor(g: &Graph, h: &Graph, budget: &MinorSearchBudget) -> Result<bool, AnalysisError> {
    check_budget(g, budget)?;
    if h.n() > g.n() || h.m() > g.m() {
        return Ok(false);
    }
    let host = WordGraph::from_graph(g);
    let target = WordGraph::from_graph(h);
    let mut counter = SearchState::for_query(budget.max_branch_nodes, &host, &target);
    minor_rec(&host, &target, &mut counter)
}

/// Planarity via the excluded-minor characterisation: planar iff no `K_5`
/// minor and no `K_{3,3}` minor, behind the `m <= 3n - 6` pre-filter.
pub fn is_planar(g: &Graph, budget: &MinorSearchBudget) -> Result<bool, AnalysisError> {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return Ok(false);
    }
    if n <= 4 {
        return Ok(true);
    }
    check_budget(g, budget)?;
    let host = WordGraph::from_graph(g);
    let k5 = WordGraph::complete(5);
    let mut counter = SearchState::for_query(budget.max_branch_nodes, &host, &k5);
    if minor_rec(&host, &k5, &mut counter)? {
        return Ok(false);
    }
    let k33 = WordGraph::from_graph(
        &crate::construct::construct_multipartite(&[3, 3]).expect("parts are non-empty"),
    );
    let mut counter = SearchState {
        used: counter.used,
        ..SearchState::for_query(budget.max_branch_nodes, &host, &k33)
    };
    Ok(!minor_rec(&host, &k33, &mut counter)?)
}

/// Largest `t` such that `K_t` is a minor of `g`. One branch-node budget is
/// shared across the whole ladder of queries.
pub fn hadwiger_number(g: &Graph, budget: &MinorSearchBudget) -> Result<usize, AnalysisError> {
    check_budget(g, budget)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let host = WordGraph::from_graph(g);
    let mut used = 0;
    let mut best = 1;
    for t in 2..=g.n() {
        let target = WordGraph::complete(t);
        let mut counter = SearchState {
            used,
            ..SearchState::for_query(budget.max_branch_nodes, &host, &target)
        };
        let found = minor_rec(&host, &target, &mut counter)?;
        used = counter.used;
        if found {
            best = t;
        } else {
            break;
        }
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Complete multipartite graphs: Hadwiger number via matchings
// ---------------------------------------------------------------------------

/// Maximum matching size of a complete multipartite graph with the given
/// class sizes: `min(floor(n/2), n - n')` with `n'` the largest class.
/// Zero-size classes are dropped.
pub fn sitton_matching(parts: &[u64]) -> u64 {
    let n: u64 = parts.iter().sum();
    let largest = parts.iter().copied().max().unwrap_or(0);
    (n / 2).min(n - largest)
}

/// Maximum matching size of the reduced graph with every class one smaller.
pub fn multipartite_reduced_matching(parts: &[u64]) -> u64 {
    let reduced: Vec<u64> = parts.iter().map(|&p| p.saturating_sub(1)).collect();
    sitton_matching(&reduced)
}

/// Hadwiger number of the complete multipartite graph with the given class
/// sizes: the class count plus the largest matching of the reduced graph.
pub fn hadwiger_multipartite(parts: &[u64]) -> Result<u64, AnalysisError> {
    for (index, &p) in parts.iter().enumerate() {
        if p == 0 {
            return Err(AnalysisError::EmptyPart { index });
        }
    }
    Ok(parts.len() as u64 + multipartite_reduced_matching(parts))
}

const MATCHING_VERTEX_LIMIT: usize = 16;

/// Exact maximum matching by branching over the lowest live vertex; the
/// oracle for [`sitton_matching`].
pub fn max_matching_bruteforce(g: &Graph) -> Result<usize, AnalysisError> {
    let n = g.n();
    if n > MATCHING_VERTEX_LIMIT {
        return Err(AnalysisError::MatchingBudget {
            n,
            limit: MATCHING_VERTEX_LIMIT,
        });
    }
    let rows: Vec<u64> = g.vertices().map(|v| g.row_word(v)).collect();

    fn search(rows: &[u64], avail: u64, current: usize, best: &mut usize) {
        *best = (*best).max(current);
        if current + (avail.count_ones() as usize) / 2 <= *best {
            return;
        }
        if avail == 0 {
            return;
        }
        let v = avail.trailing_zeros() as usize;
        let without_v = avail & !(1 << v);
        // Match v with each live neighbour...
        let mut mates = rows[v] & avail;
        while mates != 0 {
            let w = mates.trailing_zeros() as usize;
            mates &= mates - 1;
            search(rows, without_v & !(1 << w), current + 1, best);
        }
        // ...or leave v unmatched.
        search(rows, without_v, current, best);
    }

    let mut best = 0;
    let avail = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    search(&rows, avail, 0, &mut best);
    Ok(best)
}
