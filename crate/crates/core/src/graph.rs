//! Immutable simple-graph values with bitset adjacency.
//!
//! Vertices are dense integers `0..n`. Every operation that "mutates" a graph
//! returns a new value; deletions relabel the surviving vertices by shifting
//! them down, so results are deterministic and directly comparable.

use std::fmt;

use thiserror::Error;

const WORD_BITS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    Loop(usize),
    #[error("paste maps have different lengths ({0} vs {1})")]
    PasteLengthMismatch(usize, usize),
    #[error("paste map image is not injective (vertex {0} repeated)")]
    PasteNotInjective(usize),
    #[error("shared subgraphs disagree: pair ({0}, {1}) is an edge on one side only")]
    PasteEdgeMismatch(usize, usize),
    #[error("edge-list parse error at line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },
}

/// A set of vertices stored as a little-endian word bitset.
///
/// Only bits below `capacity()` may be set; the capacity is fixed at
/// construction and matches the vertex count of the graph the set refers to.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(nbits: usize) -> Self {
        VertexSet {
            nbits,
            words: vec![0; nbits.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut set = VertexSet::new(nbits);
        for v in 0..nbits {
            set.insert(v);
        }
        set
    }

    pub fn from_indices(nbits: usize, indices: &[usize]) -> Self {
        let mut set = VertexSet::new(nbits);
        for &v in indices {
            set.insert(v);
        }
        set
    }

    /// Number of vertices the set ranges over (not the number of members).
    pub fn capacity(&self) -> usize {
        self.nbits
    }

    /// Inserts `v`. Panics if `v` is outside the capacity.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range (< {})", self.nbits);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range (< {})", self.nbits);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.nbits && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and loop-free by construction; once built, a graph
/// can be shared freely across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::full(n)).collect();
        for (v, set) in adj.iter_mut().enumerate() {
            set.remove(v);
        }
        Graph { n, adj }
    }

    /// Builds a graph from an edge list. Duplicate edges are ignored.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Returns a copy of this graph with the edge `{u, v}` present.
    ///
    /// Adding an edge that already exists returns an identical graph.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count, from the handshake sum.
    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// A vertex of minimum degree, lowest index on ties. `None` when `n = 0`.
    pub fn min_degree_vertex(&self) -> Option<usize> {
        (0..self.n).min_by_key(|&v| (self.degree(v), v))
    }

    /// Maximum degree over all vertices. `None` when `n = 0`.
    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// Subgraph induced by the neighbours of `v`, relabelled `0..deg(v)`
    /// in ascending original order.
    pub fn neighbourhood_subgraph(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.induced_subgraph(&self.adj[v]))
    }

    /// Graph with vertex `v` removed; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut keep = VertexSet::full(self.n);
        keep.remove(v);
        Ok(self.induced_subgraph(&keep))
    }

    /// Subgraph induced by `set`, relabelled `0..|set|` in ascending original
    /// order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Self {
        let members: Vec<usize> = set.iter().filter(|&v| v < self.n).collect();
        let k = members.len();
        let mut adj: Vec<VertexSet> = (0..k).map(|_| VertexSet::new(k)).collect();
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph { n: k, adj }
    }

    /// Neighbour row as raw words, for `n <= 64` fast paths.
    pub(crate) fn row_word(&self, v: usize) -> u64 {
        self.adj[v].word(0)
    }

    /// Builds a graph directly from symmetric adjacency words; scan plumbing.
    pub(crate) fn from_word_rows(n: usize, rows: &[u64]) -> Graph {
        debug_assert!(n <= 64 && rows.len() == n);
        let adj = rows
            .iter()
            .enumerate()
            .map(|(v, &row)| {
                debug_assert_eq!(row >> v & 1, 0, "loop at {v}");
                VertexSet {
                    nbits: n,
                    words: vec![row],
                }
            })
            .collect();
        Graph { n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.m(),
            self.edges()
        )
    }
}

/// Identification of a shared induced subgraph between two graphs.
///
/// Index `i` of the shared subgraph corresponds to vertex `into_first[i]` of
/// the first graph and `into_second[i]` of the second. Both maps must be
/// injective, and the two images must induce the same edge set under this
/// correspondence; [`paste`] checks all of that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PasteMap {
    pub into_first: Vec<usize>,
    pub into_second: Vec<usize>,
}

impl PasteMap {
    pub fn new(into_first: Vec<usize>, into_second: Vec<usize>) -> Result<Self, GraphError> {
        if into_first.len() != into_second.len() {
            return Err(GraphError::PasteLengthMismatch(
                into_first.len(),
                into_second.len(),
            ));
        }
        for side in [&into_first, &into_second] {
            let mut seen = std::collections::HashSet::new();
            for &v in side {
                if !seen.insert(v) {
                    return Err(GraphError::PasteNotInjective(v));
                }
            }
        }
        Ok(PasteMap {
            into_first,
            into_second,
        })
    }

    pub fn shared_len(&self) -> usize {
        self.into_first.len()
    }
}

/// Pastes `g1` and `g2` on the shared subgraph described by `map`.
///
/// The result keeps `g1`'s labels; vertices of `g2` outside the shared image
/// are appended in ascending `g2` order. Both inputs embed as induced
/// subgraphs of the result, so `n = n1 + n2 - |S|` and `m = m1 + m2 - m_S`.
pub fn paste(g1: &Graph, g2: &Graph, map: &PasteMap) -> Result<Graph, GraphError> {
    for &u in &map.into_first {
        if u >= g1.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: g1.n(),
            });
        }
    }
    for &u in &map.into_second {
        if u >= g2.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: g2.n(),
            });
        }
    }
    let s = map.shared_len();
    for i in 0..s {
        for j in (i + 1)..s {
            let e1 = g1.has_edge(map.into_first[i], map.into_first[j]);
            let e2 = g2.has_edge(map.into_second[i], map.into_second[j]);
            if e1 != e2 {
                return Err(GraphError::PasteEdgeMismatch(
                    map.into_first[i],
                    map.into_first[j],
                ));
            }
        }
    }

    let n = g1.n() + g2.n() - s;
    // Relabel g2 into the pasted graph: shared vertices land on their g1
    // counterparts, the rest keep ascending order after g1's block.
    let mut relabel = vec![usize::MAX; g2.n()];
    for (i, &v2) in map.into_second.iter().enumerate() {
        relabel[v2] = map.into_first[i];
    }
    let mut next = g1.n();
    for slot in relabel.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }

    let mut g = Graph::empty(n);
    for (u, v) in g1.edges() {
        g.insert_edge(u, v)?;
    }
    for (u, v) in g2.edges() {
        g.insert_edge(relabel[u], relabel[v])?;
    }
    Ok(g)
}

/// Writes the plain text edge-list format: a `"n m"` header line followed by
/// one `"u v"` line per edge with `u < v`, ascending.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list format produced by [`write_edge_list`].
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(GraphError::EdgeListParse {
        line: 1,
        reason: "missing \"n m\" header".into(),
    })?;
    let mut parts = header.split_whitespace();
    let parse_count = |tok: Option<&str>, line: usize| -> Result<usize, GraphError> {
        tok.ok_or(GraphError::EdgeListParse {
            line,
            reason: "expected two integers".into(),
        })?
        .parse()
        .map_err(|e| GraphError::EdgeListParse {
            line,
            reason: format!("bad integer: {e}"),
        })
    };
    let n = parse_count(parts.next(), line)?;
    let m = parse_count(parts.next(), line)?;
    if parts.next().is_some() {
        return Err(GraphError::EdgeListParse {
            line,
            reason: "trailing tokens after \"n m\" header".into(),
        });
    }

    let mut g = Graph::empty(n);
    let mut edges_seen = 0usize;
    for (line, text) in lines {
        let mut parts = text.split_whitespace();
        let u = parse_count(parts.next(), line)?;
        let v = parse_count(parts.next(), line)?;
        if parts.next().is_some() {
            return Err(GraphError::EdgeListParse {
                line,
                reason: "trailing tokens after edge".into(),
            });
        }
        g.insert_edge(u, v)?;
        edges_seen += 1;
    }
    if edges_seen != m || g.m() != m {
        return Err(GraphError::EdgeListParse {
            line: 1,
            reason: format!(
                "header declares {m} edges but {edges_seen} lines / {} distinct edges found",
                g.m()
            ),
        });
    }
    Ok(g)
}
