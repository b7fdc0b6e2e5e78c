//! Deterministic generators for the extremal graph families.
//!
//! Every generator attains its bound exactly: the clique count of the output
//! equals the corresponding closed form from [`crate::bounds`]. Vertex
//! orderings, seed cliques, face choices, and pasting edges are all fixed so
//! the outputs are byte-stable across runs.

use thiserror::Error;

use crate::bounds::{choose2, decompose_edges};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("m = {m} exceeds the {n}-vertex maximum of binom(n,2) = {max}")]
    TooManyEdges { n: u64, m: u64, max: u64 },
    #[error("m = {m} outside the valid range {lo}..={hi}")]
    EdgesOutOfRange { m: u64, lo: u64, hi: u64 },
    #[error("m = {m} fails the residue condition m = {want} (mod {modulus})")]
    BadResidue { m: u64, want: u64, modulus: u64 },
    #[error("n = {n} is below the required minimum of {needed}")]
    TooFewVertices { n: u64, needed: u64 },
    #[error("degeneracy d = {d} exceeds the vertex count n = {n}")]
    DegeneracyExceedsVertices { n: u64, d: u64 },
    #[error("maximum degree must be at least 1")]
    DegreeTooSmall,
    #[error("degeneracy must be at least 1")]
    DegeneracyTooSmall,
    #[error("colour class {index} is empty")]
    EmptyPart { index: usize },
}

fn u(v: u64) -> usize {
    usize::try_from(v).expect("construction size fits usize")
}

/// The extremal `(n, m)`-graph: `K_d` on the first `d` vertices, one vertex
/// adjacent to the first `ell` of them, the rest isolated.
pub fn construct_extremal_nm(n: u64, m: u64) -> Result<Graph, ConstructError> {
    let max = choose2(n);
    if m > max {
        return Err(ConstructError::TooManyEdges { n, m, max });
    }
    let dec = decompose_edges(m);
    let (d, ell) = (u(dec.d), u(dec.ell));
    let mut g = Graph::empty(u(n));
    if m == max {
        // d = n here; the attachment vertex does not exist.
        return Ok(Graph::complete(u(n)));
    }
    for i in 0..d {
        for j in (i + 1)..d {
            g = g.add_edge(i, j).expect("in range");
        }
    }
    for i in 0..ell {
        g = g.add_edge(i, d).expect("in range");
    }
    Ok(g)
}

/// `p = m / binom(delta+1, 2)` disjoint copies of `K_{delta+1}` plus isolated
/// vertices; extremal among graphs with maximum degree `delta`.
pub fn construct_degree_extremal(n: u64, m: u64, delta: u64) -> Result<Graph, ConstructError> {
    if delta < 1 {
        return Err(ConstructError::DegreeTooSmall);
    }
    let block = choose2(delta + 1);
    if !m.is_multiple_of(block) {
        return Err(ConstructError::BadResidue {
            m,
            want: 0,
            modulus: block,
        });
    }
    if 2 * m as u128 > delta as u128 * n as u128 {
        return Err(ConstructError::EdgesOutOfRange {
            m,
            lo: 0,
            hi: (delta as u128 * n as u128 / 2) as u64,
        });
    }
    let p = u(m / block);
    let size = u(delta) + 1;
    let mut g = Graph::empty(u(n));
    for copy in 0..p {
        let base = copy * size;
        for i in 0..size {
            for j in (i + 1)..size {
                g = g
                    .add_edge(base + i, base + j)
                    .expect("degree budget implies room");
            }
        }
    }
    Ok(g)
}

/// A `d`-tree on `n` vertices: `K_d`, then each new vertex joined to the
/// `d` most recently added vertices of the previous seed clique.
pub fn construct_dtree(n: u64, d: u64) -> Result<Graph, ConstructError> {
    if n < d {
        return Err(ConstructError::DegeneracyExceedsVertices { n, d });
    }
    let (n, d) = (u(n), u(d));
    let mut g = Graph::empty(n);
    for i in 0..d {
        for j in (i + 1)..d {
            g = g.add_edge(i, j).expect("in range");
        }
    }
    // Seed = the previous seed minus its oldest member plus the new vertex,
    // i.e. always the d most recent vertices. For d = 2 this produces the
    // outerplanar strip.
    for v in d..n {
        for w in (v - d)..v {
            g = g.add_edge(w, v).expect("in range");
        }
    }
    Ok(g)
}

/// A `d`-tree on `n' = m/d + (d+1)/2` vertices plus isolated vertices;
/// extremal among `d`-degenerate graphs with `m` edges.
pub fn construct_degenerate_extremal(n: u64, m: u64, d: u64) -> Result<Graph, ConstructError> {
    if d < 1 {
        return Err(ConstructError::DegeneracyTooSmall);
    }
    let lo = choose2(d);
    let hi = (d as u128 * n as u128).saturating_sub(choose2(d + 1) as u128) as u64;
    if m < lo || m > hi {
        return Err(ConstructError::EdgesOutOfRange { m, lo, hi });
    }
    let want = if d.is_multiple_of(2) { d / 2 } else { 0 };
    if m % d != want {
        return Err(ConstructError::BadResidue {
            m,
            want,
            modulus: d,
        });
    }
    // n' = m/d + (d+1)/2 is an integer exactly under the residue condition.
    let n_prime = (2 * m + d * (d + 1)) / (2 * d);
    debug_assert!(d <= n_prime && n_prime <= n);
    let core = construct_dtree(n_prime, d)?;
    let mut g = Graph::empty(u(n));
    for (a, b) in core.edges() {
        g = g.add_edge(a, b).expect("in range");
    }
    Ok(g)
}

/// Maximal planar graph built from `K_3` by repeatedly inserting a degree-3
/// vertex into the oldest unsplit face (FIFO), so insertion sweeps whole
/// rounds of faces.
pub fn construct_stacked_planar(n: u64) -> Result<Graph, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooFewVertices { n, needed: 3 });
    }
    let n = u(n);
    let mut g = Graph::complete(3);
    // Faces tracked combinatorially as vertex triples; no embedding needed.
    let mut faces = std::collections::VecDeque::from([(0usize, 1usize, 2usize)]);
    for v in 3..n {
        let (a, b, c) = faces.pop_front().expect("face queue never empties");
        let mut bigger = Graph::empty(v + 1);
        for (x, y) in g.edges() {
            bigger = bigger.add_edge(x, y).expect("in range");
        }
        for w in [a, b, c] {
            bigger = bigger.add_edge(w, v).expect("in range");
        }
        g = bigger;
        faces.push_back((a, b, v));
        faces.push_back((a, c, v));
        faces.push_back((b, c, v));
    }
    Ok(g)
}

/// Stacked planar graph on `n' = m/3 + 2` vertices plus isolated vertices;
/// extremal among planar graphs with `m` edges.
pub fn construct_planar_extremal(n: u64, m: u64) -> Result<Graph, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooFewVertices { n, needed: 3 });
    }
    if !m.is_multiple_of(3) {
        return Err(ConstructError::BadResidue {
            m,
            want: 0,
            modulus: 3,
        });
    }
    if m < 3 || m > 3 * n - 6 {
        return Err(ConstructError::EdgesOutOfRange {
            m,
            lo: 3,
            hi: 3 * n - 6,
        });
    }
    let core = construct_stacked_planar(m / 3 + 2)?;
    let mut g = Graph::empty(u(n));
    for (a, b) in core.edges() {
        g = g.add_edge(a, b).expect("in range");
    }
    Ok(g)
}

/// The Wagner graph: an 8-cycle plus all four antipodal chords. Triangle-free,
/// nonplanar, and without a `K_5` minor.
pub fn construct_v8() -> Graph {
    let mut g = Graph::empty(8);
    for v in 0..8 {
        g = g.add_edge(v, (v + 1) % 8).expect("in range");
    }
    for v in 0..4 {
        g = g.add_edge(v, v + 4).expect("in range");
    }
    g
}

/// Copies of `K_5` pasted in a chain, each sharing the edge formed by the two
/// newest vertices of the previous copy. Requires `n = 2 (mod 3)`, `n >= 5`.
pub fn construct_k5_chain(n: u64) -> Result<Graph, ConstructError> {
    if n < 5 {
        return Err(ConstructError::TooFewVertices { n, needed: 5 });
    }
    if n % 3 != 2 {
        return Err(ConstructError::BadResidue {
            m: n,
            want: 2,
            modulus: 3,
        });
    }
    let n = u(n);
    let mut g = Graph::empty(n);
    for i in 0..5 {
        for j in (i + 1)..5 {
            g = g.add_edge(i, j).expect("in range");
        }
    }
    let mut shared = (3usize, 4usize);
    let mut next = 5usize;
    while next < n {
        let fresh = [next, next + 1, next + 2];
        let copy = [shared.0, shared.1, fresh[0], fresh[1], fresh[2]];
        for i in 0..5 {
            for j in (i + 1)..5 {
                g = g.add_edge(copy[i], copy[j]).expect("in range");
            }
        }
        shared = (fresh[1], fresh[2]);
        next += 3;
    }
    Ok(g)
}

/// Complete multipartite graph with the given colour-class sizes; every class
/// must be non-empty. `c(G) = prod (n_i + 1)`.
pub fn construct_multipartite(parts: &[u64]) -> Result<Graph, ConstructError> {
    for (index, &p) in parts.iter().enumerate() {
        if p == 0 {
            return Err(ConstructError::EmptyPart { index });
        }
    }
    let n: u64 = parts.iter().sum();
    let mut g = Graph::empty(u(n));
    let mut starts = Vec::with_capacity(parts.len() + 1);
    let mut acc = 0usize;
    for &p in parts {
        starts.push(acc);
        acc += u(p);
    }
    starts.push(acc);
    for a in 0..parts.len() {
        for b in (a + 1)..parts.len() {
            for i in starts[a]..starts[a + 1] {
                for j in starts[b]..starts[b + 1] {
                    g = g.add_edge(i, j).expect("in range");
                }
            }
        }
    }
    Ok(g)
}
