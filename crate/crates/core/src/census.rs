//! Exact clique counting.
//!
//! The empty set, every vertex, and every edge all count as cliques. Counting
//! recurses on a minimum-degree vertex `v` (lowest index on ties) through the
//! identity `c(G) = c(G - v) + c(G[N(v)])`: every clique either avoids `v` or
//! is `{v}` together with a clique of the neighbourhood of `v`. Counts are
//! arbitrary-precision; `c(K_n) = 2^n` outgrows fixed width quickly.
//!
//! [`count_cliques_oracle`] is a deliberately independent check: it enumerates
//! all `2^n` vertex subsets and tests pairwise adjacency, sharing no code with
//! the recursion.

use num::bigint::BigUint;
use num::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("oracle budget is n <= {limit}, got n = {n}")]
    OracleBudget { n: usize, limit: usize },
}

const ORACLE_VERTEX_LIMIT: usize = 25;

/// Per-size clique counts `c_0..c_n` plus their sum.
///
/// Invariantly `c_0 = 1`, `c_1 = n`, `c_2 = m`, and the total is at least
/// `1 + n + m` with equality exactly for triangle-free graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCensus {
    counts: Vec<BigUint>,
}

impl CliqueCensus {
    fn new(counts: Vec<BigUint>) -> Self {
        debug_assert!(!counts.is_empty());
        debug_assert_eq!(counts[0], BigUint::one());
        CliqueCensus { counts }
    }

    /// Vertex count of the censused graph.
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    /// Edge count, read off as `c_2`.
    pub fn m(&self) -> BigUint {
        self.count_of(2)
    }

    /// Number of cliques of cardinality exactly `k` (zero beyond `n`).
    pub fn count_of(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_else(BigUint::zero)
    }

    /// All per-size counts `c_0..c_n`.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.count_of(3).is_zero()
    }
}

impl Serialize for CliqueCensus {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // Counts as decimal strings: they exceed every fixed-width JSON number.
        let mut s = serializer.serialize_struct("CliqueCensus", 4)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("m", &self.m().to_string())?;
        let counts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        s.serialize_field("counts", &counts)?;
        s.serialize_field("total", &self.total().to_string())?;
        s.end()
    }
}

/// Exact number of cliques in `g`, the empty clique included.
pub fn count_cliques(g: &Graph) -> BigUint {
    if g.n() <= 64 {
        let rows = word_rows(g);
        let alive = mask_for(g.n());
        BigUint::from(count_masked(&rows, alive))
    } else {
        count_general(g)
    }
}

/// Per-size clique census of `g`.
pub fn clique_census(g: &Graph) -> CliqueCensus {
    let n = g.n();
    let mut counts = vec![BigUint::zero(); n + 1];
    if n <= 64 {
        let rows = word_rows(g);
        let mut acc = vec![0u128; n + 1];
        census_masked(&rows, mask_for(n), 0, &mut acc);
        for (slot, value) in counts.iter_mut().zip(acc) {
            *slot = BigUint::from(value);
        }
    } else {
        census_general(g, 0, &mut counts);
    }
    CliqueCensus::new(counts)
}

/// Census by exhaustive subset enumeration; the independent oracle.
///
/// Budgeted at `n <= 25`: the scan is `O(2^n * n)` word operations.
pub fn count_cliques_oracle(g: &Graph) -> Result<CliqueCensus, CensusError> {
    let n = g.n();
    if n > ORACLE_VERTEX_LIMIT {
        return Err(CensusError::OracleBudget {
            n,
            limit: ORACLE_VERTEX_LIMIT,
        });
    }
    let rows = word_rows(g);
    let mut counts = vec![BigUint::zero(); n + 1];
    for subset in 0..(1u64 << n) {
        if is_clique(&rows, subset) {
            counts[subset.count_ones() as usize] += 1u32;
        }
    }
    Ok(CliqueCensus::new(counts))
}

fn is_clique(rows: &[u64], subset: u64) -> bool {
    let mut rest = subset;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if subset & !(1 << v) & !rows[v] != 0 {
            return false;
        }
    }
    true
}

fn word_rows(g: &Graph) -> Vec<u64> {
    debug_assert!(g.n() <= 64);
    g.vertices().map(|v| g.row_word(v)).collect()
}

fn mask_for(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Picks the branch vertex among `alive`: minimum degree, lowest index.
/// Returns `None` when the induced subgraph is edgeless.
fn branch_vertex(rows: &[u64], alive: u64) -> Option<u32> {
    let mut best: Option<(u32, u32)> = None;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        let deg = (rows[v as usize] & alive).count_ones();
        if deg > 0 && best.is_none_or(|(bd, _)| deg < bd) {
            best = Some((deg, v));
        }
    }
    best.map(|(_, v)| v)
}

fn count_masked(rows: &[u64], alive: u64) -> u128 {
    match branch_vertex(rows, alive) {
        // Edgeless on k vertices: the empty clique plus k singletons.
        None => alive.count_ones() as u128 + 1,
        Some(v) => {
            let bit = 1u64 << v;
            count_masked(rows, alive & !bit) + count_masked(rows, alive & rows[v as usize])
        }
    }
}

/// Accumulates per-size counts; `depth` is how many branch vertices the
/// current cliques already contain.
fn census_masked(rows: &[u64], alive: u64, depth: usize, acc: &mut [u128]) {
    match branch_vertex(rows, alive) {
        None => {
            acc[depth] += 1;
            let singletons = alive.count_ones() as u128;
            if singletons > 0 {
                acc[depth + 1] += singletons;
            }
        }
        Some(v) => {
            let bit = 1u64 << v;
            census_masked(rows, alive & !bit, depth, acc);
            census_masked(rows, alive & rows[v as usize], depth + 1, acc);
        }
    }
}

/// Branch vertex for the general path: minimum positive degree, lowest index.
/// Isolated vertices fold into the edgeless base case.
fn general_branch_vertex(g: &Graph) -> Option<usize> {
    g.vertices()
        .filter(|&v| g.degree(v) > 0)
        .min_by_key(|&v| (g.degree(v), v))
}

fn count_general(g: &Graph) -> BigUint {
    match general_branch_vertex(g) {
        None => BigUint::from(g.n() + 1),
        Some(v) => {
            let rest = g.delete_vertex(v).expect("branch vertex in range");
            let hood = g.neighbourhood_subgraph(v).expect("branch vertex in range");
            count_general(&rest) + count_general(&hood)
        }
    }
}

fn census_general(g: &Graph, depth: usize, acc: &mut [BigUint]) {
    match general_branch_vertex(g) {
        None => {
            acc[depth] += 1u32;
            if g.n() > 0 {
                acc[depth + 1] += g.n();
            }
        }
        Some(v) => {
            let rest = g.delete_vertex(v).expect("branch vertex in range");
            let hood = g.neighbourhood_subgraph(v).expect("branch vertex in range");
            census_general(&rest, depth, acc);
            census_general(&hood, depth + 1, acc);
        }
    }
}
