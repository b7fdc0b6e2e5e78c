//! Closed-form extremal clique bounds, evaluated exactly.
//!
//! Every fractional bound is an exact [`BigRational`]; comparisons against
//! integer clique counts cross-multiply instead of rounding, so there are no
//! tolerances anywhere. Side conditions (`m >= 3`, `m >= C(d,2)`, ...) are
//! errors, never clamps.

use num::bigint::{BigInt, BigUint};
use num::integer::binomial;
use num::rational::BigRational;
use num::{One, Signed};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("m = {m} exceeds the {n}-vertex maximum of binom(n,2) = {max}")]
    TooManyEdges { n: u64, m: u64, max: u64 },
    #[error("m = {m} is below the required minimum of {needed}")]
    TooFewEdges { m: u64, needed: u64 },
    #[error("n = {n} is below the required minimum of {needed}")]
    TooFewVertices { n: u64, needed: u64 },
    #[error("m = {m} exceeds the degree budget delta*n/2 = {delta}*{n}/2")]
    DegreeBudgetExceeded { n: u64, m: u64, delta: u64 },
    #[error("maximum degree must be at least 1")]
    DegreeTooSmall,
    #[error("degeneracy must be at least 1")]
    DegeneracyTooSmall,
    #[error("degeneracy d = {d} exceeds the vertex count n = {n}")]
    DegeneracyExceedsVertices { n: u64, d: u64 },
    #[error("k must be at least 1")]
    KTooSmall,
    #[error("parameter ordering violated: required {0}")]
    OrderingViolated(&'static str),
}

/// `binom(n, 2)` without overflow.
pub fn choose2(n: u64) -> u64 {
    let v = n as u128 * (n as u128 - (n > 0) as u128) / 2;
    u64::try_from(v).expect("binom(n,2) fits u64 for u64 n only up to ~6.07e9")
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn pow2(exp: u64) -> BigUint {
    BigUint::one() << usize::try_from(exp).expect("exponent fits usize")
}

fn ratio_int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn binom_big(n: u64, k: u64) -> BigUint {
    binomial(big(n), big(k))
}

/// The unique split `m = binom(d,2) + ell` with `d >= 1`, `0 <= ell <= d-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeDecomposition {
    pub d: u64,
    pub ell: u64,
}

impl EdgeDecomposition {
    /// Reconstructs the edge count this decomposition came from.
    pub fn edges(&self) -> u64 {
        choose2(self.d) + self.ell
    }
}

/// Splits an edge count as `m = binom(d,2) + ell`.
pub fn decompose_edges(m: u64) -> EdgeDecomposition {
    // d solves binom(d,2) <= m < binom(d+1,2); start near (1+sqrt(1+8m))/2.
    let mut d = (1u128 + 8 * m as u128).isqrt().div_ceil(2) as u64;
    d = d.max(1);
    while choose2(d) > m {
        d -= 1;
    }
    while choose2(d + 1) <= m {
        d += 1;
    }
    debug_assert!(d >= 1 && choose2(d) <= m && m < choose2(d + 1));
    EdgeDecomposition {
        d,
        ell: m - choose2(d),
    }
}

/// Maximum number of cliques in a graph with `n` vertices and `m` edges:
/// `2^d + 2^ell + n - d - 1` with `(d, ell) = decompose_edges(m)`.
pub fn max_cliques_nm(n: u64, m: u64) -> Result<BigUint, BoundError> {
    let max = choose2(n);
    if m > max {
        return Err(BoundError::TooManyEdges { n, m, max });
    }
    let EdgeDecomposition { d, ell } = decompose_edges(m);
    Ok(pow2(d) + pow2(ell) + big(n) - big(d) - BigUint::one())
}

/// Upper bound for graphs with maximum degree at most `delta`:
/// `1 + n + m * (2^{delta+1} - delta - 2) / binom(delta+1, 2)`.
pub fn degree_bound(n: u64, m: u64, delta: u64) -> Result<BigRational, BoundError> {
    if delta < 1 {
        return Err(BoundError::DegreeTooSmall);
    }
    if 2 * m as u128 > delta as u128 * n as u128 {
        return Err(BoundError::DegreeBudgetExceeded { n, m, delta });
    }
    let numer = BigInt::from(pow2(delta + 1) - big(delta) - big(2)) * BigInt::from(m);
    let denom = BigInt::from(choose2(delta + 1));
    Ok(ratio_int(BigInt::from(1 + n as u128)) + BigRational::new(numer, denom))
}

/// Upper bound for `d`-degenerate graphs on `n >= d` vertices: `2^d (n-d+1)`.
pub fn degenerate_bound(n: u64, d: u64) -> Result<BigUint, BoundError> {
    if n < d {
        return Err(BoundError::DegeneracyExceedsVertices { n, d });
    }
    Ok(pow2(d) * big(n - d + 1))
}

/// Edge-sensitive upper bound for `d`-degenerate graphs with `m >= binom(d,2)`
/// edges: `n + (2^d - 1) m / d - ((d-3) 2^d + d + 1) / 2`.
pub fn degenerate_edge_bound(n: u64, m: u64, d: u64) -> Result<BigRational, BoundError> {
    if d < 1 {
        return Err(BoundError::DegeneracyTooSmall);
    }
    let needed = choose2(d);
    if m < needed {
        return Err(BoundError::TooFewEdges { m, needed });
    }
    let p = BigInt::from(pow2(d));
    let edge_term = BigRational::new((&p - BigInt::one()) * BigInt::from(m), BigInt::from(d));
    let constant = BigRational::new(
        (BigInt::from(d) - BigInt::from(3)) * p + BigInt::from(d) + BigInt::one(),
        BigInt::from(2),
    );
    Ok(ratio_int(BigInt::from(n)) + edge_term - constant)
}

/// Checks `d (2^ell - 1) <= ell (2^d - 1)`, which holds for all
/// `d >= ell >= 0`. Exposed as a predicate so tests can sweep it.
pub fn pow2_scaling_inequality_holds(d: u64, ell: u64) -> Result<bool, BoundError> {
    if ell > d {
        return Err(BoundError::OrderingViolated("d >= ell"));
    }
    let lhs = big(d) * (pow2(ell) - BigUint::one());
    let rhs = big(ell) * (pow2(d) - BigUint::one());
    Ok(lhs <= rhs)
}

/// Upper bound for planar graphs with `m >= 3` edges: `n + 7m/3 - 2`.
pub fn planar_bound(n: u64, m: u64) -> Result<BigRational, BoundError> {
    if m < 3 {
        return Err(BoundError::TooFewEdges { m, needed: 3 });
    }
    Ok(
        ratio_int(BigInt::from(n)) + BigRational::new(BigInt::from(7 * m as u128), BigInt::from(3))
            - ratio_int(BigInt::from(2)),
    )
}

/// Maximum triangle and 4-clique counts in a planar graph on `n >= 3`
/// vertices: `(3n - 8, n - 3)`.
pub fn planar_clique_size_bounds(n: u64) -> Result<(BigUint, BigUint), BoundError> {
    if n < 3 {
        return Err(BoundError::TooFewVertices { n, needed: 3 });
    }
    Ok((big(3) * big(n) - big(8), big(n - 3)))
}

/// Upper bound for graphs on `n >= 3` vertices with no `K_5` minor: `8(n-2)`.
pub fn k5_minor_free_bound(n: u64) -> Result<BigUint, BoundError> {
    if n < 3 {
        return Err(BoundError::TooFewVertices { n, needed: 3 });
    }
    Ok(big(8) * big(n - 2))
}

/// Upper bound for graphs on `n >= 3` vertices with no `K_{3,3}` minor:
/// `4(7n - 11)/3`, an integer exactly when `n = 2 (mod 3)`.
pub fn k33_minor_free_bound(n: u64) -> Result<BigRational, BoundError> {
    if n < 3 {
        return Err(BoundError::TooFewVertices { n, needed: 3 });
    }
    Ok(BigRational::new(
        BigInt::from(4) * (BigInt::from(7) * BigInt::from(n) - BigInt::from(11)),
        BigInt::from(3),
    ))
}

/// Maximum number of `ell`-cliques in a graph with `n` vertices and no
/// `(k+1)`-clique: `binom(k, ell) (n/k)^ell`.
pub fn zykov_bound(n: u64, k: u64, ell: u64) -> Result<BigRational, BoundError> {
    if k < 1 {
        return Err(BoundError::KTooSmall);
    }
    if ell > k {
        return Err(BoundError::OrderingViolated("k >= ell"));
    }
    let e = u32::try_from(ell).map_err(|_| BoundError::OrderingViolated("ell fits u32"))?;
    Ok(BigRational::new(
        BigInt::from(binom_big(k, ell) * big(n).pow(e)),
        BigInt::from(big(k).pow(e)),
    ))
}

/// Maximum number of cliques in a graph with `n` vertices and no
/// `(k+1)`-clique: `(n/k + 1)^k`.
pub fn zykov_total_bound(n: u64, k: u64) -> Result<BigRational, BoundError> {
    if k < 1 {
        return Err(BoundError::KTooSmall);
    }
    let e = u32::try_from(k).map_err(|_| BoundError::KTooSmall)?;
    Ok(BigRational::new(
        BigInt::from(big(n + k).pow(e)),
        BigInt::from(big(k).pow(e)),
    ))
}

/// Checks `binom(n, ell) k^ell <= binom(k, ell) n^ell` for `k >= n >= ell`.
pub fn binomial_power_inequality_holds(n: u64, k: u64, ell: u64) -> Result<bool, BoundError> {
    if !(k >= n && n >= ell) {
        return Err(BoundError::OrderingViolated("k >= n >= ell"));
    }
    let e = u32::try_from(ell).map_err(|_| BoundError::OrderingViolated("ell fits u32"))?;
    let lhs = binom_big(n, ell) * big(k).pow(e);
    let rhs = binom_big(k, ell) * big(n).pow(e);
    Ok(lhs <= rhs)
}

/// Exact comparison of the balanced `K_{2,...,2}` clique count `3^k` against
/// the clique-minor-based ceiling `2^{floor(3k/2)-1} (2k - floor(3k/2) + 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenProblemGap {
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub exceeds: bool,
}

/// Evaluates both sides of the open-problem comparison for `k` parts.
pub fn open_problem_gap(k: u64) -> Result<OpenProblemGap, BoundError> {
    if k < 1 {
        return Err(BoundError::KTooSmall);
    }
    let e = u32::try_from(k).map_err(|_| BoundError::KTooSmall)?;
    let lhs = big(3).pow(e);
    let t = 3 * k / 2;
    let rhs = pow2(t - 1) * big(2 * k - t + 2);
    let exceeds = lhs > rhs;
    Ok(OpenProblemGap { lhs, rhs, exceeds })
}

/// Floor of a non-negative rational, as an unsigned big integer.
pub fn rational_floor(value: &BigRational) -> BigUint {
    debug_assert!(!value.is_negative());
    value
        .floor()
        .to_integer()
        .to_biguint()
        .expect("non-negative")
}

/// True when `count <= bound`, compared exactly by cross-multiplication.
pub fn count_within(count: &BigUint, bound: &BigRational) -> bool {
    ratio_int(BigInt::from(count.clone())) <= *bound
}
