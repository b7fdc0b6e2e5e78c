//! Acceptance suite: one test per shipped guarantee. Every check is exact
//! (integer or rational equality); there are no tolerances anywhere. Each
//! test prints a PASS/FAIL line, visible with `--nocapture`.
//!
//! Run with:
//!
//! ```text
//! cargo test -p clique-extremal --test acceptance -- --nocapture
//! ```

use std::time::{Duration, Instant};

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use clique_extremal::analysis::{
    hadwiger_multipartite, hadwiger_number, is_planar, max_matching_bruteforce,
    multipartite_reduced_matching, sitton_matching, MinorSearchBudget,
};
use clique_extremal::bounds::{
    binomial_power_inequality_holds, choose2, decompose_edges, degenerate_bound,
    degenerate_edge_bound, degree_bound, k33_minor_free_bound, max_cliques_nm, open_problem_gap,
    planar_bound, pow2_scaling_inequality_holds, zykov_total_bound, EdgeDecomposition,
};
use clique_extremal::census::{clique_census, count_cliques, count_cliques_oracle};
use clique_extremal::construct::{
    construct_degenerate_extremal, construct_degree_extremal, construct_dtree,
    construct_extremal_nm, construct_k5_chain, construct_multipartite, construct_planar_extremal,
    construct_stacked_planar, construct_v8,
};
use clique_extremal::graph::{paste, Graph, PasteMap, VertexSet};
use clique_extremal::verify::{
    verify_class_bound, verify_nm_tightness, verify_planar_census, verify_zykov, GraphClass,
};

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn brat(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn outcome(name: &str, ok: bool, detail: &str) -> bool {
    println!("{}: {name} — {detail}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g = g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// All partitions (non-increasing part lists) of every total `1..=n`.
fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn rec(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 1..=n {
        rec(total, total, &mut Vec::new(), &mut out);
    }
    out
}

#[test]
fn criterion_01_extremal_nm_14_31_golden() {
    let start = Instant::now();
    let g = construct_extremal_nm(14, 31).unwrap();
    let count = count_cliques(&g);
    let formula = max_cliques_nm(14, 31).unwrap();
    let split = decompose_edges(31);
    let elapsed = start.elapsed();

    let ok = g.m() == 31
        && count == big(269)
        && formula == big(269)
        && split == EdgeDecomposition { d: 8, ell: 3 }
        && elapsed < Duration::from_secs(1);
    assert!(
        outcome(
            "extremal (14,31) golden",
            ok,
            &format!(
                "m={}, cliques={count}, formula={formula}, (d,ell)=({},{}), {:?}",
                g.m(),
                split.d,
                split.ell,
                elapsed
            ),
        ),
        "expected 31 edges, 269 cliques, split (8,3) within 1s"
    );
}

#[test]
fn criterion_02_stacked_planar_124_golden() {
    let start = Instant::now();
    let g = construct_stacked_planar(124).unwrap();
    let census = clique_census(&g);
    let elapsed = start.elapsed();

    let total = census.total();
    let bound = planar_bound(124, 366).unwrap();
    let ok = g.m() == 366
        && census.count_of(3) == big(364)
        && census.count_of(4) == big(121)
        && total == big(976)
        && bound == brat(976)
        && big(8 * 122) == big(976)
        && elapsed < Duration::from_secs(5);
    assert!(
        outcome(
            "stacked planar n=124 golden",
            ok,
            &format!(
                "m={}, c3={}, c4={}, total={total}, bound={bound}, {elapsed:?}",
                g.m(),
                census.count_of(3),
                census.count_of(4)
            ),
        ),
        "expected (m, c3, c4, c) = (366, 364, 121, 976) within 5s"
    );
}

#[test]
fn criterion_03_v8_golden() {
    let budget = MinorSearchBudget::default();
    let g = construct_v8();
    let census = clique_census(&g);
    let eta = hadwiger_number(&g, &budget).unwrap();
    let planar = is_planar(&g, &budget).unwrap();

    let ok = census.is_triangle_free() && census.total() == big(21) && eta == 4 && !planar;
    assert!(
        outcome(
            "Wagner graph golden",
            ok,
            &format!(
                "triangle-free={}, cliques={}, hadwiger={eta}, planar={planar}",
                census.is_triangle_free(),
                census.total()
            ),
        ),
        "expected triangle-free, 21 cliques, Hadwiger 4, nonplanar"
    );
}

#[test]
fn criterion_04_k5_pasting_chain() {
    let k5_count = count_cliques(&Graph::complete(5));
    let k5_bound = k33_minor_free_bound(5).unwrap();
    let mut ok = k5_count == big(32) && k5_bound == brat(32);
    let mut details = format!("c(K_5)={k5_count}={k5_bound}");
    for (n, expected) in [(8u64, 60u64), (11, 88)] {
        let chain = construct_k5_chain(n).unwrap();
        let count = count_cliques(&chain);
        let bound = k33_minor_free_bound(n).unwrap();
        ok &= count == big(expected) && bound == brat(expected);
        details.push_str(&format!(", chain({n})={count} vs {bound}"));
    }
    assert!(
        outcome("K_5 / K_{3,3}-free chain", ok, &details),
        "expected 32, 60, 88 matching 4(7n-11)/3"
    );
}

#[test]
fn criterion_05_nm_tightness_exhaustive() {
    // Scanning 2^21 labeled graphs at n=7; forced onto a single worker.
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let start = Instant::now();
    let mut ok = true;
    let mut details = String::new();
    pool.install(|| {
        for n in 0..=7usize {
            let reports = verify_nm_tightness(n).unwrap();
            let all_match = reports.iter().all(|r| r.matches && r.tight);
            let scanned: u64 = reports.iter().map(|r| r.graphs_scanned).sum();
            let complete = scanned == 1u64 << choose2(n as u64);
            ok &= all_match && complete;
            if n == 7 {
                details = format!("n=7 scanned {scanned} graphs in {} reports", reports.len());
            }
        }
    });
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(300);
    assert!(
        outcome(
            "exhaustive (n,m) tightness, n <= 7",
            ok,
            &format!("{details}, single-threaded in {elapsed:?}"),
        ),
        "expected every m to match for all n <= 7 within 5 minutes"
    );
}

#[test]
fn criterion_06_class_bounds_exhaustive_n6() {
    let budget = MinorSearchBudget::default();
    let start = Instant::now();
    let mut ok = true;
    let mut details = String::new();

    // Planar edge bound and planar census ceilings.
    let planar = verify_class_bound(6, GraphClass::Planar, &budget).unwrap();
    ok &= planar.iter().all(|r| r.matches);
    let census = verify_planar_census(6, &budget).unwrap();
    ok &= census.iter().all(|r| r.matches);
    ok &= census[0].observed_max == big(10) && census[1].observed_max == big(3);
    details.push_str(&format!(
        "planar: {} reports, census maxima ({}, {})",
        planar.len(),
        census[0].observed_max,
        census[1].observed_max
    ));

    // Degenerate classes d in {1,2,3}: both the flat and edge-sensitive bounds.
    for d in 1..=3usize {
        let reports = verify_class_bound(6, GraphClass::Degenerate(d), &budget).unwrap();
        ok &= reports.iter().all(|r| r.matches);
        if d == 2 {
            ok &= reports[0].observed_max == big(20);
        }
    }

    // Bounded degree delta in {2,3}.
    for delta in 2..=3usize {
        let reports = verify_class_bound(6, GraphClass::MaxDegree(delta), &budget).unwrap();
        ok &= reports.iter().all(|r| r.matches);
    }

    // Excluded minors.
    let k5free = verify_class_bound(6, GraphClass::K5MinorFree, &budget).unwrap();
    ok &= k5free.iter().all(|r| r.matches) && k5free[0].observed_max == big(32);
    let k33free = verify_class_bound(6, GraphClass::K33MinorFree, &budget).unwrap();
    ok &= k33free.iter().all(|r| r.matches);
    details.push_str(&format!(
        "; k5-free max {}, k33-free max {}",
        k5free[0].observed_max, k33free[0].observed_max
    ));

    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(900);
    assert!(
        outcome(
            "exhaustive class bounds at n=6",
            ok,
            &format!("{details}, {elapsed:?}")
        ),
        "expected every class report to match within 15 minutes"
    );
}

#[test]
fn criterion_07_zykov_maxima() {
    let reports = verify_zykov(6, 3).unwrap();
    let per_ell: Vec<BigUint> = reports[..4]
        .iter()
        .map(|r| r.observed_max.clone())
        .collect();
    let total = &reports[4].observed_max;
    let expected = [big(1), big(6), big(12), big(8)];
    let k222 = count_cliques(&construct_multipartite(&[2, 2, 2]).unwrap());

    let ok = reports.iter().all(|r| r.matches && r.tight)
        && per_ell == expected
        && *total == big(27)
        && zykov_total_bound(6, 3).unwrap() == brat(27)
        && k222 == big(27);
    assert!(
        outcome(
            "clique-size maxima over K_4-free graphs (n=6)",
            ok,
            &format!("c_l maxima {per_ell:?}, total {total}, K_{{2,2,2}} attains {k222}"),
        ),
        "expected maxima (1, 6, 12, 8) and total 27"
    );
}

#[test]
fn criterion_08_multipartite_hadwiger_equivalence() {
    let budget = MinorSearchBudget::default();
    let mut ok = true;
    let mut checked = 0usize;
    for parts in partitions(10) {
        let formula = hadwiger_multipartite(&parts).unwrap();
        let brute = hadwiger_number(&construct_multipartite(&parts).unwrap(), &budget).unwrap();
        if formula != brute as u64 {
            ok = false;
            println!("  mismatch at {parts:?}: formula {formula}, brute {brute}");
        }

        let reduced: Vec<u64> = parts.iter().map(|p| p - 1).filter(|&p| p > 0).collect();
        let reduced_graph = if reduced.is_empty() {
            Graph::empty(0)
        } else {
            construct_multipartite(&reduced).unwrap()
        };
        let matching = max_matching_bruteforce(&reduced_graph).unwrap() as u64;
        if sitton_matching(&reduced) != matching
            || multipartite_reduced_matching(&parts) != matching
        {
            ok = false;
            println!("  matching mismatch at {parts:?}");
        }
        checked += 1;
    }
    let eta = hadwiger_multipartite(&[2, 2, 2, 2]).unwrap();
    ok &= eta == 6 && 6 == (3 * 4) / 2;
    assert!(
        outcome(
            "multipartite Hadwiger equivalence, n <= 10",
            ok,
            &format!("{checked} part-vectors checked, eta(K_{{2,2,2,2}})={eta}"),
        ),
        "expected formula = brute force on every part-vector"
    );
}

#[test]
fn criterion_09_open_problem_threshold() {
    // As stated: exceeds is false for k <= 41 and true for 42 <= k <= 100.
    // The high half holds. The low half is contradicted by exact arithmetic:
    // the literal expression 2^{floor(3k/2)-1} (2k - floor(3k/2) + 2) is
    // already exceeded by 3^k at odd k = 33, 35, 37, 39, 41.
    let mut low_counterexamples = Vec::new();
    for k in 1..=41u64 {
        if open_problem_gap(k).unwrap().exceeds {
            low_counterexamples.push(k);
        }
    }
    let mut high_failures = Vec::new();
    for k in 42..=100u64 {
        if !open_problem_gap(k).unwrap().exceeds {
            high_failures.push(k);
        }
    }
    let ok = low_counterexamples.is_empty() && high_failures.is_empty();
    outcome(
        "open-problem threshold arithmetic",
        ok,
        &format!(
            "true for all 42..=100: {}; false for all k <= 41: {} (exceeds already at k = {low_counterexamples:?})",
            high_failures.is_empty(),
            low_counterexamples.is_empty()
        ),
    );
    assert!(
        high_failures.is_empty(),
        "3^k must exceed the ceiling for every 42 <= k <= 100"
    );
    assert!(
        low_counterexamples.is_empty(),
        "stated criterion: exceeds = false for all k <= 41; exact evaluation disagrees at k = {low_counterexamples:?}"
    );
}

#[test]
fn criterion_10_identity_and_oracle_properties() {
    let mut rng = StdRng::seed_from_u64(0xC11_9E5);
    let mut ok = true;

    // Vertex-deletion identity on 10,000 randomized instances.
    for _ in 0..10_000 {
        let n = rng.random_range(1..=12);
        let p = rng.random_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let v = rng.random_range(0..n);
        let whole = count_cliques(&g);
        let split = count_cliques(&g.delete_vertex(v).unwrap())
            + count_cliques(&g.neighbourhood_subgraph(v).unwrap());
        ok &= whole == split;
    }

    // Pasting identity on 10,000 randomized instances.
    for _ in 0..10_000 {
        let n1 = rng.random_range(1..=8);
        let g1 = random_graph(&mut rng, n1, 0.5);
        let s = rng.random_range(0..=n1.min(4));
        let mut vertices1: Vec<usize> = (0..n1).collect();
        vertices1.shuffle(&mut rng);
        let sigma1: Vec<usize> = vertices1[..s].to_vec();

        let n2 = rng.random_range(s.max(1)..=8);
        let mut vertices2: Vec<usize> = (0..n2).collect();
        vertices2.shuffle(&mut rng);
        let sigma2: Vec<usize> = vertices2[..s].to_vec();

        // Copy the shared edges, then sprinkle random edges elsewhere.
        let mut g2 = Graph::empty(n2);
        for i in 0..s {
            for j in (i + 1)..s {
                if g1.has_edge(sigma1[i], sigma1[j]) {
                    g2 = g2.add_edge(sigma2[i], sigma2[j]).unwrap();
                }
            }
        }
        for u in 0..n2 {
            for v in (u + 1)..n2 {
                let both_shared = sigma2.contains(&u) && sigma2.contains(&v);
                if !both_shared && rng.random_bool(0.5) {
                    g2 = g2.add_edge(u, v).unwrap();
                }
            }
        }

        let map = PasteMap::new(sigma1.clone(), sigma2).unwrap();
        let pasted = paste(&g1, &g2, &map).unwrap();
        let shared = g1.induced_subgraph(&VertexSet::from_indices(n1, &sigma1));
        ok &= pasted.n() == g1.n() + g2.n() - shared.n();
        ok &= pasted.m() == g1.m() + g2.m() - shared.m();
        let lhs = count_cliques(&pasted) + count_cliques(&shared);
        let rhs = count_cliques(&g1) + count_cliques(&g2);
        ok &= lhs == rhs;
    }

    // Inequality sweeps at their stated ranges.
    for d in 0..=64 {
        for ell in 0..=d {
            ok &= pow2_scaling_inequality_holds(d, ell).unwrap();
        }
    }
    for k in 0..=40u64 {
        for n in 0..=k {
            for ell in 0..=n {
                ok &= binomial_power_inequality_holds(n, k, ell).unwrap();
            }
        }
    }

    // Oracle equivalence: exhaustive for n <= 6, randomized for n <= 12.
    for n in 0..=6usize {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1 << slots.len()) {
            let edges = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            ok &= clique_census(&g) == count_cliques_oracle(&g).unwrap();
        }
    }
    for _ in 0..1000 {
        let n = rng.random_range(7..=12);
        let p = rng.random_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        ok &= clique_census(&g) == count_cliques_oracle(&g).unwrap();
    }

    assert!(
        outcome(
            "deletion/pasting identities, inequality sweeps, oracle equivalence",
            ok,
            "10,000 + 10,000 randomized identities, exhaustive n <= 6 oracle, 1,000 random n <= 12",
        ),
        "every identity must hold exactly"
    );
}

#[test]
fn criterion_11_attainment_full_grid() {
    let mut ok = true;
    let mut cases = 0usize;
    let mut check = |label: &str, g: &Graph, expected: &BigRational| {
        let count = count_cliques(g);
        let as_rational = BigRational::from_integer(BigInt::from(count.clone()));
        if as_rational != *expected {
            ok = false;
            println!("  attainment failure: {label}: counted {count}, formula {expected}");
        }
        cases += 1;
    };

    for n in 0..=20u64 {
        for m in 0..=choose2(n) {
            let formula =
                brat(0) + BigRational::from_integer(BigInt::from(max_cliques_nm(n, m).unwrap()));
            check(
                &format!("nm({n},{m})"),
                &construct_extremal_nm(n, m).unwrap(),
                &formula,
            );
        }
    }

    for delta in 1..=19u64 {
        let block = choose2(delta + 1);
        for n in 0..=20u64 {
            for p in 0..=(n / (delta + 1)) {
                let m = p * block;
                let formula = degree_bound(n, m, delta).unwrap();
                check(
                    &format!("degree({n},{m},{delta})"),
                    &construct_degree_extremal(n, m, delta).unwrap(),
                    &formula,
                );
            }
        }
    }

    for n in 0..=20u64 {
        for d in 0..=n {
            let formula = BigRational::from_integer(BigInt::from(degenerate_bound(n, d).unwrap()));
            check(
                &format!("dtree({n},{d})"),
                &construct_dtree(n, d).unwrap(),
                &formula,
            );
        }
    }

    for d in 1..=19u64 {
        for n in d..=20u64 {
            let lo = choose2(d);
            let hi = d * n - choose2(d + 1);
            let residue = if d % 2 == 0 { d / 2 } else { 0 };
            for m in lo..=hi {
                if m % d != residue {
                    continue;
                }
                let formula = degenerate_edge_bound(n, m, d).unwrap();
                check(
                    &format!("degenerate({n},{m},{d})"),
                    &construct_degenerate_extremal(n, m, d).unwrap(),
                    &formula,
                );
            }
        }
    }

    for n in 3..=20u64 {
        let formula = brat(8 * (n - 2));
        check(
            &format!("stacked({n})"),
            &construct_stacked_planar(n).unwrap(),
            &formula,
        );
        for m in (3..=(3 * n - 6)).step_by(3) {
            let formula = planar_bound(n, m).unwrap();
            check(
                &format!("planar({n},{m})"),
                &construct_planar_extremal(n, m).unwrap(),
                &formula,
            );
        }
    }

    check("v8", &construct_v8(), &brat(21));

    for n in [5u64, 8, 11, 14, 17, 20] {
        let formula = k33_minor_free_bound(n).unwrap();
        check(
            &format!("k5-chain({n})"),
            &construct_k5_chain(n).unwrap(),
            &formula,
        );
    }

    for parts in partitions(20) {
        let expected = parts
            .iter()
            .map(|&p| BigUint::from(p + 1))
            .product::<BigUint>();
        check(
            &format!("multipartite({parts:?})"),
            &construct_multipartite(&parts).unwrap(),
            &BigRational::from_integer(BigInt::from(expected)),
        );
    }

    assert!(
        outcome(
            "attainment across every generator grid, n <= 20",
            ok,
            &format!("{cases} generator instances all equal their formula value"),
        ),
        "every generated graph must attain its bound exactly"
    );
}
