//! Acceptance gate: one test per shipping criterion, so the harness output
//! carries exactly one pass/fail line for each. Tolerances, cutoffs, seeds,
//! and time budgets are pinned here, not configurable.

use decol::bounds;
use decol::colour;
use decol::construct;
use decol::factor;
use decol::graph::Multigraph;
use decol::proper;
use std::time::Instant;

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn odd_bound(delta: usize, d: usize) -> usize {
    if delta == 0 {
        0
    } else {
        ceil_div(3 * delta - 1, 3 * d - 1)
    }
}

/// Criterion 1: the triangle construction is tight. For k in 1..=12 and odd
/// d the constructive colouring uses exactly ceil((3k-1)/(3d-1)) colours,
/// and the exact oracle agrees wherever it fits (up to 24 edges, so k up to
/// 16). Time budget: 60 s.
#[test]
fn criterion_1_shannon_tightness() {
    let start = Instant::now();
    for d in [1usize, 3, 5, 7] {
        for k in 1..=16 {
            let want = odd_bound(k, d);
            let (g, col) = colour::colour_shannon_graph(k, d).unwrap();
            let report = bounds::verify_colouring(&g, col.colours(), d).unwrap();
            assert!(report.valid, "k={k} d={d}");
            if k <= 12 {
                assert_eq!(report.num_colours, want, "constructed count at k={k} d={d}");
            }
            assert!(g.edge_count() <= 24);
            assert_eq!(bounds::exact_chi(&g, d).unwrap(), want, "oracle at k={k} d={d}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget 60 s");
    println!("shannon tightness: constructed and exact counts agree, {elapsed:?}");
}

fn random_regular_suite() -> Vec<Multigraph> {
    let mut suite = Vec::new();
    let mut seed = 0u64;
    while suite.len() < 200 {
        let n = 2 + (seed as usize * 7 + 3) % 11; // 2..=12
        let mut delta = 1 + (seed as usize * 5 + 1) % 13; // 1..=13
        if n * delta % 2 == 1 {
            delta += 1;
        }
        if let Ok(g) = construct::random_regular_multigraph(n, delta, seed) {
            suite.push(g);
        }
        seed += 1;
    }
    suite
}

/// Criterion 2: on 200 seeded random regular multigraphs (n <= 12, degree
/// <= 14 after parity correction) and every defect 1..=7, the constructed
/// colouring verifies and stays within the guaranteed bound. Time budget:
/// 5 minutes.
#[test]
fn criterion_2_upper_bound_on_random_regular_suite() {
    let start = Instant::now();
    let suite = random_regular_suite();
    assert_eq!(suite.len(), 200);
    for (i, g) in suite.iter().enumerate() {
        let delta = g.max_degree();
        for d in 1..=7usize {
            let col = colour::colour_defective(g, d).unwrap();
            let report = bounds::verify_colouring(g, col.colours(), d).unwrap();
            assert!(report.valid, "instance {i} d={d}");
            let budget =
                if d % 2 == 0 { ceil_div(delta, d) } else { odd_bound(delta, d) };
            assert!(
                report.num_colours <= budget,
                "instance {i} d={d}: {} colours, budget {budget}",
                report.num_colours
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}, budget 5 min");
    println!("upper bound held on 200 instances x 7 defects, {elapsed:?}");
}

/// Criterion 3: for even defect the count is not just bounded but exactly
/// the degree bound, on the same 200-instance suite.
#[test]
fn criterion_3_even_defect_equality() {
    for (i, g) in random_regular_suite().iter().enumerate() {
        for d in [2usize, 4, 6] {
            let col = colour::colour_even_defect(g, d).unwrap();
            assert_eq!(
                col.num_colours(),
                bounds::lower_bound_trivial(g, d).unwrap(),
                "instance {i} d={d}"
            );
        }
    }
    println!("even-defect colour count equals the degree bound on all 200 instances");
}

/// Criterion 4: the thick triangle with multiplicities (7, 7, 2). At defect
/// 1 the density bound and the exact value are both 16, one above the
/// degree bound; at defect 3 the density bound is 4 but the exact value
/// is 5, so density alone cannot be tight.
#[test]
fn criterion_4_density_gap_example() {
    let g = construct::goldberg_counterexample();
    assert_eq!(g.max_degree() + 1, 15);
    assert_eq!(bounds::gamma_d(&g, 1).unwrap(), 16);
    assert_eq!(bounds::exact_chi(&g, 1).unwrap(), 16);
    assert_eq!(bounds::gamma_d(&g, 3).unwrap(), 4);
    assert_eq!(bounds::exact_chi(&g, 3).unwrap(), 5);
    println!("degree+1 = 15 < 16 = density = exact at d=1; density 4 < 5 = exact at d=3");
}

/// Criterion 5: on 100 random simple graphs small enough for the oracle,
/// the exact value lands in the two-value window ceil(Delta/d) or
/// ceil((Delta+1)/d) for d in {1,2,3}.
#[test]
fn criterion_5_simple_graph_window() {
    let mut tested = 0usize;
    let mut seed = 0u64;
    while tested < 100 {
        let n = 3 + (seed as usize % 6); // 3..=8
        let p = [0.3, 0.5, 0.7][seed as usize % 3];
        let g = construct::random_simple_graph(n, p, seed);
        seed += 1;
        if g.edge_count() > 24 {
            continue;
        }
        let delta = g.max_degree();
        for d in [1usize, 2, 3] {
            let chi = bounds::exact_chi(&g, d).unwrap();
            let lo = ceil_div(delta, d);
            let hi = ceil_div(delta + 1, d);
            assert!(
                chi == lo || chi == hi,
                "seed {}: exact {chi} outside {{{lo}, {hi}}} at d={d}",
                seed - 1
            );
        }
        tested += 1;
    }
    println!("exact value stayed in the simple-graph window on {tested} instances");
}

/// Criterion 6: the parity threshold for graphs of degree 2d. Odd cycles
/// need 3 colours at d=1 and even ones 2; the 6-regular triangle needs 3 at
/// d=3, while its even-order double cover drops back to 2.
#[test]
fn criterion_6_parity_threshold() {
    let c5 = construct::cycle_graph(5);
    assert_eq!(bounds::exact_chi(&c5, 1).unwrap(), 3);
    assert_eq!(colour::colour_two_d_regular(&c5, 1).unwrap().num_colours(), 3);

    let c6 = construct::cycle_graph(6);
    assert_eq!(bounds::exact_chi(&c6, 1).unwrap(), 2);
    assert_eq!(colour::colour_two_d_regular(&c6, 1).unwrap().num_colours(), 2);

    let sh6 = construct::shannon_graph(6);
    assert_eq!(bounds::exact_chi(&sh6, 3).unwrap(), 3);
    assert_eq!(colour::colour_two_d_regular(&sh6, 3).unwrap().num_colours(), 3);

    let mut cover = Multigraph::new(6);
    for &(u, v) in sh6.edges() {
        cover.add_edge(u, v + 3).unwrap();
        cover.add_edge(v, u + 3).unwrap();
    }
    assert_eq!(cover.regular_degree(), Some(6));
    assert_eq!(cover.vertex_count() % 2, 0);
    assert_eq!(bounds::exact_chi(&cover, 3).unwrap(), 2);
    assert_eq!(colour::colour_two_d_regular(&cover, 3).unwrap().num_colours(), 2);
    println!("odd order forces the third colour; even order gets by with two");
}

/// Criterion 7: forward direction of the hardness reduction. A proper
/// 3-colouring of K_4 expands to a defect-3 colouring of the 882-edge
/// reduction instance with the same 3 colours. The converse is out of
/// oracle range at that size; its load-bearing piece, the gadget whose
/// colour classes are each d-regular, is checked directly.
#[test]
fn criterion_7_reduction_forward_direction() {
    let k4 = construct::complete_graph(4);
    let base_col = proper::vizing_colour(&k4).unwrap();
    let distinct = {
        let mut v = base_col.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    assert_eq!(distinct, 3);

    let (big, witness) = construct::reduction_witness(&k4, &base_col, 3).unwrap();
    assert_eq!(big.vertex_count(), 196);
    assert_eq!(big.edge_count(), 882);
    let report = bounds::verify_colouring(&big, &witness, 3).unwrap();
    assert!(report.valid, "violations: {:?}", report.violations);
    assert_eq!(report.num_colours, 3);

    let (gadget, levels) = construct::gadget_colouring(2, 3).unwrap();
    assert_eq!(gadget.regular_degree(), Some(6));
    for class in 0..2 {
        let ids: Vec<usize> =
            (0..gadget.edge_count()).filter(|&e| levels[e] == class).collect();
        let f = factor::Factor::new(&gadget, ids);
        assert!(f.is_k_regular(3), "gadget class {class} is not 3-regular");
    }
    println!("witness colouring valid with 3 colours on 882 edges; gadget classes 3-regular");
}

/// Exhaustive f-factor feasibility by pruned search, kept independent of
/// the production gadget construction.
fn f_factor_brute(g: &Multigraph, f: &[usize]) -> bool {
    fn go(g: &Multigraph, e: usize, left: &mut Vec<usize>) -> bool {
        if e == g.edge_count() {
            return left.iter().all(|&x| x == 0);
        }
        // remaining edges at each vertex must cover what is left
        let mut remaining = vec![0usize; g.vertex_count()];
        for &(u, v) in &g.edges()[e..] {
            remaining[u] += 1;
            remaining[v] += 1;
        }
        if (0..g.vertex_count()).any(|v| left[v] > remaining[v]) {
            return false;
        }
        let (u, v) = g.endpoints(e);
        if left[u] > 0 && left[v] > 0 {
            left[u] -= 1;
            left[v] -= 1;
            if go(g, e + 1, left) {
                left[u] += 1;
                left[v] += 1;
                return true;
            }
            left[u] += 1;
            left[v] += 1;
        }
        go(g, e + 1, left)
    }
    if f.iter().zip(g.degrees()).any(|(&want, have)| want > have) {
        return false;
    }
    go(g, 0, &mut f.to_vec())
}

/// Criterion 8: the matching-gadget f-factor solver agrees with exhaustive
/// search on 500 random instances of up to 18 edges.
#[test]
fn criterion_8_factor_oracle_equivalence() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(310_000);
    let mut feasible = 0usize;
    for i in 0..500 {
        let n = rng.gen_range(2..=7);
        let m = rng.gen_range(0..=18);
        let mut g = Multigraph::new(n);
        for _ in 0..m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                g.add_edge(u, v).unwrap();
            }
        }
        let degs = g.degrees();
        let f: Vec<usize> = (0..n).map(|v| rng.gen_range(0..=degs[v].min(5))).collect();
        let got = factor::f_factor(&g, &f).unwrap();
        let want = f_factor_brute(&g, &f);
        assert_eq!(got.is_some(), want, "instance {i}: solver and search disagree");
        if let Some(edges) = got {
            let found = factor::Factor::new(&g, edges);
            assert_eq!(found.degrees, f, "instance {i}: wrong degrees");
            feasible += 1;
        }
    }
    assert!(feasible > 50, "suite too degenerate: only {feasible} feasible");
    println!("solver matched exhaustive feasibility on 500 instances ({feasible} feasible)");
}

/// Criterion 9: the asymptotic results (NP-completeness of the general
/// decision problem, list-colouring analogues) are not desk-checkable and
/// are deliberately out of scope; their finite shadows are criteria 7 and
/// 8. This criterion records that scoping decision.
#[test]
fn criterion_9_scope_of_asymptotic_claims() {
    println!("asymptotic claims covered only through their finite instances (criteria 7, 8)");
}
