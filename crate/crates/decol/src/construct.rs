//! Graph generators: extremal families, reduction gadgets and random
//! instances used by the tests, the examples and the command line tool.

use crate::graph::{Multigraph, Vertex};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Shannon's triangle: three vertices with edge multiplicities as equal as
/// possible, every vertex of degree k except one of degree 2*floor(k/2).
/// Edges come grouped by pair: ceil(k/2) copies of (0,1), then floor(k/2)
/// copies of (1,2), then floor(k/2) copies of (0,2).
pub fn shannon_graph(k: usize) -> Multigraph {
    let mut g = Multigraph::new(3);
    for _ in 0..k.div_ceil(2) {
        g.add_edge(0, 1).unwrap();
    }
    for _ in 0..k / 2 {
        g.add_edge(1, 2).unwrap();
    }
    for _ in 0..k / 2 {
        g.add_edge(0, 2).unwrap();
    }
    g
}

pub fn complete_graph(n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn cycle_graph(n: usize) -> Multigraph {
    assert!(n >= 2, "cycle needs at least two vertices");
    Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// The three-vertex multigraph with multiplicities 7, 7, 2. Its proper
/// chromatic index is 16: one above the clique-style lower bound 15, and
/// with defect 3 it needs 5 colours although the density bound only asks
/// for 4. The standard witness that density lower bounds are not tight.
pub fn goldberg_counterexample() -> Multigraph {
    let mut g = Multigraph::new(3);
    for _ in 0..7 {
        g.add_edge(0, 1).unwrap();
    }
    for _ in 0..7 {
        g.add_edge(1, 2).unwrap();
    }
    for _ in 0..2 {
        g.add_edge(0, 2).unwrap();
    }
    g
}

fn gadget_with_levels(k: usize, d: usize) -> Result<(Multigraph, Vec<usize>)> {
    if k == 0 || d == 0 {
        return Err(Error::Precondition("gadget needs k >= 1 and d >= 1".into()));
    }
    let final_n = (d + 1) << (k - 1);
    if final_n > 1 << 20 {
        return Err(Error::Precondition(format!(
            "gadget on {final_n} vertices refused, keep (d+1)*2^(k-1) at most {}",
            1 << 20
        )));
    }
    let mut g = complete_graph(d + 1);
    let mut level = vec![0usize; g.edge_count()];
    for step in 1..k {
        let p = g.vertex_count();
        let mut next = Multigraph::new(2 * p);
        for &(u, v) in g.edges() {
            next.add_edge(u, v)?;
        }
        for &(u, v) in g.edges() {
            next.add_edge(u + p, v + p)?;
        }
        let mut next_level = level.clone();
        next_level.extend_from_slice(&level);
        for i in 0..p {
            for t in 0..d {
                next.add_edge(i, p + (i + t) % p)?;
                next_level.push(step);
            }
        }
        g = next;
        level = next_level;
    }
    Ok((g, level))
}

/// The doubling gadget: start from the complete graph on d+1 vertices and
/// repeat k-1 times "take two copies, join them by a d-regular circulant".
/// The result is k*d-regular on (d+1)*2^(k-1) vertices and needs exactly k
/// colours at defect d.
pub fn hardness_gadget(k: usize, d: usize) -> Result<Multigraph> {
    Ok(gadget_with_levels(k, d)?.0)
}

/// The gadget together with its canonical k-colouring: every edge is
/// coloured by the construction step that created it. Each colour class is
/// d-regular, so the defect is exactly d everywhere; edge 0 gets colour 0.
pub fn gadget_colouring(k: usize, d: usize) -> Result<(Multigraph, Vec<usize>)> {
    gadget_with_levels(k, d)
}

struct ReductionLayout {
    graph: Multigraph,
    k: usize,
    gadget_edges: usize,
    /// levels of the gadget's edges (shared by every copy)
    gadget_level: Vec<usize>,
    /// one entry per copy, in edge order: (host vertex, copy index per host)
    copies: Vec<(Vertex, usize)>,
}

fn reduction_layout(base: &Multigraph, d: usize) -> Result<ReductionLayout> {
    if d % 2 == 0 || d < 3 {
        return Err(Error::Precondition(format!(
            "the reduction targets odd defect at least 3, got {d}"
        )));
    }
    let Some(k) = base.regular_degree() else {
        return Err(Error::Precondition("reduction base must be regular".into()));
    };
    if k == 0 {
        return Err(Error::Precondition("reduction base must have edges".into()));
    }
    if base.max_multiplicity() > 1 {
        return Err(Error::Precondition("reduction base must be simple".into()));
    }
    let (gadget, gadget_level) = gadget_with_levels(k, d)?;
    let (ga, gb) = gadget.endpoints(0);
    let per_vertex = k * (d - 1) / 2;
    let gn = gadget.vertex_count();

    let n = base.vertex_count();
    let total_vertices = n + n * per_vertex * gn;
    let mut g = Multigraph::new(total_vertices);
    for &(u, v) in base.edges() {
        g.add_edge(u, v)?;
    }
    let mut copies = Vec::new();
    let mut off = n;
    for v in 0..n {
        for i in 0..per_vertex {
            for &(x, y) in &gadget.edges()[1..] {
                g.add_edge(x + off, y + off)?;
            }
            g.add_edge(ga + off, v)?;
            g.add_edge(gb + off, v)?;
            copies.push((v, i));
            off += gn;
        }
    }
    Ok(ReductionLayout { graph: g, k, gadget_edges: gadget.edge_count(), gadget_level, copies })
}

/// Reduction from proper k-edge-colouring of a simple k-regular graph to
/// defect-d colouring with k colours (d odd, at least 3). Every base vertex
/// receives k(d-1)/2 pendant gadget copies, each opened up at its first
/// edge (a,b) and re-closed through the base vertex by the edges (a,v) and
/// (b,v). The result is k*d-regular and admits a defect-d colouring with k
/// colours exactly when the base admits a proper k-colouring.
pub fn np_reduction(base: &Multigraph, d: usize) -> Result<Multigraph> {
    Ok(reduction_layout(base, d)?.graph)
}

/// Turns a proper k-edge-colouring of the reduction base into a defect-d
/// colouring of the reduced graph with the same k colours. Gadget copies
/// are coloured by construction level with colours 0 and c transposed,
/// where c is the copy's re-closing colour.
pub fn reduction_witness(
    base: &Multigraph,
    base_colours: &[usize],
    d: usize,
) -> Result<(Multigraph, Vec<usize>)> {
    let layout = reduction_layout(base, d)?;
    let k = layout.k;
    if base_colours.len() != base.edge_count() {
        return Err(Error::Precondition("base colouring length mismatch".into()));
    }
    if base_colours.iter().any(|&c| c >= k) {
        return Err(Error::Precondition(format!("base colouring must use colours below {k}")));
    }
    let adj = base.adjacency();
    for v in 0..base.vertex_count() {
        let mut seen = vec![false; k];
        for &(_, e) in &adj[v] {
            if seen[base_colours[e]] {
                return Err(Error::Precondition(format!(
                    "base colouring is not proper at vertex {v}"
                )));
            }
            seen[base_colours[e]] = true;
        }
    }

    let mut colours = Vec::with_capacity(layout.graph.edge_count());
    colours.extend_from_slice(base_colours);
    for &(_, i) in &layout.copies {
        let c = (i + 1) % k;
        let swap = |lvl: usize| {
            if lvl == 0 {
                c
            } else if lvl == c {
                0
            } else {
                lvl
            }
        };
        for &lvl in &layout.gadget_level[1..layout.gadget_edges] {
            colours.push(swap(lvl));
        }
        colours.push(c);
        colours.push(c);
    }
    debug_assert_eq!(colours.len(), layout.graph.edge_count());
    Ok((layout.graph, colours))
}

/// Random degree-regular multigraph by matching up degree stubs. Loopless
/// by rejection: a pairing with a loop is thrown away entirely and redrawn.
/// `n * degree` must be even and loops must be avoidable (n >= 2).
pub fn random_regular_multigraph(n: usize, degree: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 || (n * degree) % 2 == 1 {
        return Err(Error::Precondition(format!(
            "no {degree}-regular multigraph on {n} vertices"
        )));
    }
    if degree == 0 {
        return Ok(Multigraph::new(n));
    }
    if n == 1 {
        return Err(Error::Precondition("a single vertex only has loops".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat(v).take(degree)).collect();
    for _attempt in 0..1000 {
        stubs.shuffle(&mut rng);
        if stubs.chunks(2).any(|c| c[0] == c[1]) {
            continue;
        }
        let mut g = Multigraph::new(n);
        for c in stubs.chunks(2) {
            g.add_edge(c[0], c[1])?;
        }
        return Ok(g);
    }
    Err(Error::Precondition(format!(
        "gave up pairing stubs without loops for n={n}, degree={degree}"
    )))
}

/// Erdos-Renyi style random simple graph: each pair independently with
/// probability p, pairs scanned in lexicographic order.
pub fn random_simple_graph(n: usize, p: f64, seed: u64) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Multigraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds;

    #[test]
    fn shannon_shapes() {
        for k in 1..=12 {
            let g = shannon_graph(k);
            assert_eq!(g.edge_count(), 3 * k / 2);
            assert_eq!(g.max_degree(), k);
            let mut deg = g.degrees();
            deg.sort_unstable();
            assert_eq!(deg, vec![2 * (k / 2), k, k]);
            assert_eq!(g.max_multiplicity(), k.div_ceil(2));
        }
        assert_eq!(shannon_graph(6).regular_degree(), Some(6));
        assert_eq!(shannon_graph(0).edge_count(), 0);
    }

    #[test]
    fn goldberg_shape() {
        let g = goldberg_counterexample();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.degrees(), vec![9, 14, 9]);
        assert_eq!(g.max_multiplicity(), 7);
    }

    #[test]
    fn gadget_shapes_and_colouring() {
        let g = hardness_gadget(1, 3).unwrap();
        assert_eq!(g.edges(), complete_graph(4).edges());

        for (k, d) in [(2, 3), (3, 3), (2, 5), (4, 1)] {
            let (g, colours) = gadget_colouring(k, d).unwrap();
            assert_eq!(g.vertex_count(), (d + 1) << (k - 1));
            assert_eq!(g.regular_degree(), Some(k * d));
            assert_eq!(colours.len(), g.edge_count());
            assert_eq!(colours[0], 0);
            assert_eq!(colours.iter().max(), Some(&(k - 1)));
            // every class is d-regular, so the defect is exactly d
            for c in 0..k {
                let mut deg = vec![0usize; g.vertex_count()];
                for (e, &(u, v)) in g.edges().iter().enumerate() {
                    if colours[e] == c {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                assert!(deg.iter().all(|&x| x == d), "class {c} of gadget ({k},{d})");
            }
            assert!(bounds::verify_colouring(&g, &colours, d).unwrap().valid);
        }

        assert!(hardness_gadget(0, 3).is_err());
        assert!(hardness_gadget(30, 3).is_err());
    }

    #[test]
    fn reduction_shape_for_k4() {
        let base = complete_graph(4);
        let g = np_reduction(&base, 3).unwrap();
        assert_eq!(g.vertex_count(), 196);
        assert_eq!(g.edge_count(), 882);
        assert_eq!(g.regular_degree(), Some(9));

        assert!(np_reduction(&base, 2).is_err());
        assert!(np_reduction(&base, 1).is_err());
        assert!(np_reduction(&shannon_graph(4), 3).is_err());
        assert!(np_reduction(&Multigraph::new(3), 3).is_err());
    }

    #[test]
    fn reduction_witness_is_valid() {
        let base = complete_graph(4);
        // one of the three proper 3-colourings of K_4
        let base_colours = vec![0, 1, 2, 2, 1, 0];
        let (g, colours) = reduction_witness(&base, &base_colours, 3).unwrap();
        assert_eq!(colours.len(), g.edge_count());
        assert_eq!(colours.iter().max(), Some(&2));
        let report = bounds::verify_colouring(&g, &colours, 3).unwrap();
        assert!(report.valid, "violations: {:?}", report.violations);

        // improper base colouring is rejected
        let bad = vec![0, 0, 2, 2, 1, 1];
        assert!(reduction_witness(&base, &bad, 3).is_err());
    }

    #[test]
    fn random_regular_is_regular_and_reproducible() {
        for seed in 0..20u64 {
            let g = random_regular_multigraph(6, 5, seed).unwrap();
            assert_eq!(g.regular_degree(), Some(5));
            assert!(g.edges().iter().all(|&(u, v)| u != v));
            assert_eq!(g, random_regular_multigraph(6, 5, seed).unwrap());
        }
        assert!(random_regular_multigraph(5, 3, 0).is_err());
        assert!(random_regular_multigraph(1, 2, 0).is_err());
        assert_eq!(random_regular_multigraph(4, 0, 0).unwrap().edge_count(), 0);
    }

    #[test]
    fn random_simple_is_simple_and_reproducible() {
        let g = random_simple_graph(10, 0.4, 7);
        assert!(g.max_multiplicity() <= 1);
        assert_eq!(g, random_simple_graph(10, 0.4, 7));
        assert_eq!(random_simple_graph(10, 0.0, 7).edge_count(), 0);
        assert_eq!(random_simple_graph(5, 1.0, 7).edge_count(), 10);
    }
}
