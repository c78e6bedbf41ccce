//! Factor extraction: pulling degree-constrained spanning subgraphs out of
//! multigraphs.
//!
//! The pieces here are the classical toolkit:
//!
//! * Euler splits: walking a circuit and taking alternate edges halves every
//!   degree, either exactly (even edge count) or up to one excluded edge.
//! * 2-factorisation of even-regular graphs: orient along an Euler circuit,
//!   split the resulting regular bipartite out/in graph into perfect
//!   matchings, pull each matching back to a 2-factor.
//! * f-factors by Tutte's gadget: expand each vertex into one stub per
//!   incident edge plus `deg - f` slack vertices joined completely to the
//!   stubs; perfect matchings of the gadget are exactly the f-factors.
//! * Even k-factors of regular graphs, through a chosen edge when the graph
//!   is 2-edge-connected, and around a single pendant-triangle bridge by an
//!   edge-swap detour when it is not.
//!
//! Everything returns ascending edge-id lists and is deterministic.

use crate::graph::{CompactSubgraph, EdgeId, Multigraph, Vertex};
use crate::matching::maximum_matching;
use crate::{Error, Result};

/// An edge set of a host graph together with its degree vector there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub edges: Vec<EdgeId>,
    pub degrees: Vec<usize>,
}

impl Factor {
    pub fn new(g: &Multigraph, mut edges: Vec<EdgeId>) -> Factor {
        edges.sort_unstable();
        edges.dedup();
        let mut degrees = vec![0; g.vertex_count()];
        for &e in &edges {
            let (u, v) = g.endpoints(e);
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Factor { edges, degrees }
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.degrees.iter().all(|&d| d == k)
    }
}

fn oriented_circuit(g: &Multigraph, circuit: &[EdgeId]) -> Vec<(Vertex, Vertex, EdgeId)> {
    if circuit.is_empty() {
        return Vec::new();
    }
    let deg = g.degrees();
    let mut cur = (0..g.vertex_count()).find(|&v| deg[v] > 0).unwrap();
    circuit
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            let to = if cur == u { v } else { u };
            let step = (cur, to, e);
            cur = to;
            step
        })
        .collect()
}

/// Splits a graph with all degrees even into two halves, each containing
/// exactly half of every vertex's edges. Every connected component must have
/// an even number of edges. Alternate edges of the per-component Euler
/// circuit go to either side.
pub fn euler_split_even(g: &Multigraph) -> Result<(Vec<EdgeId>, Vec<EdgeId>)> {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for comp in g.connected_components() {
        let sub = g.induced_compact(&comp);
        if sub.graph.edge_count() == 0 {
            continue;
        }
        if sub.graph.edge_count() % 2 == 1 {
            return Err(Error::Precondition(format!(
                "even split needs even edge counts per component, component of vertex {} has {}",
                comp[0],
                sub.graph.edge_count()
            )));
        }
        let circuit = sub.graph.euler_circuit()?;
        for (i, &e) in circuit.iter().enumerate() {
            if i % 2 == 0 { &mut a } else { &mut b }.push(sub.edge_map[e]);
        }
    }
    a.sort_unstable();
    b.sort_unstable();
    Ok((a, b))
}

/// Split for a connected graph with all degrees even and an odd number of
/// edges: `skip` is left out and the rest is halved. Both halves have degree
/// at most `ceil(deg/2)` at every vertex; away from the endpoints of `skip`
/// the halves are exact.
pub fn euler_split_odd(g: &Multigraph, skip: EdgeId) -> Result<(Vec<EdgeId>, Vec<EdgeId>)> {
    if g.edge_count() % 2 == 0 {
        return Err(Error::Precondition("odd split called with even edge count".into()));
    }
    if skip >= g.edge_count() {
        return Err(Error::Precondition(format!("skip edge {skip} out of range")));
    }
    let mut circuit = g.euler_circuit()?;
    // Rotate so the skipped edge sits last; the remaining even-length walk
    // alternates cleanly.
    let pos = circuit.iter().position(|&e| e == skip).unwrap();
    circuit.rotate_left(pos + 1);
    debug_assert_eq!(*circuit.last().unwrap(), skip);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, &e) in circuit[..circuit.len() - 1].iter().enumerate() {
        if i % 2 == 0 { &mut a } else { &mut b }.push(e);
    }
    a.sort_unstable();
    b.sort_unstable();
    Ok((a, b))
}

/// Decomposes a 2k-regular multigraph into k spanning 2-factors.
///
/// Per component: an Euler circuit orients every edge, giving a k-regular
/// bipartite graph on out/in copies of the vertices; that graph is split
/// into k perfect matchings (halving along Euler circuits while the degree
/// is even, peeling one matching off when it is odd), and each matching
/// pulls back to a 2-factor.
pub fn petersen_decompose(g: &Multigraph) -> Result<Vec<Vec<EdgeId>>> {
    let Some(deg) = g.regular_degree() else {
        return Err(Error::Precondition("2-factorisation needs a regular graph".into()));
    };
    if deg % 2 == 1 {
        return Err(Error::Precondition(format!(
            "2-factorisation needs an even degree, got {deg}"
        )));
    }
    let k = deg / 2;
    let mut classes: Vec<Vec<EdgeId>> = vec![Vec::new(); k];
    for comp in g.connected_components() {
        let sub = g.induced_compact(&comp);
        if sub.graph.edge_count() == 0 {
            continue;
        }
        let p = sub.graph.vertex_count();
        let circuit = sub.graph.euler_circuit()?;
        let mut bip = Multigraph::new(2 * p);
        // bip edge id i corresponds to the i-th circuit step; remember which
        // local edge that was.
        let mut tag = Vec::with_capacity(circuit.len());
        for (from, to, e) in oriented_circuit(&sub.graph, &circuit) {
            bip.add_edge(from, p + to)?;
            tag.push(e);
        }
        let matchings = split_regular_bipartite(&bip, k)?;
        debug_assert_eq!(matchings.len(), k);
        for (i, m) in matchings.into_iter().enumerate() {
            classes[i].extend(m.into_iter().map(|bip_e| sub.edge_map[tag[bip_e]]));
        }
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    Ok(classes)
}

/// Splits an r-regular bipartite multigraph into r perfect matchings
/// (edge id lists). Halve along Euler circuits while r is even; when r is
/// odd, peel one perfect matching off and recurse on the rest.
fn split_regular_bipartite(bip: &Multigraph, r: usize) -> Result<Vec<Vec<EdgeId>>> {
    if r == 0 {
        return Ok(Vec::new());
    }
    if r == 1 {
        return Ok(vec![(0..bip.edge_count()).collect()]);
    }
    if r % 2 == 0 {
        let (a, b) = euler_split_even(bip)?;
        let (ga, map_a) = bip.edge_subgraph(&a);
        let (gb, map_b) = bip.edge_subgraph(&b);
        let mut out = Vec::with_capacity(r);
        for m in split_regular_bipartite(&ga, r / 2)? {
            out.push(m.into_iter().map(|e| map_a[e]).collect());
        }
        for m in split_regular_bipartite(&gb, r / 2)? {
            out.push(m.into_iter().map(|e| map_b[e]).collect());
        }
        Ok(out)
    } else {
        let mate = maximum_matching(bip);
        if mate.iter().any(|m| m.is_none()) {
            return Err(Error::InternalContradiction(
                "regular bipartite graph has no perfect matching".into(),
            ));
        }
        let mut picked = vec![false; bip.edge_count()];
        let mut matching = Vec::new();
        for u in 0..bip.vertex_count() {
            let v = mate[u].unwrap();
            if u < v {
                let e = bip
                    .edges()
                    .iter()
                    .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
                    .expect("matched pair must be an edge");
                picked[e] = true;
                matching.push(e);
            }
        }
        let rest: Vec<EdgeId> = (0..bip.edge_count()).filter(|&e| !picked[e]).collect();
        let (gr, map_r) = bip.edge_subgraph(&rest);
        let mut out = vec![matching];
        for m in split_regular_bipartite(&gr, r - 1)? {
            out.push(m.into_iter().map(|e| map_r[e]).collect());
        }
        Ok(out)
    }
}

/// Spanning subgraph with degree exactly `f[v]` at every vertex, or `None`
/// when no such subgraph exists. Requires `f[v] <= deg(v)`.
///
/// Tutte's gadget: vertex v becomes deg(v) stubs (one per incident edge)
/// plus `deg(v) - f[v]` slack vertices joined to all of v's stubs; each
/// graph edge joins its two stubs. Perfect matchings of the gadget
/// correspond exactly to f-factors: the factor is the set of edges whose
/// stub pair is matched together.
pub fn f_factor(g: &Multigraph, f: &[usize]) -> Result<Option<Vec<EdgeId>>> {
    let n = g.vertex_count();
    if f.len() != n {
        return Err(Error::Precondition(format!(
            "degree target list has length {}, graph has {n} vertices",
            f.len()
        )));
    }
    let deg = g.degrees();
    for v in 0..n {
        if f[v] > deg[v] {
            return Err(Error::Precondition(format!(
                "degree target {} at vertex {v} exceeds its degree {}",
                f[v], deg[v]
            )));
        }
    }
    if f.iter().sum::<usize>() % 2 == 1 {
        return Ok(None);
    }

    let adj = g.adjacency();
    // Stub layout: vertex v's stubs sit at stub_base[v] + j, where j indexes
    // v's incident edges in ascending edge-id order. Slacks follow all stubs.
    let mut stub_base = vec![0usize; n];
    for v in 1..n {
        stub_base[v] = stub_base[v - 1] + deg[v - 1];
    }
    let total_stubs = 2 * g.edge_count();
    let mut slack_base = vec![0usize; n];
    let mut next = total_stubs;
    for v in 0..n {
        slack_base[v] = next;
        next += deg[v] - f[v];
    }
    let mut gadget = Multigraph::new(next);

    // Stub of vertex v for edge e.
    let stub = |v: Vertex, e: EdgeId| -> Vertex {
        let j = adj[v].iter().position(|&(_, eid)| eid == e).unwrap();
        stub_base[v] + j
    };

    for (e, &(u, v)) in g.edges().iter().enumerate() {
        gadget.add_edge(stub(u, e), stub(v, e))?;
    }
    for v in 0..n {
        for j in 0..deg[v] {
            for s in 0..(deg[v] - f[v]) {
                gadget.add_edge(stub_base[v] + j, slack_base[v] + s)?;
            }
        }
    }

    let mate = maximum_matching(&gadget);
    if mate.iter().any(|m| m.is_none()) {
        return Ok(None);
    }
    let factor: Vec<EdgeId> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(e, &(u, v))| mate[stub(u, e)] == Some(stub(v, e)))
        .map(|(e, _)| e)
        .collect();
    debug_assert!({
        let got = Factor::new(g, factor.clone()).degrees;
        got == f
    });
    Ok(Some(factor))
}

/// k-factor through the edge `e` of a 2-edge-connected Delta-regular
/// multigraph, for even k with 3k <= 2*Delta. Such a factor always exists
/// under these preconditions; the search deletes `e`, asks for degree k-1
/// at its endpoints and k elsewhere, and puts `e` back.
pub fn k_factor_containing(g: &Multigraph, k: usize, e: EdgeId) -> Result<Vec<EdgeId>> {
    let delta = validate_k_factor_request(g, k)?;
    if e >= g.edge_count() {
        return Err(Error::Precondition(format!("edge {e} out of range")));
    }
    if g.connected_components().len() != 1 || !g.find_bridges().is_empty() {
        return Err(Error::Precondition(
            "k-factor through an edge needs a 2-edge-connected graph".into(),
        ));
    }
    let _ = delta;
    let keep: Vec<EdgeId> = (0..g.edge_count()).filter(|&x| x != e).collect();
    let (h, map) = g.edge_subgraph(&keep);
    let (x, y) = g.endpoints(e);
    let mut f = vec![k; g.vertex_count()];
    f[x] = k - 1;
    f[y] = k - 1;
    match f_factor(&h, &f)? {
        Some(sub) => {
            let mut out: Vec<EdgeId> = sub.into_iter().map(|i| map[i]).collect();
            out.push(e);
            out.sort_unstable();
            Ok(out)
        }
        None => Err(Error::InternalContradiction(format!(
            "no {k}-factor through edge {e} of a 2-edge-connected {delta}-regular graph"
        ))),
    }
}

fn validate_k_factor_request(g: &Multigraph, k: usize) -> Result<usize> {
    let Some(delta) = g.regular_degree() else {
        return Err(Error::Precondition("k-factor extraction needs a regular graph".into()));
    };
    if k == 0 || k % 2 == 1 {
        return Err(Error::Precondition(format!("factor degree must be even and positive, got {k}")));
    }
    if 3 * k > 2 * delta {
        return Err(Error::Precondition(format!(
            "factor degree {k} too large for degree {delta}: need 3k <= 2*degree"
        )));
    }
    Ok(delta)
}

/// k-factor of a connected Delta-regular multigraph, for even k with
/// 3k <= 2*Delta. Handles three shapes:
///
/// * Delta even: the graph is automatically bridgeless; group k/2 of the
///   2-factors from the Euler/bipartite decomposition.
/// * Delta odd, bridgeless: a direct degree-k subgraph search, which the
///   preconditions guarantee succeeds.
/// * Delta odd with exactly one bridge whose one side is a triangle on
///   three vertices (the only bridge shape a regular graph admits once both
///   sides smaller than four vertices are ruled out elsewhere): swap two
///   edges across the cut to make the graph 2-edge-connected, extract a
///   factor through one swapped edge, and swap back. A parity count over
///   the cut shows exactly one of the doubled bridge edges lies in the
///   factor, so the swap-back always restores degrees.
pub fn k_factor(g: &Multigraph, k: usize) -> Result<Vec<EdgeId>> {
    let delta = validate_k_factor_request(g, k)?;
    if g.connected_components().len() != 1 {
        return Err(Error::Precondition("k-factor extraction needs a connected graph".into()));
    }
    if delta % 2 == 0 {
        let classes = petersen_decompose(g)?;
        let mut out: Vec<EdgeId> = classes[..k / 2].iter().flatten().copied().collect();
        out.sort_unstable();
        return Ok(out);
    }
    let bridges = g.find_bridges();
    if bridges.is_empty() {
        return match f_factor(g, &vec![k; g.vertex_count()])? {
            Some(out) => Ok(out),
            None => Err(Error::InternalContradiction(format!(
                "no {k}-factor in a 2-edge-connected {delta}-regular graph"
            ))),
        };
    }
    if bridges.len() > 1 {
        return Err(Error::Precondition(format!(
            "k-factor extraction handles at most one bridge, found {}",
            bridges.len()
        )));
    }
    let bridge = bridges[0];
    let (bu, bv) = g.endpoints(bridge);
    let keep: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| e != bridge).collect();
    let (split, _) = g.edge_subgraph(&keep);
    let comps = split.connected_components();
    let side_of = |v: Vertex| comps.iter().find(|c| c.contains(&v)).unwrap().clone();
    let (u, v, side_b) = {
        let su = side_of(bu);
        let sv = side_of(bv);
        if sv.len() == 3 {
            (bu, bv, sv)
        } else if su.len() == 3 {
            (bv, bu, su)
        } else {
            return Err(Error::Precondition(
                "bridge in k-factor extraction must have a 3-vertex side".into(),
            ));
        }
    };
    let others: Vec<Vertex> = side_b.iter().copied().filter(|&x| x != v).collect();

    // Candidate neighbours y of u across the main side, lowest edge id first.
    let mut ys = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if e == bridge {
            continue;
        }
        let y = if a == u {
            b
        } else if b == u {
            a
        } else {
            continue;
        };
        if !ys.contains(&y) {
            ys.push(y);
        }
        let _ = e;
    }

    for &y in &ys {
        for &w in &others {
            let Some(swap) = try_bridge_swap(g, k, bridge, u, v, y, w)? else { continue };
            return Ok(swap);
        }
    }
    Err(Error::InternalContradiction(
        "edge swap around the bridge never produced a 2-edge-connected graph".into(),
    ))
}

/// One attempt of the bridge detour: remove an edge uy and an edge vw, add
/// a second bridge copy uv and the edge yw, extract a k-factor through yw,
/// then undo the swap inside the factor. Returns Ok(None) when this (y, w)
/// pair fails to make the graph 2-edge-connected.
fn try_bridge_swap(
    g: &Multigraph,
    k: usize,
    bridge: EdgeId,
    u: Vertex,
    v: Vertex,
    y: Vertex,
    w: Vertex,
) -> Result<Option<Vec<EdgeId>>> {
    let find_edge = |a: Vertex, b: Vertex| -> Option<EdgeId> {
        g.edges()
            .iter()
            .position(|&(x, z)| (x, z) == (a, b) || (x, z) == (b, a))
    };
    let uy = find_edge(u, y).unwrap();
    let Some(vw) = find_edge(v, w) else { return Ok(None) };

    let mut swapped = Multigraph::new(g.vertex_count());
    let mut back = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if e == uy || e == vw {
            continue;
        }
        swapped.add_edge(a, b)?;
        back.push(e);
    }
    let extra_uv = swapped.add_edge(u, v)?;
    let yw = swapped.add_edge(y, w)?;

    if swapped.connected_components().len() != 1 || !swapped.find_bridges().is_empty() {
        return Ok(None);
    }
    let f = k_factor_containing(&swapped, k, yw)?;

    let mut out = Vec::with_capacity(f.len());
    let mut uv_edges = 0usize;
    for e in f {
        if e == yw {
            continue;
        }
        if e == extra_uv || back[e] == bridge {
            uv_edges += 1;
            continue;
        }
        out.push(back[e]);
    }
    if uv_edges != 1 {
        return Err(Error::InternalContradiction(format!(
            "bridge parity violated: {uv_edges} doubled bridge edges in the factor"
        )));
    }
    out.push(uy);
    out.push(vw);
    out.sort_unstable();
    let fac = Factor::new(g, out);
    if !fac.is_k_regular(k) {
        return Err(Error::InternalContradiction(
            "bridge swap produced a non-regular factor".into(),
        ));
    }
    Ok(Some(fac.edges))
}

/// Convenience: compact subgraph on a component together with a factor check.
pub(crate) fn component_subgraphs(g: &Multigraph) -> Vec<CompactSubgraph> {
    g.connected_components().into_iter().map(|c| g.induced_compact(&c)).collect()
}
