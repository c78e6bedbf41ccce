//! Loopless multigraphs with stable edge identities.
//!
//! Edges are numbered `0..m` in insertion order and every algorithm in the
//! crate is deterministic in those ids: adjacency lists are kept in edge-id
//! order, Euler circuits always leave a vertex along the lowest unused edge
//! id, and tie-breaks elsewhere follow the same rule. Vertices are plain
//! `usize` indices below `vertex_count()`.
//!
//! The text format is line based:
//!
//! ```text
//! c optional comments
//! p mg <n> <m>
//! e <u> <v>        (exactly m lines, 0 <= u,v < n, u != v)
//! ```
//!
//! Edge ids are assigned in file order. `to_graph_file` emits the canonical
//! form (header plus edge lines, no comments), so `parse(to_graph_file(g))`
//! reproduces `g` exactly.

use crate::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

/// An induced subgraph with vertices and edges renumbered compactly,
/// together with the maps back into the host graph.
#[derive(Clone, Debug)]
pub struct CompactSubgraph {
    pub graph: Multigraph,
    /// new vertex index -> host vertex
    pub vertex_map: Vec<Vertex>,
    /// new edge id -> host edge id
    pub edge_map: Vec<EdgeId>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Multigraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        if u >= self.n || v >= self.n {
            return Err(Error::Precondition(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Precondition(format!("loop at vertex {u} rejected")));
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree exactly `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        match deg.first() {
            None => Some(0),
            Some(&k) => deg.iter().all(|&d| d == k).then_some(k),
        }
    }

    /// Largest number of parallel edges over any vertex pair (0 when edgeless).
    pub fn max_multiplicity(&self) -> usize {
        let mut pairs: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        let mut best = 0;
        let mut run = 0;
        let mut prev = None;
        for p in pairs {
            if Some(p) == prev {
                run += 1;
            } else {
                run = 1;
                prev = Some(p);
            }
            best = best.max(run);
        }
        best
    }

    /// Adjacency lists `(neighbour, edge id)`, each sorted by edge id.
    pub fn adjacency(&self) -> Vec<Vec<(Vertex, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        adj
    }

    /// Vertex sets of the connected components, ordered by smallest member;
    /// isolated vertices form singleton components.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                for &(to, _) in &adj[v] {
                    if !seen[to] {
                        seen[to] = true;
                        comp.push(to);
                        queue.push(to);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Edge ids whose removal disconnects their component, ascending.
    /// Parallel edges are never bridges: only the traversed edge id is
    /// skipped when looking back at the parent.
    pub fn find_bridges(&self) -> Vec<EdgeId> {
        let adj = self.adjacency();
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![usize::MAX; self.n];
        let mut bridges = Vec::new();
        let mut timer = 0;
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            // (vertex, edge we entered through, adjacency cursor)
            let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            while let Some(frame) = stack.last_mut() {
                let (v, pe) = (frame.0, frame.1);
                if frame.2 < adj[v].len() {
                    let (to, eid) = adj[v][frame.2];
                    frame.2 += 1;
                    if Some(eid) == pe {
                        continue;
                    }
                    if disc[to] == usize::MAX {
                        disc[to] = timer;
                        low[to] = timer;
                        timer += 1;
                        stack.push((to, Some(eid), 0));
                    } else {
                        low[v] = low[v].min(disc[to]);
                    }
                } else {
                    let (v, pe, _) = stack.pop().unwrap();
                    if let Some(parent) = stack.last() {
                        let pv = parent.0;
                        low[pv] = low[pv].min(low[v]);
                        if low[v] > disc[pv] {
                            bridges.push(pe.unwrap());
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// Closed Euler circuit as an edge-id sequence. Requires every degree
    /// even and all edges in a single component. The walk starts at the
    /// lowest-index vertex of positive degree and always continues along
    /// the lowest unused edge id, so the result is deterministic.
    pub fn euler_circuit(&self) -> Result<Vec<EdgeId>> {
        let m = self.edges.len();
        if m == 0 {
            return Ok(Vec::new());
        }
        let deg = self.degrees();
        if let Some(v) = (0..self.n).find(|&v| deg[v] % 2 == 1) {
            return Err(Error::Precondition(format!(
                "euler circuit needs all degrees even, vertex {v} has degree {}",
                deg[v]
            )));
        }
        let start = (0..self.n).find(|&v| deg[v] > 0).unwrap();
        let adj = self.adjacency();
        let mut ptr = vec![0usize; self.n];
        let mut used = vec![false; m];
        let mut stack: Vec<(Vertex, Option<EdgeId>)> = vec![(start, None)];
        let mut out = Vec::with_capacity(m);
        while let Some(&(v, _)) = stack.last() {
            let mut advanced = false;
            while ptr[v] < adj[v].len() {
                let (to, eid) = adj[v][ptr[v]];
                ptr[v] += 1;
                if !used[eid] {
                    used[eid] = true;
                    stack.push((to, Some(eid)));
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                let (_, e) = stack.pop().unwrap();
                if let Some(e) = e {
                    out.push(e);
                }
            }
        }
        if out.len() != m {
            return Err(Error::Precondition(
                "euler circuit needs all edges in one connected component".into(),
            ));
        }
        out.reverse();
        Ok(out)
    }

    /// Subgraph on the same vertex set keeping exactly `keep`, which must be
    /// ascending. Returns the graph and the map new edge id -> old edge id
    /// (which is just `keep` copied).
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> (Multigraph, Vec<EdgeId>) {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut g = Multigraph::new(self.n);
        for &e in keep {
            let (u, v) = self.edges[e];
            g.edges.push((u, v));
        }
        (g, keep.to_vec())
    }

    /// Induced subgraph on `vertices` (ascending), with vertices and edges
    /// renumbered compactly. Edges keep their relative id order.
    pub fn induced_compact(&self, vertices: &[Vertex]) -> CompactSubgraph {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            back[v] = i;
        }
        let mut graph = Multigraph::new(vertices.len());
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if back[u] != usize::MAX && back[v] != usize::MAX {
                graph.edges.push((back[u], back[v]));
                edge_map.push(e);
            }
        }
        CompactSubgraph { graph, vertex_map: vertices.to_vec(), edge_map }
    }

    pub fn parse(text: &str) -> Result<Multigraph> {
        let mut graph: Option<Multigraph> = None;
        let mut declared_m = 0usize;
        let mut seen = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('c') {
                continue;
            }
            let toks: Vec<&str> = t.split_whitespace().collect();
            match toks[0] {
                "p" => {
                    if graph.is_some() {
                        return Err(Error::Parse { line, message: "duplicate header".into() });
                    }
                    if toks.len() != 4 || toks[1] != "mg" {
                        return Err(Error::Parse {
                            line,
                            message: "header must be 'p mg <n> <m>'".into(),
                        });
                    }
                    let n = toks[2].parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        message: format!("bad vertex count '{}'", toks[2]),
                    })?;
                    declared_m = toks[3].parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        message: format!("bad edge count '{}'", toks[3]),
                    })?;
                    graph = Some(Multigraph::new(n));
                }
                "e" => {
                    let g = graph.as_mut().ok_or_else(|| Error::Parse {
                        line,
                        message: "edge line before 'p mg' header".into(),
                    })?;
                    if toks.len() != 3 {
                        return Err(Error::Parse {
                            line,
                            message: "edge line must be 'e <u> <v>'".into(),
                        });
                    }
                    if seen == declared_m {
                        return Err(Error::Parse {
                            line,
                            message: format!("more than {declared_m} edge lines"),
                        });
                    }
                    let u = toks[1].parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        message: format!("bad vertex '{}'", toks[1]),
                    })?;
                    let v = toks[2].parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        message: format!("bad vertex '{}'", toks[2]),
                    })?;
                    if u >= g.n || v >= g.n {
                        return Err(Error::Parse {
                            line,
                            message: format!("vertex out of range in 'e {u} {v}'"),
                        });
                    }
                    if u == v {
                        return Err(Error::Parse { line, message: format!("loop 'e {u} {v}'") });
                    }
                    g.edges.push((u, v));
                    seen += 1;
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unrecognised line kind '{other}'"),
                    });
                }
            }
        }
        let g = graph.ok_or(Error::Parse { line: 0, message: "missing 'p mg' header".into() })?;
        if seen != declared_m {
            return Err(Error::Parse {
                line: 0,
                message: format!("expected {declared_m} edges, found {seen}"),
            });
        }
        Ok(g)
    }

    /// Canonical file form: header plus one `e` line per edge in id order.
    pub fn to_graph_file(&self) -> String {
        let mut s = format!("p mg {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("e {u} {v}\n"));
        }
        s
    }
}

/// Two copies of `g` with `target - deg(v)` fresh parallel edges between the
/// copies of each vertex `v`. The result is `target`-regular on `2n`
/// vertices and contains `g` as edges `0..m` verbatim, so any colouring of
/// the double restricts to `g` by truncation.
pub fn regularize_by_doubling(g: &Multigraph, target: usize) -> Result<Multigraph> {
    let deg = g.degrees();
    if deg.iter().any(|&d| d > target) {
        return Err(Error::Precondition(format!(
            "doubling target {target} below maximum degree {}",
            g.max_degree()
        )));
    }
    let n = g.vertex_count();
    let mut h = Multigraph::new(2 * n);
    for &(u, v) in g.edges() {
        h.edges.push((u, v));
    }
    for &(u, v) in g.edges() {
        h.edges.push((u + n, v + n));
    }
    for v in 0..n {
        for _ in deg[v]..target {
            h.edges.push((v, v + n));
        }
    }
    Ok(h)
}

/// Two copies of a regular graph joined by the perfect matching `v -- v'`.
/// Raises the degree by exactly one while keeping the graph regular; `g`
/// sits at edges `0..m` verbatim.
pub fn regularize_by_matching(g: &Multigraph) -> Result<Multigraph> {
    if g.regular_degree().is_none() {
        return Err(Error::Precondition("matching regularisation needs a regular graph".into()));
    }
    let n = g.vertex_count();
    let mut h = Multigraph::new(2 * n);
    for &(u, v) in g.edges() {
        h.edges.push((u, v));
    }
    for &(u, v) in g.edges() {
        h.edges.push((u + n, v + n));
    }
    for v in 0..n {
        h.edges.push((v, v + n));
    }
    Ok(h)
}
