//! Maximum matching in general graphs (Edmonds' blossom algorithm).
//!
//! The factor extractor reduces degree-constrained subgraph problems to
//! perfect matchings in an auxiliary simple graph, so this is the workhorse
//! underneath everything that pulls factors apart. The implementation is the
//! classic array-based O(n^3) formulation: alternating BFS from each exposed
//! vertex, blossom contraction by rebasing, path flipping on success.
//!
//! Determinism: the greedy initial matching scans edges in ascending id
//! order, and BFS scans neighbours in adjacency order (again edge id order),
//! so equal-size matchings always come out identically for a given graph.

use crate::graph::{Multigraph, Vertex};

/// Maximum matching as `mate[v] = Some(u)` / `None` for exposed vertices.
pub fn maximum_matching(g: &Multigraph) -> Vec<Option<Vertex>> {
    let n = g.vertex_count();
    let adj: Vec<Vec<Vertex>> = g
        .adjacency()
        .into_iter()
        .map(|row| row.into_iter().map(|(to, _)| to).collect())
        .collect();

    let mut mate: Vec<Option<Vertex>> = vec![None; n];
    // Greedy seed: take every edge whose endpoints are both still exposed.
    for &(u, v) in g.edges() {
        if u != v && mate[u].is_none() && mate[v].is_none() {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
    }

    let mut p: Vec<Option<Vertex>> = vec![None; n];
    let mut base: Vec<Vertex> = (0..n).collect();
    let mut q: Vec<Vertex> = Vec::new();
    let mut used = vec![false; n];
    let mut blossom = vec![false; n];

    fn lca(
        base: &[Vertex],
        mate: &[Option<Vertex>],
        p: &[Option<Vertex>],
        mut a: Vertex,
        mut b: Vertex,
        n: usize,
    ) -> Vertex {
        let mut marked = vec![false; n];
        loop {
            a = base[a];
            marked[a] = true;
            let Some(m) = mate[a] else { break };
            match p[m] {
                Some(next) => a = next,
                None => break,
            }
        }
        loop {
            b = base[b];
            if marked[b] {
                return b;
            }
            b = p[mate[b].unwrap()].unwrap();
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn mark_path(
        base: &[Vertex],
        mate: &[Option<Vertex>],
        p: &mut [Option<Vertex>],
        blossom: &mut [bool],
        mut v: Vertex,
        b: Vertex,
        mut child: Vertex,
    ) {
        while base[v] != b {
            blossom[base[v]] = true;
            let m = mate[v].unwrap();
            blossom[base[m]] = true;
            p[v] = Some(child);
            child = m;
            v = p[m].unwrap();
        }
    }

    // One alternating BFS from `root`; returns the far end of an augmenting
    // path, or n when none exists.
    let bfs = |root: Vertex,
               mate: &mut Vec<Option<Vertex>>,
               p: &mut Vec<Option<Vertex>>,
               base: &mut Vec<Vertex>,
               q: &mut Vec<Vertex>,
               used: &mut Vec<bool>,
               blossom: &mut Vec<bool>|
     -> Option<Vertex> {
        used.iter_mut().for_each(|x| *x = false);
        p.iter_mut().for_each(|x| *x = None);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        used[root] = true;
        q.clear();
        q.push(root);
        let mut head = 0;
        while head < q.len() {
            let v = q[head];
            head += 1;
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == Some(to) {
                    continue;
                }
                if to == root || mate[to].is_some_and(|m| p[m].is_some()) {
                    // Odd cycle: contract the blossom through the lca.
                    let cur = lca(base, mate, p, v, to, base.len());
                    blossom.iter_mut().for_each(|x| *x = false);
                    mark_path(base, mate, p, blossom, v, cur, to);
                    mark_path(base, mate, p, blossom, to, cur, v);
                    for i in 0..base.len() {
                        if blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if p[to].is_none() {
                    p[to] = Some(v);
                    match mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            used[m] = true;
                            q.push(m);
                        }
                    }
                }
            }
        }
        None
    };

    for root in 0..n {
        if mate[root].is_some() {
            continue;
        }
        if let Some(mut v) =
            bfs(root, &mut mate, &mut p, &mut base, &mut q, &mut used, &mut blossom)
        {
            // Flip matched/unmatched along the augmenting path back to root.
            while let Some(pv) = p[v] {
                let ppv = mate[pv];
                mate[v] = Some(pv);
                mate[pv] = Some(v);
                match ppv {
                    Some(next) => v = next,
                    None => break,
                }
            }
        }
    }
    mate
}

/// Matching size (number of matched pairs).
pub fn matching_size(mate: &[Option<Vertex>]) -> usize {
    mate.iter().flatten().count() / 2
}
