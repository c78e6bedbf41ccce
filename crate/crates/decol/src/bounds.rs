//! Verification and bounds for defect-d edge colourings.
//!
//! A colouring assigns every edge a colour; it is valid at defect d when no
//! vertex sees more than d edges of any one colour. The bounds here are:
//!
//! * trivial lower bound ceil(Delta/d): some vertex has Delta edges and each
//!   colour absorbs at most d of them;
//! * density lower bound: a connected vertex set X spans m(X) edges, and
//!   each colour class restricted to X has at most floor(d*|X|/2) edges, so
//!   ceil(m(X) / floor(d*|X|/2)) colours are forced. `gamma_d` maximises
//!   this over all connected subsets by exhaustive enumeration, so it is
//!   exponential and guarded by a vertex-count cutoff;
//! * multiplicity upper bound ceil((Delta + mu)/d);
//! * the defect version of Shannon's bound: ceil(Delta/d) for even d,
//!   ceil((3*Delta - 1)/(3*d - 1)) for odd d (for d = 1 this is the classic
//!   floor(3*Delta/2));
//! * an exact oracle: iterative deepening over the number of colours with a
//!   backtracking search, feasible for small edge counts only.

use crate::graph::{Multigraph, Vertex};
use crate::{ceil_div, Error, Result};
use rand::{Rng, SeedableRng};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: Vertex,
    pub colour: usize,
    pub count: usize,
}

#[derive(Clone, Debug)]
pub struct ColouringReport {
    pub valid: bool,
    /// distinct colours appearing on edges
    pub num_colours: usize,
    pub violations: Vec<Violation>,
}

pub fn verify_colouring(g: &Multigraph, colours: &[usize], d: usize) -> Result<ColouringReport> {
    if d == 0 {
        return Err(Error::Precondition("defect must be at least 1".into()));
    }
    if colours.len() != g.edge_count() {
        return Err(Error::Precondition(format!(
            "colouring has {} entries, graph has {} edges",
            colours.len(),
            g.edge_count()
        )));
    }
    let mut distinct: Vec<usize> = colours.to_vec();
    distinct.sort_unstable();
    distinct.dedup();

    // counts[v] maps colour -> number of incident edges of that colour
    let mut counts: Vec<std::collections::HashMap<usize, usize>> =
        vec![std::collections::HashMap::new(); g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        *counts[u].entry(colours[e]).or_insert(0) += 1;
        *counts[v].entry(colours[e]).or_insert(0) += 1;
    }
    let mut violations = Vec::new();
    for (v, map) in counts.iter().enumerate() {
        let mut over: Vec<Violation> = map
            .iter()
            .filter(|&(_, &c)| c > d)
            .map(|(&colour, &count)| Violation { vertex: v, colour, count })
            .collect();
        over.sort_by_key(|x| x.colour);
        violations.extend(over);
    }
    Ok(ColouringReport { valid: violations.is_empty(), num_colours: distinct.len(), violations })
}

pub fn lower_bound_trivial(g: &Multigraph, d: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::Precondition("defect must be at least 1".into()));
    }
    Ok(ceil_div(g.max_degree(), d))
}

pub const GAMMA_DEFAULT_CUTOFF: usize = 20;

/// Density lower bound, maximised over all connected vertex sets of size at
/// least two. Exhaustive, so refused above `max_vertices`.
pub fn gamma_d_with_cutoff(g: &Multigraph, d: usize, max_vertices: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::Precondition("defect must be at least 1".into()));
    }
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(Error::CutoffExceeded(format!(
            "density bound enumerates connected subsets, refused for {n} > {max_vertices} vertices"
        )));
    }
    let mut mult = vec![vec![0usize; n]; n];
    for &(u, v) in g.edges() {
        mult[u][v] += 1;
        mult[v][u] += 1;
    }
    let adj: Vec<Vec<Vertex>> = (0..n)
        .map(|u| (0..n).filter(|&v| mult[u][v] > 0 && v != u).collect())
        .collect();

    // Enumerates every connected subset with a fixed minimum (anchor) vertex
    // exactly once: repeatedly take the first frontier vertex and branch on
    // "in the set forever" versus "banned forever". A leaf (empty frontier)
    // is reached once per connected subset.
    struct Enum<'a> {
        mult: &'a [Vec<usize>],
        adj: &'a [Vec<Vertex>],
        d: usize,
        best: usize,
    }
    impl Enum<'_> {
        fn leaf(&mut self, set: &[Vertex], edges: usize) {
            if set.len() >= 2 {
                let cap = self.d * set.len() / 2;
                self.best = self.best.max(ceil_div(edges, cap));
            }
        }
        fn go(&mut self, anchor: Vertex, set: &mut Vec<Vertex>, in_set: &mut [bool], banned: &mut [bool], edges: usize) {
            let next = set
                .iter()
                .flat_map(|&v| self.adj[v].iter().copied())
                .find(|&v| v > anchor && !in_set[v] && !banned[v]);
            let Some(c) = next else {
                self.leaf(set, edges);
                return;
            };
            let gained: usize = set.iter().map(|&v| self.mult[v][c]).sum();
            in_set[c] = true;
            set.push(c);
            self.go(anchor, set, in_set, banned, edges + gained);
            set.pop();
            in_set[c] = false;
            banned[c] = true;
            self.go(anchor, set, in_set, banned, edges);
            banned[c] = false;
        }
    }

    let mut e = Enum { mult: &mult, adj: &adj, d, best: 0 };
    let mut in_set = vec![false; n];
    let mut banned = vec![false; n];
    for anchor in 0..n {
        in_set[anchor] = true;
        e.go(anchor, &mut vec![anchor], &mut in_set, &mut banned, 0);
        in_set[anchor] = false;
    }
    Ok(e.best)
}

pub fn gamma_d(g: &Multigraph, d: usize) -> Result<usize> {
    gamma_d_with_cutoff(g, d, GAMMA_DEFAULT_CUTOFF)
}

/// Randomised variant for graphs too large to enumerate: grows `samples`
/// random connected subsets and keeps the best density bound seen, also
/// trying every full component. A lower bound on `gamma_d`, not exact.
pub fn gamma_d_sampled(g: &Multigraph, d: usize, samples: usize, seed: u64) -> Result<usize> {
    if d == 0 {
        return Err(Error::Precondition("defect must be at least 1".into()));
    }
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut best = 0;

    let edges_within = |in_set: &[bool]| -> usize {
        g.edges().iter().filter(|&&(u, v)| in_set[u] && in_set[v]).count()
    };
    let score = |size: usize, edges: usize| -> usize {
        if size < 2 {
            return 0;
        }
        ceil_div(edges, d * size / 2)
    };

    for comp in g.connected_components() {
        let mut in_set = vec![false; n];
        for &v in &comp {
            in_set[v] = true;
        }
        best = best.max(score(comp.len(), edges_within(&in_set)));
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        if n < 2 {
            break;
        }
        let start = rng.gen_range(0..n);
        let target = rng.gen_range(2..=n);
        let mut in_set = vec![false; n];
        in_set[start] = true;
        let mut members = vec![start];
        let mut frontier: Vec<Vertex> = adj[start].iter().map(|&(v, _)| v).collect();
        while members.len() < target {
            frontier.retain(|&v| !in_set[v]);
            frontier.sort_unstable();
            frontier.dedup();
            if frontier.is_empty() {
                break;
            }
            let v = frontier[rng.gen_range(0..frontier.len())];
            in_set[v] = true;
            members.push(v);
            frontier.extend(adj[v].iter().map(|&(w, _)| w));
        }
        best = best.max(score(members.len(), edges_within(&in_set)));
    }
    Ok(best)
}

pub fn upper_bound_multiplicity(g: &Multigraph, d: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::Precondition("defect must be at least 1".into()));
    }
    if g.edge_count() == 0 {
        return Ok(0);
    }
    Ok(ceil_div(g.max_degree() + g.max_multiplicity(), d))
}

/// The number of colours the constructive colouring guarantees: exact for
/// even defect, Shannon-style for odd defect.
pub fn upper_bound_defective(g: &Multigraph, d: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::Precondition("defect must be at least 1".into()));
    }
    let delta = g.max_degree();
    if delta == 0 {
        return Ok(0);
    }
    Ok(if d % 2 == 0 { ceil_div(delta, d) } else { ceil_div(3 * delta - 1, 3 * d - 1) })
}

pub const EXACT_DEFAULT_CUTOFF: usize = 24;

/// Exact defect-d chromatic index by iterative deepening over the number of
/// colours, starting at the best cheap lower bound. The per-target search
/// backtracks over edges in id order with two symmetry breaks that keep it
/// complete: a fresh colour must be the lowest unused index, and parallel
/// edges get non-decreasing colours. Refused above `max_edges`.
pub fn exact_chi_with_cutoff(g: &Multigraph, d: usize, max_edges: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::Precondition("defect must be at least 1".into()));
    }
    let m = g.edge_count();
    if m > max_edges {
        return Err(Error::CutoffExceeded(format!(
            "exact search refused for {m} > {max_edges} edges"
        )));
    }
    if m == 0 {
        return Ok(0);
    }
    let mut lower = lower_bound_trivial(g, d)?;
    if let Ok(gamma) = gamma_d(g, d) {
        lower = lower.max(gamma);
    }
    for k in lower..=m {
        if colourable_with(g, d, k) {
            return Ok(k);
        }
    }
    // every edge in its own class always works, so this is unreachable
    Err(Error::InternalContradiction("no colour count up to the edge count worked".into()))
}

pub fn exact_chi(g: &Multigraph, d: usize) -> Result<usize> {
    exact_chi_with_cutoff(g, d, EXACT_DEFAULT_CUTOFF)
}

fn colourable_with(g: &Multigraph, d: usize, k: usize) -> bool {
    if k == 0 {
        return g.edge_count() == 0;
    }
    let m = g.edge_count();
    let n = g.vertex_count();
    // previous edge in the same parallel class, if any
    let mut prev_parallel = vec![usize::MAX; m];
    for e in 0..m {
        let (u, v) = g.endpoints(e);
        let key = (u.min(v), u.max(v));
        for f in (0..e).rev() {
            let (x, y) = g.endpoints(f);
            if (x.min(y), x.max(y)) == key {
                prev_parallel[e] = f;
                break;
            }
        }
    }
    let mut counts = vec![vec![0usize; k]; n];
    let mut chosen = vec![0usize; m];

    fn go(
        g: &Multigraph,
        d: usize,
        k: usize,
        prev_parallel: &[usize],
        counts: &mut Vec<Vec<usize>>,
        chosen: &mut Vec<usize>,
        e: usize,
        used: usize,
    ) -> bool {
        if e == g.edge_count() {
            return true;
        }
        let (u, v) = g.endpoints(e);
        let lo = if prev_parallel[e] == usize::MAX { 0 } else { chosen[prev_parallel[e]] };
        let hi = used.min(k - 1);
        for c in lo..=hi {
            if counts[u][c] < d && counts[v][c] < d {
                counts[u][c] += 1;
                counts[v][c] += 1;
                chosen[e] = c;
                let next_used = if c == used { used + 1 } else { used };
                if go(g, d, k, prev_parallel, counts, chosen, e + 1, next_used) {
                    return true;
                }
                counts[u][c] -= 1;
                counts[v][c] -= 1;
            }
        }
        false
    }
    go(g, d, k, &prev_parallel, &mut counts, &mut chosen, 0, 0)
}

/// All bounds for one graph in one sweep, with `None` where a cutoff bit.
#[derive(Clone, Debug)]
pub struct BoundSummary {
    pub trivial: usize,
    pub gamma: Option<usize>,
    pub multiplicity_upper: usize,
    pub defective_upper: usize,
    pub exact: Option<usize>,
}

pub fn summarise(g: &Multigraph, d: usize) -> Result<BoundSummary> {
    Ok(BoundSummary {
        trivial: lower_bound_trivial(g, d)?,
        gamma: gamma_d(g, d).ok(),
        multiplicity_upper: upper_bound_multiplicity(g, d)?,
        defective_upper: upper_bound_defective(g, d)?,
        exact: exact_chi(g, d).ok(),
    })
}
