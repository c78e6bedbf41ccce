//! Proper edge colouring of simple graphs with at most Delta+1 colours, and
//! binning proper colours into defect-d classes.
//!
//! The colouring procedure is the fan-rotation argument (Misra and Gries'
//! constructive form of Vizing's theorem). Each edge is coloured in id
//! order: when some colour is free at both endpoints the lowest one is taken
//! directly, otherwise a maximal fan is built around the first endpoint, an
//! alternating two-coloured path is inverted, and a fan prefix is rotated.
//! Every tie is broken towards the lowest colour or fan index, so the output
//! is deterministic.

use crate::graph::{EdgeId, Multigraph, Vertex};
use crate::{Error, Result};

/// Proper edge colouring with colours `0..=Delta`. The input must be simple
/// (no parallel edges); loops cannot occur in a `Multigraph`.
pub fn vizing_colour(g: &Multigraph) -> Result<Vec<usize>> {
    if g.max_multiplicity() > 1 {
        return Err(Error::Precondition(
            "proper colouring within Delta+1 colours needs a simple graph".into(),
        ));
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok(Vec::new());
    }
    let n = g.vertex_count();
    let palette = g.max_degree() + 1;

    // at[v][c] = edge of colour c at v, col[e] = colour of e
    let mut at: Vec<Vec<Option<EdgeId>>> = vec![vec![None; palette]; n];
    let mut col: Vec<Option<usize>> = vec![None; m];

    let other = |e: EdgeId, v: Vertex| -> Vertex {
        let (a, b) = g.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    };

    fn set(
        at: &mut [Vec<Option<EdgeId>>],
        col: &mut [Option<usize>],
        g: &Multigraph,
        e: EdgeId,
        c: usize,
    ) {
        let (u, v) = g.endpoints(e);
        if let Some(old) = col[e] {
            at[u][old] = None;
            at[v][old] = None;
        }
        debug_assert!(at[u][c].is_none() && at[v][c].is_none());
        at[u][c] = Some(e);
        at[v][c] = Some(e);
        col[e] = Some(c);
    }

    let lowest_free = |at: &[Vec<Option<EdgeId>>], v: Vertex| -> usize {
        (0..palette).find(|&c| at[v][c].is_none()).unwrap()
    };

    for e0 in 0..m {
        let (u, v) = g.endpoints(e0);

        if let Some(c) = (0..palette).find(|&c| at[u][c].is_none() && at[v][c].is_none()) {
            set(&mut at, &mut col, g, e0, c);
            continue;
        }

        // Maximal fan of u starting at v: each next spoke is the edge at u
        // whose colour is the lowest one free at the current fan end.
        let mut fan: Vec<(Vertex, EdgeId)> = vec![(v, e0)];
        let mut in_fan = vec![false; n];
        in_fan[v] = true;
        loop {
            let z = fan.last().unwrap().0;
            let next = (0..palette).find_map(|c| {
                if at[z][c].is_some() {
                    return None;
                }
                let e = at[u][c]?;
                let w = other(e, u);
                (!in_fan[w]).then_some((w, e))
            });
            match next {
                Some((w, e)) => {
                    in_fan[w] = true;
                    fan.push((w, e));
                }
                None => break,
            }
        }

        let c = lowest_free(&at, u);
        let d0 = lowest_free(&at, fan.last().unwrap().0);

        if c != d0 {
            // Invert the alternating c/d0 path starting at u (where c is
            // free, so the path leaves along d0 if at all).
            let mut path = Vec::new();
            let mut cur = u;
            let mut want = d0;
            while let Some(e) = at[cur][want] {
                path.push(e);
                cur = other(e, cur);
                want = if want == d0 { c } else { d0 };
            }
            for &e in &path {
                let old = col[e].unwrap();
                let (a, b) = g.endpoints(e);
                at[a][old] = None;
                at[b][old] = None;
            }
            for &e in &path {
                let old = col[e].unwrap();
                let new = if old == c { d0 } else { c };
                let (a, b) = g.endpoints(e);
                debug_assert!(at[a][new].is_none() && at[b][new].is_none());
                at[a][new] = Some(e);
                at[b][new] = Some(e);
                col[e] = Some(new);
            }
        }
        debug_assert!(at[u][d0].is_none());

        // First fan prefix that is still a fan after the inversion and ends
        // at a vertex with d0 free; rotate it and finish with d0.
        let mut w = None;
        for (j, &(x, _)) in fan.iter().enumerate() {
            if j > 0 {
                let spoke_colour = col[fan[j].1].unwrap();
                if at[fan[j - 1].0][spoke_colour].is_some() {
                    break;
                }
            }
            if at[x][d0].is_none() {
                w = Some(j);
                break;
            }
        }
        let Some(j) = w else {
            return Err(Error::InternalContradiction(
                "fan rotation found no valid prefix".into(),
            ));
        };
        for i in 0..j {
            let shifted = col[fan[i + 1].1].unwrap();
            // free the donor spoke first, then recolour the receiver
            let donor = fan[i + 1].1;
            let (a, b) = g.endpoints(donor);
            at[a][shifted] = None;
            at[b][shifted] = None;
            col[donor] = None;
            set(&mut at, &mut col, g, fan[i].1, shifted);
        }
        set(&mut at, &mut col, g, fan[j].1, d0);
    }

    Ok(col.into_iter().map(|c| c.unwrap()).collect())
}

/// Groups the colours of a proper edge colouring into bins of d consecutive
/// colours. The input is checked to be proper; it is first renumbered by
/// order of first appearance, so a colouring with K distinct colours yields
/// ceil(K/d) bins, each valid at defect d.
pub fn bin_colours(g: &Multigraph, proper: &[usize], d: usize) -> Result<Vec<usize>> {
    if d == 0 {
        return Err(Error::Precondition("defect must be at least 1".into()));
    }
    let report = crate::bounds::verify_colouring(g, proper, 1)?;
    if !report.valid {
        return Err(Error::Precondition(format!(
            "binning needs a proper colouring, found {} overfull vertex/colour pairs",
            report.violations.len()
        )));
    }
    let canon = crate::colour::canonical_form(proper);
    Ok(canon.into_iter().map(|c| c / d).collect())
}
