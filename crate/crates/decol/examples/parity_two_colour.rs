//! Graphs of degree at most 2d sit right at the two-colour threshold, and
//! whether two colours suffice is a pure parity question: a connected
//! 2d-regular graph on an odd number of vertices needs a third colour,
//! while doubling it into a bipartite cover restores two.
//!
//!     cargo run --example parity_two_colour

use decol::bounds;
use decol::colour;
use decol::construct;
use decol::graph::Multigraph;

fn show(name: &str, g: &Multigraph, d: usize) {
    let col = colour::colour_two_d_regular(g, d).unwrap();
    let exact = bounds::exact_chi(g, d).unwrap();
    assert!(bounds::verify_colouring(g, col.colours(), d).unwrap().valid);
    assert_eq!(col.num_colours(), exact, "construction not optimal on {name}");
    println!("{name:<28} d={d}  colours = {exact}");
}

fn main() {
    show("C_5 (odd cycle)", &construct::cycle_graph(5), 1);
    show("C_6 (even cycle)", &construct::cycle_graph(6), 1);

    let sh6 = construct::shannon_graph(6);
    show("6-regular triangle", &sh6, 3);

    // The bipartite double cover: vertex v becomes v and v', every edge
    // (u, v) becomes (u, v') and (v, u'). Degrees survive, odd order does
    // not, and the third colour goes away.
    let mut cover = Multigraph::new(6);
    for &(u, v) in sh6.edges() {
        cover.add_edge(u, v + 3).unwrap();
        cover.add_edge(v, u + 3).unwrap();
    }
    show("its double cover", &cover, 3);

    // Below the threshold there is nothing to decide: one colour does it.
    let mut sparse = Multigraph::new(4);
    sparse.add_edge(0, 1).unwrap();
    sparse.add_edge(1, 2).unwrap();
    sparse.add_edge(2, 3).unwrap();
    show("path of max degree 2", &sparse, 2);
}
