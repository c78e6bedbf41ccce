//! Tour of the degree-constrained subgraph machinery underneath the
//! colouring routines: Euler splits, 2-factorisations, k-factors, and
//! general f-factors via the matching gadget.
//!
//!     cargo run --example factor_toolkit

use decol::construct;
use decol::factor::{self, Factor};
use decol::graph::Multigraph;

fn main() {
    // An Euler split halves every even degree. Splitting K_5 (4-regular)
    // gives two edge-disjoint 2-factors.
    let k5 = construct::complete_graph(5);
    let (left, right) = factor::euler_split_even(&k5).unwrap();
    for (side, ids) in [("left", &left), ("right", &right)] {
        let f = Factor::new(&k5, ids.clone());
        println!("K_5 euler split, {side}: {} edges, 2-regular: {}", ids.len(), f.is_k_regular(2));
    }

    // Petersen's theorem: any 2k-regular multigraph splits into k
    // 2-factors. Here on a random 6-regular multigraph.
    let g = construct::random_regular_multigraph(8, 6, 7).unwrap();
    let two_factors = factor::petersen_decompose(&g).unwrap();
    println!(
        "random 6-regular on 8 vertices: {} two-factors, all 2-regular: {}",
        two_factors.len(),
        two_factors.iter().all(|ids| Factor::new(&g, ids.clone()).is_k_regular(2))
    );

    // k_factor handles the even degrees the colouring engine needs; K_6 is
    // 5-regular, so the 2-factor goes through the subgraph search rather
    // than a Petersen split.
    let k6 = construct::complete_graph(6);
    let quad = factor::k_factor(&k6, 2).unwrap();
    println!("2-factor of K_6: {:?}", Factor::new(&k6, quad).degrees);

    // Odd uniform degrees are just constant targets for the f-factor solver.
    let cubic = factor::f_factor(&k6, &[3; 6]).unwrap().expect("K_6 has a 3-factor");
    println!("3-factor of K_6: {:?}", Factor::new(&k6, cubic).degrees);

    // Mixed targets: a subgraph of the triangle with prescribed degrees.
    let sh = construct::shannon_graph(4);
    match factor::f_factor(&sh, &[3, 2, 3]).unwrap() {
        Some(ids) => println!("triangle k=4, targets [3,2,3]: edges {ids:?}"),
        None => println!("triangle k=4, targets [3,2,3]: infeasible"),
    }

    // Parity makes [1,1,1] impossible on any graph: degree sums are even.
    let infeasible = factor::f_factor(&sh, &[1, 1, 1]).unwrap();
    println!("triangle k=4, targets [1,1,1]: feasible = {}", infeasible.is_some());

    // A path shows feasibility is structural, not just a parity count:
    // targets [1,0,1] sum to 2 but the middle vertex blocks every route.
    let mut path = Multigraph::new(3);
    path.add_edge(0, 1).unwrap();
    path.add_edge(1, 2).unwrap();
    let blocked = factor::f_factor(&path, &[1, 0, 1]).unwrap();
    println!("path, targets [1,0,1]: feasible = {}", blocked.is_some());
}
