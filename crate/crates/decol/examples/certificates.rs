//! The text formats end to end: parse a graph file, colour it, emit a
//! certificate, read the certificate back, verify it, and watch a
//! tampered copy get rejected with the offending vertices named.
//!
//!     cargo run --example certificates

use decol::bounds;
use decol::colour::{self, EdgeColouring};
use decol::graph::Multigraph;

const GRAPH: &str = "\
c two vertices joined five times, plus a pendant edge
p mg 3 6
e 0 1
e 0 1
e 0 1
e 0 1
e 0 1
e 1 2
";

fn main() {
    let g = Multigraph::parse(GRAPH).unwrap();
    println!("parsed: {} vertices, {} edges, max degree {}", g.vertex_count(), g.edge_count(), g.max_degree());

    let d = 2;
    let col = colour::colour_defective(&g, d).unwrap();
    let cert = col.to_certificate(d);
    println!("--- certificate ---\n{cert}-------------------");

    let (parsed, declared, dd) = EdgeColouring::parse_certificate(&cert).unwrap();
    assert_eq!(dd, d);
    let report = bounds::verify_colouring(&g, parsed.colours(), d).unwrap();
    assert!(report.valid && report.num_colours == declared);
    println!("round trip: valid, {declared} colours at defect {d}");

    // Push everything into one colour and the two fat endpoints overflow.
    let bad = EdgeColouring::new(vec![0; g.edge_count()]);
    let report = bounds::verify_colouring(&g, bad.colours(), d).unwrap();
    println!("tampered copy: valid = {}", report.valid);
    for v in report.violations {
        println!("  vertex {} sees colour {} on {} edges (max {d})", v.vertex, v.colour, v.count);
    }
}
