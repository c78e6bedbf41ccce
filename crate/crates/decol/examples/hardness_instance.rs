//! Builds the reduction that makes deciding "k colours at odd defect d"
//! as hard as proper edge colouring: every vertex of the base graph is
//! blown up into a regular gadget whose colour classes are forced to be
//! d-factors. A proper colouring of the base lifts to a defect-d
//! colouring of the instance with the same colours.
//!
//!     cargo run --example hardness_instance

use decol::bounds;
use decol::construct;
use decol::proper;

fn main() {
    let d = 3;
    let base = construct::complete_graph(4);
    println!(
        "base: K_4, {} vertices, {} edges, chromatic index {}",
        base.vertex_count(),
        base.edge_count(),
        3
    );

    let instance = construct::np_reduction(&base, d).unwrap();
    println!(
        "instance at d={d}: {} vertices, {} edges, {}-regular",
        instance.vertex_count(),
        instance.edge_count(),
        instance.regular_degree().map_or("not".into(), |r| r.to_string()),
    );

    // The forward direction is constructive: lift a proper 3-colouring.
    let base_colours = proper::vizing_colour(&base).unwrap();
    let (lifted_graph, witness) = construct::reduction_witness(&base, &base_colours, d).unwrap();
    assert_eq!(lifted_graph.to_graph_file(), instance.to_graph_file());
    let report = bounds::verify_colouring(&instance, &witness, d).unwrap();
    println!(
        "lifted colouring: valid = {}, colours = {}",
        report.valid, report.num_colours
    );

    // The gadget alone, small enough to inspect: k*d-regular, and the only
    // way to colour it with k colours is to make every class a d-factor.
    let (gadget, levels) = construct::gadget_colouring(2, d).unwrap();
    println!(
        "gadget (k=2, d={d}): {} vertices, {} edges, classes sized {:?}",
        gadget.vertex_count(),
        gadget.edge_count(),
        {
            let mut sizes = vec![0usize; 2];
            for &c in &levels {
                sizes[c] += 1;
            }
            sizes
        }
    );
    let gadget_report = bounds::verify_colouring(&gadget, &levels, d).unwrap();
    assert!(gadget_report.valid && gadget_report.num_colours == 2);
    println!("gadget colouring checks out with 2 colours");
}
