//! For simple graphs there is a shortcut: take a proper edge colouring
//! (Vizing gives at most Delta+1 classes) and bin consecutive classes d at
//! a time. Each vertex then sees at most d edges per bin. This compares
//! the shortcut with the direct multigraph routine.
//!
//!     cargo run --example vizing_binning

use decol::bounds;
use decol::colour;
use decol::construct;
use decol::proper;

fn main() {
    println!("{:<14} {:>2} {:>7} {:>7} {:>7}", "graph", "d", "proper", "binned", "direct");
    for (name, g) in [
        ("K_6", construct::complete_graph(6)),
        ("K_7", construct::complete_graph(7)),
        ("C_9", construct::cycle_graph(9)),
        ("random p=0.5", construct::random_simple_graph(9, 0.5, 42)),
    ] {
        let proper = proper::vizing_colour(&g).unwrap();
        let classes = {
            let mut v = proper.clone();
            v.sort_unstable();
            v.dedup();
            v.len()
        };
        for d in [2usize, 3] {
            let binned = proper::bin_colours(&g, &proper, d).unwrap();
            let rep = bounds::verify_colouring(&g, &binned, d).unwrap();
            assert!(rep.valid, "binning broke the defect bound");

            let direct = colour::colour_defective(&g, d).unwrap().num_colours();
            println!("{name:<14} {d:>2} {classes:>7} {:>7} {direct:>7}", rep.num_colours);
        }
    }
    // Binning costs at most ceil((Delta+1)/d); the direct routine matches or
    // beats it, and on multigraphs it is the only one of the two that works.
}
