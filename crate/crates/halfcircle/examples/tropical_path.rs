//! A short path between two vertices of the half-circle graph over the
//! min-plus integers, with step-by-step validation.
//!
//! ```sh
//! cargo run --example tropical_path
//! ```

use halfcircle::connect::{is_edge, path_tropical, validate_path};
use halfcircle::format::{element_to_text, parse_element, path_summary};

fn main() {
    let h = parse_element("A2 | trop-int | 1 2 1 | 0 0 0").unwrap();
    let k = parse_element("A2 | trop-int | 1 2 1 | 1 1 0").unwrap();
    let g = h.graph().clone();

    // these two are not joined directly
    println!("direct edge: {:?}", is_edge(&h, &k).unwrap());

    let ii = g.reduced_word_from_labels("1 2 1").unwrap();
    let path = path_tropical(&h, &k, &ii).unwrap();
    for (n, node) in path.nodes().iter().enumerate() {
        if n > 0 {
            let l = &path.labels()[n - 1];
            println!("  --(letter {}, scale {})-->", g.label(l.letter), l.scale);
        }
        println!("{}", element_to_text(&node.canonicalize()));
    }

    let report = validate_path(&path);
    let ok = report.ok() && path.endpoints_match(&h, &k);
    println!("{}", path_summary(&report, ok));

    // a bigger instance: D4 with mixed-sign coordinates
    let a = parse_element("D4 | trop-int | 1 2 3 1 2 4 1 2 3 1 2 4 | 5 -3 0 2 -50 7 1 0 44 -9 13 -1").unwrap();
    let b = parse_element("D4 | trop-int | 1 2 3 1 2 4 1 2 3 1 2 4 | 0 0 0 1 1 1 2 2 2 -3 -3 -3").unwrap();
    let ii = a.graph().w0_word().clone();
    let path = path_tropical(&a, &b, &ii).unwrap();
    let report = validate_path(&path);
    println!(
        "D4 pair: {}",
        path_summary(&report, report.ok() && path.endpoints_match(&a, &b))
    );
}
