//! A short path over the positive rationals: factor out a common base,
//! then walk one generator chain down and the other up.
//!
//! ```sh
//! cargo run --example ordered_field_path
//! ```

use halfcircle::connect::{common_base, path_ordered_field, validate_path};
use halfcircle::format::{element_to_text, parse_element, path_summary};

fn main() {
    let u1 = parse_element("A2 | rat-pos | 1 2 1 | 1 1 1").unwrap();
    let u2 = parse_element("A2 | rat-pos | 1 2 1 | 2 1 1").unwrap();
    let g = u1.graph().clone();
    let ii = g.reduced_word_from_labels("1 2 1").unwrap();

    // the common right factor and both residues, all strictly positive
    let cb = common_base(&u1, &u2, &ii).unwrap();
    println!("base u      = {}", element_to_text(&cb.base));
    println!("u' u^-1     = {}", element_to_text(&cb.left_residue));
    println!("u'' u^-1    = {}", element_to_text(&cb.right_residue));
    assert!(cb.left_residue.mul(&cb.base).unwrap().equals(&u1));
    assert!(cb.right_residue.mul(&cb.base).unwrap().equals(&u2));

    let path = path_ordered_field(&u1, &u2, &ii).unwrap();
    for (n, node) in path.nodes().iter().enumerate() {
        if n > 0 {
            let l = &path.labels()[n - 1];
            println!("  --(letter {}, scale {})-->", g.label(l.letter), l.scale);
        }
        println!("{}", element_to_text(&node.canonicalize()));
    }
    let report = validate_path(&path);
    let ok = report.ok() && path.endpoints_match(&u1, &u2);
    println!("{}", path_summary(&report, ok));
}
