//! Build Cartan data and inspect the longest element.
//!
//! ```sh
//! cargo run --example build_graphs
//! ```

use halfcircle::coxeter::CoxeterGraph;

fn main() {
    for spec in ["A2", "A3", "D4", "E6", "letters: x, y, z; edges: x-y, y-z"] {
        let g = CoxeterGraph::parse(spec).unwrap();
        let (w0, nu) = g.longest_element();
        println!("{spec}");
        println!("  rank {} and longest length {nu}", g.rank());
        println!("  lex-min word of w0: {}", g.word_to_string(g.w0_word()));
        let duals: Vec<String> = g
            .letters()
            .map(|i| format!("{}->{}", g.label(i), g.label(g.dual_index(i))))
            .collect();
        println!("  dual involution: {}", duals.join(" "));
        assert!(g.letters().all(|i| g.is_left_descent(w0, i)));
    }

    // not every edge list is accepted: a cycle has no longest element
    let cycle = CoxeterGraph::parse("letters: a, b, c, d; edges: a-b, b-c, c-d, d-a");
    println!("4-cycle rejected: {}", cycle.is_err());
}
