//! Reduced words, elementary moves, and deterministic rewrite plans.
//!
//! ```sh
//! cargo run --example words_and_moves
//! ```

use halfcircle::coxeter::{CoxeterGraph, Letter};

fn main() {
    let g = CoxeterGraph::parse("A3").unwrap();
    let (w0, _) = g.longest_element();

    let words = g.enumerate_reduced_words(w0, 100).unwrap();
    println!("w0 of A3 has {} reduced words:", words.len());
    for w in words.iter().take(4) {
        println!("  {}", g.word_to_string(w));
    }
    println!("  ...");

    // pull a descent to the front of a word
    let w = g.reduced_word_from_labels("2 1 2 3 2 1").unwrap();
    let front = g.pull_to_front(&w, Letter(0)).unwrap();
    println!(
        "pulling 1 to the front of ({}) takes {} moves: {}",
        g.word_to_string(&w),
        front.0.len(),
        front.0
    );
    println!("  result: {}", g.word_to_string(&front.1));

    // a full plan between two arbitrary words of w0
    let from = &words[0];
    let to = &words[15];
    let plan = g.rewrite_plan(from, to).unwrap();
    println!(
        "plan from ({}) to ({}): {} moves",
        g.word_to_string(from),
        g.word_to_string(to),
        plan.len()
    );
    assert_eq!(g.apply_plan(from, &plan).unwrap(), *to);
}
