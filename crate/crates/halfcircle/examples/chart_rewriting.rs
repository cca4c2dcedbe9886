//! Monoid elements in charts: coordinate transport, chart-independent
//! equality, products, and the half-circle action.
//!
//! ```sh
//! cargo run --example chart_rewriting
//! ```

use halfcircle::format::{element_to_text, parse_element};
use halfcircle::coxeter::Letter;
use halfcircle::semifield::Value;

fn main() {
    let h = parse_element("A2 | trop-int | 1 2 1 | 2 5 3").unwrap();
    let g = h.graph().clone();

    // the same element in the other chart
    let other = g.reduced_word_from_labels("2 1 2").unwrap();
    let moved = h.rewrite(&other).unwrap();
    println!("{}", element_to_text(&h));
    println!("  = {}", element_to_text(&moved));
    assert!(h.equals(&moved));

    // transport is exact: going back recovers the same coordinates
    let back = moved.rewrite(h.word()).unwrap();
    assert_eq!(back.coords(), h.coords());

    // the action at a letter scales the leading coordinate of a chart
    // starting with that letter
    let acted = h.act(Letter(1), &Value::trop_int(-1)).unwrap();
    println!("after acting by -1 at letter 2: {}", element_to_text(&acted));
    println!("leading coordinate at letter 2 was {}", h.leading(Letter(1)).unwrap());

    // generator products merge repeated letters through the semifield sum
    let x = parse_element("A2 | trop-int | 1 | 2").unwrap();
    let y = parse_element("A2 | trop-int | 1 | 3").unwrap();
    println!("1^2 · 1^3 = {}", element_to_text(&x.mul(&y).unwrap()));

    // zero pattern: letters whose coordinate is the unit, multiplied
    // idempotently
    let z = parse_element("A2 | trop-int | 1 2 1 | 0 5 0").unwrap();
    let w = z.zero_pattern().unwrap();
    println!(
        "zero pattern of {}: {}",
        element_to_text(&z),
        g.word_to_string(&g.lex_min_word(&w))
    );
}
