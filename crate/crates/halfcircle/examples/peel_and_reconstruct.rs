//! Canonical coordinates: peeling, reconstruction, membership, and the
//! rank-2/3 closed forms.
//!
//! ```sh
//! cargo run --example peel_and_reconstruct
//! ```

use halfcircle::canonical::{
    closed_form_a2, image_inequalities, member_x, peel, reconstruct, Fixture,
};
use halfcircle::format::{coords_to_text, element_to_text, parse_coords, parse_element};
use halfcircle::semifield::Value;

fn main() {
    let h = parse_element("A2 | trop-int | 1 2 1 | 2 5 3").unwrap();
    let g = h.graph().clone();
    let ii = g.reduced_word_from_labels("1 2 1").unwrap();

    // peel, keeping the whole trace
    let trace = peel(&ii, &h).unwrap();
    println!("{}", coords_to_text(&trace.coords));
    for (k, stage) in trace.stages.iter().enumerate() {
        println!("  H{} = {}", k + 1, element_to_text(stage));
    }

    // the closed form agrees
    let cf = closed_form_a2(
        &g,
        &Value::trop_int(2),
        &Value::trop_int(5),
        &Value::trop_int(3),
    )
    .unwrap();
    assert_eq!(trace.coords, cf);

    // reconstruction inverts the peel exactly
    let rebuilt = reconstruct(&trace.coords).unwrap();
    assert!(rebuilt.equals(&h));
    println!("reconstruct(peel(H)) = H: {}", rebuilt.equals(&h));

    // membership in the image is a round-trip test; in rank 2 it matches
    // the single inequality β ≥ α
    for c in ["2 8 5", "0 1 2"] {
        let cc = parse_coords(&format!("A2 | trop-int | ii: 1 2 1 | c: {c}")).unwrap();
        println!(
            "c = ({c}): member {} / inequality {}",
            member_x(&cc).unwrap(),
            image_inequalities(Fixture::A2, &cc).unwrap()
        );
    }

    // a rank-3 fixture instance with its crossed input chart
    let g3 = halfcircle::coxeter::CoxeterGraph::parse("A3").unwrap();
    let params: Vec<Value> = [1, 4, 2, 3, 5, 7].iter().map(|&n| Value::trop_int(n)).collect();
    let input = Fixture::A3Word1
        .input_element(&g3, halfcircle::semifield::SemifieldKind::TropInt, &params)
        .unwrap();
    let word1 = Fixture::A3Word1.word(&g3).unwrap();
    let cc = peel(&word1, &input).unwrap().coords;
    println!("{}", coords_to_text(&cc));
}
