//! The four exact scalar types and their semifield operations.
//!
//! ```sh
//! cargo run --example semifield_scalars
//! ```

use halfcircle::semifield::{SemifieldKind, Value};

fn main() {
    // min-plus integers: sum is min, product is +
    let a = Value::trop_int(2);
    let b = Value::trop_int(5);
    println!("trop-int: 2 ⊕ 5 = {}", a.splus(&b).unwrap());
    println!("trop-int: 2 ⊗ 5 = {}", a.sprod(&b).unwrap());
    println!("trop-int: 3⁻¹ = {}", Value::trop_int(3).sinv());

    // positive rationals with ordinary field operations
    let p = Value::rat_pos_from(2, 3).unwrap();
    let q = Value::rat_pos_from(3, 4).unwrap();
    println!("rat-pos: 2/3 ⊗ 3/4 = {}", p.sprod(&q).unwrap());
    println!("rat-pos: half of 1 is {}", SemifieldKind::RatPos.one().halve().unwrap());

    // the one-element semifield absorbs everything
    println!("trivial: 1 ⊕ 1 = {}", Value::Trivial.splus(&Value::Trivial).unwrap());
    println!("any value maps to the trivial unit: {}", a.to_trivial());

    // tropical scalars know their nonnegative part
    for n in [-1i64, 0, 7] {
        let v = Value::trop_int(n);
        println!("trop-int {n} in K+: {}", v.in_plus_part().unwrap());
    }

    // text forms parse exactly, including rationals
    let r = SemifieldKind::TropRat.parse_value("7/2").unwrap();
    println!("parsed trop-rat 7/2 back to text: {r}");
}
