//! Tour of the bicrystal structure on one element: statistics, selectors,
//! raising/lowering in both the usual and the star structure, and the jump
//! function that ties them together.
//!
//! ```bash
//! cargo run --example crystal_operators
//! ```

use bcrystal::bicrystal::{e, epsilon, epsilon_star, f, jump, phi, select};
use bcrystal::{CartanType, CrystalElement};

fn show(x: Option<CrystalElement>) -> String {
    x.map_or_else(|| "null".to_string(), |b| b.to_string())
}

fn main() {
    let a3: CartanType = "A3".parse().unwrap();
    let b = CrystalElement::from_tuple(a3, &[2, 4, 0, 5, 1, 3]).unwrap();
    println!("b = {b}\n");

    for i in 1..=3 {
        println!(
            "i={i}  eps={}  eps*={}  phi={}  phi*={}  jump={}",
            epsilon(&b, i),
            epsilon_star(&b, i),
            phi(&b, i, false),
            phi(&b, i, true),
            jump(&b, i),
        );
    }

    let sel = select(&b, 1, false);
    println!(
        "\nselector at i=1: value {} with argmin {} and argmax {}",
        sel.value, sel.argmin, sel.argmax
    );

    println!("\nusual structure:");
    for i in 1..=3 {
        println!(
            "  e{i}: {}   f{i}: {}",
            show(e(&b, i, false)),
            f(&b, i, false)
        );
    }
    println!("star structure:");
    for i in 1..=3 {
        println!(
            "  e{i}*: {}   f{i}*: {}",
            show(e(&b, i, true)),
            f(&b, i, true)
        );
    }

    // jump 0 forces the two lowering operators to coincide
    for i in [1, 3] {
        assert_eq!(jump(&b, i), 0);
        assert_eq!(f(&b, i, false), f(&b, i, true));
        println!(
            "\njump_{i} = 0, so f{i} and f{i}* agree: {}",
            f(&b, i, false)
        );
    }
}
