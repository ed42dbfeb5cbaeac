//! The sliding diamond rule: place the coordinates in the plane and read
//! each local form as an ε-weighted sum over a diamond of neighbours.
//!
//! ```bash
//! cargo run --example sliding_diamond
//! ```

use bcrystal::diamond::{configuration, diamond_sum, render, Diamond};
use bcrystal::tableaux::{partial, partial_star};
use bcrystal::{CartanType, CrystalElement};

fn main() {
    let a3: CartanType = "A3".parse().unwrap();
    let b = CrystalElement::from_tuple(a3, &[2, 4, 0, 5, 1, 3]).unwrap();

    println!("configuration of {b}, diamond at (2,1):\n");
    print!("{}", render(&b, 2, 1, false));

    let d = Diamond::new(a3, 2, 1, false);
    println!("\nmembers of the diamond: {:?}", d.members());
    println!(
        "weighted sum {} equals the local form {}",
        diamond_sum(&b, 2, 1, false),
        partial(&b, 2, 1)
    );

    println!("\nstar diamond at (1,3):\n");
    print!("{}", render(&b, 1, 3, true));
    println!(
        "\nweighted sum {} equals the star form {}",
        diamond_sum(&b, 1, 3, true),
        partial_star(&b, 1, 3)
    );

    // type D folds column n onto level n-2
    let d4: CartanType = "D4".parse().unwrap();
    let cfg = configuration(d4);
    println!("\nD4 placement of b_(1,4): {:?}", cfg.point(1, 4).unwrap());
    let b = CrystalElement::from_tuple(d4, &[0, 0, 0, 2, 0, 1, 3, 0, 2, 1, 0, 0]).unwrap();
    println!("D4 star diamonds along the third anti-diagonal:");
    for (s, t) in [(1, 3), (2, 2), (3, 1), (2, 4), (3, 2), (3, 3)] {
        println!("  at ({s},{t}): {}", diamond_sum(&b, s, t, true));
    }
}
