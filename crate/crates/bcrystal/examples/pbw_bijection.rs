//! Type-A conversion between PBW exponent tuples (along the fixed convex
//! order) and lattice coordinates, slot-wise on extended elements.
//!
//! ```bash
//! cargo run --example pbw_bijection
//! ```

use std::collections::BTreeMap;

use bcrystal::extended::f_hat;
use bcrystal::pbw::{extended_from_polyhedral, extended_to_polyhedral, PbwDatum};
use bcrystal::{CartanType, CrystalElement};

fn main() {
    let a3: CartanType = "A3".parse().unwrap();

    println!("convex order on the positive roots of A3:");
    for (k, root) in a3.convex_order().unwrap().iter().enumerate() {
        print!("{}{root}", if k > 0 { " < " } else { "  " });
    }
    println!("\n");

    let datum = PbwDatum::from_tuple(a3, &[1, 2, 2, 1, 0, 3]).unwrap();
    let b = datum.to_polyhedral();
    println!("pbw  {datum}  ->  coordinates {b}");
    let back = PbwDatum::from_polyhedral(&b).unwrap();
    println!("coordinates {b}  ->  pbw {back}");
    assert_eq!(back, datum);

    // slot-wise on a two-slot family, and compatibly with the extended
    // lowering operator
    let slots: BTreeMap<i64, PbwDatum> = [
        (0, datum),
        (1, PbwDatum::from_tuple(a3, &[1, 2, 0, 0, 1, 2]).unwrap()),
    ]
    .into_iter()
    .collect();
    let ext = extended_to_polyhedral(a3, &slots).unwrap();
    println!("\ntwo-slot family maps to {ext}");

    let lowered = f_hat(&ext, 1, 0);
    println!("F(1,0) gives          {lowered}");
    let lowered_data = extended_from_polyhedral(&lowered).unwrap();
    print!("its PBW data:         ");
    for (k, c) in lowered_data.iter().rev() {
        print!("{c} at slot {k}  ");
    }
    println!();
    assert_eq!(extended_to_polyhedral(a3, &lowered_data).unwrap(), lowered);

    // a member found by lowering converts exactly
    let mut walk = CrystalElement::one(a3);
    for (i, star) in [(1, false), (2, true), (1, false), (3, false), (2, false)] {
        walk = bcrystal::bicrystal::f(&walk, i, star);
    }
    println!("\nrandom walk landed on {walk}");
    println!(
        "its PBW datum is      {}",
        PbwDatum::from_polyhedral(&walk).unwrap()
    );
}
