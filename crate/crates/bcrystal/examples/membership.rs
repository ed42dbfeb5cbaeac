//! Build lattice points and test crystal membership through both routes:
//! the chain inequalities and the boxed linear functionals.
//!
//! ```bash
//! cargo run --example membership
//! ```

use bcrystal::{CartanType, CrystalElement};

fn main() {
    let a3: CartanType = "A3".parse().unwrap();

    let b = CrystalElement::from_tuple(a3, &[2, 4, 0, 5, 1, 3]).unwrap();
    println!("element      {b}");
    println!("chains say   {}", b.is_member_chains());
    println!("boxed say    {}", b.is_member_boxed());
    println!("weight       {}", b.weight());
    println!("json         {}", b.to_json());

    // a single box at (2,2) violates b_{1,3} >= b_{2,2}
    let bad = CrystalElement::new(a3, [((2, 2), 1)]).unwrap();
    println!("\nelement      {bad}");
    println!("chains say   {}", bad.is_member_chains());
    println!("boxed say    {}", bad.is_member_boxed());

    // the twelve-coordinate D4 element
    let d4: CartanType = "D4".parse().unwrap();
    let b = CrystalElement::from_tuple(d4, &[0, 0, 0, 2, 0, 1, 3, 0, 2, 1, 0, 0]).unwrap();
    println!("\nelement      {b}");
    println!("member       {}", b.is_member());
    println!("weight       {}", b.weight());
}
