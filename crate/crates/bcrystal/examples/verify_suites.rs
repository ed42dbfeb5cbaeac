//! Run the verification suites: enumerate a slice of the crystal and check
//! the structural properties against independent oracles.
//!
//! ```bash
//! cargo run --release --example verify_suites
//! ```

use bcrystal::verify::{
    enumerate_bfs, enumerate_scan, kostant_count, run_suite, EnumerationSpec, Suite,
};
use bcrystal::{CartanType, WeightVector};

fn main() {
    let a3: CartanType = "A3".parse().unwrap();

    // two independent generators of the same slice
    let bfs = enumerate_bfs(a3, 3);
    let scan = enumerate_scan(a3, 3);
    assert_eq!(bfs, scan);
    println!(
        "A3 slice at depth 3 holds {} elements (both generators agree)",
        bfs.len()
    );

    // weight multiplicities match the Kostant partition count
    let mu = WeightVector::new(vec![1, 1, 0]);
    let at_weight = bfs.iter().filter(|b| b.weight() == mu.negate()).count();
    println!(
        "weight {mu}: {at_weight} elements, kostant count {}",
        kostant_count(a3, &mu)
    );

    for (cartan, depth) in [("A3", 4), ("B3", 3), ("D4", 3)] {
        let cartan: CartanType = cartan.parse().unwrap();
        let spec = EnumerationSpec::depth(cartan, depth);
        println!("\n{cartan} at depth {depth}:");
        for suite in Suite::ALL {
            let report = run_suite(suite, &spec, 1);
            if report.cases == 0 {
                continue;
            }
            println!(
                "  {:<16} {:>6} cases  {}",
                report.suite,
                report.cases,
                if report.passed() { "ok" } else { "VIOLATIONS" }
            );
            for v in &report.violations {
                println!("    {}: {}", v.condition, v.witness);
            }
        }
    }
}
