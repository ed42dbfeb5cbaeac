//! Export a truncated crystal graph as DOT.
//!
//! ```bash
//! cargo run --example crystal_graph > crystal.dot
//! dot -Tsvg crystal.dot -o crystal.svg
//! ```

use bcrystal::graph::GraphSlice;
use bcrystal::CartanType;

fn main() {
    let a2: CartanType = "A2".parse().unwrap();
    let g = GraphSlice::build(a2, 3, true, true);
    eprintln!(
        "A2 slice at depth 3: {} vertices, {} edges (usual solid, star dashed)",
        g.vertices.len(),
        g.edges.len()
    );
    print!("{}", g.to_dot());
}
