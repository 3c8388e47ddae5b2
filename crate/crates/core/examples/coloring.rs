//! Vertex colorings: the constructive weak 2-coloring, exact strong and
//! k-chromatic numbers, and the tightness upper bound on strong colorings.
//!
//! ```bash
//! cargo run --example coloring
//! ```

use minconn::coloring::{self, SearchLimits};
use minconn::generators;

fn main() -> minconn::Result<()> {
    let limits = SearchLimits::default();

    let tree = generators::random_tree(4, 4, 2)?;
    let weak = coloring::weak_two_coloring(&tree)?;
    println!("{tree}\n    weak 2-coloring {:?}", weak.to_map(&tree));
    println!("    strong chromatic number {}", coloring::strong_chromatic_number(&tree, &limits)?);
    println!("    3-chromatic number {}", coloring::k_chromatic_number(&tree, 3, &limits)?);

    for n in 3..=5 {
        let h = generators::clique_expansion(n, 3)?;
        let chi = coloring::strong_chromatic_number(&h, &limits)?;
        let (bound, p) = coloring::best_strong_upper_bound(&h)?;
        println!(
            "clique expansion of K_{n}: strong chromatic {chi}, bound {bound} (t_1 = {:?})",
            p.first_tightness()
        );
    }
    Ok(())
}
